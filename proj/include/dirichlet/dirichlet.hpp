#pragma once

#include "arith.hpp"
#include "characters.hpp"
#include "cyclotomic.hpp"
#include "lseries.hpp"
#include "resolvent.hpp"
#include "unit_group.hpp"
