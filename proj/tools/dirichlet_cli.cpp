// Command-line front end: character tables, orthogonality verdicts, the
// residue-class progression demo, prime census, L-series values, resolvent
// round trips, and zeta. Output is deterministic: identical flags produce
// byte-identical JSON/CSV, with floating point printed at 12 significant
// digits.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "dirichlet/dirichlet.hpp"

namespace {

using dirichlet::int64_t;

// ---------------------------------------------------------------------------
// formatting

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string fmt_complex(std::complex<double> z) {
    std::string s = fmt_double(z.real());
    s += (z.imag() < 0.0 || std::signbit(z.imag())) ? "-" : "+";
    s += fmt_double(std::abs(z.imag()));
    s += "i";
    return s;
}

std::string fmt_root_exact(const dirichlet::RootValue& r) {
    if (r.is_zero()) return "0";
    return "zeta(" + std::to_string(r.order()) + ")^" + std::to_string(r.exponent());
}

std::string fmt_label(const std::vector<int64_t>& label) {
    std::string s = "(";
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(label[i]);
    }
    return s + ")";
}

// ---------------------------------------------------------------------------
// report model and renderers

struct Cell {
    std::string text;
    bool quoted = true;  // false: emit as raw JSON token (number/bool)
};

Cell cell(const std::string& s) { return {s, true}; }
Cell cell(const char* s) { return {s, true}; }
Cell cell(int64_t v) { return {std::to_string(v), false}; }
Cell cell(double v) { return {fmt_double(v), false}; }
Cell cell(bool v) { return {v ? "true" : "false", false}; }

struct Report {
    std::string command;
    std::vector<std::pair<std::string, Cell>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, bool>> verdicts;
};

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void emit_json_cell(std::ostream& os, const Cell& c) {
    if (c.quoted)
        os << '"' << json_escape(c.text) << '"';
    else
        os << c.text;
}

void render_json(const Report& r, std::ostream& os) {
    os << "{\"command\":\"" << json_escape(r.command) << "\",\"params\":{";
    for (std::size_t i = 0; i < r.params.size(); ++i) {
        if (i) os << ",";
        os << '"' << json_escape(r.params[i].first) << "\":";
        emit_json_cell(os, r.params[i].second);
    }
    os << "},\"rows\":[";
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        if (i) os << ",";
        os << "{";
        for (std::size_t j = 0; j < r.columns.size(); ++j) {
            if (j) os << ",";
            os << '"' << json_escape(r.columns[j]) << "\":";
            emit_json_cell(os, r.rows[i][j]);
        }
        os << "}";
    }
    os << "],\"verdicts\":[";
    for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
        if (i) os << ",";
        os << "{\"name\":\"" << json_escape(r.verdicts[i].first)
           << "\",\"pass\":" << (r.verdicts[i].second ? "true" : "false") << "}";
    }
    os << "]}\n";
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

void render_csv(const Report& r, std::ostream& os) {
    for (std::size_t j = 0; j < r.columns.size(); ++j)
        os << (j ? "," : "") << csv_escape(r.columns[j]);
    os << "\n";
    for (const auto& row : r.rows) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? "," : "") << csv_escape(row[j].text);
        os << "\n";
    }
}

void render_table(const Report& r, std::ostream& os) {
    os << "# " << r.command;
    for (const auto& [key, value] : r.params) os << "  " << key << "=" << value.text;
    os << "\n";
    std::vector<std::size_t> width(r.columns.size());
    for (std::size_t j = 0; j < r.columns.size(); ++j) width[j] = r.columns[j].size();
    for (const auto& row : r.rows)
        for (std::size_t j = 0; j < row.size(); ++j)
            width[j] = std::max(width[j], row[j].text.size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (j) os << "  ";
            os << cells[j];
            if (j + 1 < cells.size())
                os << std::string(width[j] - cells[j].size(), ' ');
        }
        os << "\n";
    };
    line(r.columns);
    for (const auto& row : r.rows) {
        std::vector<std::string> cells;
        cells.reserve(row.size());
        for (const Cell& c : row) cells.push_back(c.text);
        line(cells);
    }
    for (const auto& [name, pass] : r.verdicts)
        os << (pass ? "PASS " : "FAIL ") << name << "\n";
}

struct OutputOptions {
    std::string format = "auto";  // auto | table | csv | json
    std::string out_path;
    int jobs = 1;
};

int emit(const Report& r, const OutputOptions& opts) {
    std::string format = opts.format;
    if (format == "auto") format = isatty(STDOUT_FILENO) ? "table" : "json";
    std::ostringstream body;
    if (format == "json")
        render_json(r, body);
    else if (format == "csv")
        render_csv(r, body);
    else
        render_table(r, body);
    if (!opts.out_path.empty()) {
        std::ofstream f(opts.out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open output file " << opts.out_path << "\n";
            return 2;
        }
        f << body.str();
    } else {
        std::cout << body.str();
    }
    bool all_pass = true;
    for (const auto& [name, pass] : r.verdicts) {
        all_pass = all_pass && pass;
        if (!pass && format == "csv") std::cerr << "FAIL " << name << "\n";
    }
    return all_pass ? 0 : 1;
}

// Deterministic index-parallel map: results land in preassigned slots.
template <typename Fn>
void parallel_for_index(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    for (std::thread& t : pool) t.join();
}

const char* class_name(dirichlet::CharacterClass c) {
    switch (c) {
        case dirichlet::CharacterClass::Principal: return "principal";
        case dirichlet::CharacterClass::RealNonPrincipal: return "real";
        default: return "complex";
    }
}

// ---------------------------------------------------------------------------
// commands

int cmd_characters(int64_t k, const OutputOptions& opts) {
    Report r;
    r.command = "characters";
    r.params = {{"modulus", cell(k)}};
    r.columns = {"modulus", "label", "params", "class", "values_exact", "values_numeric"};
    const auto chars = dirichlet::enumerate_characters(k);
    std::vector<std::vector<Cell>> rows(chars.size());
    parallel_for_index(chars.size(), opts.jobs, [&](std::size_t i) {
        const auto& chi = chars[i];
        std::string exact, numeric;
        for (int64_t n = 1; n <= k; ++n) {
            if (n > 1) {
                exact += " ";
                numeric += " ";
            }
            const dirichlet::RootValue v = dirichlet::evaluate(chi, n);
            exact += fmt_root_exact(v);
            numeric += v.is_zero() ? "0" : fmt_complex(dirichlet::to_complex(v));
        }
        rows[i] = {cell(k), cell(fmt_label(dirichlet::dirichlet_label(chi))),
                   cell(fmt_label(chi.params())), cell(class_name(dirichlet::classify(chi))),
                   cell(exact), cell(numeric)};
    });
    r.rows = std::move(rows);
    return emit(r, opts);
}

int cmd_orthogonality(int64_t k, bool exact, const OutputOptions& opts) {
    Report r;
    r.command = "orthogonality";
    r.params = {{"modulus", cell(k)}, {"exact", cell(exact)}};
    r.columns = {"identity", "checks", "failures"};
    const auto chars = dirichlet::enumerate_characters(k);
    const auto units = dirichlet::unit_residues(k);
    const double phi = static_cast<double>(dirichlet::euler_phi(k));
    const double tol = 1e-9;

    // value tables per character, reused by the float path
    std::vector<std::vector<std::complex<double>>> table(chars.size());
    if (!exact) {
        for (std::size_t c = 0; c < chars.size(); ++c) {
            table[c].resize(static_cast<std::size_t>(k));
            for (int64_t n = 0; n < k; ++n)
                table[c][static_cast<std::size_t>(n)] =
                    dirichlet::to_complex(dirichlet::evaluate(chars[c], n));
        }
    }
    auto value = [&](std::size_t c, int64_t n) { return table[c][static_cast<std::size_t>(n % k)]; };

    int64_t group_fail = 0;
    for (std::size_t c = 0; c < chars.size(); ++c) {
        if (exact) {
            if (!dirichlet::orthogonality_over_group(chars[c]).holds) ++group_fail;
        } else {
            std::complex<double> sum{0.0, 0.0};
            for (int64_t g : units) sum += value(c, g);
            const double expected = chars[c].is_principal() ? phi : 0.0;
            if (std::abs(sum - expected) > tol) ++group_fail;
        }
    }

    int64_t char_fail = 0;
    for (int64_t g : units) {
        if (exact) {
            if (!dirichlet::orthogonality_over_characters(k, g).holds) ++char_fail;
        } else {
            std::complex<double> sum{0.0, 0.0};
            for (std::size_t c = 0; c < chars.size(); ++c) sum += value(c, g);
            const double expected = (g % k == 1 % k) ? phi : 0.0;
            if (std::abs(sum - expected) > tol) ++char_fail;
        }
    }

    std::vector<int64_t> pair_fail(units.size(), 0);
    parallel_for_index(units.size(), opts.jobs, [&](std::size_t gi) {
        for (int64_t h : units) {
            if (exact) {
                if (!dirichlet::weighted_orthogonality(k, units[gi], h).holds) ++pair_fail[gi];
            } else {
                std::complex<double> sum{0.0, 0.0};
                for (std::size_t c = 0; c < chars.size(); ++c)
                    sum += value(c, units[gi]) * std::conj(value(c, h));
                const double expected = (units[gi] % k == h % k) ? phi : 0.0;
                if (std::abs(sum - expected) > tol) ++pair_fail[gi];
            }
        }
    });
    int64_t weighted_fail = 0;
    for (int64_t f : pair_fail) weighted_fail += f;

    const int64_t nchars = static_cast<int64_t>(chars.size());
    const int64_t nunits = static_cast<int64_t>(units.size());
    r.rows = {
        {cell("sum over group"), cell(nchars), cell(group_fail)},
        {cell("sum over characters"), cell(nunits), cell(char_fail)},
        {cell("weighted pairs"), cell(nunits * nunits), cell(weighted_fail)},
    };
    r.verdicts = {
        {"sum over group: chi over all units", group_fail == 0},
        {"sum over characters: all chi at fixed unit", char_fail == 0},
        {"weighted pairs: chi(g) conj(chi(h))", weighted_fail == 0},
    };
    return emit(r, opts);
}

int cmd_progression_demo(int64_t k, int64_t m, std::vector<double> grid, int64_t prime_bound,
                         const OutputOptions& opts) {
    std::sort(grid.begin(), grid.end(), std::greater<double>());
    dirichlet::EvalOptions eval;
    eval.prime_bound = prime_bound;
    Report r;
    r.command = "progression-demo";
    r.params = {{"modulus", cell(k)},
                {"residue", cell(m)},
                {"prime_bound", cell(prime_bound)},
                {"power_depth", cell(static_cast<int64_t>(eval.power_depth))}};
    r.columns = {"s", "weighted_log_l", "imag", "phi_times_class_sum", "discrepancy",
                 "certified_bound", "envelope"};
    std::vector<dirichlet::WeightedLogSum> results(grid.size());
    parallel_for_index(grid.size(), opts.jobs, [&](std::size_t i) {
        results[i] = dirichlet::character_weighted_logl(grid[i], k, m, eval);
    });
    bool increasing = true;
    bool within_envelope = true;
    bool imag_ok = true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& w = results[i];
        const double bound = w.weighted.truncation_bound;
        r.rows.push_back({cell(grid[i]), cell(w.weighted.value.real()),
                          cell(w.weighted.value.imag()), cell(w.class_sum),
                          cell(w.discrepancy), cell(bound), cell(w.majorant + bound)});
        if (i > 0 && !(w.weighted.value.real() > results[i - 1].weighted.value.real()))
            increasing = false;
        if (!(w.discrepancy <= w.majorant + bound)) within_envelope = false;
        if (!(w.imag_magnitude <= bound)) imag_ok = false;
    }
    r.verdicts = {
        {"weighted log-L increases as s decreases toward 1", increasing},
        {"discrepancy within envelope (majorant + certified bound)", within_envelope},
        {"imaginary part within certified bound", imag_ok},
    };
    return emit(r, opts);
}

int cmd_census(int64_t k, int64_t limit, const OutputOptions& opts) {
    const auto counts = dirichlet::prime_census(limit, k);
    int64_t total = 0;
    for (int64_t c : counts) total += c;
    Report r;
    r.command = "census";
    r.params = {{"modulus", cell(k)}, {"limit", cell(limit)}, {"primes", cell(total)}};
    r.columns = {"residue", "coprime", "count", "share"};
    for (int64_t m = 0; m < k; ++m) {
        const bool coprime = std::gcd(m, k) == 1;
        r.rows.push_back({cell(m), cell(coprime), cell(counts[static_cast<std::size_t>(m)]),
                          cell(static_cast<double>(counts[static_cast<std::size_t>(m)]) /
                               static_cast<double>(total))});
    }
    return emit(r, opts);
}

int cmd_lseries(int64_t k, std::vector<int64_t> label, std::vector<double> svals,
                const OutputOptions& opts) {
    if (label.empty()) label.assign(dirichlet::decompose(k).factors.size(), 0);
    const auto chi = dirichlet::character_from_label(k, label);
    Report r;
    r.command = "lseries";
    r.params = {{"modulus", cell(k)}, {"label", cell(fmt_label(label))}};
    r.columns = {"s", "label", "real", "imag", "truncation_bound"};
    for (double s : svals) {
        const dirichlet::LValue l = dirichlet::l_direct(s, chi);
        r.rows.push_back({cell(s), cell(fmt_label(label)), cell(l.value.real()),
                          cell(l.value.imag()), cell(l.truncation_bound)});
    }
    return emit(r, opts);
}

int cmd_resolvent_demo(int64_t p, const OutputOptions& opts) {
    const int64_t g = dirichlet::find_primitive_root(p);
    const auto ordering = dirichlet::power_ordering(p, g);
    std::vector<std::complex<double>> x(static_cast<std::size_t>(p - 1));
    for (int64_t j = 0; j < p - 1; ++j)
        x[static_cast<std::size_t>(j)] = dirichlet::cyclotomic_resolvent(p, g, j);
    const dirichlet::RootValue omega = dirichlet::RootValue::root(p - 1, 1);
    double max_error = 0.0;
    for (int64_t i = 0; i < p - 1; ++i) {
        const std::complex<double> recovered = dirichlet::recover(x, omega, i);
        const std::complex<double> expected =
            dirichlet::to_complex(dirichlet::RootValue::root(p, ordering[static_cast<std::size_t>(i)]));
        max_error = std::max(max_error, std::abs(recovered - expected));
    }
    std::string ordering_text;
    for (std::size_t i = 0; i < ordering.size(); ++i) {
        if (i) ordering_text += " ";
        ordering_text += std::to_string(ordering[i]);
    }
    Report r;
    r.command = "resolvent-demo";
    r.params = {{"p", cell(p)},
                {"g", cell(g)},
                {"power_ordering", cell(ordering_text)},
                {"max_recovery_error", cell(max_error)}};
    r.columns = {"omega_exponent", "resolvent_re", "resolvent_im", "abs"};
    for (int64_t j = 0; j < p - 1; ++j) {
        const auto& v = x[static_cast<std::size_t>(j)];
        r.rows.push_back({cell(j), cell(v.real()), cell(v.imag()), cell(std::abs(v))});
    }
    r.verdicts = {{"max recovery error " + fmt_double(max_error) + " < 1e-8",
                   max_error < 1e-8}};
    return emit(r, opts);
}

int cmd_zeta(std::vector<double> svals, const OutputOptions& opts) {
    Report r;
    r.command = "zeta";
    r.columns = {"s", "value", "truncation_bound"};
    for (double s : svals) {
        const dirichlet::LValue z = dirichlet::zeta(s);
        r.rows.push_back({cell(s), cell(z.value.real()), cell(z.truncation_bound)});
    }
    return emit(r, opts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirichlet characters, L-series, and cyclotomy at desk scale"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    OutputOptions out;
    app.add_option("--format", out.format, "Output format")
        ->transform(CLI::IsMember({"auto", "table", "csv", "json"}))
        ->envname("DIRICHLET_FORMAT")
        ->default_val("auto");
    app.add_option("--out", out.out_path, "Write output to this file instead of stdout");
    app.add_option("--jobs", out.jobs, "Worker threads for per-character work")
        ->check(CLI::PositiveNumber)
        ->default_val(1);

    int64_t modulus = 1;
    int64_t residue = 1;
    int64_t limit = 1000000;
    int64_t prime_bound = 100000;
    int64_t p = 11;
    std::vector<int64_t> label;
    std::vector<double> svals{2.0};
    std::string sgrid = "1.5,1.2,1.1,1.05,1.01";

    auto* characters = app.add_subcommand("characters", "Character table mod k");
    characters->add_option("--modulus", modulus, "Modulus k")->required()->check(CLI::PositiveNumber);

    auto* orthogonality =
        app.add_subcommand("orthogonality", "Verify the orthogonality identities mod k");
    orthogonality->add_option("--modulus", modulus, "Modulus k")->required()->check(CLI::PositiveNumber);
    bool exact = false;
    orthogonality->add_flag("--exact", exact, "Use exact root-of-unity sums");

    auto* progression = app.add_subcommand(
        "progression-demo", "Character-weighted log-L against the class prime sum over an s-grid");
    progression->add_option("--modulus", modulus, "Modulus k")->required()->check(CLI::PositiveNumber);
    progression->add_option("--residue", residue, "Unit residue m")->required();
    progression->add_option("--s-grid", sgrid, "Comma-separated s values, each > 1");
    progression->add_option("--prime-bound", prime_bound, "Prime bound for the sums")
        ->check(CLI::PositiveNumber);

    auto* census = app.add_subcommand("census", "Count primes <= limit per residue class mod k");
    census->add_option("--modulus", modulus, "Modulus k")->required()->check(CLI::PositiveNumber);
    census->add_option("--limit", limit, "Upper bound for the sieve")->check(CLI::PositiveNumber);

    auto* lseries = app.add_subcommand("lseries", "L(s, chi) for a labeled character");
    lseries->add_option("--modulus", modulus, "Modulus k")->required()->check(CLI::PositiveNumber);
    lseries->add_option("--label", label, "Character label tuple (defaults to principal)");
    lseries->add_option("--s", svals, "Evaluation points");

    auto* resolvent = app.add_subcommand("resolvent-demo",
                                         "Cyclotomic resolvents mod p and the recovery round trip");
    resolvent->add_option("--p", p, "Odd prime p");

    auto* zeta_cmd = app.add_subcommand("zeta", "Riemann zeta on the real axis (s > 1)");
    zeta_cmd->add_option("--s", svals, "Evaluation points");

    CLI11_PARSE(app, argc, argv);

    try {
        if (characters->parsed()) return cmd_characters(modulus, out);
        if (orthogonality->parsed()) return cmd_orthogonality(modulus, exact, out);
        if (progression->parsed()) {
            std::vector<double> grid;
            std::stringstream ss(sgrid);
            std::string item;
            while (std::getline(ss, item, ',')) grid.push_back(std::stod(item));
            if (grid.empty()) throw std::invalid_argument("progression-demo: empty s-grid");
            return cmd_progression_demo(modulus, residue, grid, prime_bound, out);
        }
        if (census->parsed()) return cmd_census(modulus, limit, out);
        if (lseries->parsed()) return cmd_lseries(modulus, label, svals, out);
        if (resolvent->parsed()) return cmd_resolvent_demo(p, out);
        if (zeta_cmd->parsed()) return cmd_zeta(svals, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
