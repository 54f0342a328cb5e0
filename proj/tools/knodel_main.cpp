// Command line front end: graph generation, distance and diameter queries,
// parameter-sweep verification against the BFS oracle, and the special-family
// diameter table.
//
// Exit codes: 0 success / all checks match, 1 verification mismatch,
// 2 invalid parameters, 3 sink failure, 4 closed form forced outside its
// regime.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knodel/knodel.hpp"

namespace {

using namespace knodel;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitSink = 3;
constexpr int kExitRegime = 4;

std::string format_vertex(Vertex x) {
    return (x.part == Part::U ? "u:" : "v:") + std::to_string(x.index);
}

std::string format_walk(const Walk& w) {
    std::string out;
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        if (i > 0) out += ' ';
        out += format_vertex(w.vertices[i]);
    }
    return out;
}

// 'u:<j>' or 'v:<j>', j a non-negative integer; reduced mod n/2.
Vertex parse_vertex_spec(const KnodelGraph& g, const std::string& spec) {
    if (spec.size() < 3 || (spec[0] != 'u' && spec[0] != 'v') || spec[1] != ':')
        throw InvalidParameters("bad vertex spec '" + spec + "', want u:<j> or v:<j>");
    std::size_t used = 0;
    std::int64_t j = 0;
    try {
        j = std::stoll(spec.substr(2), &used);
    } catch (const std::exception&) {
        throw InvalidParameters("bad vertex index in '" + spec + "'");
    }
    if (used != spec.size() - 2 || j < 0)
        throw InvalidParameters("bad vertex index in '" + spec + "'");
    return spec[0] == 'u' ? g.u(j) : g.v(j);
}

struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

Range parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        throw InvalidParameters("bad range '" + text + "', want a..b");
    try {
        Range r{std::stoll(text.substr(0, pos)), std::stoll(text.substr(pos + 2))};
        if (r.lo > r.hi) throw InvalidParameters("empty range '" + text + "'");
        return r;
    } catch (const InvalidParameters&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidParameters("bad range '" + text + "', want a..b");
    }
}

void with_sink(const std::string& out, const std::function<void(std::ostream&)>& fn) {
    if (out.empty() || out == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream file(out);
    if (!file) throw SinkFailure("cannot open '" + out + "' for writing");
    fn(file);
    file.flush();
    if (!file) throw SinkFailure("write to '" + out + "' failed");
}

QueryMode parse_query_mode(const std::string& m) {
    if (m == "closed") return QueryMode::ClosedOnly;
    if (m == "bfs") return QueryMode::BfsOnly;
    return QueryMode::Auto;
}

int run_gen(std::int64_t delta, std::int64_t n, const std::string& format,
            const std::string& out) {
    const KnodelGraph g(delta, n);
    GraphFormat f = GraphFormat::EdgeList;
    if (format == "dimacs") f = GraphFormat::Dimacs;
    else if (format == "dot") f = GraphFormat::Dot;
    with_sink(out, [&](std::ostream& sink) { export_graph(g, f, sink); });
    return kExitOk;
}

int run_dist(std::int64_t delta, std::int64_t n, const std::string& from, const std::string& to,
             const std::string& method, bool witness) {
    const KnodelGraph g(delta, n);
    const Vertex x = parse_vertex_spec(g, from);
    const Vertex y = parse_vertex_spec(g, to);
    const DistanceResult r = dist(g, x, y, witness, parse_query_mode(method));
    std::cout << "distance=" << r.value << " method="
              << (r.method == DistanceMethod::ClosedForm ? "closed" : "bfs") << "\n";
    if (witness && r.witness) std::cout << format_walk(*r.witness) << "\n";
    return kExitOk;
}

int run_diam(std::int64_t delta, std::int64_t n, const std::string& method) {
    const KnodelGraph g(delta, n);
    std::optional<DiameterResult> r;
    if (method == "formula") {
        r = diameter_formula(g);
    } else if (method == "bfs") {
        r = diameter_exact(g, DiameterMode::TransitiveSingleSource);
    } else {
        if (Regime::of(g).diam_formula_ok) r = diameter_formula(g);
        else r = diameter_exact(g, DiameterMode::TransitiveSingleSource);
    }
    std::cout << "diameter=" << r->value << " method="
              << (r->method == DiameterMethod::Bfs ? "bfs" : "formula") << "\n";
    return kExitOk;
}

int run_verify(const std::string& delta_range, const std::string& n_range, std::int64_t step,
               const std::string& report, const std::string& out) {
    const Range dr = parse_range(delta_range);
    const Range nr = parse_range(n_range);
    if (step < 2 || step % 2 != 0) throw InvalidParameters("step must be a positive even number");

    std::vector<ReportRow> rows;
    std::vector<std::string> failures;
    for (std::int64_t delta = dr.lo; delta <= dr.hi; ++delta) {
        std::int64_t n0 = nr.lo;
        if (n0 % 2 != 0) {
            std::cerr << "skip delta=" << delta << " n=" << n0 << ": odd n\n";
            ++n0;
        }
        for (std::int64_t n = n0; n <= nr.hi; n += step) {
            if (delta < 2 || delta >= 62 || pow2(delta) > n) {
                std::cerr << "skip delta=" << delta << " n=" << n << ": out of family or delta < 2\n";
                continue;
            }
            const auto t0 = std::chrono::steady_clock::now();
            const KnodelGraph g(delta, n);
            const std::int64_t bfs_diam = eccentricity_u0(g);
            const Regime regime = Regime::of(g);
            std::optional<std::int64_t> formula;
            if (regime.diam_formula_ok) {
                formula = diameter_formula(g).value;
                const DiameterResult dp = diametral_pair(g);
                if (dp.value != *formula)
                    failures.push_back("diametral pair disagrees with formula at delta=" +
                                       std::to_string(delta) + " n=" + std::to_string(n));
            }
            const auto [gh_lo, gh_hi] = gh_bounds(g);
            const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                                     std::chrono::steady_clock::now() - t0)
                                     .count();
            const ReportRow row = make_report_row(delta, n, formula, bfs_diam, gh_lo, gh_hi,
                                                  regime.diam_formula_ok, elapsed);
            if (row.in_regime && !row.match)
                failures.push_back("formula_diam=" + std::to_string(*formula) +
                                   " != bfs_diam=" + std::to_string(bfs_diam) + " at delta=" +
                                   std::to_string(delta) + " n=" + std::to_string(n));
            if (bfs_diam < gh_lo || bfs_diam > gh_hi)
                failures.push_back("bfs_diam=" + std::to_string(bfs_diam) +
                                   " outside sandwich bounds [" + std::to_string(gh_lo) + "," +
                                   std::to_string(gh_hi) + "] at delta=" + std::to_string(delta) +
                                   " n=" + std::to_string(n));
            rows.push_back(row);
        }
    }

    const ReportFormat fmt = report == "json" ? ReportFormat::Json : ReportFormat::Csv;
    with_sink(out, [&](std::ostream& sink) { write_report(rows, fmt, sink); });
    for (const std::string& f : failures) std::cerr << "MISMATCH: " << f << "\n";
    return failures.empty() ? kExitOk : kExitMismatch;
}

// Special families with conjectured diameters, checked by BFS up to the
// feasibility cap, plus the known exact value for W_{delta,2^delta}.
int run_table1(std::int64_t max_delta, const std::string& out, std::int64_t max_n) {
    struct Family {
        const char* label;
        std::int64_t min_delta;
        std::function<std::int64_t(std::int64_t)> graph_delta;
        std::function<std::int64_t(std::int64_t)> graph_n;
        std::function<std::int64_t(std::int64_t)> expected;
    };
    const std::vector<Family> families = {
        {"W(D-1,2^D-2)", 3, [](std::int64_t d) { return d - 1; },
         [](std::int64_t d) { return pow2(d) - 2; },
         [](std::int64_t d) { return ceil_div(d + 2, 2); }},
        {"W(D-1,2^D)", 5, [](std::int64_t d) { return d - 1; },
         [](std::int64_t d) { return pow2(d); },
         [](std::int64_t d) { return ceil_div(d + 2, 2); }},
        {"W(D,2^D+2)", 4, [](std::int64_t d) { return d; },
         [](std::int64_t d) { return pow2(d) + 2; },
         [](std::int64_t d) { return floor_div(d + 2, 2); }},
        {"W(D,2^D+4)", 5, [](std::int64_t d) { return d; },
         [](std::int64_t d) { return pow2(d) + 4; },
         [](std::int64_t d) { return ceil_div(d + 2, 2); }},
        {"W(D,2^D+2^(D-1)-2)", 3, [](std::int64_t d) { return d; },
         [](std::int64_t d) { return pow2(d) + pow2(d - 1) - 2; },
         [](std::int64_t d) { return ceil_div(d + 2, 2); }},
        {"W(D,2^D)", 3, [](std::int64_t d) { return d; },
         [](std::int64_t d) { return pow2(d); },
         [](std::int64_t d) { return 1 + ceil_div(d, 2); }},
    };

    bool any_mismatch = false;
    std::ostringstream csv;
    csv << "family,delta,n,expected_diam,bfs_diam,status\n";
    for (const Family& fam : families) {
        for (std::int64_t d = fam.min_delta; d <= max_delta; ++d) {
            const std::int64_t gd = fam.graph_delta(d);
            const std::int64_t gn = fam.graph_n(d);
            const std::int64_t expected = fam.expected(d);
            if (gn > max_n) {
                std::cerr << "skip " << fam.label << " delta=" << gd << " n=" << gn
                          << ": above feasibility cap\n";
                csv << fam.label << "," << gd << "," << gn << "," << expected << ",,skipped\n";
                continue;
            }
            const KnodelGraph g(gd, gn);
            const std::int64_t got = eccentricity_u0(g);
            const bool ok = got == expected;
            any_mismatch = any_mismatch || !ok;
            if (!ok)
                std::cerr << "MISMATCH: " << fam.label << " delta=" << gd << " n=" << gn
                          << " expected=" << expected << " bfs=" << got << "\n";
            csv << fam.label << "," << gd << "," << gn << "," << expected << "," << got << ","
                << (ok ? "ok" : "mismatch") << "\n";
        }
    }
    with_sink(out, [&](std::ostream& sink) {
        sink << csv.str();
        if (!sink) throw SinkFailure("write failed");
    });
    return any_mismatch ? kExitMismatch : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Knodel graph toolkit: generation, exact distances, diameters, verification"};
    app.require_subcommand(1);

    std::int64_t delta = 0;
    std::int64_t n = 0;
    std::string format = "edgelist";
    std::string out = "-";
    std::string from_spec;
    std::string to_spec;
    std::string method = "auto";
    bool witness = false;
    std::string delta_range;
    std::string n_range;
    std::int64_t step = 2;
    std::string report = "csv";
    std::int64_t max_delta = 12;
    std::int64_t max_n = 33000;

    CLI::App* gen = app.add_subcommand("gen", "write the graph in edgelist/dimacs/dot form");
    gen->add_option("--delta", delta, "valency")->required();
    gen->add_option("--n", n, "vertex count (even)")->required();
    gen->add_option("--format", format, "edgelist|dimacs|dot")
        ->check(CLI::IsMember({"edgelist", "dimacs", "dot"}));
    gen->add_option("--out", out, "output path, '-' for stdout");

    CLI::App* dist_cmd = app.add_subcommand("dist", "distance between two vertices");
    dist_cmd->add_option("--delta", delta, "valency")->required();
    dist_cmd->add_option("--n", n, "vertex count (even)")->required();
    dist_cmd->add_option("--from", from_spec, "vertex spec u:<j> or v:<j>")->required();
    dist_cmd->add_option("--to", to_spec, "vertex spec u:<j> or v:<j>")->required();
    dist_cmd->add_option("--method", method, "auto|closed|bfs")
        ->check(CLI::IsMember({"auto", "closed", "bfs"}));
    dist_cmd->add_flag("--witness", witness, "print a shortest walk");

    CLI::App* diam_cmd = app.add_subcommand("diam", "graph diameter");
    diam_cmd->add_option("--delta", delta, "valency")->required();
    diam_cmd->add_option("--n", n, "vertex count (even)")->required();
    diam_cmd->add_option("--method", method, "auto|formula|bfs")
        ->check(CLI::IsMember({"auto", "formula", "bfs"}));

    CLI::App* verify = app.add_subcommand(
        "verify", "sweep (delta, n) cells and check formulas against the BFS oracle");
    verify->add_option("--delta-range", delta_range, "a..b")->required();
    verify->add_option("--n-range", n_range, "a..b")->required();
    verify->add_option("--step", step, "n stride (even, default 2)");
    verify->add_option("--report", report, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--out", out, "report path, '-' for stdout");

    CLI::App* table1 = app.add_subcommand("table1", "check the special-family diameter table");
    table1->add_option("--max-delta", max_delta, "largest table degree to test")
        ->check(CLI::Range(std::int64_t{3}, std::int64_t{40}));
    table1->add_option("--report", report, "csv")->check(CLI::IsMember({"csv"}));
    table1->add_option("--out", out, "report path, '-' for stdout");
    table1->add_option("--max-n", max_n, "BFS feasibility cap on n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (gen->parsed()) return run_gen(delta, n, format, out);
        if (dist_cmd->parsed()) return run_dist(delta, n, from_spec, to_spec, method, witness);
        if (diam_cmd->parsed()) return run_diam(delta, n, method);
        if (verify->parsed()) return run_verify(delta_range, n_range, step, report, out);
        if (table1->parsed()) return run_table1(max_delta, out, max_n);
    } catch (const RegimeNotApplicable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRegime;
    } catch (const SinkFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSink;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
