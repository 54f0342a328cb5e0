#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "knodel/core.hpp"

namespace knodel {

enum class GraphFormat : std::uint8_t { EdgeList, Dimacs, Dot };

namespace detail {

// Edges as flat-id pairs (u_j -> j, v_j -> n/2 + j), sorted by (uid, vid).
inline std::vector<std::pair<std::int64_t, std::int64_t>> sorted_edges(const KnodelGraph& g) {
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    edges.reserve(static_cast<std::size_t>(g.delta() * g.half()));
    for (std::int64_t j = 0; j < g.half(); ++j) {
        std::vector<std::int64_t> ids;
        for (const Vertex& y : neighbors(g, g.u(j))) ids.push_back(g.flat_id(y));
        std::sort(ids.begin(), ids.end());
        for (std::int64_t id : ids) edges.emplace_back(j, id);
    }
    return edges;
}

} // namespace detail

// EdgeList: '# knodel delta=<D> n=<N>' header, then one '<uid> <vid>' per edge.
// Dimacs:   'p edge <n> <m>' header, then 'e <uid+1> <vid+1>' lines.
// Dot:      undirected graph with node names u<j>, v<j>.
// Lines end with a single newline, including the last one.
inline void export_graph(const KnodelGraph& g, GraphFormat format, std::ostream& sink) {
    const auto edges = detail::sorted_edges(g);
    switch (format) {
    case GraphFormat::EdgeList:
        sink << "# knodel delta=" << g.delta() << " n=" << g.n() << "\n";
        for (const auto& [a, b] : edges) sink << a << " " << b << "\n";
        break;
    case GraphFormat::Dimacs:
        sink << "p edge " << g.n() << " " << edges.size() << "\n";
        for (const auto& [a, b] : edges) sink << "e " << a + 1 << " " << b + 1 << "\n";
        break;
    case GraphFormat::Dot:
        sink << "graph knodel_" << g.delta() << "_" << g.n() << " {\n";
        for (const auto& [a, b] : edges)
            sink << "  u" << a << " -- v" << b - g.half() << ";\n";
        sink << "}\n";
        break;
    }
    if (!sink) throw SinkFailure("write to sink failed");
}

// One verification sweep cell: formula vs BFS diameter plus sandwich bounds.
struct ReportRow {
    std::int64_t delta = 0;
    std::int64_t n = 0;
    std::optional<std::int64_t> formula_diam;
    std::int64_t bfs_diam = 0;
    std::int64_t gh_lower = 0;
    std::int64_t gh_upper = 0;
    bool in_regime = false;
    bool match = false;
    std::int64_t elapsed_micros = 0;
};

inline ReportRow make_report_row(std::int64_t delta, std::int64_t n,
                                 std::optional<std::int64_t> formula_diam, std::int64_t bfs_diam,
                                 std::int64_t gh_lower, std::int64_t gh_upper, bool in_regime,
                                 std::int64_t elapsed_micros) {
    ReportRow row{delta, n, formula_diam, bfs_diam, gh_lower, gh_upper, in_regime,
                  formula_diam.has_value() && *formula_diam == bfs_diam, elapsed_micros};
    return row;
}

enum class ReportFormat : std::uint8_t { Csv, Json };

inline void write_report(const std::vector<ReportRow>& rows, ReportFormat format,
                         std::ostream& sink) {
    if (format == ReportFormat::Csv) {
        sink << "delta,n,formula_diam,bfs_diam,gh_lower,gh_upper,in_regime,match,elapsed_micros\n";
        for (const ReportRow& r : rows) {
            sink << r.delta << "," << r.n << ",";
            if (r.formula_diam) sink << *r.formula_diam;
            sink << "," << r.bfs_diam << "," << r.gh_lower << "," << r.gh_upper << ","
                 << (r.in_regime ? "true" : "false") << "," << (r.match ? "true" : "false") << ","
                 << r.elapsed_micros << "\n";
        }
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const ReportRow& r : rows) {
            nlohmann::json obj{{"delta", r.delta},
                               {"n", r.n},
                               {"formula_diam", nullptr},
                               {"bfs_diam", r.bfs_diam},
                               {"gh_lower", r.gh_lower},
                               {"gh_upper", r.gh_upper},
                               {"in_regime", r.in_regime},
                               {"match", r.match},
                               {"elapsed_micros", r.elapsed_micros}};
            if (r.formula_diam) obj["formula_diam"] = *r.formula_diam;
            arr.push_back(obj);
        }
        sink << arr.dump(2) << "\n";
    }
    if (!sink) throw SinkFailure("write to sink failed");
}

} // namespace knodel
