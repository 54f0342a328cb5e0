#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "knodel/io.hpp"

using namespace knodel;

namespace {

std::string render(const KnodelGraph& g, GraphFormat f) {
    std::ostringstream out;
    export_graph(g, f, out);
    return out.str();
}

// test-side parser for the edge list format
std::set<std::pair<std::int64_t, std::int64_t>> parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::set<std::pair<std::int64_t, std::int64_t>> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::int64_t a = -1;
        std::int64_t b = -1;
        row >> a >> b;
        edges.emplace(a, b);
    }
    return edges;
}

} // namespace

TEST_CASE("edge list export") {
    CHECK(render(KnodelGraph(1, 2), GraphFormat::EdgeList) == "# knodel delta=1 n=2\n0 1\n");

    const std::string listing = render(KnodelGraph(3, 16), GraphFormat::EdgeList);
    CHECK(std::count(listing.begin(), listing.end(), '\n') == 25); // header + 24 edges

    // round trip: parsed edges equal the adjacency enumeration
    const KnodelGraph g(3, 16);
    std::set<std::pair<std::int64_t, std::int64_t>> expected;
    for (std::int64_t j = 0; j < g.half(); ++j)
        for (const Vertex& y : neighbors(g, g.u(j))) expected.emplace(j, g.flat_id(y));
    CHECK(parse_edge_list(listing) == expected);
    CHECK(expected.size() == static_cast<std::size_t>(g.delta() * g.half()));
}

TEST_CASE("dimacs export") {
    const std::string text = render(KnodelGraph(3, 8), GraphFormat::Dimacs);
    CHECK(text.substr(0, text.find('\n')) == "p edge 8 12");
    CHECK(text.find("e 1 5") != std::string::npos); // u_0 v_0 one-based
    CHECK(text.back() == '\n');
}

TEST_CASE("dot export") {
    const std::string text = render(KnodelGraph(3, 8), GraphFormat::Dot);
    CHECK(text.rfind("graph knodel_3_8 {", 0) == 0);
    CHECK(text.find("  u0 -- v0;") != std::string::npos);
    CHECK(text.find("}\n") != std::string::npos);
}

TEST_CASE("csv report") {
    std::ostringstream out;
    const std::vector<ReportRow> rows{
        make_report_row(3, 40, 8, 8, 7, 9, true, 120),
        make_report_row(3, 8, std::nullopt, 3, 1, 3, false, 55),
    };
    CHECK(rows[0].match);
    CHECK_FALSE(rows[1].match);
    write_report(rows, ReportFormat::Csv, out);
    CHECK(out.str() ==
          "delta,n,formula_diam,bfs_diam,gh_lower,gh_upper,in_regime,match,elapsed_micros\n"
          "3,40,8,8,7,9,true,true,120\n"
          "3,8,,3,1,3,false,false,55\n");

    std::ostringstream empty;
    write_report({}, ReportFormat::Csv, empty);
    CHECK(empty.str() ==
          "delta,n,formula_diam,bfs_diam,gh_lower,gh_upper,in_regime,match,elapsed_micros\n");
}

TEST_CASE("json report") {
    std::ostringstream out;
    write_report({make_report_row(3, 40, 8, 8, 7, 9, true, 120),
                  make_report_row(3, 8, std::nullopt, 3, 1, 3, false, 55)},
                 ReportFormat::Json, out);
    const nlohmann::json arr = nlohmann::json::parse(out.str());
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 2);
    CHECK(arr[0]["delta"] == 3);
    CHECK(arr[0]["formula_diam"] == 8);
    CHECK(arr[0]["match"] == true);
    CHECK(arr[1]["formula_diam"].is_null());
    CHECK(arr[1]["bfs_diam"] == 3);
    CHECK(arr[1]["in_regime"] == false);
}

TEST_CASE("mismatching formula yields match=false") {
    const ReportRow row = make_report_row(3, 40, 9, 8, 7, 9, true, 1);
    CHECK_FALSE(row.match);
}
