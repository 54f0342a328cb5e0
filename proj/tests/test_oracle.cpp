#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "knodel/oracle.hpp"

using namespace knodel;

TEST_CASE("bfs distances from u_0") {
    const KnodelGraph g(3, 16);
    const DistanceTable t = bfs_from(g, g.u(0));
    CHECK(t.at(g, g.u(0)) == 0);
    CHECK(t.at(g, g.v(0)) == 1);
    CHECK(t.at(g, g.v(1)) == 1);
    CHECK(t.at(g, g.v(3)) == 1);

    const KnodelGraph g8(3, 8);
    const DistanceTable t8 = bfs_from(g8, g8.u(0));
    CHECK(*std::max_element(t8.dist.begin(), t8.dist.end()) == 3);

    const KnodelGraph g24(3, 24);
    CHECK(bfs_from(g24, g24.u(0)).at(g24, g24.u(6)) == 4);
}

TEST_CASE("bfs parent chains reconstruct shortest walks") {
    const KnodelGraph g(4, 48);
    const DistanceTable t = bfs_from(g, g.u(0));
    for (std::int64_t id = 0; id < g.n(); ++id) {
        const Vertex target = g.from_flat(id);
        const Walk w = path_from(g, t, target);
        REQUIRE(is_walk(g, w));
        REQUIRE(w.front() == g.u(0));
        REQUIRE(w.back() == target);
        REQUIRE(w.length() == t.dist[static_cast<std::size_t>(id)]);
    }
}

TEST_CASE("eccentricity of u_0") {
    CHECK(eccentricity_u0(KnodelGraph(3, 40)) == 8);
    CHECK(eccentricity_u0(KnodelGraph(4, 48)) == 5);
    CHECK(eccentricity_u0(KnodelGraph(1, 2)) == 1);
    CHECK_THROWS_AS(eccentricity_u0(KnodelGraph(1, 4)), Disconnected);
}

TEST_CASE("diameter_exact modes agree") {
    const KnodelGraph g(3, 16);
    CHECK(diameter_exact(g, DiameterMode::AllPairs).value ==
          diameter_exact(g, DiameterMode::TransitiveSingleSource).value);

    CHECK(diameter_exact(KnodelGraph(2, 6), DiameterMode::AllPairs).value == 3); // hexagon
    CHECK(diameter_exact(KnodelGraph(3, 8), DiameterMode::AllPairs).value == 3);
    CHECK(diameter_exact(KnodelGraph(3, 8), DiameterMode::TransitiveSingleSource).value == 3);

    const DiameterResult r = diameter_exact(g);
    REQUIRE(r.witness_pair.has_value());
    CHECK(bfs_from(g, r.witness_pair->first).at(g, r.witness_pair->second) == r.value);
}

TEST_CASE("every edge steps the distance by exactly one") {
    for (const auto& [delta, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {3, 24}, {4, 48}, {5, 64}}) {
        const KnodelGraph g(delta, n);
        const DistanceTable t = bfs_from(g, g.u(0));
        for (std::int64_t j = 0; j < g.half(); ++j)
            for (const Vertex& y : neighbors(g, g.u(j)))
                REQUIRE(std::abs(t.at(g, g.u(j)) - t.at(g, y)) == 1);
    }
}

TEST_CASE("single-source diameter matches all-pairs on sampled graphs") {
    for (const auto& [delta, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, 12}, {3, 30}, {4, 32}, {5, 64}, {5, 120}}) {
        const KnodelGraph g(delta, n);
        REQUIRE(diameter_exact(g, DiameterMode::AllPairs).value ==
                diameter_exact(g, DiameterMode::TransitiveSingleSource).value);
    }
}
