#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "knodel/core.hpp"
#include "knodel/results.hpp"

namespace knodel {

// Brute-force ground truth. Everything in this header is built from the
// adjacency definition alone; it never consults the closed-form distance
// engine.

struct DistanceTable {
    static constexpr std::int32_t kUnreached = -1;

    Vertex source;
    std::vector<std::int32_t> dist;   // by flat id, kUnreached if not reached
    std::vector<std::int32_t> parent; // BFS tree predecessor by flat id, -1 at source

    std::int32_t at(const KnodelGraph& g, Vertex x) const {
        return dist[static_cast<std::size_t>(g.flat_id(x))];
    }
};

// Queue BFS over flat ids. Each frontier vertex enumerates its neighbors in
// increasing flat id order, so parent pointers (and therefore reconstructed
// paths) are deterministic.
inline DistanceTable bfs_from(const KnodelGraph& g, Vertex source) {
    g.check(source);
    const std::int64_t half = g.half();
    const std::size_t n = static_cast<std::size_t>(g.n());
    DistanceTable table{source,
                        std::vector<std::int32_t>(n, DistanceTable::kUnreached),
                        std::vector<std::int32_t>(n, -1)};

    std::vector<std::int32_t> queue;
    queue.reserve(n);
    const std::int32_t src = static_cast<std::int32_t>(g.flat_id(source));
    table.dist[static_cast<std::size_t>(src)] = 0;
    queue.push_back(src);

    const auto& offsets = g.offsets();
    std::vector<std::int64_t> nbr(offsets.size());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::int32_t x = queue[head];
        const std::int32_t dx = table.dist[static_cast<std::size_t>(x)];
        const bool in_u = x < half;
        const std::int64_t j = in_u ? x : x - half;
        for (std::size_t k = 0; k < offsets.size(); ++k) {
            const std::int64_t idx = in_u ? mod_floor(j + offsets[k], half)
                                          : mod_floor(j - offsets[k], half);
            nbr[k] = in_u ? half + idx : idx;
        }
        std::sort(nbr.begin(), nbr.end());
        for (std::int64_t y : nbr) {
            auto& dy = table.dist[static_cast<std::size_t>(y)];
            if (dy == DistanceTable::kUnreached) {
                dy = dx + 1;
                table.parent[static_cast<std::size_t>(y)] = x;
                queue.push_back(static_cast<std::int32_t>(y));
            }
        }
    }
    return table;
}

// Parent-chain reconstruction of a shortest walk source -> target.
inline Walk path_from(const KnodelGraph& g, const DistanceTable& table, Vertex target) {
    g.check(target);
    std::int64_t id = g.flat_id(target);
    if (table.dist[static_cast<std::size_t>(id)] == DistanceTable::kUnreached)
        throw Disconnected("target not reached from source");
    Walk w;
    while (id != g.flat_id(table.source)) {
        w.vertices.push_back(g.from_flat(id));
        id = table.parent[static_cast<std::size_t>(id)];
    }
    w.vertices.push_back(table.source);
    std::reverse(w.vertices.begin(), w.vertices.end());
    return w;
}

// Max distance from u_0; equals the diameter by vertex-transitivity.
inline std::int64_t eccentricity_u0(const KnodelGraph& g) {
    const DistanceTable table = bfs_from(g, g.u(0));
    std::int32_t ecc = 0;
    for (std::int32_t d : table.dist) {
        if (d == DistanceTable::kUnreached)
            throw Disconnected("W_{" + std::to_string(g.delta()) + "," + std::to_string(g.n()) +
                               "} is disconnected");
        ecc = std::max(ecc, d);
    }
    return ecc;
}

enum class DiameterMode : std::uint8_t { TransitiveSingleSource, AllPairs };

// TransitiveSingleSource: one BFS from u_0. AllPairs: BFS from every vertex,
// used on small graphs to validate the transitivity shortcut.
inline DiameterResult diameter_exact(const KnodelGraph& g,
                                     DiameterMode mode = DiameterMode::TransitiveSingleSource) {
    if (mode == DiameterMode::TransitiveSingleSource) {
        const DistanceTable table = bfs_from(g, g.u(0));
        std::int64_t best = -1;
        std::int64_t best_id = 0;
        for (std::size_t id = 0; id < table.dist.size(); ++id) {
            if (table.dist[id] == DistanceTable::kUnreached)
                throw Disconnected("graph is disconnected");
            if (table.dist[id] > best) {
                best = table.dist[id];
                best_id = static_cast<std::int64_t>(id);
            }
        }
        return {best, DiameterMethod::Bfs, std::pair{g.u(0), g.from_flat(best_id)}};
    }

    std::int64_t best = -1;
    std::pair<Vertex, Vertex> pair{g.u(0), g.u(0)};
    for (std::int64_t id = 0; id < g.n(); ++id) {
        const Vertex src = g.from_flat(id);
        const DistanceTable table = bfs_from(g, src);
        for (std::size_t to = 0; to < table.dist.size(); ++to) {
            if (table.dist[to] == DistanceTable::kUnreached)
                throw Disconnected("graph is disconnected");
            if (table.dist[to] > best) {
                best = table.dist[to];
                pair = {src, g.from_flat(static_cast<std::int64_t>(to))};
            }
        }
    }
    return {best, DiameterMethod::Bfs, pair};
}

} // namespace knodel
