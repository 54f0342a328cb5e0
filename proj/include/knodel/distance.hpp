#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <utility>

#include "knodel/core.hpp"
#include "knodel/oracle.hpp"
#include "knodel/results.hpp"
#include "knodel/sumrep.hpp"

namespace knodel {

// Parameter thresholds above which the closed forms are proven. Below them
// the operations here refuse or fall back to BFS; they never extrapolate.

inline std::int64_t u_closed_threshold(std::int64_t delta) {
    return 4 * (delta - 3) * (pow2(delta - 1) - 1) + 4;
}

inline std::int64_t diam_formula_threshold(std::int64_t delta) {
    return (2 * delta - 5) * (pow2(delta) - 2) + 4;
}

struct Regime {
    bool u_closed_ok = false;
    bool diam_formula_ok = false;

    static Regime of(const KnodelGraph& g) {
        Regime r;
        r.u_closed_ok = g.delta() >= 3 && g.n() >= u_closed_threshold(g.delta());
        r.diam_formula_ok = g.delta() >= 3 && g.n() >= diam_formula_threshold(g.delta());
        // the diameter threshold dominates the distance threshold
        assert(!r.diam_formula_ok || r.u_closed_ok);
        return r;
    }
};

enum class QueryMode : std::uint8_t { Auto, ClosedOnly, BfsOnly };

// True when d(u_0, u_i) has an exact closed form: either i == 0 or the graph
// is in the u-distance regime and min(i, n/2-i) clears the small-index band,
// where only an upper bound is known and BFS serves exact values.
inline bool u_closed_applicable(const KnodelGraph& g, std::int64_t i) {
    if (i == 0) return true;
    if (g.delta() < 3 || g.n() < u_closed_threshold(g.delta())) return false;
    const std::int64_t t = std::min(i, g.half() - i);
    return t >= (g.delta() - 3) * g.s() + 1;
}

namespace detail {

// pre: u_closed_applicable(g, i)
inline std::int64_t closed_u_value(const KnodelGraph& g, std::int64_t i) {
    if (i == 0) return 0;
    return 2 * ceil_div(std::min(i, g.half() - i), g.s());
}

// Builds a length-2k walk u_0 -> u_i with k = ceil(t/s), t = min(i, n/2-i).
// The walk realizes displacement t as k interleaved (+a, -b) pairs: a-terms
// are s (with one swap to the second-largest offset when the remainder ks - t
// has no fixed-length representation), b-terms come from the solver. When the
// short side is n/2 - i, the walk to u_{n/2-i} is carried back through
// Shift(i) and reversed.
inline Walk closed_u_witness(const KnodelGraph& g, std::int64_t i) {
    const std::int64_t delta = g.delta();
    const std::int64_t s = g.s();
    const std::int64_t t = std::min(i, g.half() - i);
    const std::int64_t k = ceil_div(t, s);
    const std::int64_t rem = k * s - t; // in [0, s-1]

    std::vector<std::int64_t> a_terms(static_cast<std::size_t>(k), s);
    std::vector<std::int64_t> b_terms;
    if (k >= delta - 1) {
        b_terms = solve_fixed_length_relaxed(rem, delta);
        b_terms.resize(static_cast<std::size_t>(k), 0);
    } else if (rem != infeasible_target(delta)) { // k == delta - 2
        b_terms = *solve_fixed_length(delta, rem);
    } else {
        // trading one a-term s for 2^{delta-2}-1 lowers the b-side target by
        // 2^{delta-2}, off the infeasible value
        a_terms.back() = pow2(delta - 2) - 1;
        b_terms = *solve_fixed_length(delta, rem - pow2(delta - 2));
    }

    SignedSum sum{Sign::Plus, {}};
    sum.terms.reserve(static_cast<std::size_t>(2 * k));
    for (std::size_t l = 0; l < a_terms.size(); ++l) {
        sum.terms.push_back(a_terms[l]);
        sum.terms.push_back(b_terms[l]);
    }
    Walk w = walk_from_sum(g, g.u(0), sum);
    if (t != i) {
        for (Vertex& x : w.vertices) x = apply_automorphism(g, Automorphism::shift(i), x);
        std::reverse(w.vertices.begin(), w.vertices.end());
    }
    assert(w.length() == 2 * k);
    assert(w.back() == g.u(i));
    return w;
}

} // namespace detail

// d(u_0, u_i). Exact closed form 2*ceil(min(i, n/2-i)/s) when applicable,
// BFS otherwise (small-index band, below-threshold n, or delta < 3).
inline DistanceResult dist_u0_to_u(const KnodelGraph& g, std::int64_t i,
                                   bool want_witness = false,
                                   QueryMode mode = QueryMode::Auto) {
    g.check({Part::U, i});
    if (i == 0) {
        DistanceResult r{0, mode == QueryMode::BfsOnly ? DistanceMethod::Bfs
                                                       : DistanceMethod::ClosedForm,
                         {}};
        if (want_witness) r.witness = Walk{{g.u(0)}};
        return r;
    }
    const bool closed = u_closed_applicable(g, i);
    if (mode == QueryMode::ClosedOnly && !closed)
        throw RegimeNotApplicable("no closed form for d(u_0,u_" + std::to_string(i) + ") in W_{" +
                                  std::to_string(g.delta()) + "," + std::to_string(g.n()) + "}");
    if (mode != QueryMode::BfsOnly && closed) {
        DistanceResult r{detail::closed_u_value(g, i), DistanceMethod::ClosedForm, {}};
        if (want_witness) {
            r.witness = detail::closed_u_witness(g, i);
            assert(r.witness->length() == r.value);
        }
        return r;
    }
    const DistanceTable table = bfs_from(g, g.u(0));
    if (table.at(g, g.u(i)) == DistanceTable::kUnreached)
        throw Disconnected("u_" + std::to_string(i) + " is not reachable from u_0");
    DistanceResult r{table.at(g, g.u(i)), DistanceMethod::Bfs, {}};
    if (want_witness) r.witness = path_from(g, table, g.u(i));
    return r;
}

// d(u_0, v_j) = 1 + min over the neighbors u_{j-a} of d(u_0, u_{j-a}).
// Closed form when every neighbor distance has one; otherwise a single BFS
// answers directly (the neighbor recursion is then implicit in the table).
inline DistanceResult dist_u0_to_v(const KnodelGraph& g, std::int64_t j,
                                   bool want_witness = false,
                                   QueryMode mode = QueryMode::Auto) {
    g.check({Part::V, j});
    bool all_closed = true;
    for (std::int64_t a : g.offsets())
        all_closed = all_closed && u_closed_applicable(g, mod_floor(j - a, g.half()));

    if (mode == QueryMode::ClosedOnly && !all_closed)
        throw RegimeNotApplicable("no closed form for d(u_0,v_" + std::to_string(j) + ") in W_{" +
                                  std::to_string(g.delta()) + "," + std::to_string(g.n()) + "}");
    if (mode != QueryMode::BfsOnly && all_closed) {
        std::int64_t best_idx = -1;
        std::int64_t best = 0;
        for (std::int64_t a : g.offsets()) {
            const std::int64_t idx = mod_floor(j - a, g.half());
            const std::int64_t d = detail::closed_u_value(g, idx);
            if (best_idx < 0 || d < best) {
                best_idx = idx;
                best = d;
            }
        }
        DistanceResult r{1 + best, DistanceMethod::ClosedForm, {}};
        if (want_witness) {
            Walk w = best == 0 ? Walk{{g.u(0)}} : detail::closed_u_witness(g, best_idx);
            w.vertices.push_back(g.v(j));
            assert(is_walk(g, w) && w.length() == r.value);
            r.witness = std::move(w);
        }
        return r;
    }
    const DistanceTable table = bfs_from(g, g.u(0));
    if (table.at(g, g.v(j)) == DistanceTable::kUnreached)
        throw Disconnected("v_" + std::to_string(j) + " is not reachable from u_0");
    DistanceResult r{table.at(g, g.v(j)), DistanceMethod::Bfs, {}};
    if (want_witness) r.witness = path_from(g, table, g.v(j));
    return r;
}

// d(x, y) for arbitrary vertices: reduce (x, y) to (u_0, z) by an
// automorphism, answer there, and carry the witness back through the inverse.
inline DistanceResult dist(const KnodelGraph& g, Vertex x, Vertex y, bool want_witness = false,
                           QueryMode mode = QueryMode::Auto) {
    g.check(x);
    g.check(y);
    const Vertex z = canonical_pair(g, x, y);
    DistanceResult r = z.part == Part::U ? dist_u0_to_u(g, z.index, want_witness, mode)
                                         : dist_u0_to_v(g, z.index, want_witness, mode);
    if (r.witness) {
        const Automorphism back = canonicalizing_inverse(x);
        for (Vertex& w : r.witness->vertices) w = apply_automorphism(g, back, w);
        assert(r.witness->front() == x && r.witness->back() == y);
    }
    return r;
}

// max over i of d(u_0, u_i), attained at i = floor(n/4).
inline DistanceResult max_u_distance(const KnodelGraph& g, bool want_witness = false) {
    if (g.delta() < 3 || g.n() < u_closed_threshold(g.delta()))
        throw RegimeNotApplicable("W_{" + std::to_string(g.delta()) + "," + std::to_string(g.n()) +
                                  "} below the u-distance regime; use BFS eccentricity");
    const std::int64_t i = g.n() / 4;
    DistanceResult r{2 * ceil_div(i, g.s()), DistanceMethod::ClosedForm, {}};
    if (want_witness) r.witness = detail::closed_u_witness(g, i);
    return r;
}

// diam = 1 + ceil((n-2) / (2^delta - 2)) for n >= (2*delta-5)(2^delta-2)+4.
inline DiameterResult diameter_formula(const KnodelGraph& g) {
    if (g.delta() < 3 || g.n() < diam_formula_threshold(g.delta()))
        throw RegimeNotApplicable("W_{" + std::to_string(g.delta()) + "," + std::to_string(g.n()) +
                                  "} below the diameter formula regime");
    return {1 + ceil_div(g.n() - 2, pow2(g.delta()) - 2), DiameterMethod::Formula, {}};
}

// The diameter as realized by a concrete pair: u_0 against u_{floor(n/4)} or
// v_{floor((n+2s)/4)}, whichever is farther. Agrees with diameter_formula
// everywhere both apply.
inline DiameterResult diametral_pair(const KnodelGraph& g) {
    if (g.delta() < 3 || g.n() < diam_formula_threshold(g.delta()))
        throw RegimeNotApplicable("W_{" + std::to_string(g.delta()) + "," + std::to_string(g.n()) +
                                  "} below the diameter formula regime");
    const Vertex cu = g.u(g.n() / 4);
    const Vertex cv = g.v(floor_div(g.n() + 2 * g.s(), 4));
    const std::int64_t du = dist_u0_to_u(g, cu.index).value;
    const std::int64_t dv = dist_u0_to_v(g, cv.index).value;
    return {std::max(du, dv), DiameterMethod::DiametralPair,
            std::pair{g.u(0), du >= dv ? cu : cv}};
}

// Sandwich bounds 2*floor(floor(n/4)/s) + {1,3} valid for every delta >= 2.
inline std::pair<std::int64_t, std::int64_t> gh_bounds(const KnodelGraph& g) {
    if (g.delta() < 2)
        throw RegimeNotApplicable("bounds need delta >= 2");
    const std::int64_t base = 2 * floor_div(g.n() / 4, g.s());
    return {base + 1, base + 3};
}

// d(u_0, u_i) >= 2*ceil(i/s) for 1 <= i <= floor(n/4).
inline std::int64_t lower_bound_u(const KnodelGraph& g, std::int64_t i) {
    if (g.delta() < 2)
        throw RegimeNotApplicable("lower bound needs delta >= 2");
    if (i < 1 || i > g.n() / 4)
        throw IndexOutOfRange("i=" + std::to_string(i) + " outside [1, floor(n/4)]");
    return 2 * ceil_div(i, g.s());
}

} // namespace knodel
