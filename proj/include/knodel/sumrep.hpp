#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knodel/core.hpp"

namespace knodel {

enum class Sign : std::uint8_t { Plus, Minus };

// Alternating-sign sum over the offset set: the sign of terms[k] (0-based) is
// leading * (-1)^k. A walk maps to such a sum and vice versa; the sum's value
// is the walk's net index displacement mod n/2.
struct SignedSum {
    Sign leading = Sign::Plus;
    std::vector<std::int64_t> terms;

    std::int64_t value() const {
        std::int64_t v = 0;
        std::int64_t sgn = leading == Sign::Plus ? 1 : -1;
        for (std::int64_t a : terms) {
            v += sgn * a;
            sgn = -sgn;
        }
        return v;
    }

    std::int64_t value_mod(const KnodelGraph& g) const { return mod_floor(value(), g.half()); }
};

// Vertex sequence with consecutive vertices adjacent; parts alternate U,V,...
// A single vertex is a zero-length walk. Walks may revisit vertices.
struct Walk {
    std::vector<Vertex> vertices;

    std::int64_t length() const { return static_cast<std::int64_t>(vertices.size()) - 1; }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
};

inline bool is_walk(const KnodelGraph& g, const Walk& w) {
    if (w.vertices.empty()) return false;
    for (std::size_t k = 0; k + 1 < w.vertices.size(); ++k)
        if (!is_adjacent(g, w.vertices[k], w.vertices[k + 1])) return false;
    return true;
}

// Reads off one offset per edge: a U->V step over offset a contributes +a, a
// V->U step contributes -a. The resulting sum satisfies
//   value == last index - first index  (mod n/2).
inline SignedSum sum_from_walk(const KnodelGraph& g, const Walk& w) {
    if (w.vertices.size() < 2) throw NotAWalk("walk needs at least one edge");
    SignedSum sum;
    sum.leading = w.front().part == Part::U ? Sign::Plus : Sign::Minus;
    sum.terms.reserve(w.vertices.size() - 1);
    for (std::size_t k = 0; k + 1 < w.vertices.size(); ++k) {
        const Vertex x = w.vertices[k];
        const Vertex y = w.vertices[k + 1];
        if (!is_adjacent(g, x, y))
            throw NotAWalk("vertices at positions " + std::to_string(k) + "," +
                           std::to_string(k + 1) + " are not adjacent");
        const std::int64_t a = x.part == Part::U ? mod_floor(y.index - x.index, g.half())
                                                 : mod_floor(x.index - y.index, g.half());
        sum.terms.push_back(a);
    }
    return sum;
}

// Realizes a sum as a walk from `start`: index_k = index_{k-1} +- terms[k]
// with parts alternating, so the walk ends at index start + value (mod n/2),
// in the start part for even length and the opposite part for odd. The
// leading sign is forced by the start part (U walks begin +, V walks begin -);
// a mismatched sum is not realizable and is rejected.
inline Walk walk_from_sum(const KnodelGraph& g, Vertex start, const SignedSum& sum) {
    g.check(start);
    if (sum.terms.empty()) throw NotAWalk("sum needs at least one term");
    const Sign natural = start.part == Part::U ? Sign::Plus : Sign::Minus;
    if (sum.leading != natural)
        throw NotAWalk("leading sign does not match the start part");
    for (std::int64_t a : sum.terms)
        if (!g.has_offset(a))
            throw NotAWalk("term " + std::to_string(a) + " is not an offset of the graph");

    Walk w;
    w.vertices.reserve(sum.terms.size() + 1);
    w.vertices.push_back(start);
    std::int64_t idx = start.index;
    Part part = start.part;
    std::int64_t sgn = natural == Sign::Plus ? 1 : -1;
    for (std::int64_t a : sum.terms) {
        idx = mod_floor(idx + sgn * a, g.half());
        part = part == Part::U ? Part::V : Part::U;
        w.vertices.push_back({part, idx});
        sgn = -sgn;
    }
    return w;
}

// Right-hand side a, exactly `parts` summands, alphabet {2^i - 1 : 0 <= i <= delta-2}.
struct FixedLengthTarget {
    std::int64_t a = 0;
    std::int64_t parts = 0;
    std::int64_t delta = 0;
};

namespace detail {

// Constructive solver for y_1 + ... + y_{delta-2} = a over {2^i-1 : i <= delta-2}.
// Caller guarantees 0 <= a <= 2^{delta-1}-2 and a != 2^{delta-1}-(delta-1).
// The recursion peels one summand per level:
//   - a small enough and not the lower level's excluded value: pad with 0
//   - a equal to the lower level's excluded value: 1 + 3 + ... + (2^{delta-3}-1) + 1
//   - a == 2^{delta-1}-2: two copies of the maximum element
//   - otherwise: peel the maximum element 2^{delta-2}-1 greedily
inline std::vector<std::int64_t> solve_parts(std::int64_t delta, std::int64_t a) {
    if (delta == 3) return {a}; // a in {0, 1}
    const std::int64_t top = pow2(delta - 2) - 1;
    const std::int64_t sub_hi = pow2(delta - 2) - 2;
    const std::int64_t sub_excluded = pow2(delta - 2) - (delta - 2);
    if (a <= sub_hi && a != sub_excluded) {
        auto out = solve_parts(delta - 1, a);
        out.push_back(0);
        return out;
    }
    if (a == sub_excluded) {
        std::vector<std::int64_t> out;
        out.reserve(static_cast<std::size_t>(delta - 2));
        for (std::int64_t i = 1; i <= delta - 3; ++i) out.push_back(pow2(i) - 1);
        out.push_back(1);
        return out;
    }
    if (a == pow2(delta - 1) - 2) {
        std::vector<std::int64_t> out(static_cast<std::size_t>(delta - 2), 0);
        out[0] = out[1] = top;
        return out;
    }
    auto out = solve_parts(delta - 1, a - top);
    out.push_back(top);
    return out;
}

} // namespace detail

// The value with no fixed-length representation: a = 2^{delta-1} - (delta-1).
inline std::int64_t infeasible_target(std::int64_t delta) { return pow2(delta - 1) - (delta - 1); }

// Solves y_1 + ... + y_{delta-2} = a over {2^i - 1 : 0 <= i <= delta-2};
// solvable exactly for 0 <= a <= 2^{delta-1} - 2 except a = 2^{delta-1} - (delta-1).
// Output is sorted descending.
inline std::optional<std::vector<std::int64_t>> solve_fixed_length(const FixedLengthTarget& t) {
    if (t.delta < 3 || t.delta >= 62)
        throw InvalidTarget("delta must be in [3, 62), got " + std::to_string(t.delta));
    if (t.parts != t.delta - 2)
        throw InvalidTarget("parts must equal delta-2, got parts=" + std::to_string(t.parts));
    if (t.a < 0 || t.a > pow2(t.delta - 1) - 2 || t.a == infeasible_target(t.delta))
        return std::nullopt;
    auto out = detail::solve_parts(t.delta, t.a);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

inline std::optional<std::vector<std::int64_t>> solve_fixed_length(std::int64_t delta,
                                                                   std::int64_t a) {
    return solve_fixed_length(FixedLengthTarget{a, delta - 2, delta});
}

// One extra summand removes the exception: y_1 + ... + y_{delta-1} = a is
// solvable for every 0 <= a <= 2^{delta-1} - 2. Output is sorted descending.
inline std::vector<std::int64_t> solve_fixed_length_relaxed(std::int64_t a, std::int64_t delta) {
    if (delta < 3 || delta >= 62)
        throw InvalidTarget("delta must be in [3, 62), got " + std::to_string(delta));
    if (a < 0 || a > pow2(delta - 1) - 2)
        throw InvalidTarget("a=" + std::to_string(a) + " outside [0, 2^{delta-1}-2]");
    std::vector<std::int64_t> out;
    if (a == infeasible_target(delta)) {
        out.reserve(static_cast<std::size_t>(delta - 1));
        for (std::int64_t i = 1; i <= delta - 2; ++i) out.push_back(pow2(i) - 1);
        out.push_back(1);
    } else {
        out = *solve_fixed_length(delta, a);
        out.push_back(0);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// Falsifiability probe: sums of k distinct powers 2^{a_0} + ... + 2^{a_k} can
// never be matched by k terms 2^{x_0} + ... + 2^{x_{k-1}}; always false.
inline bool distinct_powers_check(const std::vector<std::int64_t>& x_exps,
                                  const std::vector<std::int64_t>& a_exps) {
    if (a_exps.size() != x_exps.size() + 1)
        throw InvalidTarget("a_exps must have exactly one more entry than x_exps");
    for (std::size_t i = 0; i < a_exps.size(); ++i) {
        if (a_exps[i] < 0 || a_exps[i] >= 62) throw InvalidTarget("exponent out of range");
        if (i > 0 && a_exps[i] <= a_exps[i - 1])
            throw InvalidTarget("a_exps must be strictly increasing");
    }
    unsigned long long lhs = 0;
    unsigned long long rhs = 0;
    for (std::int64_t e : x_exps) {
        if (e < 0 || e >= 62) throw InvalidTarget("exponent out of range");
        lhs += 1ULL << e;
    }
    for (std::int64_t e : a_exps) rhs += 1ULL << e;
    return lhs == rhs;
}

} // namespace knodel
