#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "knodel/errors.hpp"
#include "knodel/integer.hpp"

namespace knodel {

enum class Part : std::uint8_t { U, V };

// One endpoint of the bipartition: u_j = {U, j}, v_j = {V, j}.
// Indices live in [0, n/2); construct through KnodelGraph::u/v/vertex so they
// get reduced mod n/2.
struct Vertex {
    Part part = Part::U;
    std::int64_t index = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// The Knodel graph W_{delta,n}: a delta-regular bipartite graph on parts
// U = {u_0..u_{n/2-1}} and V = {v_0..v_{n/2-1}}, with u_j adjacent to
// v_{(j + 2^k - 1) mod n/2} for k = 0..delta-1. Immutable after construction
// and safe to share across threads.
class KnodelGraph {
public:
    KnodelGraph(std::int64_t delta, std::int64_t n) : delta_(delta), n_(n) {
        if (n < 2 || n % 2 != 0)
            throw InvalidParameters("n must be even and >= 2, got n=" + std::to_string(n));
        if (delta < 1)
            throw InvalidParameters("delta must be >= 1, got delta=" + std::to_string(delta));
        if (delta >= 62 || pow2(delta) > n)
            throw InvalidParameters("requires 2^delta <= n: delta=" + std::to_string(delta) +
                                    " n=" + std::to_string(n));
        half_ = n / 2;
        s_ = pow2(delta - 1) - 1;
        offsets_.reserve(static_cast<std::size_t>(delta));
        for (std::int64_t k = 0; k < delta; ++k) offsets_.push_back(pow2(k) - 1);
    }

    std::int64_t delta() const { return delta_; }
    std::int64_t n() const { return n_; }
    std::int64_t half() const { return half_; }
    std::int64_t s() const { return s_; }

    // {2^k - 1 : 0 <= k <= delta-1}, strictly increasing
    const std::vector<std::int64_t>& offsets() const { return offsets_; }

    bool has_offset(std::int64_t a) const {
        return std::binary_search(offsets_.begin(), offsets_.end(), a);
    }

    Vertex u(std::int64_t j) const { return {Part::U, mod_floor(j, half_)}; }
    Vertex v(std::int64_t j) const { return {Part::V, mod_floor(j, half_)}; }
    Vertex vertex(Part p, std::int64_t j) const { return {p, mod_floor(j, half_)}; }

    // flat encoding: u_j -> j, v_j -> n/2 + j
    std::int64_t flat_id(Vertex x) const {
        return x.part == Part::U ? x.index : half_ + x.index;
    }
    Vertex from_flat(std::int64_t id) const {
        return id < half_ ? Vertex{Part::U, id} : Vertex{Part::V, id - half_};
    }

    void check(Vertex x) const {
        if (x.index < 0 || x.index >= half_)
            throw IndexOutOfRange("vertex index " + std::to_string(x.index) +
                                  " outside [0, " + std::to_string(half_) + ")");
    }

private:
    std::int64_t delta_;
    std::int64_t n_;
    std::int64_t half_ = 0;
    std::int64_t s_ = 0;
    std::vector<std::int64_t> offsets_;
};

inline KnodelGraph new_graph(std::int64_t delta, std::int64_t n) {
    return KnodelGraph(delta, n);
}

// Neighbors in increasing offset (2^k - 1) order, deduplicated. Within the
// family n >= 2^delta the offsets are distinct mod n/2, so the list has
// exactly delta entries.
inline std::vector<Vertex> neighbors(const KnodelGraph& g, Vertex x) {
    g.check(x);
    std::vector<Vertex> out;
    out.reserve(g.offsets().size());
    for (std::int64_t a : g.offsets()) {
        const Vertex y = x.part == Part::U ? g.v(x.index + a) : g.u(x.index - a);
        if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
    }
    return out;
}

inline bool is_adjacent(const KnodelGraph& g, Vertex x, Vertex y) {
    g.check(x);
    g.check(y);
    if (x.part == y.part) return false;
    const Vertex& uside = x.part == Part::U ? x : y;
    const Vertex& vside = x.part == Part::U ? y : x;
    return g.has_offset(mod_floor(vside.index - uside.index, g.half()));
}

// The two automorphism families used throughout:
//   Shift(t):   u_k -> u_{k+t},  v_k -> v_{k+t}
//   Reflect(t): u_k -> v_{t-k},  v_k -> u_{t-k}
// Shift(j-i) maps u_i to u_j; Reflect(i+j) maps u_i to v_j. Reflect is an
// involution.
struct Automorphism {
    enum class Kind : std::uint8_t { Shift, Reflect };
    Kind kind = Kind::Shift;
    std::int64_t offset = 0;

    static Automorphism shift(std::int64_t t) { return {Kind::Shift, t}; }
    static Automorphism reflect(std::int64_t t) { return {Kind::Reflect, t}; }
};

inline Vertex apply_automorphism(const KnodelGraph& g, Automorphism a, Vertex x) {
    g.check(x);
    if (a.kind == Automorphism::Kind::Shift) return g.vertex(x.part, x.index + a.offset);
    const Part flipped = x.part == Part::U ? Part::V : Part::U;
    return g.vertex(flipped, a.offset - x.index);
}

// Maps x to u_0 and returns the image of y, so d(x, y) = d(u_0, canonical).
// Uses Shift(-i) when x = u_i and Reflect(i) when x = v_i.
inline Vertex canonical_pair(const KnodelGraph& g, Vertex x, Vertex y) {
    g.check(x);
    g.check(y);
    const Automorphism a = x.part == Part::U ? Automorphism::shift(-x.index)
                                             : Automorphism::reflect(x.index);
    return apply_automorphism(g, a, y);
}

// Inverse of the automorphism canonical_pair used for x.
inline Automorphism canonicalizing_inverse(Vertex x) {
    return x.part == Part::U ? Automorphism::shift(x.index) : Automorphism::reflect(x.index);
}

} // namespace knodel
