#pragma once

#include <cassert>
#include <cstdint>

namespace knodel {

// Exact integer floor/ceil division. All index and threshold formulas in this
// library stay in integer arithmetic; nothing here touches floating point.

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    assert(b != 0);
    const std::int64_t q = a / b;
    return q - ((a % b != 0) && ((a < 0) != (b < 0)));
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    assert(b != 0);
    const std::int64_t q = a / b;
    return q + ((a % b != 0) && ((a < 0) == (b < 0)));
}

// a reduced into [0, m), also for negative a
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    assert(m > 0);
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t pow2(std::int64_t e) {
    assert(e >= 0 && e < 63);
    return std::int64_t{1} << e;
}

} // namespace knodel
