// Arbitrary-precision integer helpers shared by every module.
//
// All lattice arithmetic is exact.  The uniform degree bound evaluated at
// moderate (n, gamma) already overflows 64-bit under squaring, so the
// certifier core works in cpp_int throughout and narrows to machine words
// only where a domain guard makes that provably safe.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hkcert {

using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// Floor of the non-negative square root.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    if (n == 0) return 0;
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

// Mathematical modulus, result in [0, m).
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline bool fits_int64(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    return v >= lo && v <= hi;
}

inline std::int64_t to_i64(const Int& v) {
    if (!fits_int64(v)) throw std::overflow_error("value exceeds 64-bit range: " + v.str());
    return static_cast<std::int64_t>(v);
}

inline std::string to_string(const Int& v) { return v.str(); }

}  // namespace hkcert
