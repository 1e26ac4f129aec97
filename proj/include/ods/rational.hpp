#ifndef ODS_RATIONAL_HPP
#define ODS_RATIONAL_HPP

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ods {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    // b > 0, a >= 0 in all uses here
    return (a + b - 1) / b;
}

// Largest s with s*s <= x.
inline std::int64_t isqrt_floor(std::int64_t x) {
    if (x < 0) return 0;
    std::int64_t s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (s > 0 && s * s > x) --s;
    while ((s + 1) * (s + 1) <= x) ++s;
    return s;
}

// Smallest s with s*s >= x.
inline std::int64_t isqrt_ceil(std::int64_t x) {
    std::int64_t f = isqrt_floor(x);
    return f * f == x ? f : f + 1;
}

inline std::string rational_to_string(const Rational& r) {
    return r.str();
}

inline std::int64_t rational_num_i64(const Rational& r) {
    return static_cast<std::int64_t>(boost::multiprecision::numerator(r));
}

inline std::int64_t rational_den_i64(const Rational& r) {
    return static_cast<std::int64_t>(boost::multiprecision::denominator(r));
}

inline std::string rational_num_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str();
}

inline std::string rational_den_string(const Rational& r) {
    return boost::multiprecision::denominator(r).str();
}

}  // namespace ods

#endif
