#ifndef GAUSS4_RATIONAL_HPP
#define GAUSS4_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "gauss4/errors.hpp"

namespace gauss4 {

// Exact rational arithmetic everywhere; nothing in the invariant pipeline is
// ever floated.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline std::string to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::int64_t to_int64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw RangeOverflow("coefficient exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
}

} // namespace gauss4

#endif
