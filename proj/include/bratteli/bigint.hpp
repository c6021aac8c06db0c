#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace bratteli {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

/// Natural log of a positive big integer, accurate to ~1e-15 relative.
/// Safe for integers far beyond double range.
inline double log_big(const Int& a) {
    if (a <= 0) return -std::numeric_limits<double>::infinity();
    const std::size_t bits = boost::multiprecision::msb(a) + 1;
    if (bits <= 900) return std::log(a.convert_to<double>());
    const std::size_t shift = bits - 64;
    const Int top = a >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

inline double log_rat(const Rat& r) {
    return log_big(boost::multiprecision::numerator(r)) -
           log_big(boost::multiprecision::denominator(r));
}

/// Double value of a rational whose magnitude may overflow double.
inline double rat_to_double(const Rat& r) {
    if (r == 0) return 0.0;
    const bool neg = r < 0;
    const Rat a = neg ? Rat(-r) : r;
    const double lg = log_rat(a);
    if (lg > 700.0) return neg ? -std::numeric_limits<double>::infinity()
                               : std::numeric_limits<double>::infinity();
    if (lg < -745.0) return 0.0;
    const double v = a.convert_to<double>();
    return neg ? -v : v;
}

/// Canonical "num/den" rendering ("num" when the denominator is 1).
inline std::string rat_to_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline std::size_t bit_size(const Int& a) {
    if (a == 0) return 0;
    return boost::multiprecision::msb(boost::multiprecision::abs(a)) + 1;
}

}  // namespace bratteli
