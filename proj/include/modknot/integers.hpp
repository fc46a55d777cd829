#pragma once
#include <boost/multiprecision/cpp_int.hpp>

namespace modknot {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(const Int& x) { return x.sign(); }

inline Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

// floor of the square root (n >= 0)
inline Int isqrt_floor(const Int& n) { return sqrt(n); }

inline bool is_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = isqrt_floor(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

inline double to_double(const Int& x) { return x.convert_to<double>(); }
inline double to_double(const Rat& x) { return x.convert_to<double>(); }

}  // namespace modknot
