#pragma once
#include <gmpxx.h>
#include <string>
#include <cstdint>

namespace sct {

// Exact rational arithmetic for pole bookkeeping. Backed by GMP: products of
// dozens of linear factors overflow any fixed-width representation.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long num_long(const Rational& q) { return q.get_num().get_si(); }
inline long den_long(const Rational& q) { return q.get_den().get_si(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace sct
