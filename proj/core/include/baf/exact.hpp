#pragma once

#include <gmpxx.h>

#include <string>

namespace baf {

// Arbitrary-precision integer and rational scalars. mpq_class keeps
// numerator/denominator coprime with positive denominator, which is exactly
// the canonical form every lattice and polynomial computation here relies on.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
  Rat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

// gmpxx has no long long constructors; go through long
static_assert(sizeof(long) == sizeof(long long), "64-bit long assumed");

inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// exact conversion; throws if q has a denominator
inline Int to_int(const Rat& q) {
  if (!is_integer(q)) throw std::invalid_argument("to_int: not an integer: " + q.get_str());
  return q.get_num();
}

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline bool fits_int64(const Int& n) { return n.fits_slong_p(); }

}  // namespace baf
