#pragma once
// Exact rational scalars.  Thin alias over GMP's mpq_class: every coefficient
// in the kernel is an arbitrary-precision rational, no floating point anywhere.

#include <gmpxx.h>
#include <string>
#include <cstdint>

namespace qy {

using Scalar = mpq_class;

inline Scalar rat(long num, long den = 1) {
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

// Canonical text: "num" when the denominator is 1, else "num/den".
inline std::string to_text(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

}  // namespace qy
