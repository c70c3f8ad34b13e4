#pragma once
// Z/2 parity and the Koszul sign rule for super vector spaces.

#include <cstdint>
#include <vector>
#include "qyang/scalar.hpp"

namespace qy {

enum class Parity : uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b)));
}
inline bool is_odd(Parity p) { return p == Parity::Odd; }

// Parity of a signed index i in {-n..-1, 1..n}: positive indices are even,
// negative indices odd.
inline Parity index_parity(int i) { return i < 0 ? Parity::Odd : Parity::Even; }

// Sign picked up when a block of homogeneous elements with parities `movers`
// is transposed past a block with parities `fixed`:
//   (a1 (x) b1)(a2 (x) b2) = koszul_sign({|a2|},{|b1|}) a1 a2 (x) b1 b2.
// Iterated transposition collapses to (-1)^{(sum movers)(sum fixed)}.
inline int koszul_sign_int(const std::vector<Parity>& movers,
                           const std::vector<Parity>& fixed) {
  unsigned m = 0, f = 0;
  for (Parity p : movers) m += static_cast<unsigned>(p);
  for (Parity p : fixed) f += static_cast<unsigned>(p);
  return ((m & 1u) && (f & 1u)) ? -1 : 1;
}

inline Scalar koszul_sign(const std::vector<Parity>& movers,
                          const std::vector<Parity>& fixed) {
  return Scalar(koszul_sign_int(movers, fixed));
}

// Same sign computed the pedestrian way (one adjacent transposition at a
// time); used as an oracle in tests.
inline int koszul_sign_bruteforce(const std::vector<Parity>& movers,
                                  const std::vector<Parity>& fixed) {
  int sign = 1;
  for (Parity a : movers)
    for (Parity b : fixed)
      if (is_odd(a) && is_odd(b)) sign = -sign;
  return sign;
}

}  // namespace qy
