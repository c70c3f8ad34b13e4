#pragma once
// Generator symbols t[i,j,r] of the super-Yangian Y(q_n) and PBW monomials.
//
// A generator symbol has a signed row index i in {-n..-1, 1..n}, a column
// index j in {1..n} (columns are always stored positive: t[i,-j,r] is folded
// to (-1)^r t[-i,j,r] before a symbol is ever created), and a level r >= 1
// (the coefficient of u^{-r}).  Its parity is |i|+|j|, its filtration degree
// is r.
//
// The fixed monomial order is lexicographic on the key
//   (row position, column, level)
// where rows are enumerated 1, -1, 2, -2, ....  A PBW monomial is a word of
// generator symbols that is non-decreasing in this order with odd symbols
// square-free.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>
#include "qyang/parity.hpp"

namespace qy {

// Position of a signed row in the enumeration 1, -1, 2, -2, ...
inline int row_position(int row) {
  int a = row < 0 ? -row : row;
  return 2 * (a - 1) + (row < 0 ? 1 : 0);
}

struct GenSymbol {
  int16_t row = 1;   // signed, != 0
  int16_t col = 1;   // always > 0
  int16_t level = 1; // >= 1

  Parity parity() const {
    return index_parity(row) + index_parity(col);
  }
  int degree() const { return level; }

  // Total order used for PBW normal ordering.
  friend auto operator<=>(const GenSymbol& a, const GenSymbol& b) {
    if (int c = row_position(a.row) - row_position(b.row); c != 0)
      return c <=> 0;
    if (int c = a.col - b.col; c != 0) return c <=> 0;
    return a.level <=> b.level;
  }
  friend bool operator==(const GenSymbol&, const GenSymbol&) = default;

  std::string text() const {
    return "t[" + std::to_string(row) + "," + std::to_string(col) + "," +
           std::to_string(level) + "]";
  }
};

struct Monomial {
  std::vector<GenSymbol> gens;  // empty = unit monomial

  int degree() const {
    int d = 0;
    for (const auto& g : gens) d += g.level;
    return d;
  }
  // Degree in the second filtration (level - 1 per factor).
  int degree_prime() const {
    int d = 0;
    for (const auto& g : gens) d += g.level - 1;
    return d;
  }
  Parity parity() const {
    Parity p = Parity::Even;
    for (const auto& g : gens) p = p + g.parity();
    return p;
  }
  size_t size() const { return gens.size(); }
  bool is_unit() const { return gens.empty(); }

  // True if non-decreasing with odd symbols square-free.
  bool is_normal_ordered() const {
    for (size_t k = 0; k + 1 < gens.size(); ++k) {
      if (gens[k + 1] < gens[k]) return false;
      if (gens[k] == gens[k + 1] && is_odd(gens[k].parity())) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.gens.reserve(a.gens.size() + b.gens.size());
    m.gens.insert(m.gens.end(), a.gens.begin(), a.gens.end());
    m.gens.insert(m.gens.end(), b.gens.begin(), b.gens.end());
    return m;
  }

  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    // Lexicographic on the symbol sequence, shorter prefix first.  Any total
    // order works for canonical serialization; the PBW order on symbols makes
    // the printed form stable and human-readable.
    size_t n = std::min(a.gens.size(), b.gens.size());
    for (size_t k = 0; k < n; ++k) {
      if (auto c = (a.gens[k] <=> b.gens[k]); c != 0) return c;
    }
    return a.gens.size() <=> b.gens.size();
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string text() const {
    std::string s;
    for (size_t k = 0; k < gens.size(); ++k) {
      if (k) s += " ";
      s += gens[k].text();
    }
    return s;
  }
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    // FNV-1a over the packed symbol data.
    size_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    for (const auto& g : m.gens)
      mix((uint64_t(uint16_t(g.row)) << 32) | (uint64_t(uint16_t(g.col)) << 16) |
          uint64_t(uint16_t(g.level)));
    return h;
  }
};

}  // namespace qy
