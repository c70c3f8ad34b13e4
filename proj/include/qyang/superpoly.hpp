#pragma once
// Elements of the free associative superalgebra on the generator symbols,
// with exact rational coefficients and truncation by filtration degree.
//
// SuperPoly is a plain linear combination of words; it knows nothing about
// the defining relations.  Rewriting into PBW normal form lives in
// YangianContext (context.hpp).

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>
#include "qyang/gens.hpp"

namespace qy {

class SuperPoly {
 public:
  using TermMap = std::unordered_map<Monomial, Scalar, MonomialHash>;

  SuperPoly() = default;
  static SuperPoly zero() { return SuperPoly(); }
  static SuperPoly unit(Scalar c = Scalar(1)) {
    SuperPoly p;
    if (!qy::is_zero(c)) p.terms_.emplace(Monomial{}, std::move(c));
    return p;
  }
  static SuperPoly generator(GenSymbol g, Scalar c = Scalar(1)) {
    SuperPoly p;
    if (!qy::is_zero(c)) p.terms_.emplace(Monomial{{g}}, std::move(c));
    return p;
  }
  static SuperPoly monomial(Monomial m, Scalar c = Scalar(1)) {
    SuperPoly p;
    if (!qy::is_zero(c)) p.terms_.emplace(std::move(m), std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  int degree() const {  // max filtration degree, -1 for zero
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  // Homogeneous parity; nullopt for zero, throws if mixed.
  std::optional<Parity> parity() const {
    std::optional<Parity> p;
    for (const auto& [m, c] : terms_) {
      Parity q = m.parity();
      if (!p)
        p = q;
      else if (*p != q)
        throw std::runtime_error("SuperPoly::parity: element is not parity-homogeneous");
    }
    return p;
  }
  bool is_homogeneous() const {
    try {
      (void)parity();
      return true;
    } catch (const std::runtime_error&) {
      return false;
    }
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (qy::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (qy::is_zero(it->second)) terms_.erase(it);
    }
  }

  SuperPoly& operator+=(const SuperPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SuperPoly& operator-=(const SuperPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator-(const SuperPoly& a) {
    SuperPoly r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  SuperPoly& scale(const Scalar& c) {
    if (qy::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }
  friend SuperPoly operator*(const Scalar& c, SuperPoly p) { return p.scale(c); }

  // Drop every term of filtration degree > trunc (trunc < 0: keep all).
  SuperPoly& truncate(int trunc) {
    if (trunc < 0) return *this;
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->first.degree() > trunc)
        it = terms_.erase(it);
      else
        ++it;
    }
    return *this;
  }

  bool operator==(const SuperPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [m, c] : terms_) {
      auto it = o.terms_.find(m);
      if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
  }

  // Deterministic list of (monomial, coefficient) sorted by monomial order.
  std::vector<std::pair<Monomial, Scalar>> sorted_terms() const;

  // Canonical text form, e.g. "1 + -3/2 * t[1,1,1] t[-1,2,2]"; "0" for zero.
  std::string text() const;

 private:
  TermMap terms_;
};

// Free (concatenation) product, truncated by filtration degree.
SuperPoly multiply(const SuperPoly& a, const SuperPoly& b, int trunc = -1);

// Super commutator a b - (-1)^{|a||b|} b a of parity-homogeneous arguments.
SuperPoly super_commutator(const SuperPoly& a, const SuperPoly& b, int trunc = -1);

}  // namespace qy
