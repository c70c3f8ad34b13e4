#include "qyang/superpoly.hpp"

#include <algorithm>

namespace qy {

std::vector<std::pair<Monomial, Scalar>> SuperPoly::sorted_terms() const {
  std::vector<std::pair<Monomial, Scalar>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

std::string SuperPoly::text() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    if (!first) s += " + ";
    first = false;
    if (m.is_unit()) {
      s += to_text(c);
    } else {
      s += to_text(c) + " * " + m.text();
    }
  }
  return s;
}

SuperPoly multiply(const SuperPoly& a, const SuperPoly& b, int trunc) {
  SuperPoly r;
  for (const auto& [ma, ca] : a.terms()) {
    int da = ma.degree();
    if (trunc >= 0 && da > trunc) continue;
    for (const auto& [mb, cb] : b.terms()) {
      if (trunc >= 0 && da + mb.degree() > trunc) continue;
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

SuperPoly super_commutator(const SuperPoly& a, const SuperPoly& b, int trunc) {
  auto pa = a.parity();
  auto pb = b.parity();
  if (!pa || !pb) return SuperPoly::zero();  // commutator with 0
  SuperPoly r = multiply(a, b, trunc);
  SuperPoly ba = multiply(b, a, trunc);
  if (is_odd(*pa) && is_odd(*pb))
    r += ba;
  else
    r -= ba;
  return r;
}

}  // namespace qy
