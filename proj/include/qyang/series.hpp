#pragma once
// Truncated formal series in u^{-1} (and v^{-1}) with coefficients in an
// arbitrary ring E.  E must be default-constructible (= 0) and support
// +=, -=, unary -, binary *, equality, plus two free functions
// is_zero_elem(e) and scale_elem(e, Scalar).
//
// BSeries is bivariate.  Exponent indices r mean "coefficient of u^{-r}";
// the window runs over r, s in [-2, grid], the two negative rows existing so
// that identities can be multiplied by (u - v)(u + v) without losing the
// positive-power coefficients that this creates.  A series carries validity
// bounds lu, lv, ldiag: coefficients with r <= lu, s <= lv, r + s <= ldiag
// are meaningful, everything above is unknown (truncation).  Operations
// propagate bounds conservatively, so the region on which a verified
// identity is actually checked falls out of the arithmetic.
//
// A series flagged `exact` represents a genuine polynomial in u^{-1}, v^{-1}
// whose out-of-window coefficients are zero; only such series may enter the
// exact division routines.  Division by (u - v) and (u + v) works in the
// inverse-variable polynomial ring: with x = u^{-1}, y = v^{-1},
// u - v = (y - x)/(xy), so n/(u - v) = xy * (n / (y - x)).  The numerator
// must vanish on the diagonal u = v (resp. v = -u); violations raise
// DiagonalError.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>
#include "qyang/scalar.hpp"
#include "qyang/parity.hpp"

namespace qy {

inline bool is_zero_elem(const Scalar& s) { return sgn(s) == 0; }
inline void scale_elem(Scalar& s, const Scalar& c) { s *= c; }

template <class E>
class BSeries {
 public:
  static constexpr int kLo = -2;

  BSeries() = default;
  explicit BSeries(int grid, int lu = -3, int lv = -3, int ldiag = -3)
      : grid_(grid),
        lu_(lu == -3 ? grid : lu),
        lv_(lv == -3 ? grid : lv),
        ldiag_(ldiag == -3 ? 2 * grid : ldiag),
        c_(size_t(grid - kLo + 1) * size_t(grid - kLo + 1)) {}

  bool empty() const { return c_.empty(); }
  int grid() const { return grid_; }
  int lu() const { return lu_; }
  int lv() const { return lv_; }
  int ldiag() const { return ldiag_; }
  bool exact() const { return exact_; }
  void set_exact(bool b) { exact_ = b; }
  void restrict_bounds(int lu, int lv, int ldiag = 1 << 20) {
    lu_ = std::min(lu_, lu);
    lv_ = std::min(lv_, lv);
    ldiag_ = std::min(ldiag_, ldiag);
  }

  const E& at(int r, int s) const {
    static const E kZero{};
    if (r < kLo || s < kLo) throw std::runtime_error("BSeries::at: below window");
    if (r > grid_ || s > grid_) {
      if (exact_) return kZero;
      throw std::runtime_error("BSeries::at: index beyond grid");
    }
    return c_[idx(r, s)];
  }
  E& ref(int r, int s) { return c_[idx(r, s)]; }

  BSeries& operator+=(const BSeries& o) {
    if (empty()) return *this = o;
    if (o.empty()) return *this;
    require_same_grid(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    lu_ = std::min(lu_, o.lu_);
    lv_ = std::min(lv_, o.lv_);
    ldiag_ = std::min(ldiag_, o.ldiag_);
    exact_ = exact_ && o.exact_;
    return *this;
  }
  BSeries& operator-=(const BSeries& o) {
    if (o.empty()) return *this;
    if (empty()) *this = BSeries(o.grid_);
    require_same_grid(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    lu_ = std::min(lu_, o.lu_);
    lv_ = std::min(lv_, o.lv_);
    ldiag_ = std::min(ldiag_, o.ldiag_);
    exact_ = exact_ && o.exact_;
    return *this;
  }
  friend BSeries operator+(BSeries a, const BSeries& b) { return a += b; }
  friend BSeries operator-(BSeries a, const BSeries& b) { return a -= b; }
  friend BSeries operator-(const BSeries& a) {
    BSeries r = a;
    for (auto& e : r.c_) e = -e;
    return r;
  }
  BSeries& scale(const Scalar& k) {
    for (auto& e : c_) scale_elem(e, k);
    return *this;
  }

  friend BSeries operator*(const BSeries& a, const BSeries& b) {
    if (a.empty() || b.empty()) return BSeries();
    a.require_same_grid(b);
    BSeries r(a.grid_, std::min(a.lu_, b.lu_), std::min(a.lv_, b.lv_),
              std::min(a.ldiag_, b.ldiag_));
    r.exact_ = a.exact_ && b.exact_ &&
               (a.max_nonzero_total() + b.max_nonzero_total() <= a.grid_);
    for (int p = kLo; p <= a.grid_; ++p)
      for (int q = kLo; q <= a.grid_; ++q) {
        const E& ea = a.c_[a.idx(p, q)];
        if (is_zero_elem(ea)) continue;
        for (int p2 = kLo; p2 <= b.grid_; ++p2) {
          if (p + p2 > a.grid_) break;
          for (int q2 = kLo; q2 <= b.grid_; ++q2) {
            if (q + q2 > a.grid_) break;
            const E& eb = b.c_[b.idx(p2, q2)];
            if (is_zero_elem(eb)) continue;
            if (p + p2 < kLo || q + q2 < kLo)
              throw std::runtime_error("BSeries::mul: product falls below window");
            r.c_[r.idx(p + p2, q + q2)] += ea * eb;
          }
        }
      }
    return r;
  }

  BSeries substitute_neg_u() const {
    BSeries r = *this;
    for (int p = kLo; p <= grid_; ++p) {
      if (!(p & 1)) continue;
      for (int q = kLo; q <= grid_; ++q) r.c_[idx(p, q)] = -r.c_[idx(p, q)];
    }
    return r;
  }
  BSeries substitute_neg_v() const {
    BSeries r = *this;
    for (int q = kLo; q <= grid_; ++q) {
      if (!(q & 1)) continue;
      for (int p = kLo; p <= grid_; ++p) r.c_[idx(p, q)] = -r.c_[idx(p, q)];
    }
    return r;
  }

  // Multiplication by u: index shift.  The bottom row must be vacant (at most
  // two accumulated positive powers are supported) and one order of validity
  // is lost at the top.
  BSeries shift_mul_u() const {
    for (int q = kLo; q <= grid_; ++q)
      if (!is_zero_elem(c_[idx(kLo, q)]))
        throw std::runtime_error("BSeries::shift_mul_u: positive-power window full");
    BSeries r(grid_, std::min(lu_ - 1, grid_), lv_, ldiag_ - 1);
    r.exact_ = false;
    for (int p = kLo; p < grid_; ++p)
      for (int q = kLo; q <= grid_; ++q) r.c_[idx(p, q)] = c_[idx(p + 1, q)];
    return r;
  }
  BSeries shift_mul_v() const {
    for (int p = kLo; p <= grid_; ++p)
      if (!is_zero_elem(c_[idx(p, kLo)]))
        throw std::runtime_error("BSeries::shift_mul_v: positive-power window full");
    BSeries r(grid_, lu_, std::min(lv_ - 1, grid_), ldiag_ - 1);
    r.exact_ = false;
    for (int q = kLo; q < grid_; ++q)
      for (int p = kLo; p <= grid_; ++p) r.c_[idx(p, q)] = c_[idx(p, q + 1)];
    return r;
  }

  // d/du: u^{-r} -> -r u^{-r-1} (valid for signed exponents).
  BSeries derivative_u() const {
    BSeries r(grid_, std::min(grid_, lu_ + 1), lv_,
              std::min(2 * grid_, ldiag_ + 1));
    r.exact_ = exact_;
    for (int p = kLo + 1; p <= grid_; ++p)
      for (int q = kLo; q <= grid_; ++q) {
        E e = c_[idx(p - 1, q)];
        scale_elem(e, Scalar(-(p - 1)));
        r.c_[idx(p, q)] = std::move(e);
      }
    return r;
  }

  // Specialization v = u (sign=+1) or v = -u (sign=-1); univariate result on
  // the u-axis.
  BSeries diagonal(int sign) const {
    int bound = std::min({lu_, lv_, ldiag_});
    BSeries r(grid_, bound, grid_, 2 * grid_);
    r.exact_ = exact_;
    for (int d = 2 * kLo; d <= grid_; ++d) {
      E acc{};
      for (int p = kLo; p <= grid_; ++p) {
        int q = d - p;
        if (q < kLo || q > grid_) continue;
        E e = c_[idx(p, q)];
        if (sign < 0 && (q & 1)) e = -e;
        acc += e;
      }
      if (d < kLo) {
        if (!is_zero_elem(acc))
          throw std::runtime_error("BSeries::diagonal: positive power below window");
        continue;
      }
      r.c_[idx(d, 0)] = std::move(acc);
    }
    return r;
  }

  struct DiagonalError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  BSeries divide_u_minus_v() const { return divide_linear(false); }
  BSeries divide_u_plus_v() const { return divide_linear(true); }

  bool is_zero_on_bounds() const { return first_nonzero_on_bounds().first == -1000; }

  // First violating coefficient in total-degree order, or (-1000,-1000).
  std::pair<int, int> first_nonzero_on_bounds() const {
    if (empty()) return {-1000, -1000};
    for (int d = 2 * kLo; d <= 2 * grid_; ++d)
      for (int r = kLo; r <= grid_; ++r) {
        int s = d - r;
        if (s < kLo || s > grid_) continue;
        if (r <= lu_ && s <= lv_ && d <= ldiag_ && !is_zero_elem(c_[idx(r, s)]))
          return {r, s};
      }
    return {-1000, -1000};
  }

  int max_nonzero_total() const {
    int d = 2 * kLo;
    for (int r = kLo; r <= grid_; ++r)
      for (int s = kLo; s <= grid_; ++s)
        if (!is_zero_elem(c_[idx(r, s)])) d = std::max(d, r + s);
    return std::max(d, 0);
  }

  bool operator==(const BSeries& o) const {
    if (empty() || o.empty()) return (empty() ? o : *this).is_zero_everywhere();
    require_same_grid(o);
    for (size_t k = 0; k < c_.size(); ++k)
      if (!(c_[k] == o.c_[k])) return false;
    return true;
  }
  bool is_zero_everywhere() const {
    for (const auto& e : c_)
      if (!is_zero_elem(e)) return false;
    return true;
  }

 private:
  size_t idx(int r, int s) const {
    return size_t(r - kLo) * size_t(grid_ - kLo + 1) + size_t(s - kLo);
  }
  void require_same_grid(const BSeries& o) const {
    if (grid_ != o.grid_) throw std::runtime_error("BSeries: mixed grid sizes");
  }

  BSeries divide_linear(bool plus) const {
    if (!exact_)
      throw std::runtime_error(
          "BSeries::divide: numerator must be exact (fully represented)");
    for (int r = kLo; r < 0; ++r)
      for (int s = kLo; s <= grid_; ++s)
        if (!is_zero_elem(c_[idx(r, s)]) || !is_zero_elem(c_[idx(s, r)]))
          throw std::runtime_error("BSeries::divide: positive powers present");
    // Diagonal-vanishing precondition on every antidiagonal.
    for (int d = 0; d <= 2 * grid_; ++d) {
      E acc{};
      for (int p = std::max(0, d - grid_); p <= std::min(grid_, d); ++p) {
        int q = d - p;
        E e = c_[idx(p, q)];
        if (plus && (q & 1)) e = -e;
        acc += e;
      }
      if (!is_zero_elem(acc))
        throw DiagonalError(plus
                                ? "divide_u_plus_v: numerator does not vanish at v=-u"
                                : "divide_u_minus_v: numerator does not vanish at u=v");
    }
    // n / (y - x):  S(p,q) = sum_{m<=p} N(m, q+1+p-m)
    // n / (x + y):  S(p,q) = sum_{m<=p} (-1)^m N(p-m, q+1+m)
    BSeries S(grid_);
    S.exact_ = true;
    for (int p = 0; p <= grid_; ++p)
      for (int q = 0; q <= grid_; ++q) {
        E acc{};
        for (int m = 0; m <= p; ++m) {
          int pp = plus ? p - m : m;
          int qq = plus ? q + 1 + m : q + 1 + p - m;
          if (pp > grid_ || qq > grid_) continue;
          E e = c_[idx(pp, qq)];
          if (plus && (m & 1)) e = -e;
          acc += e;
        }
        S.c_[S.idx(p, q)] = std::move(acc);
      }
    BSeries R(grid_);  // multiply by xy: result(r,s) = S(r-1, s-1)
    R.exact_ = true;
    for (int r = 1; r <= grid_; ++r)
      for (int s = 1; s <= grid_; ++s)
        R.c_[R.idx(r, s)] = std::move(S.c_[S.idx(r - 1, s - 1)]);
    return R;
  }

  int grid_ = -1;
  int lu_ = -1, lv_ = -1, ldiag_ = -1;
  bool exact_ = false;
  std::vector<E> c_;
};

// Univariate truncated series (non-negative exponents only).
template <class E>
class USeries {
 public:
  USeries() = default;
  explicit USeries(int order) : c_(order + 1) {}
  static USeries unit_series(int order, E one) {
    USeries s(order);
    s.c_[0] = std::move(one);
    return s;
  }

  int order() const { return int(c_.size()) - 1; }
  bool empty() const { return c_.empty(); }
  const E& at(int r) const {
    static const E kZero{};
    if (r < 0 || r > order()) return kZero;
    return c_[r];
  }
  E& ref(int r) { return c_[r]; }

  USeries& operator+=(const USeries& o) {
    if (empty()) return *this = o;
    if (o.empty()) return *this;
    require_same(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  USeries& operator-=(const USeries& o) {
    if (o.empty()) return *this;
    if (empty()) *this = USeries(o.order());
    require_same(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend USeries operator+(USeries a, const USeries& b) { return a += b; }
  friend USeries operator-(USeries a, const USeries& b) { return a -= b; }
  friend USeries operator-(const USeries& a) {
    USeries r = a;
    for (auto& e : r.c_) e = -e;
    return r;
  }
  USeries& scale(const Scalar& k) {
    for (auto& e : c_) scale_elem(e, k);
    return *this;
  }

  friend USeries operator*(const USeries& a, const USeries& b) {
    if (a.empty() || b.empty()) return USeries();
    a.require_same(b);
    USeries r(a.order());
    for (int p = 0; p <= a.order(); ++p) {
      if (is_zero_elem(a.c_[p])) continue;
      for (int q = 0; p + q <= a.order(); ++q) {
        if (is_zero_elem(b.c_[q])) continue;
        r.c_[p + q] += a.c_[p] * b.c_[q];
      }
    }
    return r;
  }

  USeries substitute_neg() const {
    USeries r = *this;
    for (int p = 1; p <= order(); p += 2) r.c_[p] = -r.c_[p];
    return r;
  }
  USeries derivative() const {
    USeries r(order());
    for (int p = 1; p <= order(); ++p) {
      E e = c_[p - 1];
      scale_elem(e, Scalar(-(p - 1)));
      r.c_[p] = std::move(e);
    }
    return r;
  }
  USeries drop_level_one() const {
    USeries r = *this;
    if (r.order() >= 1) r.c_[1] = E{};
    return r;
  }

  bool is_zero() const {
    for (const auto& e : c_)
      if (!is_zero_elem(e)) return false;
    return true;
  }
  int first_nonzero() const {
    for (int r = 0; r <= order(); ++r)
      if (!is_zero_elem(c_[r])) return r;
    return -1;
  }
  bool operator==(const USeries& o) const {
    if (empty() || o.empty()) return (empty() ? o : *this).is_zero();
    require_same(o);
    for (size_t k = 0; k < c_.size(); ++k)
      if (!(c_[k] == o.c_[k])) return false;
    return true;
  }

  BSeries<E> to_bivar_u(int grid) const {
    BSeries<E> r(grid, std::min(grid, order()), grid, 2 * grid);
    for (int p = 0; p <= std::min(grid, order()); ++p) r.ref(p, 0) = c_[p];
    return r;
  }
  BSeries<E> to_bivar_v(int grid) const {
    BSeries<E> r(grid, grid, std::min(grid, order()), 2 * grid);
    for (int q = 0; q <= std::min(grid, order()); ++q) r.ref(0, q) = c_[q];
    return r;
  }

 private:
  void require_same(const USeries& o) const {
    if (order() != o.order())
      throw std::runtime_error("USeries: mixed truncation orders");
  }
  std::vector<E> c_;
};

}  // namespace qy
