#pragma once

/// \file cyclotomic.hpp
/// Exact arithmetic in cyclotomic fields Q(zeta_n).
///
/// A value is stored as a conductor `order` together with rational
/// coefficients over the power basis 1, zeta, ..., zeta^(phi(order)-1),
/// reduced modulo the order-th cyclotomic polynomial.  Every constructor
/// canonicalizes: the vector is reduced and the conductor is minimal (in
/// particular it is never congruent to 2 mod 4, and rationals always have
/// order 1).  Two values are equal iff their stored forms are identical,
/// so equality and ordering are plain member comparisons.

#include <cstddef>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace cptrep {

namespace detail {

inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

/// Monic integer coefficients of the n-th cyclotomic polynomial,
/// lowest degree first.  Computed as (x^n - 1) divided by all lower
/// cyclotomic polynomials; results are memoized.
inline const std::vector<Int>& cyclotomic_poly(unsigned n) {
  static std::vector<std::vector<Int>> cache;  // cache[n], empty = not yet built
  if (n == 0) throw std::domain_error("cyclotomic_poly: n must be positive");
  if (cache.size() <= n) cache.resize(n + 1);
  if (!cache[n].empty()) return cache[n];
  // x^n - 1
  std::vector<Int> poly(n + 1, Int(0));
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<Int>& div = cyclotomic_poly(d);
    // exact long division, divisor is monic
    std::vector<Int> quot(poly.size() - div.size() + 1, Int(0));
    std::vector<Int> rem = poly;
    for (std::size_t i = quot.size(); i-- > 0;) {
      Int c = rem[i + div.size() - 1];
      if (c == 0) continue;
      quot[i] = c;
      for (std::size_t j = 0; j < div.size(); ++j) rem[i + j] -= c * div[j];
    }
    poly = std::move(quot);
  }
  cache[n] = std::move(poly);
  return cache[n];
}

}  // namespace detail

class Cyclotomic {
public:
  Cyclotomic() : order_(1), coeffs_{Rational(0)} {}
  Cyclotomic(long long n) : order_(1), coeffs_{Rational(n)} {}
  Cyclotomic(Rational r) : order_(1), coeffs_{std::move(r)} {}

  /// zeta_n^k for any integer k (negative allowed).  n = 1 gives 1.
  static Cyclotomic root_of_unity(unsigned n, long long k) {
    if (n == 0) throw std::domain_error("root_of_unity: order must be positive");
    if (n > kMaxOrder) throw std::domain_error("root_of_unity: order too large");
    long long kk = k % static_cast<long long>(n);
    if (kk < 0) kk += n;
    std::vector<Rational> raw(n, Rational(0));
    raw[static_cast<std::size_t>(kk)] = Rational(1);
    return Cyclotomic(n, std::move(raw));
  }

  /// Arbitrary power-basis coefficients over zeta_n; canonicalized.
  static Cyclotomic from_coeffs(unsigned n, std::vector<Rational> raw) {
    if (n == 0) throw std::domain_error("from_coeffs: order must be positive");
    if (n > kMaxOrder) throw std::domain_error("from_coeffs: order too large");
    raw.resize(std::max<std::size_t>(raw.size(), 1), Rational(0));
    return Cyclotomic(n, std::move(raw));
  }

  /// re + im*i.
  static Cyclotomic gaussian(Rational re, Rational im) {
    if (im.is_zero()) return Cyclotomic(std::move(re));
    std::vector<Rational> raw{std::move(re), std::move(im), Rational(0), Rational(0)};
    return Cyclotomic(4, std::move(raw));
  }

  static Cyclotomic i() { return gaussian(Rational(0), Rational(1)); }

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return order_ == 1 && coeffs_[0].is_zero(); }
  bool is_one() const { return order_ == 1 && coeffs_[0].is_one(); }
  bool is_rational() const { return order_ == 1; }

  /// Rational value; throws when the number is irrational.
  const Rational& to_rational() const {
    if (order_ != 1) throw std::domain_error("Cyclotomic: not rational: " + to_string());
    return coeffs_[0];
  }

  /// (re, im) for values lying in Q(i); throws otherwise.
  std::pair<Rational, Rational> as_gaussian() const {
    if (order_ == 1) return {coeffs_[0], Rational(0)};
    if (order_ == 4) return {coeffs_[0], coeffs_[1]};
    throw std::domain_error("Cyclotomic: not in Q(i): " + to_string());
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (Rational& c : r.coeffs_) c = -c;
    return r;  // negation cannot change the conductor
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) {
      std::vector<Rational> raw = a.coeffs_;
      for (std::size_t k = 0; k < raw.size(); ++k) raw[k] += b.coeffs_[k];
      if (a.order_ == 1) return Cyclotomic(std::move(raw[0]));
      return Cyclotomic(a.order_, std::move(raw));
    }
    const unsigned L = common_order(a.order_, b.order_);
    std::vector<Rational> raw = a.embedded_raw(L);
    const unsigned step = L / b.order_;
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) raw[k * step] += b.coeffs_[k];
    return Cyclotomic(L, std::move(raw));
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == 1 && b.order_ == 1) return Cyclotomic(a.coeffs_[0] * b.coeffs_[0]);
    if (a.order_ == 1) return b.scaled(a.coeffs_[0]);
    if (b.order_ == 1) return a.scaled(b.coeffs_[0]);
    if (a.order_ == 4 && b.order_ == 4) {
      // (p + qi)(r + si)
      const Rational &p = a.coeffs_[0], &q = a.coeffs_[1];
      const Rational &r = b.coeffs_[0], &s = b.coeffs_[1];
      return gaussian(p * r - q * s, p * s + q * r);
    }
    const unsigned L = common_order(a.order_, b.order_);
    const std::vector<Rational> ea = a.embedded_raw(L);
    const std::vector<Rational> eb = b.embedded_raw(L);
    std::vector<Rational> prod(2 * L, Rational(0));
    for (std::size_t k = 0; k < ea.size(); ++k) {
      if (ea[k].is_zero()) continue;
      for (std::size_t j = 0; j < eb.size(); ++j) {
        if (eb[j].is_zero()) continue;
        prod[k + j] += ea[k] * eb[j];
      }
    }
    return Cyclotomic(L, std::move(prod));
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  /// Complex conjugate (the Galois map zeta_n -> zeta_n^(n-1)).
  Cyclotomic conj() const {
    if (order_ == 1) return *this;
    if (order_ == 4) return gaussian(coeffs_[0], -coeffs_[1]);
    std::vector<Rational> raw(order_, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      raw[(order_ - k) % order_] += coeffs_[k];
    return Cyclotomic(order_, std::move(raw));
  }

  /// Multiplicative inverse; throws on zero.
  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
    if (order_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
    if (order_ == 4) {
      const Rational &a = coeffs_[0], &b = coeffs_[1];
      Rational n2 = a * a + b * b;
      return gaussian(a / n2, -b / n2);
    }
    // Solve (mult-by-this) y = 1 over the power basis.
    const unsigned d = detail::euler_phi(order_);
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, Rational(0)));
    for (unsigned j = 0; j < d; ++j) {
      std::vector<Rational> raw(order_ + j, Rational(0));
      for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[k + j] = coeffs_[k];
      reduce_mod_cyclotomic(raw, order_);
      for (unsigned r = 0; r < d; ++r) m[r][j] = raw[r];
    }
    m[0][d] = Rational(1);
    std::vector<Rational> sol;
    if (!solve_square(m, d, sol))
      throw std::domain_error("Cyclotomic: inverse: singular multiplication matrix");
    sol.resize(order_, Rational(0));
    return Cyclotomic(order_, std::move(sol));
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /// Deterministic total order (conductor first, then coefficients).
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
      if (a.coeffs_[k] != b.coeffs_[k]) return a.coeffs_[k] < b.coeffs_[k];
    }
    return false;
  }

  /// Display form: rationals as "2", "-1/2"; Q(i) values as "i", "-2i",
  /// "1+i"; anything else as a sum of E(n)^k terms.
  std::string to_string() const {
    if (order_ == 1) return coeffs_[0].to_string();
    if (order_ == 4) {
      const Rational &a = coeffs_[0], &b = coeffs_[1];
      std::string s;
      if (!a.is_zero()) s = a.to_string();
      if (!a.is_zero()) s += b.sign() > 0 ? "+" : "-";
      else if (b.sign() < 0) s += "-";
      Rational ab = b.sign() < 0 ? -b : b;
      if (!ab.is_one()) s += ab.is_integer() ? ab.to_string() : "(" + ab.to_string() + ")";
      s += "i";
      return s;
    }
    return term_sum("E(" + std::to_string(order_) + ")", "^", "");
  }

  /// LaTeX form ("2i", "\\zeta_{8}^{3}", ...).
  std::string to_latex() const {
    if (order_ <= 4) return to_string();
    return term_sum("\\zeta_{" + std::to_string(order_) + "}", "^{", "}");
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
    return os << c.to_string();
  }

private:
  static constexpr unsigned kMaxOrder = 512;

  static unsigned common_order(unsigned a, unsigned b) {
    const unsigned L = std::lcm(a, b);
    if (L > kMaxOrder) throw std::domain_error("Cyclotomic: combined order too large");
    return L;
  }

  // Raw constructor: takes power-basis coefficients of any length and
  // canonicalizes (reduce mod the cyclotomic polynomial, then minimize
  // the conductor).
  Cyclotomic(unsigned n, std::vector<Rational> raw) : order_(n), coeffs_(std::move(raw)) {
    reduce_mod_cyclotomic(coeffs_, order_);
    coeffs_.resize(detail::euler_phi(order_), Rational(0));
    minimize_conductor();
  }

  Cyclotomic scaled(const Rational& r) const {
    if (r.is_zero()) return Cyclotomic();
    Cyclotomic out = *this;
    for (Rational& c : out.coeffs_) c *= r;
    return out;  // scaling by a nonzero rational preserves the conductor
  }

  // Coefficients over zeta_L via zeta_n = zeta_L^(L/n), reduced positions
  // spread out; result has length L and is generally unreduced.
  std::vector<Rational> embedded_raw(unsigned L) const {
    std::vector<Rational> raw(L, Rational(0));
    const unsigned step = L / order_;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[k * step] = coeffs_[k];
    return raw;
  }

  static void reduce_mod_cyclotomic(std::vector<Rational>& v, unsigned n) {
    const std::vector<Int>& phi_poly = detail::cyclotomic_poly(n);
    const std::size_t deg = phi_poly.size() - 1;
    for (std::size_t k = v.size(); k-- > deg;) {
      if (v[k].is_zero()) continue;
      Rational c = v[k];
      v[k] = Rational(0);
      for (std::size_t j = 0; j < deg; ++j)
        v[k - deg + j] -= c * Rational(phi_poly[j]);
    }
  }

  void minimize_conductor() {
    if (order_ == 1) return;
    // Rational test first: the reduced form of a rational is its constant.
    bool constant_only = true;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      if (!coeffs_[k].is_zero()) { constant_only = false; break; }
    if (constant_only) {
      coeffs_.resize(1);
      order_ = 1;
      return;
    }
    const unsigned n = order_;
    const unsigned phin = detail::euler_phi(n);
    for (unsigned d = 2; d < n; ++d) {
      if (n % d != 0 || d % 4 == 2) continue;
      const unsigned phid = detail::euler_phi(d);
      const unsigned step = n / d;
      if (static_cast<unsigned long long>(step) * (phid - 1) < phin) {
        // Embedded subfield basis vectors are plain power-basis vectors:
        // membership is a support check.
        bool ok = true;
        std::vector<Rational> sub(phid, Rational(0));
        for (unsigned k = 0; k < phin && ok; ++k) {
          if (coeffs_[k].is_zero()) continue;
          if (k % step != 0 || k / step >= phid) ok = false;
          else sub[k / step] = coeffs_[k];
        }
        if (ok) {
          order_ = d;
          coeffs_ = std::move(sub);
          return;
        }
      } else if (in_subfield_general(d)) {
        return;  // in_subfield_general rewrote the value
      }
    }
  }

  // Membership test in Q(zeta_d) by solving a rational linear system
  // against the embedded subfield basis; rewrites on success.
  bool in_subfield_general(unsigned d) {
    const unsigned n = order_;
    const unsigned phin = detail::euler_phi(n);
    const unsigned phid = detail::euler_phi(d);
    const unsigned step = n / d;
    std::vector<std::vector<Rational>> m(phin, std::vector<Rational>(phid + 1, Rational(0)));
    for (unsigned j = 0; j < phid; ++j) {
      std::vector<Rational> raw(n, Rational(0));
      raw[static_cast<std::size_t>(j) * step] = Rational(1);
      reduce_mod_cyclotomic(raw, n);
      for (unsigned r = 0; r < phin; ++r) m[r][j] = raw[r];
    }
    for (unsigned r = 0; r < phin; ++r) m[r][phid] = coeffs_[r];
    std::vector<Rational> sol;
    if (!solve_overdetermined(m, phid, sol)) return false;
    order_ = d;
    coeffs_ = std::move(sol);
    return true;
  }

  // Gaussian elimination on an augmented square system; true on success.
  static bool solve_square(std::vector<std::vector<Rational>>& m, unsigned dim,
                           std::vector<Rational>& sol) {
    for (unsigned col = 0; col < dim; ++col) {
      unsigned piv = col;
      while (piv < dim && m[piv][col].is_zero()) ++piv;
      if (piv == dim) return false;
      std::swap(m[col], m[piv]);
      Rational inv = Rational(1) / m[col][col];
      for (unsigned j = col; j <= dim; ++j) m[col][j] *= inv;
      for (unsigned r = 0; r < dim; ++r) {
        if (r == col || m[r][col].is_zero()) continue;
        Rational f = m[r][col];
        for (unsigned j = col; j <= dim; ++j) m[r][j] -= f * m[col][j];
      }
    }
    sol.clear();
    for (unsigned r = 0; r < dim; ++r) sol.push_back(m[r][dim]);
    return true;
  }

  // Elimination for a tall augmented system (rows >= cols); true iff
  // consistent with full column rank.
  static bool solve_overdetermined(std::vector<std::vector<Rational>>& m, unsigned cols,
                                   std::vector<Rational>& sol) {
    const unsigned rows = static_cast<unsigned>(m.size());
    unsigned rank = 0;
    for (unsigned col = 0; col < cols; ++col) {
      unsigned piv = rank;
      while (piv < rows && m[piv][col].is_zero()) ++piv;
      if (piv == rows) return false;  // basis columns are independent, so this is failure
      std::swap(m[rank], m[piv]);
      Rational inv = Rational(1) / m[rank][col];
      for (unsigned j = col; j <= cols; ++j) m[rank][j] *= inv;
      for (unsigned r = 0; r < rows; ++r) {
        if (r == rank || m[r][col].is_zero()) continue;
        Rational f = m[r][col];
        for (unsigned j = col; j <= cols; ++j) m[r][j] -= f * m[rank][j];
      }
      ++rank;
    }
    for (unsigned r = rank; r < rows; ++r)
      if (!m[r][cols].is_zero()) return false;  // inconsistent: not in the subfield
    sol.clear();
    for (unsigned r = 0; r < cols; ++r) sol.push_back(m[r][cols]);
    return true;
  }

  std::string term_sum(const std::string& root, const std::string& pow_open,
                       const std::string& pow_close) const {
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& c = coeffs_[k];
      if (c.is_zero()) continue;
      Rational ac = c.sign() < 0 ? -c : c;
      if (s.empty()) {
        if (c.sign() < 0) s += "-";
      } else {
        s += c.sign() < 0 ? "-" : "+";
      }
      if (k == 0) {
        s += ac.to_string();
        continue;
      }
      if (!ac.is_one())
        s += ac.is_integer() ? ac.to_string() : "(" + ac.to_string() + ")";
      s += root;
      if (k > 1) s += pow_open + std::to_string(k) + pow_close;
    }
    return s.empty() ? "0" : s;
  }

  unsigned order_;
  std::vector<Rational> coeffs_;
};

}  // namespace cptrep
