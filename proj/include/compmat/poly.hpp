#pragma once

/*
 * Univariate polynomials over an ExactRing.
 *
 * Coefficients are stored in ascending degree with trailing zeros trimmed;
 * the zero polynomial has no coefficients and degree -1.
 *
 * Resultant convention: for monic f, g of equal degree n,
 *     Res(f, g) = prod_i g(alpha_i)   over the roots alpha_i of f,
 * which is det of the Sylvester matrix with the n shifted copies of f on top.
 * The linear case Res(X - a, X - b) = a - b pins the sign.
 */

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "compmat/matrix.hpp"
#include "compmat/rings.hpp"

namespace compmat {

template <ExactRing R>
class Poly {
 public:
  using value_type = typename R::value_type;

  explicit Poly(R ring = R{}) : ring_(std::move(ring)) {}
  Poly(R ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(const R& ring, const value_type& c) { return Poly(ring, {c}); }
  static Poly monomial(const R& ring, const value_type& c, std::size_t k) {
    std::vector<value_type> v(k + 1, ring.zero());
    v[k] = c;
    return Poly(ring, std::move(v));
  }
  static Poly x(const R& ring) { return monomial(ring, ring.one(), 1); }
  static Poly from_integers(const R& ring, const std::vector<long long>& ascending) {
    std::vector<value_type> v;
    for (long long c : ascending) v.push_back(ring.from_integer(Integer(c)));
    return Poly(ring, std::move(v));
  }

  const R& ring() const { return ring_; }
  const std::vector<value_type>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  value_type coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_.zero(); }
  value_type leading() const { return is_zero() ? ring_.zero() : coeffs_.back(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == ring_.one(); }
  bool is_constant() const { return degree() <= 0; }

  value_type operator()(const value_type& x) const {
    value_type acc = ring_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.check_ring(b);
    std::vector<value_type> v(std::max(a.coeffs_.size(), b.coeffs_.size()), a.ring_.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Poly(a.ring_, std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    a.check_ring(b);
    std::vector<value_type> v(std::max(a.coeffs_.size(), b.coeffs_.size()), a.ring_.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return Poly(a.ring_, std::move(v));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<value_type> v = a.coeffs_;
    for (auto& c : v) c = -c;
    return Poly(a.ring_, std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    std::vector<value_type> v(a.coeffs_.size() + b.coeffs_.size() - 1, a.ring_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Poly(a.ring_, std::move(v));
  }
  friend Poly operator*(const value_type& s, const Poly& a) {
    std::vector<value_type> v = a.coeffs_;
    for (auto& c : v) c = s * c;
    return Poly(a.ring_, std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_; }

  /// Text form, highest degree first, e.g. "X^3 - 2*X + 1".
  std::string str(const std::string& var = "X") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const value_type& c = coeffs_[static_cast<std::size_t>(k)];
      if (ring_.is_zero(c)) continue;
      std::string cs = ring_.format(c);
      bool negative = !cs.empty() && cs.front() == '-';
      if (negative) cs.erase(0, 1);
      if (first) {
        os << (negative ? "-" : "");
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      const bool unit_coeff = cs == "1";
      if (k == 0) {
        os << cs;
      } else {
        if (!unit_coeff) os << cs << "*";
        os << var;
        if (k > 1) os << "^" << k;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && ring_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  void check_ring(const Poly& b) const {
    if (!(ring_ == b.ring_)) throw DomainError("polynomial ring mismatch");
  }

  R ring_;
  std::vector<value_type> coeffs_;
};

/// A polynomial with leading coefficient 1 and degree >= 1.
template <ExactRing R>
class MonicPoly {
 public:
  explicit MonicPoly(Poly<R> p) : p_(std::move(p)) {
    if (!p_.is_monic()) throw DomainError("polynomial " + p_.str() + " is not monic");
    if (p_.degree() < 1) throw DomainError("monic polynomial must have degree >= 1");
  }
  static MonicPoly from_integers(const R& ring, const std::vector<long long>& ascending) {
    return MonicPoly(Poly<R>::from_integers(ring, ascending));
  }

  const Poly<R>& poly() const { return p_; }
  operator const Poly<R>&() const { return p_; }  // NOLINT
  const R& ring() const { return p_.ring(); }
  std::size_t degree() const { return static_cast<std::size_t>(p_.degree()); }
  typename R::value_type coeff(std::size_t i) const { return p_.coeff(i); }
  std::string str(const std::string& var = "X") const { return p_.str(var); }
  friend bool operator==(const MonicPoly& a, const MonicPoly& b) { return a.p_ == b.p_; }

 private:
  Poly<R> p_;
};

/// s = g - f for monic g, f of the same degree; deg s <= n - 1.
template <ExactRing R>
Poly<R> poly_sub(const MonicPoly<R>& g, const MonicPoly<R>& f) {
  if (g.degree() != f.degree()) throw DomainError("poly_sub: degree mismatch");
  return g.poly() - f.poly();
}

/// Division with remainder by a divisor whose leading coefficient is a unit.
template <ExactRing R>
std::pair<Poly<R>, Poly<R>> poly_divmod(const Poly<R>& a, const Poly<R>& b) {
  const R& ring = a.ring();
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (!ring.is_unit(b.leading())) throw DomainError("divisor leading coefficient is not a unit");
  const typename R::value_type lead_inv = ring.inverse(b.leading());
  std::vector<typename R::value_type> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly<R>(ring), a};
  std::vector<typename R::value_type> quot(static_cast<std::size_t>(a.degree() - db + 1), ring.zero());
  for (int k = a.degree(); k >= db; --k) {
    const typename R::value_type c = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (ring.is_zero(c)) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int i = 0; i <= db; ++i) {
      auto& slot = rem[static_cast<std::size_t>(k - db + i)];
      slot = slot - c * b.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  return {Poly<R>(ring, std::move(quot)), Poly<R>(ring, std::move(rem))};
}

template <ExactRing R>
Poly<R> poly_mod(const Poly<R>& a, const Poly<R>& b) {
  return poly_divmod(a, b).second;
}

/// Quotient h with f = h*d; DomainError when d does not divide f.
/// Runs over any domain: each quotient coefficient is an exact division.
template <ExactRing R>
Poly<R> poly_divide_exact(const Poly<R>& f, const Poly<R>& d) {
  const R& ring = f.ring();
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  if (f.is_zero()) return Poly<R>(ring);
  if (f.degree() < d.degree()) throw DomainError("poly_divide_exact: " + d.str() + " does not divide " + f.str());
  std::vector<typename R::value_type> rem = f.coeffs();
  const int dd = d.degree();
  std::vector<typename R::value_type> quot(static_cast<std::size_t>(f.degree() - dd + 1), ring.zero());
  for (int k = f.degree(); k >= dd; --k) {
    const auto& top = rem[static_cast<std::size_t>(k)];
    if (ring.is_zero(top)) continue;
    typename R::value_type c;
    try {
      c = ring.divide_exact(top, d.leading());
    } catch (const DomainError&) {
      throw DomainError("poly_divide_exact: " + d.str() + " does not divide " + f.str());
    }
    quot[static_cast<std::size_t>(k - dd)] = c;
    for (int i = 0; i <= dd; ++i) {
      auto& slot = rem[static_cast<std::size_t>(k - dd + i)];
      slot = slot - c * d.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  for (const auto& c : rem)
    if (!ring.is_zero(c)) throw DomainError("poly_divide_exact: nonzero remainder dividing " + f.str() + " by " + d.str());
  return Poly<R>(ring, std::move(quot));
}

template <ExactRing R>
Poly<R> make_monic(const Poly<R>& p) {
  if (p.is_zero()) return p;
  return p.ring().inverse(p.leading()) * p;
}

/// gcd of integer coefficients, nonnegative.
inline Integer content(const Poly<IntegerRing>& p) {
  Integer c = 0;
  for (const auto& a : p.coeffs()) c = gcd(c, a);
  return c;
}

/// p / content(p) with positive leading coefficient.
inline Poly<IntegerRing> primitive_part(const Poly<IntegerRing>& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  if (p.leading() < 0) c = -c;
  std::vector<Integer> v;
  for (const auto& a : p.coeffs()) v.push_back(a / c);
  return Poly<IntegerRing>(IntegerRing{}, std::move(v));
}

inline Poly<RationalField> to_rational(const Poly<IntegerRing>& p) {
  std::vector<Rational> v;
  for (const auto& a : p.coeffs()) v.emplace_back(a);
  return Poly<RationalField>(RationalField{}, std::move(v));
}

/// Clears denominators and returns the primitive integer associate.
inline Poly<IntegerRing> primitive_integer_associate(const Poly<RationalField>& p) {
  Integer l = 1;
  for (const auto& a : p.coeffs()) {
    const Integer d = boost::multiprecision::denominator(a);
    l = l / gcd(l, d) * d;
  }
  std::vector<Integer> v;
  for (const auto& a : p.coeffs()) v.push_back(boost::multiprecision::numerator(a) * (l / boost::multiprecision::denominator(a)));
  return primitive_part(Poly<IntegerRing>(IntegerRing{}, std::move(v)));
}

/// Monic gcd over a field; primitive gcd with positive leading coefficient
/// over Z. Other rings are rejected.
template <ExactRing R>
Poly<R> poly_gcd(const Poly<R>& f, const Poly<R>& g) {
  const R& ring = f.ring();
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  if constexpr (std::is_same_v<R, IntegerRing>) {
    const Poly<RationalField> q = poly_gcd(to_rational(primitive_part(f)), to_rational(primitive_part(g)));
    return primitive_integer_associate(q);
  } else {
    if (!ring.is_field()) throw DomainError("gcd undefined over non-domain " + ring.descriptor().name());
    Poly<R> a = f;
    Poly<R> b = g;
    while (!b.is_zero()) {
      Poly<R> r = poly_mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return make_monic(a);
  }
}

/// Coefficient-wise image under a ring map.
template <ExactRing To, ExactRing From, class Map>
Poly<To> map_coefficients(const Poly<From>& p, const To& target, Map&& map) {
  std::vector<typename To::value_type> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(map(c));
  return Poly<To>(target, std::move(v));
}

/// Reduction of an integer polynomial into another ring.
template <ExactRing To>
Poly<To> reduce_poly(const Poly<IntegerRing>& p, const To& target) {
  return map_coefficients(p, target, [&](const Integer& c) { return target.from_integer(c); });
}

/// Horner evaluation p(A).
template <ExactRing R>
Matrix<R> poly_eval_matrix(const Poly<R>& p, const Matrix<R>& a) {
  if (!(p.ring() == a.ring())) throw DomainError("poly_eval_matrix: ring mismatch");
  if (!a.is_square()) throw DomainError("poly_eval_matrix: matrix is not square");
  const std::size_t n = a.rows();
  Matrix<R> acc(a.ring(), n, n);
  const Matrix<R> id = Matrix<R>::identity(a.ring(), n);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * a + (*it) * id;
  return acc;
}

/// The 2n x 2n Sylvester matrix: n shifted rows of f, then n shifted rows of g,
/// coefficients in descending degree.
template <ExactRing R>
Matrix<R> sylvester_matrix(const MonicPoly<R>& f, const MonicPoly<R>& g) {
  if (!(f.ring() == g.ring())) throw DomainError("sylvester_matrix: ring mismatch");
  if (f.degree() != g.degree()) throw DomainError("sylvester_matrix: degree mismatch");
  const std::size_t n = f.degree();
  Matrix<R> s(f.ring(), 2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= n; ++k) {
      s(r, r + k) = f.coeff(n - k);
      s(n + r, r + k) = g.coeff(n - k);
    }
  return s;
}

namespace detail {

template <ExactRing R>
typename R::value_type power(const R& ring, typename R::value_type base, std::size_t e) {
  typename R::value_type acc = ring.one();
  for (std::size_t i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

}  // namespace detail

/// Resultant over a field by the Euclidean remainder sequence:
/// Res(a, b) = (-1)^(deg a * deg b) * lc(b)^(deg a - deg r) * Res(b, r), r = a mod b.
/// Leading coefficients enter as lc(a)^deg b * prod b(alpha_i).
template <ExactRing R>
typename R::value_type resultant_euclidean(const Poly<R>& a0, const Poly<R>& b0) {
  const R& ring = a0.ring();
  if (!ring.is_field()) throw DomainError("Euclidean resultant needs a field");
  Poly<R> a = a0;
  Poly<R> b = b0;
  if (a.is_zero() || b.is_zero()) return ring.zero();
  typename R::value_type acc = ring.one();
  while (true) {
    const std::size_t da = static_cast<std::size_t>(a.degree());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    if (db == 0) return acc * detail::power(ring, b.leading(), da);
    if (da == 0) return acc * detail::power(ring, a.leading(), db);
    Poly<R> r = poly_mod(a, b);
    if (r.is_zero()) return ring.zero();
    const std::size_t dr = static_cast<std::size_t>(r.degree());
    if ((da * db) % 2 == 1) acc = -acc;
    acc = acc * detail::power(ring, b.leading(), da - dr);
    a = std::move(b);
    b = std::move(r);
  }
}

/// det of the Sylvester matrix by fraction-free elimination.
template <ExactRing R>
typename R::value_type resultant_sylvester(const MonicPoly<R>& f, const MonicPoly<R>& g) {
  return det_fraction_free(sylvester_matrix(f, g));
}

/// Res(f, g) for monic f, g of equal degree. Over domains it is the Sylvester
/// determinant, cross-checked by the Euclidean method over fields and over Z
/// (via Q). Over Z/m with m composite the integer lifts are used, since the
/// resultant commutes with Z -> Z/m.
template <ExactRing R>
typename R::value_type resultant(const MonicPoly<R>& f, const MonicPoly<R>& g) {
  const R& ring = f.ring();
  if (!(ring == g.ring())) throw DomainError("resultant: ring mismatch");
  if (f.degree() != g.degree()) throw DomainError("resultant: degree mismatch");
  if constexpr (std::is_same_v<R, ModRing>) {
    if (!ring.is_domain()) {
      auto lift = [](const Poly<ModRing>& p) {
        std::vector<Integer> v;
        for (const auto& c : p.coeffs()) v.emplace_back(c.value());
        return MonicPoly<IntegerRing>(Poly<IntegerRing>(IntegerRing{}, std::move(v)));
      };
      return ring.from_integer(resultant(lift(f), lift(g)));
    }
  }
  const typename R::value_type det = resultant_sylvester(f, g);
  if constexpr (std::is_same_v<R, IntegerRing>) {
    const Rational q = resultant_euclidean(to_rational(f.poly()), to_rational(g.poly()));
    if (boost::multiprecision::denominator(q) != 1 || boost::multiprecision::numerator(q) != det) {
      throw InvariantViolation("Sylvester and Euclidean resultants disagree",
                               "f = " + f.str() + "\ng = " + g.str() + "\nsylvester = " + det.str() +
                                   "\neuclidean = " + to_string(q));
    }
  } else if (ring.is_field()) {
    const typename R::value_type other = resultant_euclidean(f.poly(), g.poly());
    if (!(other == det)) {
      throw InvariantViolation("Sylvester and Euclidean resultants disagree",
                               "f = " + f.str() + "\ng = " + g.str() + "\nsylvester = " + ring.format(det) +
                                   "\neuclidean = " + ring.format(other));
    }
  }
  return det;
}

}  // namespace compmat
