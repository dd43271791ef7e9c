#pragma once

#include <compare>
#include <map>
#include <sstream>
#include <string>

#include "compmat/matrix.hpp"
#include "compmat/poly.hpp"

namespace compmat {

/// Exponent pair of the ordered monomial X^x Y^y (X always to the left).
struct Monomial {
  std::size_t x = 0;
  std::size_t y = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Coefficient table over ordered monomials X^x Y^y. Zero coefficients are
/// never stored. Products are not defined here: ordering two such tables
/// needs the relations of a presentation.
template <ExactRing R>
class BiPoly {
 public:
  using value_type = typename R::value_type;
  using Terms = std::map<Monomial, value_type>;

  explicit BiPoly(R ring = R{}) : ring_(std::move(ring)) {}

  static BiPoly constant(const R& ring, const value_type& c) {
    BiPoly b(ring);
    b.add({0, 0}, c);
    return b;
  }
  static BiPoly term(const R& ring, Monomial m, const value_type& c) {
    BiPoly b(ring);
    b.add(m, c);
    return b;
  }
  /// p(X) as a table.
  static BiPoly in_x(const Poly<R>& p) {
    BiPoly b(p.ring());
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) b.add({k, 0}, p.coeffs()[k]);
    return b;
  }
  /// p(Y) as a table.
  static BiPoly in_y(const Poly<R>& p) {
    BiPoly b(p.ring());
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) b.add({0, k}, p.coeffs()[k]);
    return b;
  }

  const R& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  value_type coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  void add(Monomial m, const value_type& c) {
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = it->second + c;
    if (ring_.is_zero(it->second)) terms_.erase(it);
  }

  /// q(X) * this: legal on ordered monomials since X stays on the left.
  BiPoly left_times_x(const Poly<R>& q) const {
    BiPoly out(ring_);
    for (const auto& [m, c] : terms_)
      for (std::size_t k = 0; k < q.coeffs().size(); ++k) out.add({m.x + k, m.y}, q.coeffs()[k] * c);
    return out;
  }
  /// this * q(Y).
  BiPoly right_times_y(const Poly<R>& q) const {
    BiPoly out(ring_);
    for (const auto& [m, c] : terms_)
      for (std::size_t k = 0; k < q.coeffs().size(); ++k) out.add({m.x, m.y + k}, c * q.coeffs()[k]);
    return out;
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add(m, c);
    return out;
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add(m, -c);
    return out;
  }
  friend BiPoly operator*(const value_type& s, const BiPoly& a) {
    BiPoly out(a.ring_);
    for (const auto& [m, c] : a.terms_) out.add(m, s * c);
    return out;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.ring_ == b.ring_ && a.terms_ == b.terms_; }

  /// Sum of c * A^x * B^y.
  Matrix<R> evaluate(const Matrix<R>& a, const Matrix<R>& b) const {
    std::size_t max_x = 0, max_y = 0;
    for (const auto& [m, c] : terms_) {
      max_x = std::max(max_x, m.x);
      max_y = std::max(max_y, m.y);
    }
    const auto pa = matrix_powers(a, max_x + 1);
    const auto pb = matrix_powers(b, max_y + 1);
    Matrix<R> acc(ring_, a.rows(), a.cols());
    for (const auto& [m, c] : terms_) acc = acc + c * (pa[m.x] * pb[m.y]);
    return acc;
  }

  /// e.g. "X^3 + Y^3 - X^2*Y". Terms by descending total degree, then by
  /// descending X exponent.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, value_type>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
      const std::size_t dl = l.first.x + l.first.y, dr = r.first.x + r.first.y;
      if (dl != dr) return dl > dr;
      return l.first.x > r.first.x;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : sorted) {
      std::string cs = ring_.format(c);
      const bool negative = !cs.empty() && cs.front() == '-';
      if (negative) cs.erase(0, 1);
      os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
      first = false;
      std::string mono;
      if (m.x > 0) mono += m.x == 1 ? "X" : "X^" + std::to_string(m.x);
      if (m.y > 0) mono += (mono.empty() ? "" : "*") + (m.y == 1 ? std::string("Y") : "Y^" + std::to_string(m.y));
      if (mono.empty()) {
        os << cs;
      } else {
        if (cs != "1") os << cs << "*";
        os << mono;
      }
    }
    return os.str();
  }

 private:
  R ring_;
  Terms terms_;
};

}  // namespace compmat
