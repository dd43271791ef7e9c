#pragma once

/*
 * Coefficient rings.
 *
 * Each ring is a small value type that knows how to build and inspect the
 * scalars of one concrete ring: Z, Q, Z/m (GF(p) when m is prime) and Z[i].
 * Generic containers (Poly, Matrix) carry a ring object so that runtime
 * parameters such as the modulus travel with the data.
 *
 * Every scalar leaves these functions in canonical form: rationals in lowest
 * terms with positive denominator, residues in [0, m). Structural equality is
 * therefore mathematical equality.
 */

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include "compmat/errors.hpp"
#include "compmat/gaussian.hpp"
#include "compmat/integer.hpp"
#include "compmat/modint.hpp"

namespace compmat {

enum class RingKind { Integers, Rationals, IntegersMod, GaussianIntegers };

/// Runtime tag naming a supported ring.
struct RingDescriptor {
  RingKind kind = RingKind::Integers;
  std::uint64_t modulus = 0;  // IntegersMod only

  static RingDescriptor integers() { return {RingKind::Integers, 0}; }
  static RingDescriptor rationals() { return {RingKind::Rationals, 0}; }
  static RingDescriptor gaussian() { return {RingKind::GaussianIntegers, 0}; }
  static RingDescriptor integers_mod(std::uint64_t m) {
    if (m < 2) throw DomainError("Z/m requires m >= 2");
    if (m >> 63U) throw DomainError("modulus exceeds 63 bits");
    return {RingKind::IntegersMod, m};
  }

  bool is_prime_modulus() const { return kind == RingKind::IntegersMod && is_prime(Integer(modulus)); }
  bool is_field() const { return kind == RingKind::Rationals || is_prime_modulus(); }
  bool is_domain() const { return kind != RingKind::IntegersMod || is_prime_modulus(); }

  /// Human-readable name: Z, Q, Z/6, GF(5), Z[i].
  std::string name() const {
    switch (kind) {
      case RingKind::Integers: return "Z";
      case RingKind::Rationals: return "Q";
      case RingKind::GaussianIntegers: return "Z[i]";
      case RingKind::IntegersMod:
        return is_prime_modulus() ? "GF(" + std::to_string(modulus) + ")" : "Z/" + std::to_string(modulus);
    }
    return "?";
  }

  /// The CLI spelling: z, q, zmod:<m>, gf:<p>, zi.
  std::string spec() const {
    switch (kind) {
      case RingKind::Integers: return "z";
      case RingKind::Rationals: return "q";
      case RingKind::GaussianIntegers: return "zi";
      case RingKind::IntegersMod:
        return (is_prime_modulus() ? "gf:" : "zmod:") + std::to_string(modulus);
    }
    return "?";
  }

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

class IntegerRing {
 public:
  using value_type = Integer;

  RingDescriptor descriptor() const { return RingDescriptor::integers(); }
  Integer zero() const { return 0; }
  Integer one() const { return 1; }
  Integer from_integer(const Integer& k) const { return k; }
  bool is_zero(const Integer& a) const { return a == 0; }
  bool is_unit(const Integer& a) const { return a == 1 || a == -1; }
  bool is_domain() const { return true; }
  bool is_field() const { return false; }
  Integer inverse(const Integer& a) const {
    if (!is_unit(a)) throw DomainError(a.str() + " is not a unit in Z");
    return a;
  }
  Integer divide_exact(const Integer& a, const Integer& b) const {
    if (b == 0 || a % b != 0) throw DomainError("inexact division in Z");
    return a / b;
  }
  // Euclidean structure: floor division, size |a|, canonical sign positive.
  std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b) const {
    if (b == 0) throw DomainError("division by zero");
    Integer q = floor_div(a, b);
    return {q, a - q * b};
  }
  Integer size(const Integer& a) const { return abs_value(a); }
  Integer unit_normal(const Integer& a) const { return a < 0 ? -1 : 1; }
  std::string format(const Integer& a) const { return a.str(); }

  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

class RationalField {
 public:
  using value_type = Rational;

  RingDescriptor descriptor() const { return RingDescriptor::rationals(); }
  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational from_integer(const Integer& k) const { return Rational(k); }
  bool is_zero(const Rational& a) const { return a == 0; }
  bool is_unit(const Rational& a) const { return a != 0; }
  bool is_domain() const { return true; }
  bool is_field() const { return true; }
  Rational inverse(const Rational& a) const {
    if (a == 0) throw DomainError("0 is not invertible in Q");
    return 1 / a;
  }
  Rational divide_exact(const Rational& a, const Rational& b) const { return a * inverse(b); }
  std::string format(const Rational& a) const { return to_string(a); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Z/m. A field exactly when m is prime.
class ModRing {
 public:
  explicit ModRing(std::uint64_t m) : m_(RingDescriptor::integers_mod(m).modulus), prime_(is_prime(Integer(m))) {}

  using value_type = ModInt;

  std::uint64_t modulus() const { return m_; }
  RingDescriptor descriptor() const { return {RingKind::IntegersMod, m_}; }
  ModInt zero() const { return {0, m_}; }
  ModInt one() const { return {1, m_}; }
  ModInt from_integer(const Integer& k) const {
    return {static_cast<std::uint64_t>(floor_mod(k, Integer(m_))), m_};
  }
  ModInt from_rational(const Rational& q) const {
    const ModInt den = from_integer(boost::multiprecision::denominator(q));
    if (!is_unit(den)) throw DomainError("denominator of " + to_string(q) + " is not invertible mod " + std::to_string(m_));
    return from_integer(boost::multiprecision::numerator(q)) * inverse(den);
  }
  bool is_zero(const ModInt& a) const { return a.value() == 0; }
  bool is_unit(const ModInt& a) const { return gcd(Integer(a.value()), Integer(m_)) == 1; }
  bool is_domain() const { return prime_; }
  bool is_field() const { return prime_; }
  ModInt inverse(const ModInt& a) const {
    // Extended Euclid on signed 128-bit values.
    __int128 r0 = m_, r1 = a.value(), t0 = 0, t1 = 1;
    while (r1 != 0) {
      const __int128 q = r0 / r1;
      std::swap(r0, r1);
      r1 -= q * r0;
      std::swap(t0, t1);
      t1 -= q * t0;
    }
    if (r0 != 1) throw DomainError(std::to_string(a.value()) + " is not a unit mod " + std::to_string(m_));
    if (t0 < 0) t0 += m_;
    return {static_cast<std::uint64_t>(t0), m_};
  }
  ModInt divide_exact(const ModInt& a, const ModInt& b) const { return a * inverse(b); }
  std::string format(const ModInt& a) const { return std::to_string(a.value()); }

  friend bool operator==(const ModRing& a, const ModRing& b) { return a.m_ == b.m_; }

 private:
  std::uint64_t m_;
  bool prime_;
};

class GaussianRing {
 public:
  using value_type = Gaussian;

  RingDescriptor descriptor() const { return RingDescriptor::gaussian(); }
  Gaussian zero() const { return {0, 0}; }
  Gaussian one() const { return {1, 0}; }
  Gaussian from_integer(const Integer& k) const { return {k, 0}; }
  bool is_zero(const Gaussian& a) const { return a.is_zero(); }
  bool is_unit(const Gaussian& a) const { return a.norm() == 1; }
  bool is_domain() const { return true; }
  bool is_field() const { return false; }
  Gaussian inverse(const Gaussian& a) const {
    if (!is_unit(a)) throw DomainError(to_string(a) + " is not a unit in Z[i]");
    return a.conj();
  }
  Gaussian divide_exact(const Gaussian& a, const Gaussian& b) const {
    if (b.is_zero()) throw DomainError("division by zero");
    const Gaussian t = a * b.conj();
    const Integer n = b.norm();
    if (t.re % n != 0 || t.im % n != 0) throw DomainError("inexact division in Z[i]");
    return {t.re / n, t.im / n};
  }
  std::pair<Gaussian, Gaussian> divmod(const Gaussian& a, const Gaussian& b) const { return compmat::divmod(a, b); }
  Integer size(const Gaussian& a) const { return a.norm(); }
  Gaussian unit_normal(const Gaussian& a) const { return compmat::unit_normal(a); }
  std::string format(const Gaussian& a) const { return to_string(a); }

  friend bool operator==(const GaussianRing&, const GaussianRing&) { return true; }
};

template <class R>
concept ExactRing = std::equality_comparable<R> && requires(const R& r, const typename R::value_type& a,
                                                            const Integer& k) {
  typename R::value_type;
  { r.descriptor() } -> std::same_as<RingDescriptor>;
  { r.zero() } -> std::same_as<typename R::value_type>;
  { r.one() } -> std::same_as<typename R::value_type>;
  { r.from_integer(k) } -> std::same_as<typename R::value_type>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.is_unit(a) } -> std::same_as<bool>;
  { r.is_domain() } -> std::same_as<bool>;
  { r.is_field() } -> std::same_as<bool>;
  { r.inverse(a) } -> std::same_as<typename R::value_type>;
  { r.divide_exact(a, a) } -> std::same_as<typename R::value_type>;
  { r.format(a) } -> std::same_as<std::string>;
  { a + a } -> std::convertible_to<typename R::value_type>;
  { a - a } -> std::convertible_to<typename R::value_type>;
  { a * a } -> std::convertible_to<typename R::value_type>;
  { -a } -> std::convertible_to<typename R::value_type>;
  { a == a } -> std::convertible_to<bool>;
};

/// Rings with a division algorithm where Smith and Hermite forms are computed.
template <class R>
concept EuclideanRing = ExactRing<R> && requires(const R& r, const typename R::value_type& a) {
  { r.divmod(a, a) } -> std::same_as<std::pair<typename R::value_type, typename R::value_type>>;
  { r.size(a) } -> std::same_as<Integer>;
  { r.unit_normal(a) } -> std::same_as<typename R::value_type>;
};

/// Calls fn with the concrete ring object named by the descriptor.
template <class F>
decltype(auto) dispatch(const RingDescriptor& d, F&& fn) {
  switch (d.kind) {
    case RingKind::Integers: return std::forward<F>(fn)(IntegerRing{});
    case RingKind::Rationals: return std::forward<F>(fn)(RationalField{});
    case RingKind::IntegersMod: return std::forward<F>(fn)(ModRing{d.modulus});
    case RingKind::GaussianIntegers: return std::forward<F>(fn)(GaussianRing{});
  }
  throw DomainError("unknown ring");
}

}  // namespace compmat
