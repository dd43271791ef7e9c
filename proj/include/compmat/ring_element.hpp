#pragma once

/*
 * Runtime-tagged scalars. The generic algorithms work on typed rings; this
 * layer exists for callers that pick the ring at runtime (the CLI) and for
 * the ring-level operations that relate different rings (reduce_hom).
 */

#include <string>
#include <variant>

#include "compmat/rings.hpp"

namespace compmat {

class RingElement {
 public:
  using Storage = std::variant<Integer, Rational, ModInt, Gaussian>;

  RingElement(const IntegerRing& r, Integer v) : ring_(r.descriptor()), value_(std::move(v)) {}
  RingElement(const RationalField& r, Rational v) : ring_(r.descriptor()), value_(std::move(v)) {}
  RingElement(const ModRing& r, const ModInt& v) : ring_(r.descriptor()), value_(v) {
    if (v.modulus() != r.modulus()) throw DomainError("residue does not belong to " + ring_.name());
  }
  RingElement(const GaussianRing& r, Gaussian v) : ring_(r.descriptor()), value_(std::move(v)) {}

  static RingElement integer(const Integer& v) { return {IntegerRing{}, v}; }
  static RingElement rational(const Rational& v) { return {RationalField{}, v}; }
  static RingElement residue(const Integer& v, std::uint64_t m) {
    ModRing r(m);
    return {r, r.from_integer(v)};
  }
  static RingElement gaussian(const Integer& re, const Integer& im) { return {GaussianRing{}, Gaussian{re, im}}; }

  const RingDescriptor& ring() const { return ring_; }
  const Storage& storage() const { return value_; }

  /// Typed view; throws if the descriptor does not match.
  template <ExactRing R>
  typename R::value_type as(const R& r) const {
    if (!(r.descriptor() == ring_)) throw DomainError("element of " + ring_.name() + " used as " + r.descriptor().name());
    return std::get<typename R::value_type>(value_);
  }

  std::string str() const {
    return std::visit([](const auto& v) { return to_string(v); }, value_);
  }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
  }
  friend RingElement operator-(const RingElement& a, const RingElement& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
  }
  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
  }
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }

 private:
  template <class Op>
  static RingElement combine(const RingElement& a, const RingElement& b, Op op) {
    if (!(a.ring_ == b.ring_)) {
      throw DomainError("mixing elements of " + a.ring_.name() + " and " + b.ring_.name());
    }
    return dispatch(a.ring_, [&](const auto& r) {
      return RingElement(r, op(a.as(r), b.as(r)));
    });
  }

  RingDescriptor ring_;
  Storage value_;
};

inline bool is_unit(const RingElement& a) {
  return dispatch(a.ring(), [&](const auto& r) { return r.is_unit(a.as(r)); });
}

/// Multiplicative inverse of a unit; throws DomainError otherwise.
inline RingElement inverse(const RingElement& a) {
  return dispatch(a.ring(), [&](const auto& r) { return RingElement(r, r.inverse(a.as(r))); });
}

/// Index of the principal ideal (a): |a| over Z, a*conj(a) over Z[i].
inline Integer norm(const RingElement& a) {
  switch (a.ring().kind) {
    case RingKind::Integers: {
      const Integer& v = std::get<Integer>(a.storage());
      if (v == 0) throw DomainError("norm of zero is not an index");
      return abs_value(v);
    }
    case RingKind::GaussianIntegers: {
      const Gaussian& z = std::get<Gaussian>(a.storage());
      if (z.is_zero()) throw DomainError("norm of zero is not an index");
      return z.norm();
    }
    default:
      throw DomainError("norm is defined over Z and Z[i] only, not " + a.ring().name());
  }
}

/// Canonical gcd: nonnegative over Z, first-quadrant associate over Z[i],
/// 0 or 1 over a field.
inline RingElement euclidean_gcd(const RingElement& a, const RingElement& b) {
  if (!(a.ring() == b.ring())) throw DomainError("gcd of elements from different rings");
  const RingDescriptor& d = a.ring();
  switch (d.kind) {
    case RingKind::Integers:
      return RingElement::integer(gcd(std::get<Integer>(a.storage()), std::get<Integer>(b.storage())));
    case RingKind::GaussianIntegers: {
      Gaussian x = std::get<Gaussian>(a.storage());
      Gaussian y = std::get<Gaussian>(b.storage());
      while (!y.is_zero()) {
        Gaussian r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
      }
      return {GaussianRing{}, unit_normal(x) * x};
    }
    default:
      if (!d.is_field()) throw DomainError("gcd is not defined over " + d.name());
      return dispatch(d, [&](const auto& r) {
        const bool both_zero = r.is_zero(a.as(r)) && r.is_zero(b.as(r));
        return RingElement(r, both_zero ? r.zero() : r.one());
      });
  }
}

/// Image under the canonical homomorphism into `target`.
inline RingElement reduce_hom(const RingElement& a, const RingDescriptor& target) {
  const RingDescriptor& src = a.ring();
  if (src == target) return a;
  auto no_map = [&]() {
    return DomainError("no canonical homomorphism from " + src.name() + " to " + target.name());
  };
  if (src.kind == RingKind::Integers) {
    const Integer& v = std::get<Integer>(a.storage());
    switch (target.kind) {
      case RingKind::Rationals: return RingElement::rational(Rational(v));
      case RingKind::IntegersMod: return RingElement::residue(v, target.modulus);
      case RingKind::GaussianIntegers: return RingElement::gaussian(v, 0);
      default: throw no_map();
    }
  }
  if (src.kind == RingKind::Rationals && target.kind == RingKind::IntegersMod) {
    ModRing r(target.modulus);
    return {r, r.from_rational(std::get<Rational>(a.storage()))};
  }
  if (src.kind == RingKind::IntegersMod && target.kind == RingKind::IntegersMod &&
      src.modulus % target.modulus == 0) {
    return RingElement::residue(std::get<ModInt>(a.storage()).value(), target.modulus);
  }
  throw no_map();
}

}  // namespace compmat
