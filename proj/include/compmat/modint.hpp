#pragma once

#include <cstdint>
#include <string>

#include "compmat/errors.hpp"

namespace compmat {

/// Residue modulo m, stored in [0, m). Moduli are limited to 63 bits so that
/// sums fit in a machine word; products go through 128-bit intermediates.
class ModInt {
 public:
  ModInt() = default;
  ModInt(std::uint64_t value, std::uint64_t modulus) : value_(value % modulus), modulus_(modulus) {}

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }

  friend ModInt operator+(const ModInt& a, const ModInt& b) {
    check(a, b);
    std::uint64_t s = a.value_ + b.value_;
    if (s >= a.modulus_) s -= a.modulus_;
    return raw(s, a.modulus_);
  }
  friend ModInt operator-(const ModInt& a, const ModInt& b) {
    check(a, b);
    return raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + a.modulus_ - b.value_, a.modulus_);
  }
  friend ModInt operator-(const ModInt& a) { return raw(a.value_ == 0 ? 0 : a.modulus_ - a.value_, a.modulus_); }
  friend ModInt operator*(const ModInt& a, const ModInt& b) {
    check(a, b);
    const auto p = static_cast<unsigned __int128>(a.value_) * b.value_;
    return raw(static_cast<std::uint64_t>(p % a.modulus_), a.modulus_);
  }
  ModInt& operator+=(const ModInt& b) { return *this = *this + b; }
  ModInt& operator-=(const ModInt& b) { return *this = *this - b; }
  ModInt& operator*=(const ModInt& b) { return *this = *this * b; }

  friend bool operator==(const ModInt& a, const ModInt& b) {
    check(a, b);
    return a.value_ == b.value_;
  }

 private:
  static ModInt raw(std::uint64_t v, std::uint64_t m) {
    ModInt r;
    r.value_ = v;
    r.modulus_ = m;
    return r;
  }
  static void check(const ModInt& a, const ModInt& b) {
    if (a.modulus_ != b.modulus_) {
      throw DomainError("mixing residues modulo " + std::to_string(a.modulus_) + " and " +
                        std::to_string(b.modulus_));
    }
  }

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

inline std::string to_string(const ModInt& a) { return std::to_string(a.value()); }

}  // namespace compmat
