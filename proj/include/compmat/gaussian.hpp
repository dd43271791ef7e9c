#pragma once

#include <compare>
#include <string>

#include "compmat/integer.hpp"

namespace compmat {

/// Gaussian integer re + im*i.
struct Gaussian {
  Integer re;
  Integer im;

  Gaussian() = default;
  Gaussian(Integer real, Integer imag = 0) : re(std::move(real)), im(std::move(imag)) {}  // NOLINT

  Gaussian conj() const { return {re, -im}; }
  Integer norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Gaussian& operator+=(const Gaussian& b) { return *this = *this + b; }
  Gaussian& operator-=(const Gaussian& b) { return *this = *this - b; }
  Gaussian& operator*=(const Gaussian& b) { return *this = *this * b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
};

inline std::string to_string(const Gaussian& z) {
  if (z.im == 0) return z.re.str();
  std::string s = "(" + z.re.str();
  s += z.im < 0 ? "-" : "+";
  s += abs_value(z.im).str() + "i)";
  return s;
}

// Nearest-integer rounding of num/den (den > 0), ties rounded up.
inline Integer round_div(const Integer& num, const Integer& den) {
  return floor_div(2 * num + den, 2 * den);
}

/// Division with remainder: a = q*b + r with norm(r) <= norm(b)/2.
inline std::pair<Gaussian, Gaussian> divmod(const Gaussian& a, const Gaussian& b) {
  if (b.is_zero()) throw DomainError("Gaussian division by zero");
  const Gaussian t = a * b.conj();
  const Integer n = b.norm();
  Gaussian q{round_div(t.re, n), round_div(t.im, n)};
  return {q, a - q * b};
}

/// Unit u with u*a in the first quadrant (re > 0, im >= 0); 1 for zero.
inline Gaussian unit_normal(const Gaussian& a) {
  if (a.is_zero()) return {1, 0};
  if (a.re > 0 && a.im >= 0) return {1, 0};
  if (a.im > 0 && a.re <= 0) return {0, -1};  // (-i)(x+yi) = y - xi
  if (a.re < 0 && a.im <= 0) return {-1, 0};
  return {0, 1};
}

}  // namespace compmat
