#pragma once

// Text forms of rings and polynomials.
//
//   ring:  z | q | zi | zmod:<m> | gf:<p>
//   poly:  terms c, x^k, c*x^k, x joined by + and -, e.g. "x^3 - 2*x + 1";
//          p/q coefficients over Q only, (a+bi) over Z[i] only;
//          or JSON {"coeffs": [c0, ..., 1]} in ascending degree.

#include <cctype>
#include <limits>
#include <string>
#include <string_view>

#include <json.hpp>

#include "compmat/poly.hpp"
#include "compmat/rings.hpp"

namespace compmat {

inline RingDescriptor parse_ring_spec(std::string_view text) {
  std::string s;
  for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "z") return RingDescriptor::integers();
  if (s == "q") return RingDescriptor::rationals();
  if (s == "zi") return RingDescriptor::gaussian();
  auto modulus = [&](std::size_t prefix) {
    const std::string digits = s.substr(prefix);
    if (digits.empty() || digits.size() > 19 || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad modulus in ring spec '" + std::string(text) + "'");
    }
    const Integer m(digits);
    if (m < 2 || m >= Integer(std::numeric_limits<std::int64_t>::max())) {
      throw ParseError("modulus must lie in [2, 2^63 - 1), got " + digits);
    }
    return static_cast<std::uint64_t>(m);
  };
  if (s.rfind("zmod:", 0) == 0) return RingDescriptor::integers_mod(modulus(5));
  if (s.rfind("gf:", 0) == 0) {
    const std::uint64_t p = modulus(3);
    if (!is_prime(Integer(p))) throw ParseError("gf:" + std::to_string(p) + " needs a prime; use zmod:" + std::to_string(p));
    return RingDescriptor::integers_mod(p);
  }
  throw ParseError("unknown ring spec '" + std::string(text) + "' (z, q, zi, zmod:<m>, gf:<p>)");
}

namespace detail {

/// Replaces U+2212 (minus sign) by '-'.
inline std::string ascii_minus(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

class PolyLexer {
 public:
  explicit PolyLexer(std::string text) : s_(std::move(text)) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + s_ + "': " + what + " at position " + std::to_string(pos_));
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;
};

/// "(a+bi)" body after the opening parenthesis, through ')'.
inline Gaussian parse_gaussian_body(PolyLexer& lx) {
  Gaussian z{0, 0};
  bool any = false;
  while (!lx.accept(')')) {
    if (lx.done()) lx.fail("unterminated Gaussian coefficient");
    int sign = 1;
    if (lx.accept('-')) {
      sign = -1;
    } else if (lx.accept('+')) {
    } else if (any) {
      lx.fail("expected + or - inside Gaussian coefficient");
    }
    Integer mag = 1;
    bool has_digits = false;
    if (lx.peek_digit()) {
      mag = Integer(lx.digits());
      has_digits = true;
    }
    lx.accept('*');
    if (lx.accept('i')) {
      z.im += sign * mag;
    } else if (has_digits) {
      z.re += sign * mag;
    } else {
      lx.fail("expected a number or i");
    }
    any = true;
  }
  if (!any) lx.fail("empty Gaussian coefficient");
  return z;
}

template <ExactRing R>
typename R::value_type parse_coefficient(const R& ring, PolyLexer& lx) {
  if constexpr (std::is_same_v<R, GaussianRing>) {
    if (lx.accept('i')) return Gaussian{0, 1};
  }
  if (lx.accept('(')) {
    if constexpr (std::is_same_v<R, GaussianRing>) {
      return parse_gaussian_body(lx);
    } else {
      lx.fail("Gaussian coefficients are only accepted over Z[i]");
    }
  }
  const Integer num(lx.digits());
  if (lx.accept('/')) {
    const Integer den(lx.digits());
    if constexpr (std::is_same_v<R, RationalField>) {
      if (den == 0) lx.fail("zero denominator");
      return Rational(num, den);
    } else {
      lx.fail("rational coefficients are only accepted over Q");
    }
  }
  return ring.from_integer(num);
}

}  // namespace detail

template <ExactRing R>
typename R::value_type parse_scalar(const R& ring, std::string_view text) {
  std::string s = detail::ascii_minus(text);
  detail::PolyLexer lx(s);
  const bool negative = lx.accept('-');
  if (!negative) lx.accept('+');
  typename R::value_type v = detail::parse_coefficient(ring, lx);
  if (!lx.done()) lx.fail("trailing characters");
  return negative ? typename R::value_type(-v) : v;
}

template <ExactRing R>
Poly<R> parse_poly(const R& ring, std::string_view text) {
  const std::string s = detail::ascii_minus(text);
  {
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(s);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("polynomial JSON: ") + e.what());
      }
      if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw ParseError("polynomial JSON needs {\"coeffs\": [c0, c1, ...]}");
      }
      std::vector<typename R::value_type> coeffs;
      for (const auto& c : j["coeffs"]) {
        if (c.is_number_integer()) {
          coeffs.push_back(ring.from_integer(Integer(c.dump())));
        } else if (c.is_string()) {
          coeffs.push_back(parse_scalar(ring, c.get<std::string>()));
        } else {
          throw ParseError("polynomial JSON coefficients must be integers or strings, got " + c.dump());
        }
      }
      return Poly<R>(ring, std::move(coeffs));
    }
  }

  detail::PolyLexer lx(s);
  if (lx.done()) lx.fail("empty input");
  std::vector<typename R::value_type> coeffs;
  bool first = true;
  while (!lx.done()) {
    bool negative = false;
    if (lx.accept('-')) {
      negative = true;
    } else if (!lx.accept('+') && !first) {
      lx.fail("expected + or -");
    }
    first = false;
    typename R::value_type c = ring.one();
    bool has_coeff = false;
    if (lx.peek_digit() || lx.peek() == '(' || (std::is_same_v<R, GaussianRing> && lx.peek() == 'i')) {
      c = detail::parse_coefficient(ring, lx);
      has_coeff = true;
    }
    std::size_t k = 0;
    const bool star = has_coeff && lx.accept('*');
    if (lx.accept('x') || lx.accept('X')) {
      k = 1;
      if (lx.accept('^')) {
        const std::string e = lx.digits();
        if (e.size() > 4) lx.fail("exponent too large");
        k = std::stoul(e);
      }
    } else if (star || !has_coeff) {
      lx.fail("expected x");
    }
    if (negative) c = -c;
    if (coeffs.size() <= k) coeffs.resize(k + 1, ring.zero());
    coeffs[k] = coeffs[k] + c;
  }
  return Poly<R>(ring, std::move(coeffs));
}

/// Monic input of degree >= 1; anything else is a DomainError.
template <ExactRing R>
MonicPoly<R> parse_monic(const R& ring, std::string_view text) {
  return MonicPoly<R>(parse_poly(ring, text));
}

}  // namespace compmat
