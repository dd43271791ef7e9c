#pragma once

/*
 * Presentations of R<C, D> on generators X -> C, Y -> D, and a reducer that
 * brings any word in X, Y to a combination of basis monomials X^i Y^j.
 *
 * Reduction is online: the normal form of w is multiplied on the right by one
 * letter at a time. Appending X to X^a Y^b (b >= 1) uses Y^b X = P_b(X, Y),
 * whose terms are X^c, X^c Y and Y^(b+1). Leftover monomials are rewritten
 * largest-first in the (Y-degree, X-degree) order:
 *   Y^b, b >= n        via g(Y) = 0
 *   X^a, a >= n        via f(X) = 0
 *   X^a Y^b, a >= t    via X^t Y = X^(t+1) + h'(X) X - h'(X) Y  (subalgebra only,
 *                      h = X^t + h')
 * Each rewrite only produces smaller monomials in that order, so it stops.
 */

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "compmat/bipoly.hpp"
#include "compmat/companion.hpp"
#include "compmat/span.hpp"

namespace compmat {

enum class Letter : char { X = 'X', Y = 'Y' };
using Word = std::vector<Letter>;

inline std::string word_key(const Word& w) {
  std::string s;
  for (Letter l : w) s.push_back(static_cast<char>(l));
  return s;
}

inline Word parse_word(const std::string& s) {
  Word w;
  for (char c : s) {
    if (c == 'X' || c == 'x') {
      w.push_back(Letter::X);
    } else if (c == 'Y' || c == 'y') {
      w.push_back(Letter::Y);
    } else {
      throw ParseError(std::string("word letters are X and Y, got '") + c + "'");
    }
  }
  return w;
}

/// "Y^2*X", "1" for the empty word.
inline std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out.push_back(static_cast<char>(w[i]));
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

inline Word monomial_word(Monomial m) {
  Word w(m.x, Letter::X);
  w.insert(w.end(), m.y, Letter::Y);
  return w;
}

/// Linear combination of words, kept in insertion order for display.
template <ExactRing R>
class WordPoly {
 public:
  using value_type = typename R::value_type;

  explicit WordPoly(R ring) : ring_(std::move(ring)) {}

  static WordPoly from_bipoly(const BiPoly<R>& b) {
    WordPoly out(b.ring());
    std::vector<std::pair<Monomial, value_type>> sorted(b.terms().begin(), b.terms().end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
      const std::size_t dl = l.first.x + l.first.y, dr = r.first.x + r.first.y;
      if (dl != dr) return dl > dr;
      return l.first.x > r.first.x;
    });
    for (const auto& [m, c] : sorted) out.add(monomial_word(m), c);
    return out;
  }
  /// p in the single letter l, highest degree first.
  static WordPoly univariate(const Poly<R>& p, Letter l) {
    WordPoly out(p.ring());
    for (std::size_t k = p.coeffs().size(); k-- > 0;) out.add(Word(k, l), p.coeffs()[k]);
    return out;
  }

  const R& ring() const { return ring_; }
  const std::vector<std::pair<Word, value_type>>& terms() const { return terms_; }

  void add(const Word& w, const value_type& c) {
    if (ring_.is_zero(c)) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->first != w) continue;
      it->second = it->second + c;
      if (ring_.is_zero(it->second)) terms_.erase(it);
      return;
    }
    terms_.emplace_back(w, c);
  }

  /// Sum of c * (product of C, D along the word).
  Matrix<R> evaluate(const Matrix<R>& x, const Matrix<R>& y) const {
    Matrix<R> acc(ring_, x.rows(), x.cols());
    for (const auto& [w, c] : terms_) {
      Matrix<R> m = Matrix<R>::identity(ring_, x.rows());
      for (Letter l : w) m = m * (l == Letter::X ? x : y);
      acc = acc + c * m;
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      std::string cs = ring_.format(c);
      const bool negative = !cs.empty() && cs.front() == '-';
      if (negative) cs.erase(0, 1);
      os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
      first = false;
      if (w.empty()) {
        os << cs;
      } else {
        if (cs != "1") os << cs << "*";
        os << word_str(w);
      }
    }
    return os.str();
  }

 private:
  R ring_;
  std::vector<std::pair<Word, value_type>> terms_;
};

enum class PresentationVariant { Full, FullConstantS, Subalgebra };

inline std::string variant_name(PresentationVariant v) {
  switch (v) {
    case PresentationVariant::Full: return "full";
    case PresentationVariant::FullConstantS: return "full-constant-s";
    case PresentationVariant::Subalgebra: return "subalgebra";
  }
  return "?";
}

inline PresentationVariant parse_variant(const std::string& s) {
  if (s == "full") return PresentationVariant::Full;
  if (s == "full-constant-s") return PresentationVariant::FullConstantS;
  if (s == "subalgebra") return PresentationVariant::Subalgebra;
  throw ParseError("unknown presentation variant '" + s + "' (full, full-constant-s, subalgebra)");
}

template <ExactRing R>
struct Relation {
  std::string label;  // f-rel, g-rel, swap-j, h-rel
  std::size_t j = 0;  // swap index; 0 otherwise
  WordPoly<R> lhs;
  WordPoly<R> rhs;

  std::string str() const { return lhs.str() + " = " + rhs.str(); }
};

template <ExactRing R>
struct PresentationDoc {
  PresentationVariant variant;
  std::string ring_name;
  std::string f;
  std::string g;
  std::size_t n = 0;
  std::optional<Poly<R>> h;  // subalgebra only
  std::vector<Relation<R>> relations;
  std::vector<Monomial> basis;

  std::string str() const {
    std::ostringstream os;
    os << "presentation (" << variant_name(variant) << ") over " << ring_name << "\n";
    os << "f = " << f << "\ng = " << g << "\n";
    if (h) os << "h = " << h->str() << "\n";
    os << "generators: X -> C, Y -> D\nrelations:\n";
    for (const auto& r : relations) {
      os << "  [" << r.label;
      if (r.label == "swap-j") os << " j=" << r.j;
      os << "] " << r.str() << "\n";
    }
    os << "basis (" << basis.size() << "):";
    for (const auto& m : basis) os << " " << word_str(monomial_word(m));
    os << "\n";
    return os.str();
  }
};

/// Throws DomainError naming the failed condition.
template <ExactRing R>
void check_variant_preconditions(const CompanionPair<R>& pair, PresentationVariant variant) {
  const R& ring = pair.ring();
  if (variant == PresentationVariant::Subalgebra) {
    require_ufd(ring, "subalgebra presentation");
    return;
  }
  const auto res = resultant(pair.f(), pair.g());
  if (!ring.is_unit(res)) {
    throw DomainError("presentation of M_n needs Res(f,g) to be a unit; Res = " + ring.format(res));
  }
  if (variant == PresentationVariant::FullConstantS) {
    if (pair.s().degree() != 0 || !ring.is_unit(pair.s().coeff(0))) {
      throw DomainError("constant-s presentation needs g - f to be a unit constant; g - f = " + pair.s().str());
    }
  }
}

/// Default variant: constant-s when g - f is a unit, full when Res is a unit, subalgebra otherwise.
template <ExactRing R>
PresentationVariant choose_variant(const CompanionPair<R>& pair) {
  const R& ring = pair.ring();
  if (ring.is_unit(resultant(pair.f(), pair.g()))) {
    const bool constant_s = pair.s().degree() == 0 && ring.is_unit(pair.s().coeff(0));
    return constant_s ? PresentationVariant::FullConstantS : PresentationVariant::Full;
  }
  return PresentationVariant::Subalgebra;
}

template <ExactRing R>
class WordReducer {
 public:
  using value_type = typename R::value_type;
  using NormalForm = BiPoly<R>;

  WordReducer(const CompanionPair<R>& pair, PresentationVariant variant)
      : pair_(pair), variant_(variant), h_tail_(pair.ring()) {
    check_variant_preconditions(pair, variant);
    const R& ring = pair.ring();
    const std::size_t n = pair.n();
    const PSequence<R> seq = p_sequence(pair);
    for (std::size_t j = 0; j < n; ++j) {
      if (variant == PresentationVariant::FullConstantS) {
        swaps_.push_back(BiPoly<R>::term(ring, {j + 1, 0}, ring.one()) + BiPoly<R>::term(ring, {0, j + 1}, ring.one()) -
                         BiPoly<R>::term(ring, {j, 1}, ring.one()));
      } else {
        swaps_.push_back(seq.P[j]);
      }
    }
    if (variant == PresentationVariant::Subalgebra) {
      const BasisReport<R> rep = rank_and_basis(pair);
      basis_ = rep.basis_monomials;
      t_ = static_cast<std::size_t>(rep.h.degree());
      std::vector<value_type> tail(rep.h.coeffs().begin(), rep.h.coeffs().end() - 1);
      h_tail_ = Poly<R>(ring, std::move(tail));
      h_ = rep.h;
    } else {
      basis_ = basis_monomials(n, 0);
      t_ = n;
    }
  }

  const CompanionPair<R>& pair() const { return pair_; }
  PresentationVariant variant() const { return variant_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  const std::optional<Poly<R>>& h() const { return h_; }

  bool in_basis(Monomial m) const {
    if (m.x >= pair_.n() || m.y >= pair_.n()) return false;
    return m.y == 0 || m.x < t_;
  }

  /// Rewrites every monomial into the basis.
  NormalForm normalize(NormalForm nf) const {
    const std::size_t n = pair_.n();
    while (true) {
      std::optional<Monomial> top;
      for (const auto& [m, c] : nf.terms()) {
        if (in_basis(m)) continue;
        if (!top || std::pair(m.y, m.x) > std::pair(top->y, top->x)) top = m;
      }
      if (!top) return nf;
      const Monomial m = *top;
      const value_type c = nf.coeff(m);
      nf.add(m, -c);
      if (m.y >= n) {
        for (std::size_t k = 0; k < n; ++k) nf.add({m.x, m.y - n + k}, -(c * pair_.g().coeff(k)));
      } else if (m.x >= n) {
        for (std::size_t k = 0; k < n; ++k) nf.add({m.x - n + k, m.y}, -(c * pair_.f().coeff(k)));
      } else {
        // X^a Y^b = X^(a-t) (X^t Y) Y^(b-1)
        const std::size_t shift = m.x - t_;
        nf.add({m.x + 1, m.y - 1}, c);
        for (std::size_t k = 0; k < h_tail_.coeffs().size(); ++k) {
          const value_type hk = c * h_tail_.coeffs()[k];
          nf.add({shift + k + 1, m.y - 1}, hk);
          nf.add({shift + k, m.y}, -hk);
        }
      }
    }
  }

  NormalForm multiply_letter(const NormalForm& nf, Letter l) const {
    NormalForm out(pair_.ring());
    for (const auto& [m, c] : nf.terms()) {
      if (l == Letter::Y) {
        out.add({m.x, m.y + 1}, c);
      } else if (m.y == 0) {
        out.add({m.x + 1, 0}, c);
      } else {
        for (const auto& [pm, pc] : swaps_.at(m.y).terms()) out.add({m.x + pm.x, pm.y}, c * pc);
      }
    }
    return normalize(std::move(out));
  }

  NormalForm reduce(const Word& w) const {
    const R& ring = pair_.ring();
    NormalForm nf = NormalForm::constant(ring, ring.one());
    for (Letter l : w) nf = multiply_letter(nf, l);
    return nf;
  }

  /// Product of two normal forms.
  NormalForm multiply(const NormalForm& a, const NormalForm& b) const {
    NormalForm out(pair_.ring());
    for (const auto& [m, c] : b.terms()) {
      NormalForm part = a;
      for (Letter l : monomial_word(m)) part = multiply_letter(part, l);
      out = out + c * part;
    }
    return out;
  }

  Matrix<R> evaluate(const NormalForm& nf) const { return nf.evaluate(pair_.C(), pair_.D()); }

 private:
  CompanionPair<R> pair_;
  PresentationVariant variant_;
  std::vector<BiPoly<R>> swaps_;  // index j: Y^j X = swaps_[j]
  std::vector<Monomial> basis_;
  std::size_t t_ = 0;             // X-degree bound of mixed basis monomials
  Poly<R> h_tail_;                // h - X^t
  std::optional<Poly<R>> h_;
};

/// Sum of c * C^i * D^j.
template <ExactRing R>
Matrix<R> evaluate_normal_form(const BiPoly<R>& nf, const CompanionPair<R>& pair) {
  return nf.evaluate(pair.C(), pair.D());
}

template <ExactRing R>
PresentationDoc<R> emit_presentation(const CompanionPair<R>& pair, PresentationVariant variant) {
  const WordReducer<R> reducer(pair, variant);
  const R& ring = pair.ring();
  const std::size_t n = pair.n();
  PresentationDoc<R> doc{variant, ring.descriptor().name(), pair.f().str(), pair.g().str(), n, reducer.h(), {}, reducer.basis()};
  const WordPoly<R> zero(ring);
  doc.relations.push_back({"f-rel", 0, WordPoly<R>::univariate(pair.f().poly(), Letter::X), zero});
  doc.relations.push_back({"g-rel", 0, WordPoly<R>::univariate(pair.g().poly(), Letter::Y), zero});
  const PSequence<R> seq = p_sequence(pair);
  for (std::size_t j = 1; j < n; ++j) {
    WordPoly<R> lhs(ring);
    Word yjx(j, Letter::Y);
    yjx.push_back(Letter::X);
    lhs.add(yjx, ring.one());
    if (variant == PresentationVariant::FullConstantS) {
      Word xjy(j, Letter::X);
      xjy.push_back(Letter::Y);
      lhs.add(xjy, ring.one());
      WordPoly<R> rhs(ring);
      rhs.add(Word(j + 1, Letter::X), ring.one());
      rhs.add(Word(j + 1, Letter::Y), ring.one());
      // Must be the specialization of P_j for constant s.
      const BiPoly<R> check = seq.P[j] + BiPoly<R>::term(ring, {j, 1}, ring.one()) -
                              BiPoly<R>::term(ring, {j + 1, 0}, ring.one()) - BiPoly<R>::term(ring, {0, j + 1}, ring.one());
      if (!check.is_zero()) {
        throw InvariantViolation("P_j is not X^(j+1) + Y^(j+1) - X^j Y although s is constant",
                                 pair.describe() + "\nP_j = " + seq.P[j].str());
      }
      doc.relations.push_back({"swap-j", j, lhs, rhs});
    } else {
      doc.relations.push_back({"swap-j", j, lhs, WordPoly<R>::from_bipoly(seq.P[j])});
    }
  }
  if (variant == PresentationVariant::Subalgebra) {
    WordPoly<R> lhs(ring);
    const Poly<R>& h = *reducer.h();
    for (std::size_t k = h.coeffs().size(); k-- > 0;) {
      Word w(k, Letter::X);
      w.push_back(Letter::X);
      lhs.add(w, h.coeffs()[k]);
    }
    for (std::size_t k = h.coeffs().size(); k-- > 0;) {
      Word w(k, Letter::X);
      w.push_back(Letter::Y);
      lhs.add(w, -h.coeffs()[k]);
    }
    doc.relations.push_back({"h-rel", 0, lhs, zero});
  }
  return doc;
}

namespace detail {

/// Rank of the vectors, except over composite Z/m where only "all independent"
/// is decidable here: a square coordinate matrix is a basis exactly when its
/// determinant, computed on integer lifts, is a unit mod m.
template <ExactRing R>
std::size_t independent_rank(const R& ring, const std::vector<std::vector<typename R::value_type>>& vecs,
                             std::size_t width) {
  if constexpr (std::is_same_v<R, ModRing>) {
    if (!ring.is_field()) {
      if (vecs.size() != width) throw DomainError("independence over " + ring.descriptor().name() + " needs a square system");
      Matrix<IntegerRing> lifted(IntegerRing{}, width, width);
      for (std::size_t c = 0; c < width; ++c)
        for (std::size_t r = 0; r < width; ++r) lifted(r, c) = Integer(vecs[c][r].value());
      return ring.is_unit(ring.from_integer(det_fraction_free(lifted))) ? width : 0;
    }
  }
  return span_rank(ring, vecs, width);
}

}  // namespace detail

struct PresentationCheck {
  std::size_t relations_checked = 0;
  std::size_t words_checked = 0;
  std::size_t splits_checked = 0;
  std::size_t basis_size = 0;
  std::size_t basis_rank = 0;
  bool idempotent = false;
  bool ok = false;
};

inline Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::bernoulli_distribution coin(0.5);
  Word w(len(rng));
  for (auto& l : w) l = coin(rng) ? Letter::Y : Letter::X;
  return w;
}

/// Relations hold at (C, D); reduce(w) evaluates to the word's matrix product
/// for random words; reducing a concatenation equals multiplying reductions;
/// basis monomials reduce to themselves and evaluate to independent matrices.
template <ExactRing R>
PresentationCheck verify_presentation(const CompanionPair<R>& pair, PresentationVariant variant, std::size_t trials,
                                      std::size_t max_len, std::uint64_t seed) {
  const WordReducer<R> reducer(pair, variant);
  const PresentationDoc<R> doc = emit_presentation(pair, variant);
  const R& ring = pair.ring();
  const std::size_t n = pair.n();
  PresentationCheck rep;

  for (const auto& r : doc.relations) {
    if (!(r.lhs.evaluate(pair.C(), pair.D()) == r.rhs.evaluate(pair.C(), pair.D()))) {
      throw InvariantViolation("relation [" + r.label + "] fails at (C, D): " + r.str(), pair.describe());
    }
    ++rep.relations_checked;
  }

  auto word_matrix = [&](const Word& w) {
    Matrix<R> m = Matrix<R>::identity(ring, n);
    for (Letter l : w) m = m * (l == Letter::X ? pair.C() : pair.D());
    return m;
  };
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const Word w = random_word(rng, max_len);
    const auto nf = reducer.reduce(w);
    for (const auto& [m, c] : nf.terms()) {
      if (!reducer.in_basis(m)) throw InvariantViolation("reduce left a non-basis monomial for word " + word_key(w), pair.describe());
    }
    if (!(reducer.evaluate(nf) == word_matrix(w))) {
      throw InvariantViolation("evaluate(reduce(w)) differs from the matrix product for w = " + word_key(w),
                               pair.describe() + "\nnormal form = " + nf.str());
    }
    ++rep.words_checked;
    std::uniform_int_distribution<std::size_t> cut(0, w.size());
    const std::size_t k = cut(rng);
    const Word left(w.begin(), w.begin() + static_cast<long>(k));
    const Word right(w.begin() + static_cast<long>(k), w.end());
    if (!(reducer.multiply(reducer.reduce(left), reducer.reduce(right)) == nf)) {
      throw InvariantViolation("reduce(w1 w2) != reduce(w1) * reduce(w2) for " + word_key(left) + " | " + word_key(right),
                               pair.describe());
    }
    ++rep.splits_checked;
  }

  rep.idempotent = true;
  std::vector<std::vector<typename R::value_type>> vecs;
  for (const auto& m : reducer.basis()) {
    const auto single = BiPoly<R>::term(ring, m, ring.one());
    if (!(reducer.reduce(monomial_word(m)) == single) || !(reducer.normalize(single) == single)) {
      throw InvariantViolation("basis monomial " + word_str(monomial_word(m)) + " is not its own normal form", pair.describe());
    }
    vecs.push_back(vectorize_column_major(reducer.evaluate(single)));
  }
  rep.basis_size = reducer.basis().size();
  rep.basis_rank = detail::independent_rank(ring, vecs, n * n);
  const std::size_t expected =
      variant == PresentationVariant::Subalgebra ? rank_and_basis(pair).rank : n * n;
  if (rep.basis_rank != rep.basis_size || rep.basis_size != expected) {
    throw InvariantViolation("basis monomials are not independent: rank " + std::to_string(rep.basis_rank) + " of " +
                                 std::to_string(rep.basis_size) + ", expected " + std::to_string(expected),
                             pair.describe());
  }
  rep.ok = true;
  return rep;
}

}  // namespace compmat
