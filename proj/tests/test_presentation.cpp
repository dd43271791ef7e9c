#include <random>

#include <gtest/gtest.h>

#include "compmat/presentation.hpp"
#include "compmat/random.hpp"

using namespace compmat;

namespace {

const IntegerRing zz;
const RationalField qq;

template <ExactRing R>
MonicPoly<R> mp(const R& ring, std::vector<long long> c) {
  return MonicPoly<R>::from_integers(ring, c);
}

template <ExactRing R>
MonicPoly<R> binomial(const R& ring, std::size_t n, long long c) {
  std::vector<long long> v(n + 1, 0);
  v[0] = c;
  v[n] = 1;
  return mp(ring, v);
}

template <ExactRing R>
Matrix<R> word_product(const CompanionPair<R>& pair, const Word& w) {
  Matrix<R> m = Matrix<R>::identity(pair.ring(), pair.n());
  for (Letter l : w) m = m * (l == Letter::X ? pair.C() : pair.D());
  return m;
}

}  // namespace

TEST(Words, ParseAndRender) {
  EXPECT_EQ(word_str(parse_word("YYX")), "Y^2*X");
  EXPECT_EQ(word_str(parse_word("xyx")), "X*Y*X");
  EXPECT_EQ(word_str(Word{}), "1");
  EXPECT_EQ(word_key(monomial_word({2, 1})), "XXY");
  EXPECT_THROW((void)parse_word("XZ"), ParseError);
  EXPECT_EQ(parse_variant("full-constant-s"), PresentationVariant::FullConstantS);
  EXPECT_EQ(variant_name(PresentationVariant::Subalgebra), "subalgebra");
  EXPECT_THROW((void)parse_variant("other"), ParseError);
}

TEST(Emit, ConstantDifferenceGivesSymmetricSwaps) {
  for (std::size_t n : {2U, 3U, 4U}) {
    const CompanionPair<RationalField> pair(binomial(qq, n, -2), binomial(qq, n, -3));
    EXPECT_EQ(choose_variant(pair), PresentationVariant::FullConstantS);
    const auto doc = emit_presentation(pair, PresentationVariant::FullConstantS);
    std::size_t swaps = 0;
    for (const auto& r : doc.relations) {
      EXPECT_TRUE((r.lhs.evaluate(pair.C(), pair.D()) - r.rhs.evaluate(pair.C(), pair.D())).is_zero()) << r.label;
      if (r.label != "swap-j") continue;
      ++swaps;
      const std::string j = std::to_string(r.j);
      const std::string j1 = std::to_string(r.j + 1);
      const std::string xj = r.j == 1 ? "X" : "X^" + j;
      const std::string yj = r.j == 1 ? "Y" : "Y^" + j;
      EXPECT_EQ(r.lhs.str(), yj + "*X + " + xj + "*Y");
      EXPECT_EQ(r.rhs.str(), "X^" + j1 + " + Y^" + j1);
    }
    EXPECT_EQ(swaps, n - 1);
    EXPECT_EQ(doc.relations.front().label, "f-rel");
    EXPECT_EQ(doc.relations[1].label, "g-rel");
    EXPECT_EQ(doc.basis.size(), n * n);
  }
}

TEST(Emit, EqualInputsCollapseToOneGenerator) {
  const auto f = mp(qq, {1, 1, 0, 1});
  const CompanionPair<RationalField> pair(f, f);
  EXPECT_EQ(choose_variant(pair), PresentationVariant::Subalgebra);
  const auto doc = emit_presentation(pair, PresentationVariant::Subalgebra);
  ASSERT_TRUE(doc.h.has_value());
  EXPECT_EQ(*doc.h, Poly<RationalField>::from_integers(qq, {1}));
  EXPECT_EQ(doc.relations.back().label, "h-rel");
  EXPECT_EQ(doc.relations.back().lhs.str(), "X - Y");
  EXPECT_EQ(doc.basis.size(), 3U);
}

TEST(Emit, PreconditionsNameTheFailedCheck) {
  // Res = 4: a unit over Q, not over Z.
  EXPECT_NO_THROW((void)emit_presentation(CompanionPair<RationalField>(binomial(qq, 2, 0), binomial(qq, 2, -2)),
                                          PresentationVariant::Full));
  try {
    (void)emit_presentation(CompanionPair<IntegerRing>(binomial(zz, 2, 0), binomial(zz, 2, -2)),
                            PresentationVariant::Full);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("Res(f,g) to be a unit"), std::string::npos);
  }
  EXPECT_THROW((void)emit_presentation(CompanionPair<RationalField>(binomial(qq, 2, 0), mp(qq, {-2, 1, 1})),
                                       PresentationVariant::FullConstantS),
               DomainError);
  EXPECT_THROW((void)emit_presentation(CompanionPair<ModRing>(mp(ModRing(6), {0, 0, 1}), mp(ModRing(6), {1, 0, 1})),
                                       PresentationVariant::Subalgebra),
               DomainError);
}

TEST(Reduce, Examples) {
  const CompanionPair<RationalField> pair(binomial(qq, 2, -2), binomial(qq, 2, -3));
  const WordReducer<RationalField> reducer(pair, PresentationVariant::FullConstantS);
  EXPECT_EQ(reducer.reduce({}), BiPoly<RationalField>::constant(qq, 1));
  // YX = X^2 + Y^2 - XY = 2 + 3 - XY.
  const auto yx = reducer.reduce(parse_word("YX"));
  EXPECT_EQ(yx, BiPoly<RationalField>::constant(qq, 5) - BiPoly<RationalField>::term(qq, {1, 1}, 1));
  EXPECT_EQ(evaluate_normal_form(yx, pair), pair.D() * pair.C());
  EXPECT_EQ(evaluate_normal_form(BiPoly<RationalField>::constant(qq, 1), pair), Matrix<RationalField>::identity(qq, 2));
  EXPECT_EQ(evaluate_normal_form(BiPoly<RationalField>::term(qq, {1, 0}, 1), pair), pair.C());
}

TEST(Reduce, SoundOnRandomWords) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 12; ++t) {
    const std::size_t n = 2 + t % 3;
    const CompanionPair<IntegerRing> pair(random_monic(zz, n, rng, 4), random_monic(zz, n, rng, 4));
    const WordReducer<IntegerRing> reducer(pair, PresentationVariant::Subalgebra);
    for (int k = 0; k < 40; ++k) {
      const Word w = random_word(rng, 8);
      const auto nf = reducer.reduce(w);
      for (const auto& [m, c] : nf.terms()) EXPECT_TRUE(reducer.in_basis(m));
      EXPECT_EQ(reducer.evaluate(nf), word_product(pair, w)) << word_str(w);
    }
  }
}

TEST(Reduce, BasisMonomialsAreFixed) {
  const CompanionPair<IntegerRing> pair(mp(zz, {0, 0, -1, 1}), mp(zz, {0, -1, 0, 1}));
  const WordReducer<IntegerRing> reducer(pair, PresentationVariant::Subalgebra);
  EXPECT_EQ(reducer.basis().size(), 5U);
  for (const auto& m : reducer.basis()) {
    EXPECT_EQ(reducer.reduce(monomial_word(m)), BiPoly<IntegerRing>::term(zz, m, 1));
  }
}

TEST(Reduce, EqualInputsGiveUnivariateForms) {
  const auto f = mp(zz, {3, -1, 2, 1});
  const CompanionPair<IntegerRing> pair(f, f);
  const WordReducer<IntegerRing> reducer(pair, PresentationVariant::Subalgebra);
  std::mt19937_64 rng(2);
  for (int k = 0; k < 50; ++k) {
    const Word w = random_word(rng, 8);
    const auto nf = reducer.reduce(w);
    for (const auto& [m, c] : nf.terms()) EXPECT_EQ(m.y, 0U);
    EXPECT_EQ(reducer.evaluate(nf), word_product(pair, w));
  }
}

TEST(Verify, FullAndSubalgebraVariants) {
  for (std::size_t n : {2U, 3U}) {
    const CompanionPair<IntegerRing> pair(binomial(zz, n, -2), binomial(zz, n, -3));
    for (auto v : {PresentationVariant::Full, PresentationVariant::FullConstantS}) {
      const auto rep = verify_presentation(pair, v, 100, 8, 7);
      EXPECT_TRUE(rep.ok);
      EXPECT_EQ(rep.basis_rank, n * n);
      EXPECT_EQ(rep.words_checked, 100U);
    }
  }
  const CompanionPair<RationalField> pair(mp(qq, {0, 0, -1, 1}), mp(qq, {0, -1, 0, 1}));
  const auto rep = verify_presentation(pair, PresentationVariant::Subalgebra, 100, 8, 3);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.basis_size, 5U);
  EXPECT_EQ(rep.basis_rank, 5U);
  EXPECT_TRUE(rep.idempotent);
}

TEST(Verify, CompositeModulus) {
  // Res(X^2, X^2 + X + 1) = 1: the full presentation holds over Z/6.
  const ModRing z6(6);
  const auto rep =
      verify_presentation(CompanionPair<ModRing>(mp(z6, {0, 0, 1}), mp(z6, {1, 1, 1})), PresentationVariant::Full, 50, 8, 1);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.basis_rank, 4U);
}

TEST(Properties, DimensionMatchesBasisReport) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + t % 3;
    const std::size_t m = t % (n + 1);
    auto monic = [&](std::size_t k) {
      return random_poly(qq, k, rng, 2) + Poly<RationalField>::monomial(qq, 1, k);
    };
    const Poly<RationalField> common = monic(m);
    const CompanionPair<RationalField> pair{MonicPoly<RationalField>(common * monic(n - m)),
                                            MonicPoly<RationalField>(common * monic(n - m))};
    const auto basis = rank_and_basis(pair);
    const WordReducer<RationalField> reducer(pair, PresentationVariant::Subalgebra);
    EXPECT_EQ(reducer.basis().size(), basis.rank);
    EXPECT_EQ(reducer.basis(), basis.basis_monomials);
    const auto rep = verify_presentation(pair, PresentationVariant::Subalgebra, 30, 8, t);
    EXPECT_TRUE(rep.ok);
  }
}
