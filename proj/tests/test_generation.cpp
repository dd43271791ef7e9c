#include <random>

#include <gtest/gtest.h>

#include "compmat/companion.hpp"
#include "compmat/generation.hpp"
#include "compmat/random.hpp"
#include "oracles.hpp"

using namespace compmat;

namespace {

const IntegerRing zz;
const RationalField qq;
const GaussianRing zi;

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

// Primes p <= bound where the reductions share a factor, found directly.
std::vector<Integer> obstructing_primes_upto(const std::vector<MonicPoly<IntegerRing>>& polys, unsigned bound) {
  std::vector<Integer> out;
  for (unsigned p = 2; p <= bound; ++p) {
    if (!is_prime(Integer(p))) continue;
    const ModRing field(p);
    Poly<ModRing> d = reduce_poly(polys.front().poly(), field);
    for (const auto& f : polys) d = poly_gcd(d, reduce_poly(f.poly(), field));
    if (d.degree() > 0) out.emplace_back(p);
  }
  return out;
}

}  // namespace

TEST(GeneratesFull, Examples) {
  for (std::size_t n : {2U, 3U, 4U}) {
    EXPECT_TRUE(generates_full(std::vector{binomial(qq, n, -2), binomial(qq, n, -3)}).generates);
    EXPECT_TRUE(generates_full(std::vector{binomial(zz, n, -2), binomial(zz, n, -3)}).generates);
  }
  const auto v = generates_full(std::vector{binomial(zz, 2, 0), binomial(zz, 2, -2)});
  EXPECT_FALSE(v.generates);
  EXPECT_EQ(*v.resultant, 4);
  ASSERT_EQ(v.obstructions.size(), 1U);
  EXPECT_EQ(v.obstructions[0].prime, 2);
  ASSERT_TRUE(v.obstructions[0].common_factor.has_value());
  EXPECT_EQ(v.obstructions[0].common_factor->degree(), 2);
  EXPECT_TRUE(poly_mod(*v.obstructions[0].common_factor, Poly<ModRing>::x(ModRing(2))).is_zero());

  const ModRing z6(6);
  const auto w = generates_full(std::vector{mp(z6, {0, 0, 1}), mp(z6, {1, 1, 1})});
  EXPECT_TRUE(w.generates);
  EXPECT_EQ(w.method, "maximal-ideals");
  EXPECT_EQ(w.candidate_primes, (std::vector<Integer>{2, 3}));
}

TEST(GeneratesFull, CompositeModulusAgreesWithSubringEnumeration) {
  const ModRing z6(6);
  const std::vector<std::pair<MonicPoly<ModRing>, MonicPoly<ModRing>>> cases{
      {mp(z6, {0, 0, 1}), mp(z6, {1, 1, 1})},   // generates
      {mp(z6, {0, 0, 1}), mp(z6, {2, 0, 1})},   // common X^2 mod 2
      {mp(z6, {0, 0, 1}), mp(z6, {3, 0, 1})},   // common X^2 mod 3
      {mp(z6, {1, 0, 1}), mp(z6, {5, 1, 1})}};
  for (const auto& [f, g] : cases) {
    const auto v = generates_full(std::vector{f, g});
    const std::size_t size = oracle::subring_size({companion(f), companion(g)});
    EXPECT_EQ(v.generates, size == 6U * 6 * 6 * 6) << f.str() << " / " << g.str() << " size " << size;
    EXPECT_EQ(v.generates, z6.is_unit(resultant(f, g)));
  }
}

TEST(GeneratesFull, FieldsUseGcd) {
  const ModRing gf5(5);
  const auto v = generates_full(std::vector{mp(gf5, {0, 0, 1}), mp(gf5, {1, 0, 1})});
  EXPECT_TRUE(v.generates);
  EXPECT_EQ(v.method, "field-gcd");
  EXPECT_EQ(v.gcd->degree(), 0);
  const auto w = generates_full(std::vector{mp(qq, {0, -1, 1}), mp(qq, {0, 1, 1}), mp(qq, {0, 2, 1})});
  EXPECT_FALSE(w.generates);
  EXPECT_EQ(*w.gcd, Poly<RationalField>::x(qq));
}

TEST(GeneratesFull, ThreeIntegerInputs) {
  // Pairwise common roots 0, 1, 2 but no common root over Q: every pairwise
  // resultant vanishes, so the Hermite fallback is used. The ideal is (X, 2).
  const std::vector polys{mp(zz, {0, -1, 1}), mp(zz, {0, -2, 1}), mp(zz, {2, -3, 1})};
  const auto v = generates_full(polys);
  EXPECT_EQ(v.method, "hermite-constant");
  EXPECT_EQ(*v.constant_generator, 2);
  EXPECT_FALSE(v.generates);
  ASSERT_EQ(v.obstructions.size(), 1U);
  EXPECT_EQ(v.obstructions[0].prime, 2);

  const auto c = generates_full(std::vector{binomial(zz, 2, -2), binomial(zz, 2, -3), binomial(zz, 2, -5)});
  EXPECT_EQ(c.method, "candidate-primes");
  EXPECT_TRUE(c.generates);

  const auto common = generates_full(std::vector{mp(zz, {0, 1, 1}), mp(zz, {0, 2, 1}), mp(zz, {0, 3, 1})});
  EXPECT_EQ(common.method, "common-factor");
  EXPECT_FALSE(common.generates);
}

TEST(GeneratesFull, IntegerVerdictMatchesPrimeScan) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + t % 2;
    const std::size_t count = 2 + t % 3;
    std::vector<MonicPoly<IntegerRing>> polys;
    for (std::size_t i = 0; i < count; ++i) polys.push_back(random_monic(zz, n, rng, 3));
    const auto v = generates_full(polys);
    if (v.method == "common-factor") {
      EXPECT_FALSE(v.generates);
      continue;
    }
    // Every obstruction is a prime dividing the witness, so a scan up to the largest
    // candidate finds exactly the reported ones.
    Integer bound = 2;
    for (const auto& p : v.candidate_primes) bound = std::max(bound, p);
    if (bound > 5000) continue;
    std::vector<Integer> reported;
    for (const auto& o : v.obstructions) reported.push_back(o.prime);
    EXPECT_EQ(reported, obstructing_primes_upto(polys, static_cast<unsigned>(bound)));
    EXPECT_EQ(v.generates, reported.empty());
    if (count == 2) {
      EXPECT_EQ(v.generates, zz.is_unit(*v.resultant));
    }
  }
}

TEST(GeneratesFull, GaussianIntegersUseTheResultant) {
  const auto f = MonicPoly<GaussianRing>(Poly<GaussianRing>(zi, {Gaussian{0, 1}, Gaussian{0}, Gaussian{1}}));
  const auto g = MonicPoly<GaussianRing>(Poly<GaussianRing>(zi, {Gaussian{0}, Gaussian{0}, Gaussian{1}}));
  const auto v = generates_full(std::vector{f, g});
  // Res = g(a)g(-a) = a^4 = (-i)^2 = -1, a unit.
  EXPECT_EQ(*v.resultant, (Gaussian{-1, 0}));
  EXPECT_TRUE(v.generates);
  EXPECT_THROW((void)generates_full(std::vector{f, g, g}), DomainError);
}

TEST(GeneratesFull, InputValidation) {
  EXPECT_THROW((void)generates_full(std::vector{binomial(zz, 2, 1)}), DomainError);
  EXPECT_THROW((void)generates_full(std::vector{binomial(zz, 2, 1), binomial(zz, 3, 1)}), DomainError);
}

TEST(SpanClosure, Examples) {
  EXPECT_EQ(span_closure_oracle(std::vector{Matrix<RationalField>::identity(qq, 3)}).dimension, 1U);
  for (std::size_t n : {2U, 3U}) {
    const auto rep = span_closure_oracle(std::vector{companion(binomial(qq, n, -2)), companion(binomial(qq, n, -3))});
    EXPECT_EQ(rep.dimension, n * n);
    EXPECT_EQ(rep.products_rank, n * n);
    EXPECT_TRUE(rep.closed);
  }
  const auto a = Matrix<RationalField>::from_integers(qq, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  const auto b = Matrix<RationalField>::from_integers(qq, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  const auto rep = span_closure_oracle(std::vector{a, b});
  EXPECT_EQ(rep.dimension, 9U);
  EXPECT_LT(rep.products_rank, 9U);
  EXPECT_FALSE(rep.closed);
  EXPECT_EQ(b * b, Rational(3) * b);
}

TEST(SpanClosure, IntegerLatticeIndexMatchesResultant) {
  const auto rep = span_closure_oracle(std::vector{companion(binomial(zz, 2, 0)), companion(binomial(zz, 2, -2))});
  EXPECT_EQ(rep.dimension, 4U);
  ASSERT_TRUE(rep.lattice_index.has_value());
  EXPECT_EQ(*rep.lattice_index, 4);
  EXPECT_TRUE(rep.closed);
}

TEST(InvariantSubspaces, Examples) {
  const ModRing gf5(5);
  const auto rep = common_invariant_subspaces(std::vector{mp(gf5, {0, -1, 1}), mp(gf5, {0, 1, 1})});
  EXPECT_EQ(rep.d, Poly<ModRing>::x(gf5));
  EXPECT_TRUE(rep.exists_nontrivial);
  ASSERT_EQ(rep.subspace_basis.size(), 1U);
  EXPECT_EQ(rep.subspace_basis[0], (std::vector<ModInt>{gf5.zero(), gf5.one()}));
  EXPECT_TRUE(rep.verified);

  const auto coprime = common_invariant_subspaces(std::vector{mp(gf5, {0, 0, 1}), mp(gf5, {1, 0, 1})});
  EXPECT_FALSE(coprime.exists_nontrivial);
  EXPECT_TRUE(coprime.subspace_basis.empty());

  // X^2 + 2 is irreducible mod 5 (squares mod 5 are 0, 1, 4).
  const auto irr = mp(gf5, {2, 0, 1});
  const auto same = common_invariant_subspaces(std::vector{irr, irr});
  EXPECT_EQ(same.d, irr.poly());
  EXPECT_FALSE(same.exists_nontrivial);
}

TEST(InvariantSubspaces, SuppliedFactorAndRationalSearch) {
  // f = (X^2 + 1)(X - 2) taken twice: d = f, and a proper factor is found over Q.
  const auto f = MonicPoly<RationalField>(Poly<RationalField>::from_integers(qq, {1, 0, 1}) *
                                          Poly<RationalField>::from_integers(qq, {-2, 1}));
  const auto rep = common_invariant_subspaces(std::vector{f, f});
  EXPECT_TRUE(rep.exists_nontrivial);
  ASSERT_TRUE(rep.factor.has_value());
  EXPECT_TRUE(poly_mod(f.poly(), *rep.factor).is_zero());
  EXPECT_EQ(rep.subspace_basis.size(), 3U - static_cast<std::size_t>(rep.factor->degree()));

  const auto supplied = common_invariant_subspaces(
      std::vector{f}, std::optional<Poly<RationalField>>(Poly<RationalField>::from_integers(qq, {1, 0, 1})));
  EXPECT_EQ(supplied.subspace_basis.size(), 1U);
  EXPECT_THROW((void)common_invariant_subspaces(
                   std::vector{f}, std::optional<Poly<RationalField>>(Poly<RationalField>::from_integers(qq, {1, 1}))),
               DomainError);
  const auto irr = mp(qq, {-2, 0, 0, 1});
  EXPECT_FALSE(common_invariant_subspaces(std::vector{irr, irr}).exists_nontrivial);
}

TEST(InvariantSubspaces, AgreeWithBruteForceOverGF5) {
  const ModRing gf5(5);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + t % 2;
    const std::size_t count = 1 + t % 3;
    std::vector<MonicPoly<ModRing>> polys;
    for (std::size_t i = 0; i < count; ++i) polys.push_back(random_monic(gf5, n, rng, 2));
    if (t % 4 == 0) {
      // Force a shared linear factor.
      for (auto& p : polys) {
        Poly<ModRing> q = random_poly(gf5, n - 1, rng, 2) + Poly<ModRing>::monomial(gf5, gf5.one(), n - 1);
        p = MonicPoly<ModRing>(q * Poly<ModRing>::from_integers(gf5, {-1, 1}));
      }
    }
    std::vector<Matrix<ModRing>> mats;
    for (const auto& p : polys) mats.push_back(companion(p));
    const auto rep = common_invariant_subspaces(polys);
    EXPECT_EQ(rep.exists_nontrivial, oracle::has_common_invariant_subspace(mats));
  }
}
