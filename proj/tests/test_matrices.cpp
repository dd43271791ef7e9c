#include <random>

#include <gtest/gtest.h>

#include "compmat/companion.hpp"
#include "compmat/random.hpp"
#include "oracles.hpp"

using namespace compmat;

namespace {

const IntegerRing zz;
const RationalField qq;
const GaussianRing zi;

using ZMat = Matrix<IntegerRing>;

ZMat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
  ZMat m(zz, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_coefficient(zz, rng, bound);
  return m;
}

std::vector<std::vector<Integer>> rows_of(const ZMat& m) {
  std::vector<std::vector<Integer>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
  return out;
}

}  // namespace

TEST(Det, Examples) {
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(det_fraction_free(ZMat::identity(zz, n)), 1);
  // companion(f) has det (-1)^n f_0; confirmed by cofactor expansion.
  const auto f2 = MonicPoly<IntegerRing>::from_integers(zz, {5, -7, 1});
  const auto f3 = MonicPoly<IntegerRing>::from_integers(zz, {5, -7, 2, 1});
  EXPECT_EQ(det_fraction_free(companion(f2)), 5);
  EXPECT_EQ(oracle::laplace_det(companion(f2)), 5);
  EXPECT_EQ(det_fraction_free(companion(f3)), -5);
  EXPECT_EQ(oracle::laplace_det(companion(f3)), -5);
  const CompanionPair<IntegerRing> pair(MonicPoly<IntegerRing>::from_integers(zz, {0, 0, 1}),
                                        MonicPoly<IntegerRing>::from_integers(zz, {-2, 0, 1}));
  const auto sm = build_structure_matrix(pair);
  EXPECT_EQ(det_fraction_free(sm.M), 4);
  EXPECT_EQ(oracle::laplace_det(sm.M), 4);
  EXPECT_THROW((void)det_fraction_free(ZMat(zz, 2, 3)), DomainError);
  EXPECT_THROW((void)det_fraction_free(Matrix<ModRing>::identity(ModRing(6), 2)), DomainError);
}

TEST(Smith, Examples) {
  const auto d = smith_normal_form(ZMat::from_integers(zz, {{2, 0}, {0, 3}}));
  EXPECT_EQ(d.invariant_factors, (std::vector<Integer>{1, 6}));
  const auto z = smith_normal_form(ZMat(zz, 3, 2));
  EXPECT_TRUE(z.S.is_zero());
  EXPECT_TRUE(z.invariant_factors.empty());
  const auto u = smith_normal_form(ZMat::from_integers(zz, {{2, 3}, {1, 2}}));
  EXPECT_EQ(u.invariant_factors, (std::vector<Integer>{1, 1}));
  const auto g = smith_normal_form(Matrix<GaussianRing>::from_rows(zi, {{Gaussian{2, 0}, Gaussian{0, 0}},
                                                                       {Gaussian{0, 0}, Gaussian{1, 1}}}));
  // 2 = -i(1+i)^2, so gcd(2, 1+i) = 1+i and the product 2(1+i) leaves 2.
  ASSERT_EQ(g.invariant_factors.size(), 2U);
  EXPECT_EQ(g.invariant_factors[0], (Gaussian{1, 1}));
  EXPECT_EQ(g.invariant_factors[1], (Gaussian{2, 0}));
}

TEST(Hermite, Examples) {
  const auto h = hermite_row_basis(zz, {{2, 0}, {0, 2}, {1, 1}}, 2);
  EXPECT_EQ(h.rank, 2U);
  EXPECT_EQ(rows_of(h.basis), (std::vector<std::vector<Integer>>{{1, 1}, {0, 2}}));
  EXPECT_EQ(hermite_row_basis(zz, {{0, 0, 0}}, 3).rank, 0U);
  const auto e = hermite_row_basis(zz, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  EXPECT_EQ(e.basis, ZMat::identity(zz, 3));
  EXPECT_THROW((void)hermite_row_basis(zz, {{1, 0}, {1}}, 2), DomainError);
}

TEST(Hermite, LatticeEnumerationOracle) {
  // Points of the lattice spanned by {(2,0),(0,2),(1,1)} inside a box: (x, y) with x = y mod 2.
  const auto h = hermite_row_basis(zz, {{2, 0}, {0, 2}, {1, 1}}, 2);
  for (int x = -6; x <= 6; ++x)
    for (int y = -6; y <= 6; ++y) EXPECT_EQ(hermite_contains(h, {x, y}), (x - y) % 2 == 0) << x << "," << y;
  // Random lattices: the input rows lie in the Hermite lattice and both have the same
  // covolume (product of determinantal-divisor quotients), so the lattices coincide.
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const ZMat a = random_matrix(rng, 3 + t % 2, 3, 5);
    const auto hb = hermite_row_basis(zz, rows_of(a), 3);
    for (const auto& row : rows_of(a)) EXPECT_TRUE(hermite_contains(hb, row));
    const auto fa = oracle::snf_by_minors(a);
    const auto fh = oracle::snf_by_minors(hb.basis);
    EXPECT_EQ(fa.size(), hb.rank);
    EXPECT_EQ(fa, fh);
    for (std::size_t i = 0; i < hb.rank; ++i) EXPECT_GT(hb.basis(i, hb.pivots[i]), 0);
  }
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(solve_kernel(Matrix<RationalField>::identity(qq, 3)).empty());
  EXPECT_EQ(solve_kernel(Matrix<RationalField>(qq, 2, 2)).size(), 2U);
  const auto k = solve_kernel(Matrix<RationalField>::from_integers(qq, {{1, 1}, {1, 1}}));
  ASSERT_EQ(k.size(), 1U);
  EXPECT_EQ(k[0][0], -k[0][1]);
  EXPECT_NE(k[0][0], 0);
  EXPECT_THROW((void)solve_kernel(ZMat::identity(zz, 2)), DomainError);
}

TEST(Vectorize, Examples) {
  EXPECT_EQ(vectorize_column_major(ZMat::from_integers(zz, {{1, 2}, {3, 4}})), (std::vector<Integer>{1, 3, 2, 4}));
  EXPECT_EQ(vectorize_column_major(ZMat::identity(zz, 2)), (std::vector<Integer>{1, 0, 0, 1}));
  EXPECT_EQ(vectorize_column_major(ZMat::from_integers(zz, {{0, 1}, {0, 0}})), (std::vector<Integer>{0, 0, 1, 0}));
}

TEST(Properties, DetIsMultiplicative) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const ZMat a = random_matrix(rng, 4, 4, 9);
    const ZMat b = random_matrix(rng, 4, 4, 9);
    const Integer da = det_fraction_free(a);
    EXPECT_EQ(da, oracle::laplace_det(a));
    EXPECT_EQ(det_fraction_free(a * b), da * det_fraction_free(b));
  }
}

TEST(Properties, SmithRecomposesAndMatchesMinors) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + t % 4;
    const std::size_t c = 1 + (t / 4) % 4;
    ZMat a = random_matrix(rng, r, c, 6);
    if (t % 5 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = 2 * a(0, j);  // force rank deficiency
    }
    const auto d = smith_normal_form(a);
    EXPECT_EQ(d.U * a * d.V, d.S);
    EXPECT_TRUE(zz.is_unit(det_fraction_free(d.U)));
    EXPECT_TRUE(zz.is_unit(det_fraction_free(d.V)));
    for (std::size_t i = 0; i < d.S.rows(); ++i)
      for (std::size_t j = 0; j < d.S.cols(); ++j)
        if (i != j) {
          EXPECT_EQ(d.S(i, j), 0);
        }
    for (std::size_t i = 0; i + 1 < d.invariant_factors.size(); ++i) {
      EXPECT_EQ(d.invariant_factors[i + 1] % d.invariant_factors[i], 0);
    }
    for (const auto& x : d.invariant_factors) EXPECT_GT(x, 0);
    EXPECT_EQ(d.invariant_factors, oracle::snf_by_minors(a));
    if (r == c) {
      Integer prod = 1;
      for (const auto& x : d.invariant_factors) prod *= x;
      const Integer det = det_fraction_free(a);
      if (det != 0) {
        EXPECT_EQ(prod, abs_value(det));
      }
    }
  }
}

TEST(Properties, SmithOverGaussianIntegers) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    Matrix<GaussianRing> a(zi, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = random_coefficient(zi, rng, 4);
    const auto d = smith_normal_form(a);
    EXPECT_EQ(d.U * a * d.V, d.S);
    EXPECT_TRUE(zi.is_unit(det_fraction_free(d.U)));
    EXPECT_TRUE(zi.is_unit(det_fraction_free(d.V)));
    for (std::size_t i = 0; i + 1 < d.invariant_factors.size(); ++i) {
      EXPECT_NO_THROW((void)zi.divide_exact(d.invariant_factors[i + 1], d.invariant_factors[i]));
    }
    for (const auto& x : d.invariant_factors) EXPECT_EQ(zi.unit_normal(x), zi.one());
    const Gaussian det = oracle::laplace_det(a);
    if (!det.is_zero()) {
      Gaussian prod = zi.one();
      for (const auto& x : d.invariant_factors) prod = prod * x;
      EXPECT_EQ(prod.norm(), det.norm());
    }
  }
}

TEST(Properties, HermiteIsIdempotent) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 100; ++t) {
    const ZMat a = random_matrix(rng, 2 + t % 4, 3, 7);
    const auto h = hermite_row_basis(zz, rows_of(a), 3);
    const auto again = hermite_row_basis(zz, rows_of(h.basis), 3);
    EXPECT_EQ(again.basis, h.basis);
    EXPECT_EQ(h.rank, rank(Matrix<RationalField>::from_rows(
                          qq, [&] {
                            std::vector<std::vector<Rational>> rr;
                            for (const auto& row : rows_of(a)) {
                              auto& out = rr.emplace_back();
                              for (const auto& x : row) out.emplace_back(x);
                            }
                            return rr;
                          }())));
    for (const auto& row : rows_of(a)) EXPECT_TRUE(hermite_contains(h, row));
  }
}

TEST(Properties, KernelVectorsAreAnnihilated) {
  std::mt19937_64 rng(31);
  const ModRing gf7(7);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + t % 4;
    const std::size_t c = 1 + (t / 3) % 5;
    Matrix<ModRing> a(gf7, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = random_coefficient(gf7, rng, 3);
    const auto k = solve_kernel(a);
    for (const auto& v : k) {
      for (const auto& x : a.apply(v)) EXPECT_EQ(x, gf7.zero());
    }
    EXPECT_EQ(k.size() + rank(a), c);
  }
}
