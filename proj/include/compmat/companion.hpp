#pragma once

/*
 * Companion-matrix pairs and the identities they satisfy.
 *
 * For monic f, g of degree n with companion matrices C, D:
 *   - C and D agree outside the last column, so (C - D) has a single nonzero
 *     column and (C-D) D^(j-1) (C-D) = a_j (C-D), where a_j is the (n, j)
 *     entry of s(D), s = g - f.
 *   - p_0 = 1, p_j = X p_(j-1) - a_j and P_j = p_j(X)(X - Y) + Y^(j+1) give
 *     D^j C = P_j(C, D), so span{C^i D^j} is the whole algebra generated.
 *   - The n^2 x n^2 matrix of coordinates of the C^i D^j has determinant
 *     Res(f, g)^(n-1).
 *
 * Each check_* style operation recomputes both sides independently and
 * throws InvariantViolation with a dump on disagreement.
 */

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "compmat/bipoly.hpp"
#include "compmat/normal_forms.hpp"
#include "compmat/poly.hpp"
#include "compmat/span.hpp"

namespace compmat {

/// Subdiagonal of ones, last column -f_0, ..., -f_(n-1).
template <ExactRing R>
Matrix<R> companion(const MonicPoly<R>& f) {
  const std::size_t n = f.degree();
  if (n < 2) throw DomainError("companion: degree must be at least 2");
  const R& ring = f.ring();
  Matrix<R> c(ring, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i + 1, i) = ring.one();
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -f.coeff(i);
  return c;
}

/// Coordinates of p in the basis 1, X, ..., X^(n-1).
template <ExactRing R>
std::vector<typename R::value_type> coords(const Poly<R>& p, std::size_t n) {
  if (p.degree() >= static_cast<int>(n)) {
    throw DomainError("coords: degree " + std::to_string(p.degree()) + " is not below " + std::to_string(n));
  }
  std::vector<typename R::value_type> v(n, p.ring().zero());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) v[i] = p.coeffs()[i];
  return v;
}

template <ExactRing R>
class CompanionPair {
 public:
  using value_type = typename R::value_type;

  CompanionPair(MonicPoly<R> f, MonicPoly<R> g)
      : f_(validated(std::move(f), g)), g_(std::move(g)), c_(companion(f_)), d_(companion(g_)), s_(poly_sub(g_, f_)) {
    c_pow_ = matrix_powers(c_, n() + 1);
    d_pow_ = matrix_powers(d_, n() + 1);
    const Matrix<R> sd = poly_eval_matrix(s_, d_);
    for (std::size_t j = 0; j < n(); ++j) a_.push_back(sd(n() - 1, j));
  }

  const R& ring() const { return f_.ring(); }
  std::size_t n() const { return f_.degree(); }
  const MonicPoly<R>& f() const { return f_; }
  const MonicPoly<R>& g() const { return g_; }
  const Matrix<R>& C() const { return c_; }
  const Matrix<R>& D() const { return d_; }
  const Poly<R>& s() const { return s_; }
  /// a_1, ..., a_n stored at indices 0..n-1: the last row of s(D).
  const std::vector<value_type>& a() const { return a_; }
  /// C^k and D^k for 0 <= k <= n.
  const Matrix<R>& C_pow(std::size_t k) const { return c_pow_.at(k); }
  const Matrix<R>& D_pow(std::size_t k) const { return d_pow_.at(k); }
  Matrix<R> monomial(Monomial m) const { return power(c_, c_pow_, m.x) * power(d_, d_pow_, m.y); }

  std::string describe() const { return "ring = " + ring().descriptor().name() + "\nf = " + f_.str() + "\ng = " + g_.str(); }

 private:
  static MonicPoly<R> validated(MonicPoly<R> f, const MonicPoly<R>& g) {
    if (!(f.ring() == g.ring())) throw DomainError("f and g live in different rings");
    if (f.degree() != g.degree()) {
      throw DomainError("f and g must have the same degree (" + std::to_string(f.degree()) + " vs " +
                        std::to_string(g.degree()) + ")");
    }
    if (f.degree() < 2) throw DomainError("degree must be at least 2");
    return f;
  }

  static Matrix<R> power(const Matrix<R>& base, const std::vector<Matrix<R>>& cache, std::size_t k) {
    if (k < cache.size()) return cache[k];
    Matrix<R> p = cache.back();
    for (std::size_t i = cache.size() - 1; i < k; ++i) p = p * base;
    return p;
  }

  MonicPoly<R> f_;
  MonicPoly<R> g_;
  Matrix<R> c_;
  Matrix<R> d_;
  Poly<R> s_;
  std::vector<Matrix<R>> c_pow_;
  std::vector<Matrix<R>> d_pow_;
  std::vector<value_type> a_;
};

template <ExactRing R>
struct StructureMatrix {
  Matrix<R> M;
  /// Column k holds the coordinates of C^x D^y for column_order[k].
  std::vector<Monomial> column_order;
  /// Row k is the coefficient of E^{kl} for row_order[k] = (k, l), 1-based.
  std::vector<std::pair<std::size_t, std::size_t>> row_order;
};

/// Columns ordered D^(n-1), C D^(n-1), ..., C^(n-1) D^(n-1), D^(n-2), ..., I, C, ..., C^(n-1);
/// rows ordered E^{11}, E^{21}, ..., E^{n1}, E^{12}, ..., E^{nn}.
template <ExactRing R>
StructureMatrix<R> build_structure_matrix(const CompanionPair<R>& pair) {
  const std::size_t n = pair.n();
  StructureMatrix<R> out{Matrix<R>(pair.ring(), n * n, n * n), {}, {}};
  for (std::size_t l = 1; l <= n; ++l)
    for (std::size_t k = 1; k <= n; ++k) out.row_order.emplace_back(k, l);
  std::size_t col = 0;
  for (std::size_t jj = n; jj-- > 0;) {
    for (std::size_t i = 0; i < n; ++i) {
      const Monomial m{i, jj};
      const auto v = vectorize_column_major(pair.C_pow(i) * pair.D_pow(jj));
      for (std::size_t r = 0; r < v.size(); ++r) out.M(r, col) = v[r];
      out.column_order.push_back(m);
      ++col;
    }
  }
  return out;
}

template <ExactRing R>
struct DetIdentityReport {
  typename R::value_type det_m;
  typename R::value_type resultant;
  typename R::value_type res_power;  // resultant^(n-1)
  bool equal = false;
};

/// det M_{f,g} against Res(f,g)^(n-1). Disagreement is a bug and throws.
template <ExactRing R>
DetIdentityReport<R> det_identity_check(const CompanionPair<R>& pair) {
  const R& ring = pair.ring();
  if (!ring.is_domain()) throw DomainError("det_identity_check needs an integral domain, got " + ring.descriptor().name());
  DetIdentityReport<R> rep{det_fraction_free(build_structure_matrix(pair).M), resultant(pair.f(), pair.g()), ring.one(), false};
  rep.res_power = detail::power(ring, rep.resultant, pair.n() - 1);
  rep.equal = rep.det_m == rep.res_power;
  if (!rep.equal) {
    throw InvariantViolation("det M_{f,g} != Res(f,g)^(n-1)", pair.describe() + "\ndet M = " + ring.format(rep.det_m) +
                                                                   "\nRes^(n-1) = " + ring.format(rep.res_power));
  }
  return rep;
}

/// Rank of Z<C,D> for a UFD: n + (n - m)(n - 1) with m = deg gcd(f, g).
inline std::size_t predicted_rank(std::size_t n, std::size_t m) { return n + (n - m) * (n - 1); }

template <EuclideanRing R>
struct IndexReport {
  typename R::value_type resultant;
  std::optional<Integer> predicted_index;  // N(Res)^(n-1); empty when Res = 0
  std::optional<Integer> snf_index;        // prod N(a_k); empty when rank-deficient
  std::vector<typename R::value_type> invariant_factors;
  std::size_t rank = 0;
  bool agree = false;
};

/// Index of R<C,D> in M_n(R) for R = Z or Z[i], predicted from the resultant
/// and measured from the Smith form of the structure matrix.
template <EuclideanRing R>
IndexReport<R> lattice_index(const CompanionPair<R>& pair) {
  const R& ring = pair.ring();
  const std::size_t n = pair.n();
  const auto snf = smith_normal_form(build_structure_matrix(pair).M);
  IndexReport<R> rep{resultant(pair.f(), pair.g()), std::nullopt, std::nullopt, snf.invariant_factors, snf.rank(), false};
  if (rep.rank == n * n) {
    Integer idx = 1;
    for (const auto& a : rep.invariant_factors) idx *= ring.size(a);
    rep.snf_index = idx;
  }
  if (!ring.is_zero(rep.resultant)) rep.predicted_index = ipow(ring.size(rep.resultant), n - 1);
  rep.agree = rep.predicted_index == rep.snf_index;
  if constexpr (std::is_same_v<R, IntegerRing>) {
    const std::size_t m = static_cast<std::size_t>(poly_gcd(pair.f().poly(), pair.g().poly()).degree());
    if (rep.rank != predicted_rank(n, m)) {
      throw InvariantViolation("rank of M_{f,g} differs from n + (n-m)(n-1)",
                               pair.describe() + "\nSmith rank = " + std::to_string(rep.rank) +
                                   "\nformula = " + std::to_string(predicted_rank(n, m)));
    }
  }
  if (!rep.agree) {
    auto show = [](const std::optional<Integer>& v) { return v ? v->str() : std::string("infinite"); };
    throw InvariantViolation("lattice index disagrees with N(Res)^(n-1)", pair.describe() + "\npredicted = " +
                                                                            show(rep.predicted_index) +
                                                                            "\nsmith = " + show(rep.snf_index));
  }
  return rep;
}

/// a_1..a_n, verifying (C-D) D^(j-1) (C-D) = a_j (C-D) for each j.
template <ExactRing R>
std::vector<typename R::value_type> a_sequence(const CompanionPair<R>& pair) {
  const Matrix<R> z = pair.C() - pair.D();
  for (std::size_t j = 1; j <= pair.n(); ++j) {
    const Matrix<R> lhs = z * pair.D_pow(j - 1) * z;
    const Matrix<R> rhs = pair.a()[j - 1] * z;
    if (!(lhs == rhs)) {
      throw InvariantViolation("(C-D) D^(j-1) (C-D) != a_j (C-D) for j = " + std::to_string(j),
                               pair.describe() + "\nlhs = " + lhs.str() + "\nrhs = " + rhs.str());
    }
  }
  return pair.a();
}

template <ExactRing R>
struct PSequence {
  std::vector<Poly<R>> p;    // p_0..p_(n-1)
  std::vector<BiPoly<R>> P;  // P_0..P_(n-1)
};

/// P_j = p_j(X)(X - Y) + Y^(j+1).
template <ExactRing R>
BiPoly<R> swap_polynomial(const Poly<R>& pj, std::size_t j) {
  const R& ring = pj.ring();
  const BiPoly<R> x_minus_y = BiPoly<R>::term(ring, {1, 0}, ring.one()) - BiPoly<R>::term(ring, {0, 1}, ring.one());
  return x_minus_y.left_times_x(pj) + BiPoly<R>::term(ring, {0, j + 1}, ring.one());
}

/// The p_j / P_j sequences; verifies p_j(C)(C-D) = D^j(C-D) and D^j C = P_j(C, D).
template <ExactRing R>
PSequence<R> p_sequence(const CompanionPair<R>& pair) {
  const R& ring = pair.ring();
  const std::size_t n = pair.n();
  const auto a = a_sequence(pair);
  PSequence<R> out;
  out.p.push_back(Poly<R>::constant(ring, ring.one()));
  for (std::size_t j = 1; j < n; ++j) {
    out.p.push_back(Poly<R>::x(ring) * out.p.back() - Poly<R>::constant(ring, a[j - 1]));
  }
  const Matrix<R> z = pair.C() - pair.D();
  for (std::size_t j = 0; j < n; ++j) {
    out.P.push_back(swap_polynomial(out.p[j], j));
    const Matrix<R> lhs = poly_eval_matrix(out.p[j], pair.C()) * z;
    const Matrix<R> rhs = pair.D_pow(j) * z;
    if (!(lhs == rhs)) {
      throw InvariantViolation("p_j(C)(C-D) != D^j(C-D) for j = " + std::to_string(j),
                               pair.describe() + "\np_j = " + out.p[j].str() + "\nlhs = " + lhs.str() + "\nrhs = " + rhs.str());
    }
    if (j >= 1) {
      const Matrix<R> swap_lhs = pair.D_pow(j) * pair.C();
      const Matrix<R> swap_rhs = out.P[j].evaluate(pair.C(), pair.D());
      if (!(swap_lhs == swap_rhs)) {
        throw InvariantViolation("D^j C != P_j(C, D) for j = " + std::to_string(j),
                                 pair.describe() + "\nP_j = " + out.P[j].str() + "\nD^j C = " + swap_lhs.str() +
                                     "\nP_j(C,D) = " + swap_rhs.str());
      }
    }
  }
  return out;
}

/// The matrix P = ([p_0] ... [p_(n-1)]).
template <ExactRing R>
Matrix<R> p_matrix(const CompanionPair<R>& pair, const PSequence<R>& seq) {
  std::vector<std::vector<typename R::value_type>> cols;
  for (const auto& pj : seq.p) cols.push_back(coords(pj, pair.n()));
  return from_columns(pair.ring(), cols, pair.n());
}

/// Checks g(C) P = -f(D) for P = ([p_0] ... [p_(n-1)]) and returns P.
template <ExactRing R>
Matrix<R> verify_gP(const CompanionPair<R>& pair, const PSequence<R>& seq) {
  Matrix<R> p = p_matrix(pair, seq);
  const Matrix<R> lhs = poly_eval_matrix(pair.g().poly(), pair.C()) * p;
  const Matrix<R> rhs = -poly_eval_matrix(pair.f().poly(), pair.D());
  if (!(lhs == rhs)) {
    throw InvariantViolation("g(C) P != -f(D)", pair.describe() + "\ng(C)P = " + lhs.str() + "\n-f(D) = " + rhs.str());
  }
  return p;
}

template <ExactRing R>
struct SolveQReport {
  Matrix<R> particular;  // P
  std::vector<std::vector<typename R::value_type>> kernel_basis;  // of g(C); Q = P + columns from its span
  bool unique = false;
  bool kernel_full = false;  // g(C) = 0: every Q solves
};

/// All Q with g(C) Q = -f(D): the particular solution P plus ker g(C) in each column.
template <ExactRing R>
SolveQReport<R> solve_Q(const CompanionPair<R>& pair) {
  const R& ring = pair.ring();
  if (!ring.is_field()) throw DomainError("solve_Q needs a field, got " + ring.descriptor().name());
  SolveQReport<R> rep{verify_gP(pair, p_sequence(pair)), {}, false, false};
  const Matrix<R> gc = poly_eval_matrix(pair.g().poly(), pair.C());
  rep.kernel_basis = solve_kernel(gc);
  rep.unique = rep.kernel_basis.empty();
  rep.kernel_full = rep.kernel_basis.size() == pair.n();
  const bool res_unit = ring.is_unit(resultant(pair.f(), pair.g()));
  if (rep.unique != res_unit) {
    throw InvariantViolation("uniqueness of Q disagrees with the resultant being a unit", pair.describe());
  }
  return rep;
}

template <ExactRing R>
struct BasisReport {
  std::size_t m = 0;     // deg gcd(f, g)
  std::size_t rank = 0;  // n + (n - m)(n - 1)
  std::vector<Monomial> basis_monomials;
  Poly<R> gcd;
  Poly<R> h;  // f / gcd(f, g)
  std::size_t oracle_dimension = 0;
};

/// Basis monomials C^i D^j: all i < n with j = 0, then i < n - m for 1 <= j < n.
inline std::vector<Monomial> basis_monomials(std::size_t n, std::size_t m) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({i, 0});
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i + m < n; ++i) out.push_back({i, j});
  return out;
}

template <ExactRing R>
void require_ufd(const R& ring, const char* op) {
  if (!std::is_same_v<R, IntegerRing> && !ring.is_field()) {
    throw DomainError(std::string(op) + " needs Z, Q or GF(p), got " + ring.descriptor().name());
  }
}

/// Rank and basis of R<C,D> over Z, Q or GF(p). Cross-checks that the listed
/// monomials are independent and that the closure oracle finds the same rank.
template <ExactRing R>
BasisReport<R> rank_and_basis(const CompanionPair<R>& pair) {
  const R& ring = pair.ring();
  require_ufd(ring, "rank_and_basis");
  const std::size_t n = pair.n();
  BasisReport<R> rep{0, 0, {}, Poly<R>(ring), Poly<R>(ring), 0};
  rep.gcd = poly_gcd(pair.f().poly(), pair.g().poly());
  rep.m = static_cast<std::size_t>(rep.gcd.degree());
  rep.rank = predicted_rank(n, rep.m);
  rep.basis_monomials = basis_monomials(n, rep.m);
  rep.h = poly_divide_exact(pair.f().poly(), rep.gcd);

  std::vector<std::vector<typename R::value_type>> vecs;
  for (const auto& mono : rep.basis_monomials) vecs.push_back(vectorize_column_major(pair.monomial(mono)));
  const std::size_t listed_rank = span_rank(ring, vecs, n * n);
  rep.oracle_dimension = span_closure_oracle(std::vector<Matrix<R>>{pair.C(), pair.D()}).dimension;
  if (listed_rank != rep.rank || rep.oracle_dimension != rep.rank) {
    throw InvariantViolation("rank of R<C,D> differs from n + (n-m)(n-1)",
                             pair.describe() + "\nm = " + std::to_string(rep.m) + "\nformula = " +
                                 std::to_string(rep.rank) + "\nlisted monomials rank = " + std::to_string(listed_rank) +
                                 "\noracle dimension = " + std::to_string(rep.oracle_dimension));
  }
  return rep;
}

template <ExactRing R>
struct HAnnihilatorReport {
  Poly<R> h;
  bool holds = false;
};

/// h = f / gcd(f, g) satisfies h(C) C = h(C) D.
template <ExactRing R>
HAnnihilatorReport<R> h_annihilator_check(const CompanionPair<R>& pair) {
  require_ufd(pair.ring(), "h_annihilator_check");
  const Poly<R> d = poly_gcd(pair.f().poly(), pair.g().poly());
  HAnnihilatorReport<R> rep{poly_divide_exact(pair.f().poly(), d), false};
  const Matrix<R> hc = poly_eval_matrix(rep.h, pair.C());
  rep.holds = hc * pair.C() == hc * pair.D();
  if (!rep.holds) throw InvariantViolation("h(C) C != h(C) D", pair.describe() + "\nh = " + rep.h.str());
  return rep;
}

template <ExactRing R>
struct CommutantReport {
  std::size_t dimension = 0;
  std::vector<Matrix<R>> basis;
};

/// Matrices commuting with both C and D, as the kernel of A -> (AC - CA, AD - DA).
template <ExactRing R>
CommutantReport<R> commutant(const CompanionPair<R>& pair) {
  const R& ring = pair.ring();
  if (!ring.is_field()) throw DomainError("commutant needs a field, got " + ring.descriptor().name());
  const std::size_t n = pair.n();
  Matrix<R> op(ring, 2 * n * n, n * n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < n; ++k) {
      Matrix<R> e(ring, n, n);
      e(k, l) = ring.one();
      const auto top = vectorize_column_major(e * pair.C() - pair.C() * e);
      const auto bottom = vectorize_column_major(e * pair.D() - pair.D() * e);
      const std::size_t col = l * n + k;
      for (std::size_t r = 0; r < n * n; ++r) {
        op(r, col) = top[r];
        op(n * n + r, col) = bottom[r];
      }
    }
  CommutantReport<R> rep;
  for (const auto& v : solve_kernel(op)) {
    Matrix<R> a(ring, n, n);
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t k = 0; k < n; ++k) a(k, l) = v[l * n + k];
    rep.basis.push_back(std::move(a));
  }
  rep.dimension = rep.basis.size();
  const std::size_t expected = pair.f() == pair.g() ? n : 1;
  if (rep.dimension != expected) {
    throw InvariantViolation("commutant dimension " + std::to_string(rep.dimension) + ", expected " +
                                 std::to_string(expected),
                             pair.describe());
  }
  return rep;
}

/// For random p, q of degree < n: p(C) = ([p] C[p] ... C^(n-1)[p]),
/// p(C)[q] = q(C)[p], and p(C)[q] = 0 exactly when f | pq.
template <ExactRing R>
bool coord_identity_checks(const CompanionPair<R>& pair, std::size_t trials, std::uint64_t seed,
                           const std::vector<std::pair<Poly<R>, Poly<R>>>& extra = {}) {
  const R& ring = pair.ring();
  const std::size_t n = pair.n();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  auto random_poly = [&]() {
    std::vector<typename R::value_type> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(ring.from_integer(coeff(rng)));
    return Poly<R>(ring, std::move(v));
  };
  std::vector<std::pair<Poly<R>, Poly<R>>> cases = extra;
  cases.emplace_back(Poly<R>::constant(ring, ring.one()), random_poly());
  for (std::size_t t = 0; t < trials; ++t) cases.emplace_back(random_poly(), random_poly());

  for (const auto& [p, q] : cases) {
    const Matrix<R> pc = poly_eval_matrix(p, pair.C());
    const auto cp = coords(p, n);
    std::vector<typename R::value_type> col = cp;
    for (std::size_t k = 0; k < n; ++k) {
      if (pc.column(k) != col) {
        throw InvariantViolation("p(C) is not ([p] C[p] ... C^(n-1)[p])", pair.describe() + "\np = " + p.str());
      }
      col = pair.C().apply(col);
    }
    const Matrix<R> qc = poly_eval_matrix(q, pair.C());
    const auto pq = pc.apply(coords(q, n));
    if (pq != qc.apply(cp)) {
      throw InvariantViolation("p(C)[q] != q(C)[p]", pair.describe() + "\np = " + p.str() + "\nq = " + q.str());
    }
    bool pq_zero = true;
    for (const auto& x : pq) pq_zero = pq_zero && ring.is_zero(x);
    const bool divides = poly_mod(p * q, pair.f().poly()).is_zero();
    if (pq_zero != divides) {
      throw InvariantViolation("p(C)[q] = 0 disagrees with f | pq", pair.describe() + "\np = " + p.str() + "\nq = " + q.str());
    }
  }
  return true;
}

}  // namespace compmat
