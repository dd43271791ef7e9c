#pragma once

/*
 * Whether the companion matrices of f_1, ..., f_m generate all of M_n(R),
 * and common invariant subspaces of companion matrices over a field.
 *
 * Generation holds exactly when the f_i stay coprime modulo every maximal
 * ideal. Over Z only primes dividing every pairwise resultant can obstruct;
 * when all pairwise resultants vanish the constant c with (c) = (f_1, ..., f_m) ∩ Z
 * is read off a Hermite basis of the X^k f_i, and the primes dividing c are
 * tested instead.
 */

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "compmat/companion.hpp"
#include "compmat/normal_forms.hpp"
#include "compmat/poly.hpp"
#include "compmat/span.hpp"

namespace compmat {

struct PrimeObstruction {
  Integer prime;
  /// gcd of the reductions mod prime; empty only when the prime is too large
  /// for a machine-word residue ring (then it is implied by the resultant).
  std::optional<Poly<ModRing>> common_factor;
};

template <ExactRing R>
struct GenerationVerdict {
  bool generates = false;
  std::string method;
  std::optional<Poly<R>> gcd;                    // fields: the witness; Z: set when the inputs share a factor over Q
  std::optional<typename R::value_type> resultant;  // two inputs only
  std::vector<Integer> candidate_primes;         // Z, Z/m: primes that were tested
  std::vector<PrimeObstruction> obstructions;    // Z, Z/m
  std::optional<Integer> constant_generator;     // Z via the Hermite fallback
};

inline Poly<IntegerRing> lift_to_integers(const Poly<ModRing>& p) {
  std::vector<Integer> v;
  for (const auto& c : p.coeffs()) v.emplace_back(c.value());
  return Poly<IntegerRing>(IntegerRing{}, std::move(v));
}

namespace detail {

template <ExactRing R>
void check_inputs(const std::vector<MonicPoly<R>>& polys, std::size_t min_count = 2) {
  if (polys.size() < min_count) throw DomainError("need at least " + std::to_string(min_count) + " polynomials");
  for (const auto& p : polys) {
    if (!(p.ring() == polys.front().ring())) throw DomainError("polynomials live in different rings");
    if (p.degree() != polys.front().degree()) {
      throw DomainError("polynomials must share a degree (" + std::to_string(polys.front().degree()) + " vs " +
                        std::to_string(p.degree()) + ")");
    }
  }
  if (polys.front().degree() < 2) throw DomainError("degree must be at least 2");
}

template <ExactRing R>
Poly<R> gcd_all(const std::vector<MonicPoly<R>>& polys) {
  Poly<R> d = polys.front().poly();
  for (std::size_t i = 1; i < polys.size(); ++i) d = poly_gcd(d, polys[i].poly());
  return d;
}

inline bool fits_machine_modulus(const Integer& p) { return p < Integer(std::numeric_limits<std::int64_t>::max()); }

/// gcd of the integer polynomials reduced mod p.
inline Poly<ModRing> gcd_mod_prime(const std::vector<Poly<IntegerRing>>& polys, const Integer& p) {
  const ModRing field(static_cast<std::uint64_t>(p));
  Poly<ModRing> d = reduce_poly(polys.front(), field);
  for (std::size_t i = 1; i < polys.size(); ++i) d = poly_gcd(d, reduce_poly(polys[i], field));
  return d;
}

/// Nonnegative c with (c) = (f_1, ..., f_m) ∩ Z, or 0 when the ideal has no
/// nonzero constant. The bound on the multipliers X^k starts at 2n and doubles
/// until two consecutive rounds give the same constant.
inline Integer constant_generator(const std::vector<Poly<IntegerRing>>& polys, std::size_t n) {
  const IntegerRing zz;
  std::optional<Integer> previous;
  for (std::size_t k = 2 * n; k <= 64 * n; k *= 2) {
    const std::size_t width = n + k;
    std::vector<std::vector<Integer>> rows;
    for (const auto& f : polys)
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<Integer> row(width, Integer(0));
        for (std::size_t t = 0; t < f.coeffs().size(); ++t) row[width - 1 - (t + j)] = f.coeffs()[t];
        rows.push_back(std::move(row));
      }
    const auto h = hermite_row_basis(zz, rows, width);
    std::optional<Integer> c;
    if (h.rank > 0 && h.pivots.back() == width - 1) c = h.basis(h.rank - 1, width - 1);
    if (c && *c == 1) return 1;
    if (c && previous && *c == *previous) return *c;
    previous = c;
  }
  return previous.value_or(0);
}

}  // namespace detail

/// Generation of M_n(R) by the companion matrices of the inputs.
template <ExactRing R>
GenerationVerdict<R> generates_full(const std::vector<MonicPoly<R>>& polys) {
  detail::check_inputs(polys);
  const R& ring = polys.front().ring();
  const std::size_t n = polys.front().degree();
  GenerationVerdict<R> v;
  if (polys.size() == 2) v.resultant = resultant(polys[0], polys[1]);

  if constexpr (std::is_same_v<R, GaussianRing>) {
    if (polys.size() != 2) throw DomainError("generation over Z[i] is supported for two polynomials only");
    v.method = "resultant-unit";
    v.generates = ring.is_unit(*v.resultant);
    return v;
  } else if constexpr (std::is_same_v<R, IntegerRing>) {
    std::vector<Poly<IntegerRing>> ints;
    for (const auto& p : polys) ints.push_back(p.poly());
    const Poly<IntegerRing> d = detail::gcd_all(polys);
    if (d.degree() > 0) {
      // Common factor over Q: it survives modulo every prime.
      v.method = "common-factor";
      v.gcd = d;
      v.generates = false;
      return v;
    }
    std::optional<Integer> witness;
    if (v.resultant) {
      v.method = "resultant-unit";
      if (!ring.is_zero(*v.resultant)) witness = abs_value(*v.resultant);
    } else {
      v.method = "candidate-primes";
      for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
          const Integer r = abs_value(resultant(polys[i], polys[j]));
          if (r != 0 && (!witness || r < *witness)) witness = r;
        }
      if (!witness) {
        v.method = "hermite-constant";
        v.constant_generator = detail::constant_generator(ints, n);
        if (*v.constant_generator == 0) {
          throw InvariantViolation("coprime inputs over Q but no constant in the ideal they generate over Z",
                                   "first input = " + polys.front().str());
        }
        witness = *v.constant_generator;
      }
    }
    if (*witness != 1) v.candidate_primes = prime_factors(*witness);
    for (const auto& p : v.candidate_primes) {
      if (!detail::fits_machine_modulus(p)) {
        if (polys.size() == 2) {
          v.obstructions.push_back({p, std::nullopt});
          continue;
        }
        throw DomainError("prime " + p.str() + " exceeds the supported residue modulus");
      }
      Poly<ModRing> g = detail::gcd_mod_prime(ints, p);
      if (g.degree() > 0) v.obstructions.push_back({p, std::move(g)});
    }
    v.generates = v.obstructions.empty();
    if (v.resultant && v.generates != ring.is_unit(*v.resultant)) {
      throw InvariantViolation("prime-by-prime verdict disagrees with the resultant being a unit",
                               "f = " + polys[0].str() + "\ng = " + polys[1].str() + "\nRes = " + v.resultant->str());
    }
    return v;
  } else {
    if (ring.is_field()) {
      v.method = "field-gcd";
      v.gcd = detail::gcd_all(polys);
      v.generates = v.gcd->degree() == 0;
    } else if constexpr (std::is_same_v<R, ModRing>) {
      v.method = "maximal-ideals";
      std::vector<Poly<IntegerRing>> ints;
      for (const auto& p : polys) ints.push_back(lift_to_integers(p.poly()));
      v.candidate_primes = prime_factors(Integer(ring.modulus()));
      for (const auto& p : v.candidate_primes) {
        Poly<ModRing> g = detail::gcd_mod_prime(ints, p);
        if (g.degree() > 0) v.obstructions.push_back({p, std::move(g)});
      }
      v.generates = v.obstructions.empty();
    }
    if (v.resultant && v.generates != ring.is_unit(*v.resultant)) {
      throw InvariantViolation("gcd verdict disagrees with the resultant being a unit",
                               "f = " + polys[0].str() + "\ng = " + polys[1].str() + "\nRes = " + ring.format(*v.resultant));
    }
    return v;
  }
}

namespace detail {

/// Monic polynomials of degree k over GF(p), in lexicographic order of the
/// lower coefficients; stops early when visit returns true.
template <class Visit>
bool enumerate_monic(const ModRing& field, std::size_t k, Visit&& visit) {
  const std::uint64_t p = field.modulus();
  std::vector<std::uint64_t> digits(k, 0);
  while (true) {
    std::vector<ModInt> c;
    for (auto d : digits) c.push_back(field.from_integer(Integer(d)));
    c.push_back(field.one());
    if (visit(Poly<ModRing>(field, std::move(c)))) return true;
    std::size_t i = 0;
    while (i < k && ++digits[i] == p) digits[i++] = 0;
    if (i == k) return false;
  }
}

inline std::vector<Integer> divisors(const Integer& v) {
  std::vector<Integer> out{1};
  const Integer a = abs_value(v);
  for (const auto& p : prime_factors(a)) {
    Integer rest = a;
    std::size_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    const std::size_t base = out.size();
    Integer pk = 1;
    for (std::size_t k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

/// Lagrange interpolation through (xs[i], ys[i]).
inline Poly<RationalField> interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  const RationalField qq;
  Poly<RationalField> acc(qq);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly<RationalField> basis = Poly<RationalField>::constant(qq, Rational(ys[i]));
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly<RationalField>(qq, {Rational(-xs[j]), Rational(1)});
      basis = Rational(Rational(1) / Rational(xs[i] - xs[j])) * basis;
    }
    acc = acc + basis;
  }
  return acc;
}

constexpr std::size_t kFactorSearchLimit = 4'000'000;

/// Kronecker's method: a monic factor of f over Q of degree in [1, deg f / 2].
inline std::optional<Poly<RationalField>> rational_proper_factor(const Poly<RationalField>& f) {
  const Poly<IntegerRing> F = primitive_integer_associate(f);
  const std::size_t n = static_cast<std::size_t>(F.degree());
  std::vector<Integer> xs, ys;
  for (long long t = 0; xs.size() < n / 2 + 1; t = t > 0 ? -t : -t + 1) {
    const Integer x(t);
    const Integer y = F(x);
    if (y == 0) return Poly<RationalField>(RationalField{}, {Rational(-x), Rational(1)});
    xs.push_back(x);
    ys.push_back(y);
  }
  std::vector<std::vector<Integer>> divs;
  for (const auto& y : ys) divs.push_back(divisors(y));
  for (std::size_t k = 1; k <= n / 2; ++k) {
    std::size_t combos = 1;
    for (std::size_t i = 0; i <= k; ++i) {
      combos *= (i == 0 ? 1 : 2) * divs[i].size();
      if (combos > kFactorSearchLimit) throw DomainError("factor search over Q exceeds the supported size");
    }
    // State i < |divs_i| picks +divs_i[state]; the upper half picks the negative.
    // The value at the first point is kept positive since h and -h give the same monic factor.
    std::vector<std::size_t> state(k + 1, 0);
    const std::vector<Integer> pts(xs.begin(), xs.begin() + static_cast<long>(k) + 1);
    while (true) {
      std::vector<Integer> vals;
      for (std::size_t i = 0; i <= k; ++i) {
        const std::size_t sz = divs[i].size();
        vals.push_back(state[i] < sz ? divs[i][state[i]] : Integer(-divs[i][state[i] - sz]));
      }
      const Poly<RationalField> cand = interpolate(pts, vals);
      if (cand.degree() == static_cast<int>(k)) {
        const Poly<RationalField> monic = make_monic(cand);
        if (poly_mod(f, monic).is_zero()) return monic;
      }
      std::size_t i = 0;
      while (i <= k) {
        const std::size_t limit = (i == 0 ? 1 : 2) * divs[i].size();
        if (++state[i] < limit) break;
        state[i++] = 0;
      }
      if (i > k) break;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// A monic factor of f with degree strictly between 0 and deg f, if any.
template <ExactRing R>
std::optional<Poly<R>> proper_factor(const Poly<R>& f) {
  const R& ring = f.ring();
  if (!ring.is_field()) throw DomainError("factor search needs a field, got " + ring.descriptor().name());
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n < 2) return std::nullopt;
  if constexpr (std::is_same_v<R, RationalField>) {
    return detail::rational_proper_factor(f);
  } else if constexpr (std::is_same_v<R, ModRing>) {
    std::optional<Poly<R>> found;
    Integer total = 0;
    for (std::size_t k = 1; k <= n / 2 && !found; ++k) {
      total += ipow(Integer(ring.modulus()), k);
      if (total > detail::kFactorSearchLimit) throw DomainError("factor search over " + ring.descriptor().name() + " exceeds the supported size");
      detail::enumerate_monic(ring, k, [&](const Poly<R>& h) {
        if (!poly_mod(f, h).is_zero()) return false;
        found = h;
        return true;
      });
    }
    return found;
  } else {
    throw DomainError("factor search needs Q or GF(p)");
  }
}

template <ExactRing R>
struct InvariantSubspaceReport {
  Poly<R> d;                      // gcd of the inputs
  bool exists_nontrivial = false;  // some common monic factor has degree strictly between 0 and n
  std::optional<Poly<R>> factor;  // the factor h used for the subspace
  std::vector<std::vector<typename R::value_type>> subspace_basis;  // [h], [Xh], ..., [X^(n-deg h-1) h]
  bool verified = false;
};

/// Common invariant subspaces of the companion matrices over a field. With no
/// factor supplied, d = gcd is used when 0 < deg d < n; when deg d = n (all
/// inputs equal) a proper factor of d is searched for.
template <ExactRing R>
InvariantSubspaceReport<R> common_invariant_subspaces(const std::vector<MonicPoly<R>>& polys,
                                                      const std::optional<Poly<R>>& factor = std::nullopt) {
  detail::check_inputs(polys, 1);
  const R& ring = polys.front().ring();
  if (!ring.is_field()) throw DomainError("invariant subspaces need a field, got " + ring.descriptor().name());
  const std::size_t n = polys.front().degree();
  InvariantSubspaceReport<R> rep{detail::gcd_all(polys), false, std::nullopt, {}, false};
  const std::size_t dd = static_cast<std::size_t>(rep.d.degree());

  if (factor) {
    if (!factor->is_monic() || factor->degree() < 1 || factor->degree() >= static_cast<int>(n)) {
      throw DomainError("factor must be monic with degree strictly between 0 and " + std::to_string(n));
    }
    if (!poly_mod(rep.d, *factor).is_zero()) throw DomainError("factor " + factor->str() + " does not divide gcd " + rep.d.str());
    rep.factor = *factor;
  } else if (dd > 0 && dd < n) {
    rep.factor = rep.d;
  } else if (dd == n) {
    rep.factor = proper_factor(rep.d);
  }
  rep.exists_nontrivial = rep.factor.has_value() || (dd > 0 && dd < n);
  if (!rep.factor) {
    rep.verified = true;
    return rep;
  }

  const std::size_t m = n - static_cast<std::size_t>(rep.factor->degree());
  Poly<R> shifted = *rep.factor;
  for (std::size_t k = 0; k < m; ++k) {
    rep.subspace_basis.push_back(coords(shifted, n));
    shifted = Poly<R>::x(ring) * shifted;
  }
  SpanTracker<R> span(ring, n);
  for (const auto& b : rep.subspace_basis) span.insert(b);
  if (span.rank() != m) {
    throw InvariantViolation("subspace basis is not independent", "factor = " + rep.factor->str());
  }
  for (const auto& p : polys) {
    const Matrix<R> c = companion(p);
    for (const auto& b : rep.subspace_basis) {
      if (!span.contains(c.apply(b))) {
        throw InvariantViolation("subspace V(h) is not invariant under the companion matrix of " + p.str(),
                                 "factor = " + rep.factor->str());
      }
    }
  }
  rep.verified = true;
  return rep;
}

}  // namespace compmat
