#pragma once

// Slow, independent reference computations used only by tests.

#include <functional>
#include <set>
#include <vector>

#include "compmat/compmat.hpp"

namespace oracle {

using namespace compmat;

/// Cofactor expansion along the first row.
template <ExactRing R>
typename R::value_type laplace_det(const Matrix<R>& a) {
  const R& ring = a.ring();
  const std::size_t n = a.rows();
  if (n == 0) return ring.one();
  if (n == 1) return a(0, 0);
  typename R::value_type acc = ring.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (ring.is_zero(a(0, j))) continue;
    Matrix<R> minor(ring, n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    const typename R::value_type term = a(0, j) * laplace_det(minor);
    acc = j % 2 == 0 ? typename R::value_type(acc + term) : typename R::value_type(acc - term);
  }
  return acc;
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

/// Invariant factors over Z from determinantal divisors d_k = gcd of k x k minors.
inline std::vector<Integer> snf_by_minors(const Matrix<IntegerRing>& a) {
  const IntegerRing zz;
  std::vector<Integer> d{1};
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    combinations(a.rows(), k, rs);
    combinations(a.cols(), k, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Matrix<IntegerRing> m(zz, k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(i, j) = a(r[i], c[j]);
        g = gcd(g, laplace_det(m));
      }
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] / d[k - 1]);
  return out;
}

using Vec = std::vector<std::uint64_t>;

/// All subspaces of GF(p)^n of dimension k, each as the sorted set of its vectors.
inline std::vector<std::set<Vec>> subspaces(std::uint64_t p, std::size_t n, std::size_t k) {
  std::vector<std::set<Vec>> out;
  std::vector<std::vector<std::size_t>> pivot_sets;
  combinations(n, k, pivot_sets);
  for (const auto& piv : pivot_sets) {
    // Free entries: row r may be nonzero at columns > piv[r] that are not pivots.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
    std::vector<std::uint64_t> vals(free.size(), 0);
    while (true) {
      std::vector<Vec> rows(k, Vec(n, 0));
      for (std::size_t r = 0; r < k; ++r) rows[r][piv[r]] = 1;
      for (std::size_t i = 0; i < free.size(); ++i) rows[free[i].first][free[i].second] = vals[i];
      std::set<Vec> span;
      std::vector<std::uint64_t> coef(k, 0);
      while (true) {
        Vec v(n, 0);
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < n; ++c) v[c] = (v[c] + coef[r] * rows[r][c]) % p;
        span.insert(v);
        std::size_t i = 0;
        while (i < k && ++coef[i] == p) coef[i++] = 0;
        if (i == k) break;
      }
      out.push_back(std::move(span));
      std::size_t i = 0;
      while (i < free.size() && ++vals[i] == p) vals[i++] = 0;
      if (i == free.size()) break;
    }
  }
  return out;
}

/// Whether some subspace other than 0 and GF(p)^n is invariant under all matrices.
inline bool has_common_invariant_subspace(const std::vector<Matrix<ModRing>>& mats) {
  const std::uint64_t p = mats.front().ring().modulus();
  const std::size_t n = mats.front().rows();
  for (std::size_t k = 1; k < n; ++k) {
    for (const auto& space : subspaces(p, n, k)) {
      bool invariant = true;
      for (const auto& m : mats) {
        for (const auto& v : space) {
          Vec w(n, 0);
          for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc = (acc + m(i, j).value() * v[j]) % p;
            w[i] = acc;
          }
          if (!space.count(w)) {
            invariant = false;
            break;
          }
        }
        if (!invariant) break;
      }
      if (invariant) return true;
    }
  }
  return false;
}

/// Size of the unital subring of M_n(Z/m) generated by the matrices, by
/// enumerating the multiplicative monoid and then its additive closure.
inline std::size_t subring_size(const std::vector<Matrix<ModRing>>& gens) {
  const ModRing& ring = gens.front().ring();
  const std::size_t n = gens.front().rows();
  auto key = [](const Matrix<ModRing>& m) {
    Vec v;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j).value());
    return v;
  };
  std::set<Vec> seen;
  std::vector<Matrix<ModRing>> monoid{Matrix<ModRing>::identity(ring, n)};
  seen.insert(key(monoid.front()));
  for (std::size_t i = 0; i < monoid.size(); ++i)
    for (const auto& g : gens) {
      Matrix<ModRing> p = monoid[i] * g;
      if (seen.insert(key(p)).second) monoid.push_back(std::move(p));
    }
  std::set<Vec> group;
  std::vector<Matrix<ModRing>> queue{Matrix<ModRing>(ring, n, n)};
  group.insert(key(queue.front()));
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& w : monoid) {
      Matrix<ModRing> s = queue[i] + w;
      if (group.insert(key(s)).second) queue.push_back(std::move(s));
    }
  return group.size();
}

}  // namespace oracle
