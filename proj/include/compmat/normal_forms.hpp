#pragma once

/*
 * Smith and Hermite normal forms over a Euclidean ring (Z, Z[i]).
 *
 * Smith pivot rule: the nonzero entry of smallest Euclidean size in the
 * remaining block, ties broken by lowest (row, col). The rule is applied
 * afresh after every reduction sweep, which makes the decomposition a pure
 * function of the input.
 */

#include <optional>
#include <string>
#include <vector>

#include "compmat/matrix.hpp"

namespace compmat {

template <EuclideanRing R>
struct SmithDecomposition {
  Matrix<R> U;  // rows x rows, unimodular
  Matrix<R> S;  // U * A * V
  Matrix<R> V;  // cols x cols, unimodular
  std::vector<typename R::value_type> invariant_factors;  // nonzero diagonal of S, a_1 | a_2 | ...

  std::size_t rank() const { return invariant_factors.size(); }
};

namespace detail {

template <EuclideanRing R>
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const Matrix<R>& m, std::size_t t) {
  const R& ring = m.ring();
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_size;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (ring.is_zero(m(i, j))) continue;
      Integer sz = ring.size(m(i, j));
      if (!best || sz < best_size) {
        best = {i, j};
        best_size = std::move(sz);
      }
    }
  return best;
}

template <EuclideanRing R>
bool divides(const R& ring, const typename R::value_type& d, const typename R::value_type& a) {
  if (ring.is_zero(d)) return ring.is_zero(a);
  return ring.is_zero(ring.divmod(a, d).second);
}

}  // namespace detail

template <EuclideanRing R>
SmithDecomposition<R> smith_normal_form(const Matrix<R>& a) {
  const R& ring = a.ring();
  Matrix<R> s = a;
  Matrix<R> u = Matrix<R>::identity(ring, a.rows());
  Matrix<R> v = Matrix<R>::identity(ring, a.cols());
  const std::size_t limit = std::min(a.rows(), a.cols());
  std::vector<typename R::value_type> factors;

  for (std::size_t t = 0; t < limit; ++t) {
    bool found = false;
    while (true) {
      const auto pos = detail::smallest_entry(s, t);
      if (!pos) break;
      found = true;
      const auto [pi, pj] = *pos;
      if (pi != t) {
        s.swap_rows(pi, t);
        u.swap_rows(pi, t);
      }
      if (pj != t) {
        s.swap_cols(pj, t);
        v.swap_cols(pj, t);
      }
      bool clear = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (ring.is_zero(s(i, t))) continue;
        const typename R::value_type q = ring.divmod(s(i, t), s(t, t)).first;
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (!ring.is_zero(s(i, t))) clear = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (ring.is_zero(s(t, j))) continue;
        const typename R::value_type q = ring.divmod(s(t, j), s(t, t)).first;
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (!ring.is_zero(s(t, j))) clear = false;
      }
      if (!clear) continue;
      // Pivot must divide the whole remaining block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < s.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j) {
          if (!detail::divides(ring, s(t, t), s(i, j))) {
            s.add_row_multiple(t, i, ring.one());
            u.add_row_multiple(t, i, ring.one());
            fixed = true;
            break;
          }
        }
      if (!fixed) break;
    }
    if (!found) break;
    const typename R::value_type unit = ring.unit_normal(s(t, t));
    s.scale_row(t, unit);
    u.scale_row(t, unit);
    factors.push_back(s(t, t));
  }
  return {std::move(u), std::move(s), std::move(v), std::move(factors)};
}

/// Row Hermite normal form: a triangular basis of the row lattice with
/// canonical pivots and entries above each pivot reduced modulo it.
template <EuclideanRing R>
struct HermiteBasis {
  Matrix<R> basis;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each basis row
};

template <EuclideanRing R>
HermiteBasis<R> hermite_row_basis(const R& ring, const std::vector<std::vector<typename R::value_type>>& rows,
                                  std::size_t width) {
  for (const auto& r : rows)
    if (r.size() != width) throw DomainError("hermite_row_basis: ragged input");
  Matrix<R> m(ring, rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];

  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < width && r < m.rows(); ++c) {
    bool has_pivot = false;
    while (true) {
      std::optional<std::size_t> best;
      Integer best_size;
      for (std::size_t i = r; i < m.rows(); ++i) {
        if (ring.is_zero(m(i, c))) continue;
        Integer sz = ring.size(m(i, c));
        if (!best || sz < best_size) {
          best = i;
          best_size = std::move(sz);
        }
      }
      if (!best) break;
      has_pivot = true;
      if (*best != r) m.swap_rows(*best, r);
      bool clear = true;
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (ring.is_zero(m(i, c))) continue;
        const typename R::value_type q = ring.divmod(m(i, c), m(r, c)).first;
        m.add_row_multiple(i, r, -q);
        if (!ring.is_zero(m(i, c))) clear = false;
      }
      if (clear) break;
    }
    if (!has_pivot) continue;
    m.scale_row(r, ring.unit_normal(m(r, c)));
    for (std::size_t i = 0; i < r; ++i) {
      if (ring.is_zero(m(i, c))) continue;
      const typename R::value_type q = ring.divmod(m(i, c), m(r, c)).first;
      m.add_row_multiple(i, r, -q);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix<R> basis(ring, r, width);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < width; ++j) basis(i, j) = m(i, j);
  return {std::move(basis), r, std::move(pivots)};
}

/// Whether v lies in the row lattice of a Hermite basis.
template <EuclideanRing R>
bool hermite_contains(const HermiteBasis<R>& h, std::vector<typename R::value_type> v) {
  const R& ring = h.basis.ring();
  if (v.size() != h.basis.cols()) throw DomainError("hermite_contains: length mismatch");
  std::size_t next = 0;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (next < h.rank && h.pivots[next] == c) {
      if (!ring.is_zero(v[c])) {
        auto [q, rem] = ring.divmod(v[c], h.basis(next, c));
        if (!ring.is_zero(rem)) return false;
        for (std::size_t j = c; j < v.size(); ++j) v[j] = v[j] - q * h.basis(next, j);
      }
      ++next;
    } else if (!ring.is_zero(v[c])) {
      return false;
    }
  }
  return true;
}

}  // namespace compmat
