#pragma once

/*
 * Incremental spans of coordinate vectors and the brute-force closure oracle
 * for the unital subalgebra generated by a set of matrices.
 *
 * Over a field the span is kept in echelon form (each stored row is reduced
 * against all earlier ones). Over Z and Z[i] it is the Hermite basis of the
 * row lattice, recomputed whenever a new vector falls outside it.
 */

#include <deque>
#include <optional>
#include <variant>
#include <vector>

#include "compmat/matrix.hpp"
#include "compmat/normal_forms.hpp"

namespace compmat {

namespace detail {
template <class R>
struct LatticeSlot {
  using type = std::monostate;
};
template <EuclideanRing R>
struct LatticeSlot<R> {
  using type = std::optional<HermiteBasis<R>>;
};
}  // namespace detail

template <ExactRing R>
class SpanTracker {
 public:
  using value_type = typename R::value_type;
  using Vector = std::vector<value_type>;

  SpanTracker(R ring, std::size_t width) : ring_(std::move(ring)), width_(width) {
    if constexpr (!EuclideanRing<R>) {
      if (!ring_.is_field()) {
        throw DomainError("span computations need a field, Z or Z[i]; got " + ring_.descriptor().name());
      }
    }
  }

  std::size_t width() const { return width_; }

  std::size_t rank() const {
    if constexpr (EuclideanRing<R>) {
      return lattice_ ? lattice_->rank : 0;
    } else {
      return rows_.size();
    }
  }

  bool contains(const Vector& v) const {
    check(v);
    if constexpr (EuclideanRing<R>) {
      if (!lattice_) return is_zero_vector(v);
      return hermite_contains(*lattice_, v);
    } else {
      return is_zero_vector(reduce(v));
    }
  }

  /// Adds v; returns true when the span grew.
  bool insert(const Vector& v) {
    check(v);
    if constexpr (EuclideanRing<R>) {
      if (contains(v)) return false;
      std::vector<Vector> rows;
      if (lattice_) {
        for (std::size_t i = 0; i < lattice_->rank; ++i) {
          auto r = lattice_->basis.row(i);
          rows.emplace_back(r.begin(), r.end());
        }
      }
      rows.push_back(v);
      lattice_ = hermite_row_basis(ring_, rows, width_);
      return true;
    } else {
      Vector r = reduce(v);
      std::size_t p = 0;
      while (p < width_ && ring_.is_zero(r[p])) ++p;
      if (p == width_) return false;
      const value_type inv = ring_.inverse(r[p]);
      for (auto& x : r) x = inv * x;
      rows_.push_back(std::move(r));
      pivots_.push_back(p);
      return true;
    }
  }

  /// Current basis rows (Hermite basis over Z and Z[i]).
  std::vector<Vector> basis() const {
    if constexpr (EuclideanRing<R>) {
      std::vector<Vector> out;
      if (lattice_) {
        for (std::size_t i = 0; i < lattice_->rank; ++i) {
          auto r = lattice_->basis.row(i);
          out.emplace_back(r.begin(), r.end());
        }
      }
      return out;
    } else {
      return rows_;
    }
  }

  /// Index of a full-rank lattice in the standard one: product of pivot sizes.
  /// Empty over fields and for rank-deficient lattices.
  std::optional<Integer> lattice_index() const {
    if constexpr (EuclideanRing<R>) {
      if (!lattice_ || lattice_->rank != width_) return std::nullopt;
      Integer idx = 1;
      for (std::size_t i = 0; i < lattice_->rank; ++i) idx *= ring_.size(lattice_->basis(i, lattice_->pivots[i]));
      return idx;
    } else {
      return std::nullopt;
    }
  }

 private:
  void check(const Vector& v) const {
    if (v.size() != width_) throw DomainError("span: vector length mismatch");
  }
  bool is_zero_vector(const Vector& v) const {
    for (const auto& x : v)
      if (!ring_.is_zero(x)) return false;
    return true;
  }
  Vector reduce(Vector v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const value_type c = v[pivots_[k]];
      if (ring_.is_zero(c)) continue;
      for (std::size_t j = 0; j < width_; ++j) v[j] = v[j] - c * rows_[k][j];
    }
    return v;
  }

  R ring_;
  std::size_t width_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  typename detail::LatticeSlot<R>::type lattice_;
};

/// Rank of a set of vectors (over Z and Z[i]: rank of the lattice they span).
template <ExactRing R>
std::size_t span_rank(const R& ring, const std::vector<std::vector<typename R::value_type>>& vectors,
                      std::size_t width) {
  SpanTracker<R> span(ring, width);
  for (const auto& v : vectors) span.insert(v);
  return span.rank();
}

template <ExactRing R>
struct SpanClosure {
  std::size_t dimension = 0;  // rank of the unital subalgebra (lattice rank over Z, Z[i])
  std::vector<std::vector<typename R::value_type>> basis;  // column-major coordinates
  std::optional<Integer> lattice_index;  // Z, Z[i]: index in M_n when full rank
  std::size_t products_rank = 0;         // rank of span{A^i B^j : 0 <= i, j < n}; two generators only
  bool closed = false;                   // that span is already closed under multiplication
};

/// Brute-force closure: start from I and multiply the current basis by every
/// generator on both sides until nothing new appears. For exactly two
/// generators A, B it also reports whether span{A^i B^j} is multiplicatively
/// closed.
template <ExactRing R>
SpanClosure<R> span_closure_oracle(const std::vector<Matrix<R>>& generators) {
  if (generators.empty()) throw DomainError("span_closure_oracle: no generators");
  const R& ring = generators.front().ring();
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators) {
    if (!(g.ring() == ring)) throw DomainError("span_closure_oracle: ring mismatch");
    if (!g.is_square() || g.rows() != n) throw DomainError("span_closure_oracle: size mismatch");
  }
  SpanTracker<R> span(ring, n * n);
  std::deque<Matrix<R>> queue;
  const Matrix<R> id = Matrix<R>::identity(ring, n);
  span.insert(vectorize_column_major(id));
  queue.push_back(id);
  while (!queue.empty()) {
    const Matrix<R> a = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      for (Matrix<R> p : {a * g, g * a}) {
        if (span.insert(vectorize_column_major(p))) queue.push_back(std::move(p));
      }
    }
  }
  SpanClosure<R> out;
  out.dimension = span.rank();
  out.basis = span.basis();
  out.lattice_index = span.lattice_index();

  if (generators.size() == 2) {
    const auto pa = matrix_powers(generators[0], n);
    const auto pb = matrix_powers(generators[1], n);
    SpanTracker<R> products(ring, n * n);
    std::vector<Matrix<R>> members;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        members.push_back(pa[i] * pb[j]);
        products.insert(vectorize_column_major(members.back()));
      }
    out.products_rank = products.rank();
    out.closed = true;
    for (const auto& m : members) {
      for (const auto& g : generators) {
        if (!products.contains(vectorize_column_major(m * g)) || !products.contains(vectorize_column_major(g * m))) {
          out.closed = false;
          break;
        }
      }
      if (!out.closed) break;
    }
  }
  return out;
}

}  // namespace compmat
