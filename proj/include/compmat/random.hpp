#pragma once

#include <random>

#include "compmat/poly.hpp"

namespace compmat {

/// Uniform coefficient in [-bound, bound]; both parts independently over Z[i].
template <ExactRing R>
typename R::value_type random_coefficient(const R& ring, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  if constexpr (std::is_same_v<R, GaussianRing>) {
    const int re = d(rng);
    return Gaussian{re, d(rng)};
  } else {
    return ring.from_integer(d(rng));
  }
}

template <ExactRing R>
Poly<R> random_poly(const R& ring, std::size_t degree_below, std::mt19937_64& rng, int bound) {
  std::vector<typename R::value_type> c;
  for (std::size_t i = 0; i < degree_below; ++i) c.push_back(random_coefficient(ring, rng, bound));
  return Poly<R>(ring, std::move(c));
}

template <ExactRing R>
MonicPoly<R> random_monic(const R& ring, std::size_t n, std::mt19937_64& rng, int bound) {
  std::vector<typename R::value_type> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(random_coefficient(ring, rng, bound));
  c.push_back(ring.one());
  return MonicPoly<R>(Poly<R>(ring, std::move(c)));
}

}  // namespace compmat
