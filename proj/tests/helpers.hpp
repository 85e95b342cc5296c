#pragma once

// Shared fixtures and seeded generators for the test suites. Everything is
// deterministic: generators take an explicit engine so each test controls its
// seed.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "maxtimes/matrix.hpp"
#include "maxtimes/scalar.hpp"

namespace testutil {

template <class S>
S frac(long num, long den = 1) {
  return maxtimes::scalar_traits<S>::from_mpq(mpq_class(num, den));
}

// The worked 4x4 comparison matrix used across the suites.
template <class S>
maxtimes::Matrix<S> example_matrix() {
  using testutil::frac;
  return maxtimes::Matrix<S>::from_rows(
      {{frac<S>(1), frac<S>(1, 3), frac<S>(1, 2), frac<S>(1, 3)},
       {frac<S>(3), frac<S>(1), frac<S>(4), frac<S>(1)},
       {frac<S>(2), frac<S>(1, 4), frac<S>(1), frac<S>(2)},
       {frac<S>(3), frac<S>(1), frac<S>(1, 2), frac<S>(1)}});
}

// Its closure after scaling by the inverse spectral radius (radius 2).
template <class S>
maxtimes::Matrix<S> example_closure() {
  using testutil::frac;
  return maxtimes::Matrix<S>::from_rows(
      {{frac<S>(1), frac<S>(1, 6), frac<S>(1, 3), frac<S>(1, 3)},
       {frac<S>(3), frac<S>(1), frac<S>(2), frac<S>(2)},
       {frac<S>(3, 2), frac<S>(1, 2), frac<S>(1), frac<S>(1)},
       {frac<S>(3, 2), frac<S>(1, 2), frac<S>(1), frac<S>(1)}});
}

// The canonical score generators of the same matrix.
template <class S>
maxtimes::Matrix<S> example_generators() {
  using testutil::frac;
  return maxtimes::Matrix<S>::from_rows(
      {{frac<S>(1, 3), frac<S>(1, 6)},
       {frac<S>(1), frac<S>(1)},
       {frac<S>(1, 2), frac<S>(1, 2)},
       {frac<S>(1, 2), frac<S>(1, 2)}});
}

// Uniform ratio of integers in [1, limit].
template <class S>
S random_ratio(std::mt19937& rng, long limit = 9) {
  std::uniform_int_distribution<long> d(1, limit);
  return frac<S>(d(rng), d(rng));
}

// Random symmetrically reciprocal comparison matrix with unit diagonal and
// upper-triangle entries that are ratios of integers in [1, limit].
template <class S>
maxtimes::Matrix<S> random_reciprocal(std::mt19937& rng, std::size_t n,
                                      long limit = 9) {
  maxtimes::Matrix<S> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = maxtimes::scalar_traits<S>::one();
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = random_ratio<S>(rng, limit);
      m(j, i) = maxtimes::scalar_traits<S>::inverse(m(i, j));
    }
  }
  return m;
}

// Random matrix of ratios; roughly `zero_percent` of entries are zero.
template <class S>
maxtimes::Matrix<S> random_matrix(std::mt19937& rng, std::size_t rows,
                                  std::size_t cols, int zero_percent = 0,
                                  long limit = 9) {
  std::uniform_int_distribution<int> zd(0, 99);
  maxtimes::Matrix<S> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (zd(rng) >= zero_percent) m(i, j) = random_ratio<S>(rng, limit);
  return m;
}

template <class S>
maxtimes::Vector<S> random_regular_vector(std::mt19937& rng, std::size_t dim,
                                          long limit = 9) {
  maxtimes::Vector<S> v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = random_ratio<S>(rng, limit);
  return v;
}

inline std::vector<std::size_t> random_permutation(std::mt19937& rng,
                                                   std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Conjugation by a permutation: out[i][j] = m[p[i]][p[j]].
template <class S>
maxtimes::Matrix<S> permute_conjugate(const maxtimes::Matrix<S>& m,
                                      const std::vector<std::size_t>& p) {
  maxtimes::Matrix<S> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = m(p[i], p[j]);
  return out;
}

template <class S>
maxtimes::Vector<S> permute_vector(const maxtimes::Vector<S>& v,
                                   const std::vector<std::size_t>& p) {
  maxtimes::Vector<S> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[p[i]];
  return out;
}

}  // namespace testutil
