#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "maxtimes/errors.hpp"
#include "maxtimes/matrix.hpp"
#include "maxtimes/scalar.hpp"

// Independent brute-force verifiers. Everything here recomputes results from
// first principles at exponential cost and exists to cross-check the
// polynomial algorithms in tests; nothing in the reporting pipeline calls it.
namespace maxtimes::oracle {

// Geometric grid on [1/log_range, log_range], points_per_axis values per free
// axis, spaced uniformly in log scale. One coordinate is pinned to 1, which
// loses nothing for scale-invariant objectives.
struct LatticeSpec {
  std::size_t points_per_axis = 25;
  double log_range = 10.0;
};

// Searches refuse to run when axes * points_per_axis^(axes-1) exceeds this.
inline constexpr double kDefaultCostGuard = 1e7;

enum class Extremum { kMin, kMax };

namespace detail {

inline std::vector<double> lattice_coords(const LatticeSpec& spec) {
  if (spec.points_per_axis < 2)
    throw invalid_input_error("lattice: need at least 2 points per axis");
  if (!(spec.log_range > 1.0))
    throw invalid_input_error("lattice: log_range must exceed 1");
  std::vector<double> out(spec.points_per_axis);
  const double denom = static_cast<double>(spec.points_per_axis - 1);
  for (std::size_t t = 0; t < spec.points_per_axis; ++t)
    out[t] = std::pow(spec.log_range,
                      2.0 * static_cast<double>(t) / denom - 1.0);
  return out;
}

inline void check_cost(std::size_t axes, const LatticeSpec& spec,
                       double guard) {
  const double cost =
      static_cast<double>(axes) *
      std::pow(static_cast<double>(spec.points_per_axis),
               static_cast<double>(axes - 1));
  if (cost > guard)
    throw limit_error("lattice search cost " + std::to_string(cost) +
                      " exceeds guard " + std::to_string(guard));
}

// Calls fn(x) for every lattice point x with x[0] == 1.
template <class Fn>
void for_each_lattice_point(std::size_t dim, const LatticeSpec& spec,
                            Fn&& fn) {
  const std::vector<double> coords = lattice_coords(spec);
  std::vector<double> x(dim, 1.0);
  if (dim == 1) {
    fn(x);
    return;
  }
  std::vector<std::size_t> odo(dim - 1, 0);
  for (std::size_t i = 0; i < dim - 1; ++i) x[i + 1] = coords[0];
  while (true) {
    fn(x);
    std::size_t i = dim - 1;
    while (i > 0) {
      --i;
      if (++odo[i] < coords.size()) {
        x[i + 1] = coords[odo[i]];
        break;
      }
      odo[i] = 0;
      x[i + 1] = coords[0];
      if (i == 0) return;
    }
  }
}

}  // namespace detail

// Spectral radius by enumerating every index tuple (i1, ..., ik) for k up to
// n and maximizing the k-th root of the cycle product a[i1][i2] ... a[ik][i1].
// Exponential; refuses matrices larger than 8x8.
template <semiring_scalar S>
SpectralOutcome<S> brute_force_spectral_radius(const Matrix<S>& a) {
  if (!a.is_square())
    throw dimension_error("brute_force_spectral_radius: matrix must be square");
  const std::size_t n = a.rows();
  if (n > 8)
    throw limit_error("brute_force_spectral_radius: refusing n > 8");
  S best = scalar_traits<S>::zero();
  unsigned long best_len = 1;
  std::vector<std::size_t> tup;
  // Depth-first over tuples; prod holds the open-path product so far.
  auto extend = [&](auto&& self, std::size_t k, const S& prod) -> void {
    if (tup.size() == k) {
      if (scalar_traits<S>::is_zero(a(tup.back(), tup.front()))) return;
      const S cycle =
          scalar_traits<S>::mul(prod, a(tup.back(), tup.front()));
      if (scalar_traits<S>::is_zero(cycle)) return;
      const bool improves =
          scalar_traits<S>::is_zero(best) ||
          scalar_traits<S>::compare_root(cycle, k, best, best_len) ==
              std::strong_ordering::greater;
      if (improves) {
        best = cycle;
        best_len = k;
      }
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      S next = prod;
      if (!tup.empty()) {
        if (scalar_traits<S>::is_zero(a(tup.back(), i))) continue;
        next = scalar_traits<S>::mul(prod, a(tup.back(), i));
      }
      tup.push_back(i);
      self(self, k, next);
      tup.pop_back();
    }
  };
  for (std::size_t k = 1; k <= n; ++k) extend(extend, k, scalar_traits<S>::one());

  SpectralOutcome<S> out;
  out.cycle_product = best;
  out.cycle_length = best_len;
  out.value = scalar_traits<S>::root(best, best_len);
  out.approx = std::pow(scalar_traits<S>::to_double(best),
                        1.0 / static_cast<double>(best_len));
  return out;
}

// Minimum over the lattice of the rating objective max a[i][j] x[j] / x[i].
// Never smaller than the true optimum; equal when a minimizer lies on the
// lattice.
inline double grid_search_objective_min(const Matrix<double>& a,
                                        const LatticeSpec& spec,
                                        double guard = kDefaultCostGuard) {
  if (!a.is_square())
    throw dimension_error("grid_search_objective_min: matrix must be square");
  const std::size_t n = a.rows();
  detail::check_cost(n, spec, guard);
  double best = std::numeric_limits<double>::infinity();
  detail::for_each_lattice_point(n, spec, [&](const std::vector<double>& x) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < n; ++j) row = std::max(row, a(i, j) * x[j]);
      worst = std::max(worst, row / x[i]);
    }
    best = std::min(best, worst);
  });
  return best;
}

// Extremal contrast ratio of b u over lattice-sampled coefficient vectors u.
// The minimum is an upper bound on the family's least contrast and the
// maximum a lower bound on its largest one, with equality when the
// extremizing u lies on the lattice.
inline double brute_force_contrast(const Matrix<double>& b,
                                   const LatticeSpec& spec, Extremum which,
                                   double guard = kDefaultCostGuard) {
  if (!is_row_regular(b))
    throw invalid_input_error("brute_force_contrast: generator has a zero row");
  const std::size_t n = b.rows(), g = b.cols();
  detail::check_cost(g, spec, guard);
  const bool maximize = which == Extremum::kMax;
  double best = maximize ? 0.0 : std::numeric_limits<double>::infinity();
  detail::for_each_lattice_point(g, spec, [&](const std::vector<double>& u) {
    double hi = 0.0, lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      double xi = 0.0;
      for (std::size_t j = 0; j < g; ++j) xi = std::max(xi, b(i, j) * u[j]);
      hi = std::max(hi, xi);
      lo = std::min(lo, xi);
    }
    const double contrast = hi / lo;
    best = maximize ? std::max(best, contrast) : std::min(best, contrast);
  });
  return best;
}

// True iff x lies in the column span of b, by the projection test: the
// residual coefficients u[j] = min_i x[i] / b[i][j] reproduce x exactly when
// and only when x is reachable.
template <semiring_scalar S>
bool span_membership(const Matrix<S>& b, const Vector<S>& x) {
  if (b.rows() != x.dim())
    throw dimension_error("span_membership: shape mismatch");
  if (!is_regular(x))
    throw invalid_input_error("span_membership: x must be regular");
  for (std::size_t j = 0; j < b.cols(); ++j)
    if (is_zero(column(b, j)))
      throw invalid_input_error("span_membership: zero generator column");
  const Vector<S> u = conjugate(vec_mat(conjugate(x), b));
  return vector_eq(mat_vec(b, u), x);
}

}  // namespace maxtimes::oracle
