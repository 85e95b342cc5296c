#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "maxtimes/errors.hpp"
#include "maxtimes/matrix.hpp"
#include "maxtimes/scalar.hpp"

namespace maxtimes {

// A solution family: the column span of `generator` over nonzero coefficient
// vectors, together with a human-readable note on where it came from.
template <semiring_scalar S>
struct SpanGenerators {
  Matrix<S> generator;
  std::string provenance;
};

// Result of an optimization: the optimal value and the complete set of
// solution families. `maximizers` lists the tied (column, row) pivots for the
// maximization problem, in ascending order; it is empty for minimizations.
// `truncated` reports that a selection enumeration hit its cap, in which case
// `families` may be incomplete (the optimum itself is unaffected).
template <semiring_scalar S>
struct SolveOutcome {
  S optimum;
  std::vector<SpanGenerators<S>> families;
  bool truncated = false;
  std::vector<std::pair<std::size_t, std::size_t>> maximizers;
};

// A matrix derived from `base` by keeping one entry per row (or one entry
// overall) and zeroing the rest. `kept` holds the surviving (row, column)
// positions in row order.
template <semiring_scalar S>
struct SelectionMatrix {
  Matrix<S> base;
  std::vector<std::pair<std::size_t, std::size_t>> kept;

  Matrix<S> materialize() const {
    Matrix<S> out(base.rows(), base.cols());
    for (const auto& [i, j] : kept) out(i, j) = base(i, j);
    return out;
  }
};

template <semiring_scalar S>
struct SelectionEnumeration {
  std::vector<SelectionMatrix<S>> selections;
  bool truncated = false;
};

namespace detail {

// Canonical form of a generator's column span: collinear duplicates removed,
// each survivor scaled to unit max, sorted entrywise. Two generators span the
// same set of rays exactly when their forms compare equal.
template <semiring_scalar S>
std::vector<Vector<S>> span_form(const Matrix<S>& g) {
  std::vector<Vector<S>> cols;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    Vector<S> c = column(g, j);
    if (is_zero(c)) continue;
    c = scale_to_unit_max(c);
    bool dup = false;
    for (const auto& seen : cols)
      if (vector_eq(seen, c)) {
        dup = true;
        break;
      }
    if (!dup) cols.push_back(std::move(c));
  }
  std::sort(cols.begin(), cols.end(),
            [](const Vector<S>& a, const Vector<S>& b) { return lex_less(a, b); });
  return cols;
}

template <semiring_scalar S>
bool same_span_form(const std::vector<Vector<S>>& a,
                    const std::vector<Vector<S>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!vector_eq(a[i], b[i])) return false;
  return true;
}

}  // namespace detail

// Minimum of x^- A x over regular x for a square matrix A. The minimum is the
// spectral radius lambda, attained exactly by the columns of the closure of
// the matrix scaled by 1/lambda; the full solution set is that closure's
// column span.
template <semiring_scalar S>
SolveOutcome<S> solve_min_quadratic(const Matrix<S>& a) {
  if (!a.is_square())
    throw dimension_error("solve_min_quadratic: matrix must be square");
  const SpectralOutcome<S> sr = spectral_radius(a);
  if (sr.is_zero())
    throw zero_spectral_radius_error(
        "solve_min_quadratic: spectral radius is zero");
  const auto lambda =
      scalar_traits<S>::extend_root(sr.cycle_product, sr.cycle_length);
  if (!lambda)
    throw invalid_input_error(
        std::string("solve_min_quadratic: the optimum has no exact "
                    "representation in the ") +
        scalar_traits<S>::name() + " realization");
  Matrix<S> closure =
      kleene_star(scale(scalar_traits<S>::inverse(*lambda), a));
  SolveOutcome<S> out;
  out.optimum = *lambda;
  out.families.push_back(
      {std::move(closure), "closure of the radius-normalized matrix"});
  return out;
}

// Zeroes every entry of `a` that cannot participate in an optimal solution of
// the min-ratio problem: entry (i, j) survives iff a[i][j] >= p[i] / (delta *
// q[j]). `delta` must equal the optimum (a q)^- p; it is revalidated here.
template <semiring_scalar S>
Matrix<S> sparsify(const Matrix<S>& a, const Vector<S>& p, const Vector<S>& q,
                   const S& delta) {
  if (p.dim() != a.rows() || q.dim() != a.cols())
    throw dimension_error("sparsify: shape mismatch");
  if (!is_row_regular(a))
    throw invalid_input_error("sparsify: matrix has a zero row");
  if (is_zero(p)) throw invalid_input_error("sparsify: p is zero");
  if (!is_regular(q)) throw invalid_input_error("sparsify: q has a zero entry");
  const S computed = max_dot(conjugate(mat_vec(a, q)), p);
  if (!scalar_traits<S>::eq(computed, delta))
    throw invalid_input_error("sparsify: delta is not the optimal ratio");
  const S inv_delta = scalar_traits<S>::inverse(delta);
  Matrix<S> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const S ti = scalar_traits<S>::mul(inv_delta, p[i]);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const S threshold =
          scalar_traits<S>::mul(ti, scalar_traits<S>::inverse(q[j]));
      if (scalar_traits<S>::geq(a(i, j), threshold)) out(i, j) = a(i, j);
    }
  }
  return out;
}

// All ways of keeping exactly one nonzero entry per row, in row-major
// lexicographic order of the chosen column indices. Stops at `cap` selections
// and flags truncation when more exist.
template <semiring_scalar S>
SelectionEnumeration<S> enumerate_row_selections(const Matrix<S>& a,
                                                 std::size_t cap) {
  if (cap == 0)
    throw invalid_input_error("enumerate_row_selections: cap must be >= 1");
  const std::size_t m = a.rows();
  std::vector<std::vector<std::size_t>> choices(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!scalar_traits<S>::is_zero(a(i, j))) choices[i].push_back(j);
    if (choices[i].empty())
      throw invalid_input_error("enumerate_row_selections: zero row");
  }
  SelectionEnumeration<S> out;
  std::vector<std::size_t> odo(m, 0);
  while (true) {
    if (out.selections.size() == cap) {
      out.truncated = true;
      return out;
    }
    SelectionMatrix<S> sel{a, {}};
    sel.kept.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
      sel.kept.emplace_back(i, choices[i][odo[i]]);
    out.selections.push_back(std::move(sel));
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++odo[i] < choices[i].size()) break;
      odo[i] = 0;
      if (i == 0) return out;
    }
  }
}

// Generator of the solution family contributed by one row selection A1 of the
// sparsified matrix: I + (A1^- p) q^- / delta.
template <semiring_scalar S>
Matrix<S> min_ratio_generator(const SelectionMatrix<S>& sel, const Vector<S>& p,
                              const Vector<S>& q, const S& delta) {
  const Matrix<S> a1 = sel.materialize();
  const Vector<S> w = mat_vec(conjugate_transpose(a1), p);
  const Matrix<S> rank_one =
      scale(scalar_traits<S>::inverse(delta), outer(w, conjugate(q)));
  return add(Matrix<S>::identity(q.dim()), rank_one);
}

// Minimizes q^- x (A x)^- p over regular x. The optimum is delta = (A q)^- p;
// the solution set is the union of the spans of one generator per surviving
// row selection of the sparsified matrix, deduplicated by span equality.
template <semiring_scalar S>
SolveOutcome<S> solve_min_ratio(const Matrix<S>& a, const Vector<S>& p,
                                const Vector<S>& q, std::size_t cap) {
  if (p.dim() != a.rows() || q.dim() != a.cols())
    throw dimension_error("solve_min_ratio: shape mismatch");
  if (!is_row_regular(a))
    throw invalid_input_error("solve_min_ratio: matrix has a zero row");
  if (is_zero(p)) throw invalid_input_error("solve_min_ratio: p is zero");
  if (!is_regular(q))
    throw invalid_input_error("solve_min_ratio: q has a zero entry");
  const S delta = max_dot(conjugate(mat_vec(a, q)), p);
  const Matrix<S> trimmed = sparsify(a, p, q, delta);
  SelectionEnumeration<S> en = enumerate_row_selections(trimmed, cap);

  SolveOutcome<S> out;
  out.optimum = delta;
  out.truncated = en.truncated;
  std::vector<std::vector<Vector<S>>> forms;
  std::vector<std::size_t> merged;
  for (const SelectionMatrix<S>& sel : en.selections) {
    Matrix<S> g = min_ratio_generator(sel, p, q, delta);
    auto form = detail::span_form(g);
    bool dup = false;
    for (std::size_t f = 0; f < forms.size(); ++f)
      if (detail::same_span_form(forms[f], form)) {
        ++merged[f];
        dup = true;
        break;
      }
    if (dup) continue;
    std::string prov = "row selection keeping columns (";
    for (std::size_t i = 0; i < sel.kept.size(); ++i) {
      if (i) prov += ", ";
      prov += std::to_string(sel.kept[i].second + 1);
    }
    prov += ")";
    forms.push_back(std::move(form));
    merged.push_back(0);
    out.families.push_back({std::move(g), std::move(prov)});
  }
  for (std::size_t f = 0; f < out.families.size(); ++f)
    if (merged[f] > 0)
      out.families[f].provenance +=
          " and " + std::to_string(merged[f]) + " equivalent selection(s)";
  return out;
}

// Generator of the solution family for the max-ratio problem pivoted on
// column k and row s: I + A_sk^- A, where A_sk keeps only entry (s, k).
template <semiring_scalar S>
Matrix<S> max_ratio_generator(const Matrix<S>& a, std::size_t s,
                              std::size_t k) {
  const S pivot = scalar_traits<S>::inverse(a(s, k));
  Matrix<S> g = Matrix<S>::identity(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    g(k, j) =
        tropical_add(g(k, j), scalar_traits<S>::mul(pivot, a(s, j)));
  return g;
}

// Maximizes q^- x (A x)^- p over regular x for a matrix with regular columns.
// The optimum is delta = q^- A^- p. Every tied pivot pair (k, s), with k a
// maximizing column of q_j^-1 max_i p_i/a[i][j] and s a maximizing row of
// p_i/a[i][k], contributes one family; families are deduplicated by span
// equality and pivots are enumerated in ascending (k, s) order.
template <semiring_scalar S>
SolveOutcome<S> solve_max_ratio(const Matrix<S>& a, const Vector<S>& p,
                                const Vector<S>& q) {
  if (p.dim() != a.rows() || q.dim() != a.cols())
    throw dimension_error("solve_max_ratio: shape mismatch");
  if (!has_regular_columns(a))
    throw invalid_input_error("solve_max_ratio: matrix has a zero entry");
  if (!is_regular(p) || !is_regular(q))
    throw invalid_input_error("solve_max_ratio: p or q has a zero entry");

  std::vector<S> per_col;
  per_col.reserve(a.cols());
  S delta = scalar_traits<S>::zero();
  for (std::size_t j = 0; j < a.cols(); ++j) {
    S best = scalar_traits<S>::zero();
    for (std::size_t i = 0; i < a.rows(); ++i)
      best = tropical_add(best,
                          scalar_traits<S>::div(p[i], a(i, j)));
    per_col.push_back(scalar_traits<S>::div(best, q[j]));
    delta = tropical_add(delta, per_col.back());
  }

  SolveOutcome<S> out;
  out.optimum = delta;
  std::vector<std::vector<Vector<S>>> forms;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (!scalar_traits<S>::eq(per_col[k], delta)) continue;
    S col_best = scalar_traits<S>::zero();
    for (std::size_t i = 0; i < a.rows(); ++i)
      col_best = tropical_add(col_best,
                              scalar_traits<S>::div(p[i], a(i, k)));
    for (std::size_t s = 0; s < a.rows(); ++s) {
      if (!scalar_traits<S>::eq(scalar_traits<S>::div(p[s], a(s, k)),
                                col_best))
        continue;
      out.maximizers.emplace_back(k, s);
      Matrix<S> g = max_ratio_generator(a, s, k);
      auto form = detail::span_form(g);
      bool dup = false;
      for (const auto& seen : forms)
        if (detail::same_span_form(seen, form)) {
          dup = true;
          break;
        }
      if (dup) continue;
      forms.push_back(std::move(form));
      out.families.push_back(
          {std::move(g), "pivot at column " + std::to_string(k + 1) +
                             ", row " + std::to_string(s + 1)});
    }
  }
  return out;
}

}  // namespace maxtimes
