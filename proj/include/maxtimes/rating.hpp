#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "maxtimes/errors.hpp"
#include "maxtimes/matrix.hpp"
#include "maxtimes/scalar.hpp"
#include "maxtimes/solvers.hpp"

namespace maxtimes {

// A validated pairwise comparison matrix: square, strictly positive, and
// reciprocal (a[i][j] * a[j][i] == 1 under the realization's equality).
// Construct through validate() or consistent_from_weights().
template <semiring_scalar S>
struct ComparisonMatrix {
  Matrix<S> entries;
  std::vector<std::string> labels;  // empty, or one label per alternative

  std::size_t size() const { return entries.rows(); }
};

struct ValidateOptions {
  // Rebuild the diagonal and lower triangle from the upper triangle instead
  // of rejecting reciprocity violations.
  bool auto_symmetrize = false;
};

template <semiring_scalar S>
ComparisonMatrix<S> validate(Matrix<S> m, std::vector<std::string> labels = {},
                             const ValidateOptions& opts = {}) {
  if (!m.is_square())
    throw dimension_error("validate: comparison matrix must be square");
  if (!labels.empty() && labels.size() != m.rows())
    throw invalid_input_error("validate: expected " +
                              std::to_string(m.rows()) + " labels, got " +
                              std::to_string(labels.size()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (scalar_traits<S>::is_zero(m(i, j)))
        throw invalid_input_error(
            "validate: entry (" + std::to_string(i + 1) + ", " +
            std::to_string(j + 1) + ") must be positive");
  if (opts.auto_symmetrize) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      m(i, i) = scalar_traits<S>::one();
      for (std::size_t j = i + 1; j < m.cols(); ++j)
        m(j, i) = scalar_traits<S>::inverse(m(i, j));
    }
  } else {
    std::vector<std::pair<std::size_t, std::size_t>> bad;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = i; j < m.cols(); ++j)
        if (!scalar_traits<S>::eq(scalar_traits<S>::mul(m(i, j), m(j, i)),
                                  scalar_traits<S>::one()))
          bad.emplace_back(i, j);
    if (!bad.empty()) {
      std::string what = "validate: reciprocity fails at";
      for (std::size_t t = 0; t < bad.size() && t < 4; ++t)
        what += " (" + std::to_string(bad[t].first + 1) + ", " +
                std::to_string(bad[t].second + 1) + ")";
      if (bad.size() > 4)
        what += " and " + std::to_string(bad.size() - 4) + " more";
      throw reciprocity_error(what, std::move(bad));
    }
  }
  return ComparisonMatrix<S>{std::move(m), std::move(labels)};
}

// True when every indirect comparison agrees with the direct one:
// a[i][k] * a[k][j] == a[i][j] for all triples.
template <semiring_scalar S>
bool is_consistent(const ComparisonMatrix<S>& cm) {
  const Matrix<S>& a = cm.entries;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.rows(); ++k)
      for (std::size_t j = 0; j < a.rows(); ++j)
        if (!scalar_traits<S>::eq(
                scalar_traits<S>::mul(a(i, k), a(k, j)), a(i, j)))
          return false;
  return true;
}

// The consistent comparison matrix induced by positive weights: a[i][j] =
// w[i] / w[j].
template <semiring_scalar S>
ComparisonMatrix<S> consistent_from_weights(const Vector<S>& w) {
  if (!is_regular(w))
    throw invalid_input_error("consistent_from_weights: zero weight");
  Matrix<S> m(w.dim(), w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j)
      m(i, j) = scalar_traits<S>::div(w[i], w[j]);
  return ComparisonMatrix<S>{std::move(m), {}};
}

// Worst relative error of the scores x against the comparisons:
// max over i, j of a[i][j] * x[j] / x[i].
template <semiring_scalar S>
S objective(const Matrix<S>& a, const Vector<S>& x) {
  if (!is_regular(x)) throw invalid_input_error("objective: x must be regular");
  return max_dot(conjugate(x), mat_vec(a, x));
}

template <semiring_scalar S>
S objective(const ComparisonMatrix<S>& cm, const Vector<S>& x) {
  return objective(cm.entries, x);
}

// Spread of a positive score vector: (max_i x[i]) * (max_i 1/x[i]), the
// ratio of the largest score to the smallest. Equals 1 iff x is constant.
template <semiring_scalar S>
S contrast_ratio(const Vector<S>& x) {
  if (!is_regular(x))
    throw invalid_input_error("contrast_ratio: x must be regular");
  return scalar_traits<S>::mul(max_entry(x), max_entry(conjugate(x)));
}

// All score vectors that minimize the objective, as the column span of a
// canonical generator: columns are pairwise non-collinear and scaled to unit
// max. spectral_radius is the (optimal) objective value they attain.
template <semiring_scalar S>
struct ScoreFamily {
  S spectral_radius;
  Matrix<S> generator;

  std::size_t alternatives() const { return generator.rows(); }
  std::size_t generators() const { return generator.cols(); }
};

template <semiring_scalar S>
ScoreFamily<S> score_family(const ComparisonMatrix<S>& cm) {
  const SpectralOutcome<S> sr = spectral_radius(cm.entries);
  if (sr.is_zero())
    throw zero_spectral_radius_error("score_family: spectral radius is zero");
  const auto lambda =
      scalar_traits<S>::extend_root(sr.cycle_product, sr.cycle_length);
  if (!lambda)
    throw invalid_input_error(
        std::string("score_family: the spectral radius has no exact "
                    "representation in the ") +
        scalar_traits<S>::name() + " realization");
  const Matrix<S> closure =
      kleene_star(scale(scalar_traits<S>::inverse(*lambda), cm.entries));

  std::vector<Vector<S>> kept;
  for (std::size_t j = 0; j < closure.cols(); ++j) {
    Vector<S> c = scale_to_unit_max(column(closure, j));
    bool dup = false;
    for (const auto& seen : kept)
      if (vector_eq(seen, c)) {
        dup = true;
        break;
      }
    if (!dup) kept.push_back(std::move(c));
  }
  Matrix<S> gen(closure.rows(), kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j)
    for (std::size_t i = 0; i < closure.rows(); ++i)
      gen(i, j) = kept[j][i];
  return ScoreFamily<S>{*lambda, std::move(gen)};
}

// Descending score order as tie groups of 0-based indices. In the float
// realization scores within the relative tolerance of a group's leader join
// that group.
using Ranking = std::vector<std::vector<std::size_t>>;

template <semiring_scalar S>
Ranking ranking_of(const Vector<S>& scores) {
  std::vector<std::size_t> idx(scores.dim());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) {
                     return scalar_traits<S>::less(scores[b], scores[a]);
                   });
  Ranking groups;
  for (std::size_t i : idx) {
    if (groups.empty() ||
        !scalar_traits<S>::eq(scores[groups.back().front()], scores[i]))
      groups.push_back({i});
    else
      groups.back().push_back(i);
  }
  // Tied alternatives list in index order regardless of sort order.
  for (auto& g : groups) std::sort(g.begin(), g.end());
  return groups;
}

namespace detail {

// Maps solver families from coefficient space into score space through the
// family generator and deduplicates the images by span equality.
template <semiring_scalar S>
std::vector<SpanGenerators<S>> map_families(
    const Matrix<S>& b, const std::vector<SpanGenerators<S>>& families) {
  std::vector<SpanGenerators<S>> out;
  std::vector<std::vector<Vector<S>>> forms;
  for (const auto& fam : families) {
    Matrix<S> image = multiply(b, fam.generator);
    auto form = span_form(image);
    bool dup = false;
    for (const auto& seen : forms)
      if (same_span_form(seen, form)) {
        dup = true;
        break;
      }
    if (dup) continue;
    forms.push_back(std::move(form));
    out.push_back({std::move(image), fam.provenance});
  }
  return out;
}

}  // namespace detail

// Scores minimizing the contrast ratio within a score family.
template <semiring_scalar S>
struct LeastOutcome {
  Vector<S> scores;  // canonical representative, unit max
  S contrast;
  std::vector<SpanGenerators<S>> families;  // in score space
  bool truncated = false;
};

template <semiring_scalar S>
LeastOutcome<S> least_differentiating(const ScoreFamily<S>& f,
                                      std::size_t cap = 4096) {
  const Matrix<S>& b = f.generator;
  const Vector<S> p = Vector<S>::ones(b.rows());
  const Vector<S> q = conjugate(col_max(b));
  SolveOutcome<S> sol = solve_min_ratio(b, p, q, cap);
  LeastOutcome<S> out;
  out.contrast = sol.optimum;
  out.truncated = sol.truncated;
  out.families = detail::map_families(b, sol.families);
  out.scores = scale_to_unit_max(column(out.families.front().generator, 0));
  return out;
}

// Scores maximizing the contrast ratio within a score family.
template <semiring_scalar S>
struct MostOutcome {
  Vector<S> scores;  // canonical representative, unit max
  S contrast;
  std::vector<SpanGenerators<S>> families;            // in score space
  std::pair<std::size_t, std::size_t> pivot{0, 0};    // (column k, row s), 0-based
};

template <semiring_scalar S>
MostOutcome<S> most_differentiating(const ScoreFamily<S>& f) {
  const Matrix<S>& b = f.generator;
  const Vector<S> p = Vector<S>::ones(b.rows());
  const Vector<S> q = conjugate(col_max(b));
  SolveOutcome<S> sol = solve_max_ratio(b, p, q);
  MostOutcome<S> out;
  out.contrast = sol.optimum;
  out.pivot = sol.maximizers.front();
  out.families = detail::map_families(b, sol.families);
  out.scores = scale_to_unit_max(column(out.families.front().generator, 0));
  return out;
}

// Full rating of a comparison matrix.
template <semiring_scalar S>
struct RatingReport {
  ScoreFamily<S> family;
  Vector<S> least_diff;
  Vector<S> most_diff;
  S least_contrast;
  S most_contrast;
  Ranking least_ranking;
  Ranking most_ranking;
  std::vector<SpanGenerators<S>> least_families;
  std::vector<SpanGenerators<S>> most_families;
  std::pair<std::size_t, std::size_t> max_pivot{0, 0};
  bool consistent = false;
  bool truncated = false;
  std::vector<std::string> labels;
};

template <semiring_scalar S>
RatingReport<S> rate(const ComparisonMatrix<S>& cm, std::size_t cap = 4096) {
  RatingReport<S> out;
  out.family = score_family(cm);
  LeastOutcome<S> least = least_differentiating(out.family, cap);
  MostOutcome<S> most = most_differentiating(out.family);
  out.least_diff = std::move(least.scores);
  out.most_diff = std::move(most.scores);
  out.least_contrast = std::move(least.contrast);
  out.most_contrast = std::move(most.contrast);
  out.least_ranking = ranking_of(out.least_diff);
  out.most_ranking = ranking_of(out.most_diff);
  out.least_families = std::move(least.families);
  out.most_families = std::move(most.families);
  out.max_pivot = most.pivot;
  out.consistent = is_consistent(cm);
  out.truncated = least.truncated;
  out.labels = cm.labels;
  return out;
}

}  // namespace maxtimes
