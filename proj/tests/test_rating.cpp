#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "maxtimes/errors.hpp"
#include "maxtimes/radical.hpp"
#include "maxtimes/rating.hpp"
#include "maxtimes/rational.hpp"

using maxtimes::ComparisonMatrix;
using maxtimes::dimension_error;
using maxtimes::invalid_input_error;
using maxtimes::Matrix;
using maxtimes::radical;
using maxtimes::Ranking;
using maxtimes::rational;
using maxtimes::reciprocity_error;
using maxtimes::ValidateOptions;
using maxtimes::Vector;
using testutil::frac;

namespace {

ComparisonMatrix<rational> worked_example() {
  return maxtimes::validate(testutil::example_matrix<rational>());
}

}  // namespace

TEST_CASE("validation accepts reciprocal matrices and keeps labels") {
  auto cm = maxtimes::validate(testutil::example_matrix<rational>(),
                               {"a", "b", "c", "d"});
  CHECK(cm.size() == 4);
  CHECK(cm.labels == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK_THROWS_AS(
      maxtimes::validate(testutil::example_matrix<rational>(), {"a", "b"}),
      invalid_input_error);
  CHECK_THROWS_AS(maxtimes::validate(Matrix<rational>(2, 3)),
                  dimension_error);
}

TEST_CASE("validation rejects zero entries before anything else") {
  auto m = Matrix<rational>::from_rows(
      {{rational(1), rational(0)}, {rational(3), rational(1)}});
  CHECK_THROWS_MATCHES(maxtimes::validate(m), invalid_input_error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("(1, 2)")));
}

TEST_CASE("validation reports every reciprocity violation") {
  auto m = Matrix<rational>::from_rows(
      {{rational(1), rational(2)}, {rational(3), rational(1)}});
  try {
    maxtimes::validate(m);
    FAIL("expected reciprocity_error");
  } catch (const reciprocity_error& e) {
    using P = std::pair<std::size_t, std::size_t>;
    CHECK(e.violations() == std::vector<P>{{0, 1}});
  }

  auto diag = Matrix<rational>::from_rows({{rational(2)}});
  try {
    maxtimes::validate(diag);
    FAIL("expected reciprocity_error");
  } catch (const reciprocity_error& e) {
    using P = std::pair<std::size_t, std::size_t>;
    CHECK(e.violations() == std::vector<P>{{0, 0}});
  }

  // Three simultaneous violations are all collected.
  auto bad3 = Matrix<rational>::from_rows(
      {{rational(1), rational(2), rational(3)},
       {rational(2), rational(1), rational(4)},
       {rational(3), rational(4), rational(1)}});
  try {
    maxtimes::validate(bad3);
    FAIL("expected reciprocity_error");
  } catch (const reciprocity_error& e) {
    CHECK(e.violations().size() == 3);
  }
}

TEST_CASE("reciprocity uses the scalar's own equality") {
  auto close = Matrix<double>::from_rows(
      {{1.0, 2.0}, {0.5 + 5e-13, 1.0}});
  CHECK_NOTHROW(maxtimes::validate(close));
  auto exact = Matrix<rational>::from_rows(
      {{rational(1), rational(2)}, {rational(500000000001, 1000000000000),
                                    rational(1)}});
  CHECK_THROWS_AS(maxtimes::validate(exact), reciprocity_error);
}

TEST_CASE("auto-symmetrization rebuilds the lower triangle") {
  auto m = Matrix<rational>::from_rows(
      {{rational(1), rational(2)}, {rational(99), rational(5)}});
  auto cm = maxtimes::validate(m, {}, ValidateOptions{true});
  CHECK(cm.entries(0, 0) == rational(1));
  CHECK(cm.entries(1, 1) == rational(1));
  CHECK(cm.entries(0, 1) == rational(2));
  CHECK(cm.entries(1, 0) == rational(1, 2));
}

TEST_CASE("consistency detection matches the defining identity") {
  CHECK_FALSE(maxtimes::is_consistent(worked_example()));
  Vector<rational> w{rational(2), rational(1), rational(4)};
  auto cm = maxtimes::consistent_from_weights(w);
  CHECK(maxtimes::is_consistent(cm));
  CHECK(cm.entries(0, 1) == rational(2));
  CHECK(cm.entries(0, 2) == rational(1, 2));
  CHECK(cm.entries(2, 1) == rational(4));
  CHECK(cm.entries(1, 1) == rational(1));
  CHECK_THROWS_AS(
      maxtimes::consistent_from_weights(Vector<rational>{rational(1),
                                                         rational(0)}),
      invalid_input_error);
  auto one = maxtimes::validate(Matrix<rational>::from_rows({{rational(1)}}));
  CHECK(maxtimes::is_consistent(one));
}

TEST_CASE("the objective evaluates the worst relative disagreement") {
  auto a = testutil::example_matrix<rational>();
  Vector<rational> best{rational(1, 3), rational(1), rational(1, 2),
                        rational(1, 2)};
  CHECK(maxtimes::objective(a, best) == rational(2));
  CHECK(maxtimes::objective(a, Vector<rational>::ones(4)) == rational(4));
  // Scale invariance.
  CHECK(maxtimes::objective(a, scale(rational(7, 3), best)) == rational(2));
  CHECK_THROWS_AS(maxtimes::objective(a, Vector<rational>(4)),
                  invalid_input_error);

  Vector<rational> w{rational(2), rational(1), rational(4)};
  auto cm = maxtimes::consistent_from_weights(w);
  CHECK(maxtimes::objective(cm, w) == rational(1));
}

TEST_CASE("contrast ratio measures the spread of a score vector") {
  CHECK(maxtimes::contrast_ratio(Vector<rational>{
            rational(1, 3), rational(1), rational(1, 2), rational(1, 2)}) ==
        rational(3));
  CHECK(maxtimes::contrast_ratio(Vector<rational>{
            rational(1, 6), rational(1), rational(1, 2), rational(1, 2)}) ==
        rational(6));
  CHECK(maxtimes::contrast_ratio(Vector<rational>::ones(5)) == rational(1));
  CHECK_THROWS_AS(maxtimes::contrast_ratio(Vector<rational>{rational(0),
                                                            rational(1)}),
                  invalid_input_error);
}

TEST_CASE("the score family collects the distinct closure rays") {
  auto f = maxtimes::score_family(worked_example());
  CHECK(f.spectral_radius == rational(2));
  CHECK(f.alternatives() == 4);
  CHECK(f.generators() == 2);
  CHECK(matrix_eq(f.generator, testutil::example_generators<rational>()));

  Vector<rational> w{rational(2), rational(1), rational(4)};
  auto cf = maxtimes::score_family(maxtimes::consistent_from_weights(w));
  CHECK(cf.spectral_radius == rational(1));
  CHECK(cf.generators() == 1);
  CHECK(column(cf.generator, 0)[0] == rational(1, 2));
  CHECK(column(cf.generator, 0)[1] == rational(1, 4));
  CHECK(column(cf.generator, 0)[2] == rational(1));
}

TEST_CASE("every score family column attains the spectral radius") {
  std::mt19937 rng(4201);
  for (int t = 0; t < 10; ++t) {
    auto cm = maxtimes::ComparisonMatrix<radical>{
        testutil::random_reciprocal<radical>(rng, 4), {}};
    auto f = maxtimes::score_family(cm);
    for (std::size_t j = 0; j < f.generators(); ++j) {
      auto x = column(f.generator, j);
      CHECK(maxtimes::objective(cm.entries, x) == f.spectral_radius);
      CHECK(max_entry(x) == radical(1));
      for (std::size_t j2 = j + 1; j2 < f.generators(); ++j2)
        CHECK_FALSE(collinear(x, column(f.generator, j2)));
    }
  }
}

TEST_CASE("an irrational spectral radius needs the radical realization") {
  auto m = Matrix<rational>::from_rows(
      {{rational(1), rational(2), rational(1, 5)},
       {rational(1, 2), rational(1), rational(3)},
       {rational(5), rational(1, 3), rational(1)}});
  auto cm = maxtimes::validate(m);
  CHECK_THROWS_AS(maxtimes::score_family(cm), invalid_input_error);

  auto mr = Matrix<radical>::from_rows(
      {{radical(1), radical(2), radical(1, 5)},
       {radical(1, 2), radical(1), radical(3)},
       {radical(5), radical(1, 3), radical(1)}});
  auto f = maxtimes::score_family(maxtimes::validate(mr));
  CHECK(f.spectral_radius.pow(3) == radical(30));
  for (std::size_t j = 0; j < f.generators(); ++j)
    CHECK(maxtimes::objective(mr, column(f.generator, j)) ==
          f.spectral_radius);
}

TEST_CASE("rankings group exact ties and order groups by score") {
  Ranking want{{1}, {2, 3}, {0}};
  CHECK(maxtimes::ranking_of(Vector<rational>{
            rational(1, 3), rational(1), rational(1, 2), rational(1, 2)}) ==
        want);
  CHECK(maxtimes::ranking_of(Vector<rational>{rational(5)}) ==
        Ranking{{0}});
  // Float grouping respects the tolerant equality.
  CHECK(maxtimes::ranking_of(Vector<double>{1.0, 1.0 + 1e-12, 0.5}) ==
        Ranking{{0, 1}, {2}});
}

TEST_CASE("least differentiating scores match the worked example") {
  auto out = maxtimes::least_differentiating(
      maxtimes::score_family(worked_example()));
  CHECK(out.contrast == rational(3));
  CHECK_FALSE(out.truncated);
  REQUIRE(out.families.size() == 1);
  CHECK(out.families[0].provenance ==
        "row selection keeping columns (1, 1, 1, 1)");
  Vector<rational> want{rational(1, 3), rational(1), rational(1, 2),
                        rational(1, 2)};
  CHECK(vector_eq(out.scores, want));
  CHECK(maxtimes::contrast_ratio(out.scores) == out.contrast);
}

TEST_CASE("most differentiating scores match the worked example") {
  auto out = maxtimes::most_differentiating(
      maxtimes::score_family(worked_example()));
  CHECK(out.contrast == rational(6));
  CHECK(out.pivot == std::pair<std::size_t, std::size_t>(1, 0));
  REQUIRE(out.families.size() == 1);
  CHECK(out.families[0].provenance == "pivot at column 2, row 1");
  Vector<rational> want{rational(1, 6), rational(1), rational(1, 2),
                        rational(1, 2)};
  CHECK(vector_eq(out.scores, want));
  CHECK(maxtimes::contrast_ratio(out.scores) == out.contrast);
}

TEST_CASE("the full rating assembles every piece") {
  auto report = maxtimes::rate(worked_example());
  CHECK(report.family.spectral_radius == rational(2));
  CHECK(report.least_contrast == rational(3));
  CHECK(report.most_contrast == rational(6));
  CHECK(report.least_ranking == Ranking{{1}, {2, 3}, {0}});
  CHECK(report.most_ranking == Ranking{{1}, {2, 3}, {0}});
  CHECK(report.max_pivot == std::pair<std::size_t, std::size_t>(1, 0));
  CHECK_FALSE(report.consistent);
  CHECK_FALSE(report.truncated);
  CHECK(report.labels.empty());
  CHECK(vector_eq(report.least_diff,
                  Vector<rational>{rational(1, 3), rational(1), rational(1, 2),
                                   rational(1, 2)}));
  CHECK(vector_eq(report.most_diff,
                  Vector<rational>{rational(1, 6), rational(1), rational(1, 2),
                                   rational(1, 2)}));
}

TEST_CASE("consistent matrices rate to their weights with no spread") {
  std::mt19937 rng(4202);
  for (int t = 0; t < 10; ++t) {
    std::uniform_int_distribution<std::size_t> nd(1, 5);
    auto w = testutil::random_regular_vector<rational>(rng, nd(rng));
    auto report = maxtimes::rate(maxtimes::consistent_from_weights(w));
    CHECK(report.consistent);
    CHECK(report.family.spectral_radius == rational(1));
    CHECK(report.family.generators() == 1);
    CHECK(vector_eq(report.least_diff, scale_to_unit_max(w)));
    CHECK(vector_eq(report.most_diff, scale_to_unit_max(w)));
    CHECK(report.least_contrast == maxtimes::contrast_ratio(w));
    CHECK(report.most_contrast == maxtimes::contrast_ratio(w));
    CHECK(report.least_ranking == report.most_ranking);
  }
}

TEST_CASE("ratings commute with relabeling the alternatives") {
  std::mt19937 rng(4203);
  int tested = 0;
  for (int t = 0; t < 20; ++t) {
    auto m = testutil::random_reciprocal<radical>(rng, 4);
    auto perm = testutil::random_permutation(rng, 4);
    auto base = maxtimes::rate(maxtimes::validate(m));
    auto moved =
        maxtimes::rate(maxtimes::validate(testutil::permute_conjugate(m, perm)));
    CHECK(base.family.spectral_radius == moved.family.spectral_radius);
    CHECK(base.least_contrast == moved.least_contrast);
    CHECK(base.most_contrast == moved.most_contrast);
    CHECK(base.consistent == moved.consistent);
    // Score vectors are equivariant whenever the optimizer is a single ray.
    if (base.least_families.size() == 1 && moved.least_families.size() == 1 &&
        maxtimes::detail::span_form(base.least_families[0].generator).size() ==
            1) {
      CHECK(vector_eq(testutil::permute_vector(base.least_diff, perm),
                      moved.least_diff));
      ++tested;
    }
    if (base.most_families.size() == 1 && moved.most_families.size() == 1 &&
        maxtimes::detail::span_form(base.most_families[0].generator).size() ==
            1) {
      CHECK(vector_eq(testutil::permute_vector(base.most_diff, perm),
                      moved.most_diff));
    }
  }
  CHECK(tested >= 5);  // the single-ray case must actually occur
}
