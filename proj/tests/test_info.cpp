#include "doctest.h"

#include <cmath>
#include <vector>

#include "ctxdom/info.hpp"
#include "support/generators.hpp"

using namespace ctxdom;

namespace {

// Random distribution of the given length, occasionally with a hard zero.
ProbVector random_dist(testgen::Rand& rand, std::size_t n) {
  std::vector<double> w(n);
  double sum = 0.0;
  for (auto& x : w) {
    x = rand.uniform() < 0.15 ? 0.0 : rand.uniform();
    sum += x;
  }
  if (sum == 0.0) {
    w[0] = 1.0;
    sum = 1.0;
  }
  for (auto& x : w) x /= sum;
  return ProbVector(w);
}

// Mixing toward the uniform distribution moves down the Bayesian order.
ProbVector degrade(const ProbVector& y, double t) {
  std::vector<double> x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    x[i] = (1.0 - t) * y[i] + t / static_cast<double>(y.size());
  return ProbVector(x);
}

}  // namespace

TEST_SUITE_BEGIN("info");

TEST_CASE("prob vector validation") {
  CHECK_THROWS_AS(ProbVector({}), invalid_distribution);
  CHECK_THROWS_AS(ProbVector({0.5, 0.6}), invalid_distribution);
  CHECK_THROWS_AS(ProbVector({1.5, -0.5}), invalid_distribution);
  CHECK_NOTHROW(ProbVector({1.0 - 1e-10, 1e-10}));
}

TEST_CASE("shannon entropy of the certain and uniform bit") {
  CHECK(shannon_entropy(ProbVector({1.0, 0.0})) == 0.0);
  CHECK(shannon_entropy(ProbVector({0.5, 0.5})) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("shannon entropy of the (0.8, 0.2) split") {
  // frozen from a direct evaluation of -sum p log2 p
  CHECK(shannon_entropy(ProbVector({0.8, 0.2})) ==
        doctest::Approx(0.7219280948873623).epsilon(1e-12));
}

TEST_CASE("monotone measurement on a revealed-bits chain") {
  // knowledge chain: content = bits still missing, strictly decreasing upward
  const FiniteDomain d = validate_poset(
      {{"none", "one", "two", "all"},
       {{"none", "one"}, {"one", "two"}, {"two", "all"}}});
  const MeasurementMap m(
      d, {{"none", 3.0}, {"one", 2.0}, {"two", 1.0}, {"all", 0.0}});
  const auto report = is_monotone_measurement(m);
  CHECK(report.monotone);
  CHECK(report.violations.empty());
  CHECK(reflects_max(m).max_reflecting);
}

TEST_CASE("monotonicity violation is witnessed") {
  const FiniteDomain d = validate_poset({{"bot", "top"}, {{"bot", "top"}}});
  const MeasurementMap m(d, {{"bot", 0.0}, {"top", 1.0}});
  const auto report = is_monotone_measurement(m);
  CHECK_FALSE(report.monotone);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0] == std::pair<std::string, std::string>{"bot", "top"});
  // content 0 on a non-maximal element also breaks max reflection
  CHECK_FALSE(reflects_max(m).max_reflecting);
}

TEST_CASE("constant-zero content is monotone but reflects max only on antichains") {
  const FiniteDomain chain = validate_poset({{"bot", "top"}, {{"bot", "top"}}});
  const MeasurementMap zeros(chain, {{"bot", 0.0}, {"top", 0.0}});
  CHECK(is_monotone_measurement(zeros).monotone);
  CHECK_FALSE(reflects_max(zeros).max_reflecting);

  const FiniteDomain anti = validate_poset({{"p", "q"}, {}});
  const MeasurementMap zeros2(anti, {{"p", 0.0}, {"q", 0.0}});
  CHECK(is_monotone_measurement(zeros2).monotone);
  CHECK(reflects_max(zeros2).max_reflecting);
}

TEST_CASE("outcome domain content reflects max") {
  const FiniteDomain d =
      validate_poset({{"bot", "v0", "v1"}, {{"bot", "v0"}, {"bot", "v1"}}});
  const MeasurementMap m(d, {{"bot", 1.0}, {"v0", 0.0}, {"v1", 0.0}});
  CHECK(reflects_max(m).max_reflecting);
  CHECK(is_monotone_measurement(m).monotone);
}

TEST_CASE("bayesian order basics") {
  CHECK(bayesian_leq(ProbVector({0.5, 0.5}), ProbVector({1.0, 0.0})));
  CHECK_FALSE(bayesian_leq(ProbVector({1.0, 0.0}), ProbVector({0.5, 0.5})));
  const ProbVector x({0.3, 0.7});
  CHECK(bayesian_leq(x, x));
  CHECK_THROWS_AS(bayesian_leq(x, ProbVector({0.2, 0.3, 0.5})),
                  dimension_mismatch);
}

TEST_CASE("success probability") {
  CHECK(success_probability(ProbVector({0.5, 0.5})) == 0.5);
  CHECK(success_probability(ProbVector({1.0, 0.0})) == 1.0);
  // three unknown bits, uniform prior over the 8 completions
  std::vector<double> uniform8(8, 0.125);
  CHECK(success_probability(ProbVector(uniform8)) == 0.125);
}

TEST_CASE("property: entropy is permutation invariant and peaks at uniform") {
  testgen::Rand rand{5150};
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 2 + rand.index(4);
    const ProbVector p = random_dist(rand, n);
    std::vector<double> shuffled = p.values();
    for (std::size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[rand.index(i)]);
    CHECK(shannon_entropy(ProbVector(shuffled)) ==
          doctest::Approx(shannon_entropy(p)).epsilon(1e-12));
    CHECK(shannon_entropy(p) <= std::log2(static_cast<double>(n)) + 1e-12);
  }
  CHECK(shannon_entropy(ProbVector({0.25, 0.25, 0.25, 0.25})) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("property: bayesian order implies entropy order") {
  testgen::Rand rand{8080};
  int related = 0;
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 2 + rand.index(4);  // dimensions 2..5
    const ProbVector y = random_dist(rand, n);
    const ProbVector x = degrade(y, rand.uniform());
    CHECK(bayesian_leq(x, y));
    CHECK(shannon_entropy(x) >= shannon_entropy(y) - 1e-9);

    // independently drawn pairs: check the implication whenever related
    const ProbVector a = random_dist(rand, n);
    const ProbVector b = random_dist(rand, n);
    if (bayesian_leq(a, b)) {
      ++related;
      CHECK(shannon_entropy(a) >= shannon_entropy(b) - 1e-9);
    }
  }
  CHECK(related > 0);
}

TEST_CASE("property: certain success iff zero entropy") {
  testgen::Rand rand{616};
  for (int round = 0; round < 100; ++round) {
    const ProbVector p = random_dist(rand, 2 + rand.index(4));
    const bool certain = success_probability(p) >= 1.0 - 1e-12;
    const bool zero_entropy = shannon_entropy(p) <= 1e-9;
    CHECK(certain == zero_entropy);
  }
}

TEST_CASE("property: measurement-law checks agree with independent loops") {
  testgen::Rand rand{2718};
  for (int round = 0; round < 25; ++round) {
    const FiniteDomain d =
        validate_poset(testgen::random_poset_spec(rand, 8));
    std::map<std::string, double> content;
    for (const auto& id : d.elements())
      content[id] = rand.uniform() < 0.3 ? 0.0 : 3.0 * rand.uniform();
    const MeasurementMap m(d, content);

    bool oracle_monotone = true;
    for (const auto& x : d.elements())
      for (const auto& y : d.elements())
        if (d.leq(x, y) && m.content(x) < m.content(y) - 1e-12)
          oracle_monotone = false;

    bool oracle_reflects = true;
    for (const auto& x : d.elements()) {
      if (m.content(x) > 1e-12) continue;
      bool maximal = true;
      for (const auto& y : d.elements())
        if (y != x && d.leq(x, y)) maximal = false;
      if (!maximal) oracle_reflects = false;
    }

    CHECK(is_monotone_measurement(m).monotone == oracle_monotone);
    CHECK(reflects_max(m).max_reflecting == oracle_reflects);
  }
}

TEST_SUITE_END();
