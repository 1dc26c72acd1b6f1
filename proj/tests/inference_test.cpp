// Copyright 2026 The epiq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "epiq/inference.hpp"

#include <gtest/gtest.h>

#include <limits>

using namespace epiq;
using namespace epiq::inference;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double bernoulli_likelihood(double theta, const std::vector<int>& xs) {
  double l = 1.0;
  for (int x : xs) l *= x ? theta : 1.0 - theta;
  return l;
}

}  // namespace

TEST(NormalCdf, Values) {
  EXPECT_NEAR(normal_cdf(0.0), 0.5, 1e-15);
  EXPECT_NEAR(normal_cdf(1.959963984540054), 0.975, 1e-12);
  EXPECT_NEAR(normal_cdf(-1.6448536269514722), 0.05, 1e-12);
}

TEST(DiscretePrior, Validation) {
  EXPECT_THROW(DiscretePrior({0.0, 1.0}, {0.5, 0.6}), Error);
  EXPECT_THROW(DiscretePrior({0.0, 1.0}, {1.5, -0.5}), Error);
  EXPECT_THROW(DiscretePrior({0.0}, {0.5, 0.5}), Error);
  EXPECT_NO_THROW(DiscretePrior::uniform({1.0, 2.0, 3.0}));
}

TEST(BayesPosterior, Examples) {
  const auto flat = bayes_posterior(DiscretePrior::uniform({0.0, 1.0, 2.0}), [](double) { return 0.3; });
  for (double w : flat.weights()) EXPECT_NEAR(w, 1.0 / 3.0, 1e-15);

  const auto post = bayes_posterior(DiscretePrior::uniform({0.0, 1.0}), [](double t) { return t == 0.0 ? 0.8 : 0.2; });
  EXPECT_NEAR(post.weights()[0], 0.8, 1e-15);
  EXPECT_NEAR(post.weights()[1], 0.2, 1e-15);

  const auto point = bayes_posterior(DiscretePrior({4.0, 5.0}, {0.0, 1.0}), [](double t) { return t; });
  EXPECT_EQ(point.weights()[1], 1.0);
}

TEST(BayesPosterior, ZeroEvidence) {
  try {
    bayes_posterior(DiscretePrior({0.0, 1.0}, {1.0, 0.0}), [](double t) { return t; });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroEvidence);
  }
}

TEST(PosteriorMean, Examples) {
  EXPECT_EQ(posterior_mean(DiscretePrior::point_mass(3.0)), 3.0);
  EXPECT_NEAR(posterior_mean(DiscretePrior::uniform({0.0, 1.0})), 0.5, 1e-15);
  EXPECT_NEAR(posterior_mean(DiscretePrior({0.0, 1.0}, {0.8, 0.2})), 0.2, 1e-15);
}

TEST(Sufficiency, BernoulliPosteriorDependsOnlyOnSumProperty) {
  Engine rng = substream(13, 0);
  std::bernoulli_distribution coin(0.4);
  const std::vector<double> thetas{0.1, 0.25, 0.5, 0.7, 0.9};
  const DiscretePrior prior(thetas, {0.1, 0.2, 0.3, 0.25, 0.15});
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 12;
    std::vector<int> xs(n);
    int t = 0;
    for (auto& x : xs) t += (x = coin(rng));
    const auto full = bayes_posterior(prior, [&](double th) { return bernoulli_likelihood(th, xs); });
    const auto suff = bayes_posterior(prior, [&](double th) { return std::pow(th, t) * std::pow(1.0 - th, double(n) - t); });
    // a reordering of the data has the same sufficient statistic
    std::vector<int> shuffled = xs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto perm = bayes_posterior(prior, [&](double th) { return bernoulli_likelihood(th, shuffled); });
    for (std::size_t k = 0; k < thetas.size(); ++k) {
      EXPECT_NEAR(full.weights()[k], suff.weights()[k], 1e-14);
      EXPECT_NEAR(full.weights()[k], perm.weights()[k], 1e-14);
    }
  }
}

TEST(LikelihoodPrinciple, ProportionalLikelihoodsGiveSamePosteriorProperty) {
  Engine rng = substream(13, 1);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> values{0.0, 1.0, 2.0, 3.0}, lik(4);
    for (auto& l : lik) l = u(rng);
    const double c = 4.0;  // power of two: scaling is exact
    const auto prior = DiscretePrior::uniform(values);
    const auto a = bayes_posterior(prior, [&](double t) { return lik[std::size_t(t)]; });
    const auto b = bayes_posterior(prior, [&](double t) { return c * lik[std::size_t(t)]; });
    EXPECT_EQ(a.weights(), b.weights());
  }
}

TEST(MseDecompose, OracleEstimatorIsExact) {
  const auto r = mse_decompose([](std::span<const double>) { return 1.5; }, normal_sampler(3), {1000, 5, 1.5});
  EXPECT_EQ(r.mse, 0.0);
  EXPECT_EQ(r.variance, 0.0);
  EXPECT_EQ(r.bias_squared, 0.0);
}

TEST(MseDecompose, SampleMeanOfFour) {
  const auto r = mse_decompose(sample_mean, normal_sampler(4), {200000, 42, 0.7});
  EXPECT_NEAR(r.mse, 0.25, 3.0 * r.mse_standard_error);
  EXPECT_NEAR(r.mse, r.variance + r.bias_squared, 1e-12);
}

TEST(MseDecompose, ConstantEstimator) {
  const auto r = mse_decompose([](std::span<const double>) { return 2.0; }, normal_sampler(1), {100, 5, 0.5});
  EXPECT_NEAR(r.variance, 0.0, 1e-15);
  EXPECT_NEAR(r.bias_squared, 2.25, 1e-15);
  EXPECT_NEAR(r.mse, 2.25, 1e-15);
}

TEST(MseDecompose, IdentityHoldsOnEveryRunProperty) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const double theta = static_cast<double>(seed) - 10.0;
    const auto r = mse_decompose([](std::span<const double> x) { return 0.9 * sample_mean(x) + 0.3; },
                                 normal_sampler(1 + seed % 5), {500 + seed * 37, seed, theta});
    EXPECT_NEAR(r.mse, r.variance + r.bias_squared, 1e-10 * std::max(1.0, r.mse));
  }
}

TEST(MseDecompose, DeterministicGivenSeed) {
  const SimulationSpec spec{10000, 9, 0.0};
  const auto a = mse_decompose(sample_mean, normal_sampler(2), spec);
  const auto b = mse_decompose(sample_mean, normal_sampler(2), spec);
  EXPECT_EQ(a.mse, b.mse);
  EXPECT_EQ(a.mean_estimate, b.mean_estimate);
}

TEST(CredibilityInterval, Examples) {
  const auto point = credibility_interval(DiscretePrior::point_mass(2.5), 0.9);
  EXPECT_EQ(point.lower, 2.5);
  EXPECT_EQ(point.upper, 2.5);
  EXPECT_EQ(credibility_interval(std::vector<double>(10, 1.0), 0.9).lower, 1.0);

  Engine rng = substream(13, 2);
  std::normal_distribution<double> n01;
  std::vector<double> draws(1000000);
  for (auto& d : draws) d = n01(rng);
  const auto normal = credibility_interval(draws, 0.95);
  EXPECT_NEAR(normal.lower, -1.96, 0.03);
  EXPECT_NEAR(normal.upper, 1.96, 0.03);

  std::uniform_real_distribution<double> u01;
  for (auto& d : draws) d = u01(rng);
  const auto uniform = credibility_interval(draws, 0.5);
  EXPECT_NEAR(uniform.lower, 0.25, 0.005);
  EXPECT_NEAR(uniform.upper, 0.75, 0.005);
}

TEST(CredibilityInterval, DiscreteEqualTail) {
  const DiscretePrior p({1.0, 2.0, 3.0, 4.0}, {0.1, 0.4, 0.4, 0.1});
  const auto iv = credibility_interval(p, 0.8);
  EXPECT_EQ(iv.lower, 1.0);
  EXPECT_EQ(iv.upper, 3.0);  // cumulative weight reaches 0.9 at 3
  const auto narrow = credibility_interval(p, 0.5);
  EXPECT_EQ(narrow.lower, 2.0);
  EXPECT_EQ(narrow.upper, 3.0);
  EXPECT_THROW(credibility_interval(p, 1.0), Error);
}

TEST(IntervalEstimate, Validation) {
  EXPECT_THROW(IntervalEstimate(1.0, 0.0, 0.5), Error);
  EXPECT_THROW(IntervalEstimate(0.0, 1.0, 0.0), Error);
  EXPECT_TRUE(IntervalEstimate(0.0, 1.0, 0.5).contains(1.0));
}

TEST(ConfidenceCoverage, Examples) {
  const SimulationSpec spec{20000, 3, 1.0};
  const auto all = confidence_coverage([](std::span<const double>) { return IntervalEstimate(-kInf, kInf, 0.99); },
                                       normal_sampler(1), spec);
  EXPECT_EQ(all.value, 1.0);
  const auto none = confidence_coverage([](std::span<const double>) { return std::optional<IntervalEstimate>{}; },
                                        normal_sampler(1), spec);
  EXPECT_EQ(none.value, 0.0);

  const std::size_t n = 9;
  const auto normal = confidence_coverage(
      [n](std::span<const double> x) {
        const double m = sample_mean(x), h = 1.96 / std::sqrt(double(n));
        return IntervalEstimate(m - h, m + h, 0.95);
      },
      normal_sampler(n), {100000, 4, -0.3});
  EXPECT_NEAR(normal.value, 0.95, 3.0 * normal.standard_error);
}

TEST(PValue, Examples) {
  const SimulationSpec spec{200000, 8, 0.0};
  EXPECT_EQ(p_value_one_sided(normal_sampler(1), sample_mean, -kInf, {1000, 1, 0.0}).value, 1.0);
  EXPECT_EQ(p_value_one_sided(normal_sampler(1), sample_mean, kInf, {1000, 1, 0.0}).value, 0.0);
  const auto p = p_value_one_sided(normal_sampler(1), sample_mean, 1.645, spec);
  EXPECT_NEAR(p.value, 0.05, 3.0 * p.standard_error);
}

TEST(PValue, DiscreteTiesCountHalf) {
  const Sampler coin = [](double theta, Engine& rng) {
    return std::vector<double>{std::bernoulli_distribution(theta)(rng) ? 1.0 : 0.0};
  };
  const SimulationSpec spec{100000, 2, 0.5};
  const auto strict = p_value_one_sided(coin, sample_mean, 1.0, spec);
  const auto ties = p_value_one_sided(coin, sample_mean, 1.0, spec, true);
  EXPECT_EQ(strict.value, 0.0);
  EXPECT_NEAR(ties.value, 0.25, 3.0 * ties.standard_error);
}

TEST(CredibilityCoverage, Examples) {
  const auto r = credibility_coverage_experiment(-1.96, 1.96, {200000, 21, 0.4});
  EXPECT_NEAR(r.analytic, 0.95, 1e-4);
  EXPECT_NEAR(r.credibility.value, 0.95, 3.0 * r.credibility.standard_error + 1e-4);
  EXPECT_NEAR(r.coverage.value, 0.95, 3.0 * r.coverage.standard_error + 1e-4);
  EXPECT_LE(std::abs(r.credibility.value - r.coverage.value), 3.0 * r.combined_standard_error());

  const auto thin = credibility_coverage_experiment(0.5 - 1e-9, 0.5, {10000, 21, 0.0});
  EXPECT_EQ(thin.credibility.value, 0.0);
  EXPECT_EQ(thin.coverage.value, 0.0);

  const auto wide = credibility_coverage_experiment(-50.0, 50.0, {10000, 21, 0.0});
  EXPECT_EQ(wide.credibility.value, 1.0);
  EXPECT_EQ(wide.coverage.value, 1.0);

  EXPECT_THROW(credibility_coverage_experiment(1.0, 1.0, {10, 1, 0.0}), Error);
}

TEST(CredibilityCoverage, CredibilityMatchesCoverageProperty) {
  Engine rng = substream(13, 3);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  for (int trial = 0; trial < 10; ++trial) {
    double c1 = u(rng), c2 = u(rng);
    if (c1 > c2) std::swap(c1, c2);
    const auto r = credibility_coverage_experiment(c1, c2, {100000, 100 + std::uint64_t(trial), u(rng)});
    const double se = r.combined_standard_error();
    EXPECT_LE(std::abs(r.credibility.value - r.coverage.value), 3.0 * se) << c1 << ' ' << c2;
  }
}
