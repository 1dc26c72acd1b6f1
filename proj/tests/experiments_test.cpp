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

#include "epiq/experiments.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace epiq;
using namespace epiq::experiments;

namespace {

const double kTsirelson = 2.0 * std::numbers::sqrt2;

ChshConfig config_deg(double a, double ap, double b, double bp, std::uint64_t n, std::uint64_t seed) {
  return {radians(a), radians(ap), radians(b), radians(bp), n, seed};
}

}  // namespace

TEST(ChshSimulate, AlignedAnglesAnticorrelate) {
  const auto run = chsh_simulate(config_deg(0, 0, 0, 0, 2000, 3));
  for (const auto& cell : run.cells) EXPECT_EQ(*cell.correlation, -1.0);
  ASSERT_TRUE(run.s_statistic);
  EXPECT_EQ(*run.s_statistic, -2.0);
}

TEST(ChshSimulate, SingleTrialFillsOneCell) {
  const auto run = chsh_simulate(config_deg(0, 90, 45, 135, 1, 3));
  int populated = 0;
  for (const auto& cell : run.cells) populated += cell.correlation.has_value();
  EXPECT_EQ(populated, 1);
  EXPECT_FALSE(run.s_statistic.has_value());
  EXPECT_EQ(run.records.size(), 1u);
}

TEST(ChshSimulate, OptimalSettingsViolateBound) {
  const auto run = chsh_simulate(config_deg(0, 90, 45, 315, 100000, 7));
  ASSERT_TRUE(run.s_statistic);
  EXPECT_GT(std::abs(*run.s_statistic), 2.7);
  EXPECT_NEAR(*run.s_statistic, chsh_exact(0, radians(90), radians(45), radians(315)), 3.0 * *run.s_standard_error);
}

TEST(ChshSimulate, ExactValueAtListedAngles) {
  // With + + + - signs and E = -cos(difference), these angles cancel.
  EXPECT_NEAR(chsh_exact(0, radians(90), radians(45), radians(135)), 0.0, 1e-12);
  EXPECT_NEAR(chsh_exact(0, radians(90), radians(45), radians(-45)), -kTsirelson, 1e-12);
}

TEST(ChshSimulate, MatchesExactValueProperty) {
  Engine rng = substream(17, 0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 12; ++trial) {
    ChshConfig cfg{angle(rng), angle(rng), angle(rng), angle(rng), 40000, 500 + std::uint64_t(trial)};
    const auto run = chsh_simulate(cfg);
    ASSERT_TRUE(run.s_statistic);
    EXPECT_NEAR(*run.s_statistic, chsh_exact(cfg.a, cfg.a_prime, cfg.b, cfg.b_prime), 3.0 * *run.s_standard_error);
    for (std::size_t c = 0; c < 4; ++c) {
      const double x = c < 2 ? cfg.a : cfg.a_prime, y = c % 2 == 0 ? cfg.b : cfg.b_prime;
      EXPECT_NEAR(*run.cells[c].correlation, -std::cos(x - y), 4.0 * *run.cells[c].standard_error + 1e-12);
    }
  }
}

TEST(ChshSimulate, SettingsAreBalanced) {
  const auto run = chsh_simulate(config_deg(10, 20, 30, 40, 100000, 1));
  for (const auto& cell : run.cells) EXPECT_NEAR(double(cell.count), 25000.0, 3.0 * std::sqrt(100000 * 0.25 * 0.75));
}

TEST(ChshSimulate, DeterministicAndCsv) {
  const auto cfg = config_deg(0, 90, 45, 315, 5000, 99);
  const auto a = chsh_simulate(cfg), b = chsh_simulate(cfg);
  EXPECT_EQ(a.to_csv(), b.to_csv());
  EXPECT_EQ(*a.s_statistic, *b.s_statistic);
  const std::string csv = a.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "trial,setting_a,setting_b,outcome_a,outcome_b");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5001);
  auto other = cfg;
  other.seed = 100;
  EXPECT_NE(chsh_simulate(other).to_csv(), a.to_csv());
}

TEST(ChshClassical, Extremes) {
  EXPECT_EQ(chsh_classical_max(), 2.0);
  const auto ext = chsh_classical_extremes();
  EXPECT_EQ(ext.max, 2);
  EXPECT_EQ(ext.min, -2);
  EXPECT_EQ(chsh_combination(1, 1, 1, 1), 2.0);
  EXPECT_EQ(chsh_combination(1, -1, 1, -1), 2.0);  // A = A' = B = 1, B' = -1
}

TEST(ChshClassical, DeterministicRunsNeverExceedTwoProperty) {
  Engine rng = substream(17, 1);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    // each run: fixed local outcomes per setting, so the sampled correlations are products
    const int a = coin(rng) ? 1 : -1, ap = coin(rng) ? 1 : -1, b = coin(rng) ? 1 : -1, bp = coin(rng) ? 1 : -1;
    EXPECT_LE(std::abs(chsh_combination(a * b, a * bp, ap * b, ap * bp)), 2.0);
  }
}

TEST(ChshQuantum, GridSearch) {
  const auto coarse = chsh_quantum_max(5.0);
  EXPECT_NEAR(std::abs(coarse.s), kTsirelson, 0.01);
  EXPECT_GE(std::abs(coarse.s), 2.82);
  EXPECT_LE(std::abs(coarse.s), 2.8285);
  EXPECT_NEAR(chsh_exact(radians(coarse.a_deg), radians(coarse.a_prime_deg), radians(coarse.b_deg),
                         radians(coarse.b_prime_deg)),
              coarse.s, 1e-12);

  const auto fine = chsh_quantum_max(1.0);
  EXPECT_NEAR(std::abs(fine.s), kTsirelson, 0.001);

  EXPECT_THROW(chsh_quantum_max(7.0), Error);
  EXPECT_THROW(chsh_quantum_max(0.0), Error);
}

TEST(ChshQuantum, EqualAnglesGiveTwo) {
  for (double x : {0.0, 0.3, 2.0}) EXPECT_NEAR(std::abs(chsh_exact(x, x, x, x)), 2.0, 1e-12);
}

TEST(Medical, ContrastsAreExact) {
  const auto c = medical_contrasts();
  EXPECT_EQ(c.covariance[0][0], Rational(4, 3));
  EXPECT_EQ(c.covariance[1][1], Rational(4, 3));
  EXPECT_EQ(c.covariance[0][1], Rational(-4, 9));
  EXPECT_EQ(c.covariance[1][0], Rational(-4, 9));
  EXPECT_EQ(c.rho, Rational(-1, 3));
}

TEST(Medical, OrthantClosedForm) {
  EXPECT_EQ(orthant_conditional(0.0), 0.5);
  EXPECT_NEAR(orthant_conditional(-1.0 / 3.0), 0.5 + std::asin(-1.0 / 3.0) / std::numbers::pi, 1e-15);
  EXPECT_NEAR(orthant_conditional(-1.0 / 3.0), 0.3918, 1e-4);
}

TEST(Medical, BayesMonteCarloMatchesClosedForm) {
  const auto r = medical_bayes(1000000, 2024);
  EXPECT_NEAR(r.closed_form, orthant_conditional(-1.0 / 3.0), 1e-15);
  EXPECT_NEAR(r.mc.value, r.closed_form, 3.0 * r.mc.standard_error);
  EXPECT_THROW(medical_bayes(9999, 1), Error);
}

TEST(Medical, SyntheticCorrelationsProperty) {
  std::uint64_t seed = 40;
  for (double rho : {-0.8, -0.25, 0.1, 0.5, 0.9}) {
    const auto mc = bivariate_orthant_mc(rho, 1000000, seed++);
    EXPECT_NEAR(mc.value, orthant_conditional(rho), 3.0 * mc.standard_error) << rho;
  }
}

TEST(Medical, QuantumValue) {
  const auto q = medical_quantum();
  EXPECT_NEAR(q.a_dot_b, -1.0 / 3.0, 1e-15);
  EXPECT_NEAR(q.closed_form, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(q.abstract_route, q.closed_form, 1e-10);
  EXPECT_NEAR(spin_half_transition(medical_direction_b(), medical_direction_a(), +1), 1.0 / 3.0, 1e-12);
}

TEST(Medical, ReportCarriesReferenceValue) {
  const auto r = medical_report(10000, 5);
  EXPECT_EQ(r.reported_bayes, 0.43);
  EXPECT_NEAR(r.quantum, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(r.rho, -1.0 / 3.0, 1e-15);
}

TEST(PsiTransform, Examples) {
  const auto ones = psi_transform({1, 1, 1, 1});
  EXPECT_EQ(ones, (std::array<double, 4>{2, 0, 0, 0}));
  EXPECT_EQ(psi_transform({0, 0, 0, 0}), (std::array<double, 4>{0, 0, 0, 0}));
}

TEST(PsiTransform, OrthogonalInRationals) {
  const auto m = psi_matrix();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Rational s(0);
      for (std::size_t k = 0; k < 4; ++k) s += m[i][k] * m[j][k];
      EXPECT_EQ(s, Rational(i == j ? 1 : 0));
    }
}

TEST(PsiTransform, ContrastIdentitiesExact) {
  // zeta = c . mu and -2/3 (row combination) . mu must have identical coefficients.
  const auto m = psi_matrix();
  const auto& ca = zeta_a_coefficients();
  const auto& cb = zeta_b_coefficients();
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(ca[k], Rational(-2, 3) * (m[1][k] + m[2][k] + m[3][k]));
    EXPECT_EQ(cb[k], Rational(-2, 3) * (m[1][k] - m[2][k] - m[3][k]));
  }
}

TEST(PsiTransform, NormAndIdentitiesOnRandomInputsProperty) {
  Engine rng = substream(17, 2);
  std::normal_distribution<double> n01;
  for (int trial = 0; trial < 200; ++trial) {
    const std::array<double, 4> mu{n01(rng), n01(rng), n01(rng), n01(rng)};
    const auto psi = psi_transform(mu);
    double nm = 0.0, np = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
      nm += mu[k] * mu[k];
      np += psi[k] * psi[k];
    }
    EXPECT_NEAR(std::sqrt(np), std::sqrt(nm), 1e-12);
    EXPECT_NEAR(zeta_a_from_psi(psi), mu[0] - (mu[1] + mu[2] + mu[3]) / 3.0, 1e-12);
    EXPECT_NEAR(zeta_b_from_psi(psi), mu[1] - (mu[0] + mu[2] + mu[3]) / 3.0, 1e-12);
  }
}
