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

/// \file
/// End-to-end reproductions: a CHSH run with settings drawn anew each trial
/// and correlations estimated per setting pair, the classical and quantum
/// CHSH extremes, and the four-treatment medical example answered both by a
/// Bayesian computation and by the spin-1/2 transition probability.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "epiq/born.hpp"
#include "epiq/inference.hpp"
#include "epiq/random.hpp"
#include "epiq/spin.hpp"

namespace epiq::experiments {

inline double degrees(double rad) { return rad * 180.0 / std::numbers::pi; }
inline double radians(double deg) { return deg * std::numbers::pi / 180.0; }

// ---------------------------------------------------------------------------
// CHSH

struct ChshConfig {
  double a = 0.0, a_prime = 0.0;  // Alice, radians in the x-z plane
  double b = 0.0, b_prime = 0.0;  // Bob
  std::uint64_t n_trials = 1;
  std::uint64_t seed = 0;
};

enum class Setting : std::uint8_t { plain = 0, primed = 1 };

struct TrialRecord {
  std::uint64_t trial;
  Setting alice;
  Setting bob;
  int outcome_a;  // +1 or -1
  int outcome_b;
};

/// Correlation estimate for one setting pair; empty when no trial landed there.
struct CellEstimate {
  std::uint64_t count = 0;
  std::optional<double> correlation;
  std::optional<double> standard_error;
};

struct ChshRun {
  std::vector<TrialRecord> records;
  /// Cells in the order AB, AB', A'B, A'B'.
  std::array<CellEstimate, 4> cells;
  /// E(AB) + E(AB') + E(A'B) - E(A'B'); empty if any cell is empty.
  std::optional<double> s_statistic;
  std::optional<double> s_standard_error;

  std::string to_csv() const {
    std::ostringstream os;
    os << "trial,setting_a,setting_b,outcome_a,outcome_b\n";
    for (const auto& r : records) {
      os << r.trial << ',' << (r.alice == Setting::plain ? "a" : "a'") << ','
         << (r.bob == Setting::plain ? "b" : "b'") << ',' << r.outcome_a << ',' << r.outcome_b << '\n';
    }
    return os.str();
  }
};

inline constexpr std::array<const char*, 4> kCellNames{"AB", "AB'", "A'B", "A'B'"};
inline constexpr std::array<double, 4> kCellSigns{1.0, 1.0, 1.0, -1.0};

inline std::size_t cell_index(Setting alice, Setting bob) {
  return 2 * static_cast<std::size_t>(alice) + static_cast<std::size_t>(bob);
}

/// The CHSH combination with signs + + + -.
inline double chsh_combination(double ab, double ab_prime, double a_prime_b, double a_prime_b_prime) {
  return ab + ab_prime + a_prime_b - a_prime_b_prime;
}

inline ChshRun chsh_simulate(const ChshConfig& cfg) {
  if (cfg.n_trials < 1) throw Error(ErrorKind::InvalidArgument, "need at least one trial");
  const std::array<double, 2> alice{cfg.a, cfg.a_prime};
  const std::array<double, 2> bob{cfg.b, cfg.b_prime};
  std::array<JointDistribution, 4> joint;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      joint[2 * i + j] = singlet_joint(spin::Direction::in_plane(alice[i]), spin::Direction::in_plane(bob[j]));
    }
  }

  ChshRun run;
  run.records.resize(cfg.n_trials);
  inference::for_each_replicate(cfg.n_trials, cfg.seed, [&](std::uint64_t t, Engine& rng) {
    std::bernoulli_distribution coin(0.5);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const auto sa = coin(rng) ? Setting::primed : Setting::plain;
    const auto sb = coin(rng) ? Setting::primed : Setting::plain;
    const auto& p = joint[cell_index(sa, sb)].p;
    const double u = u01(rng);
    int alpha = -1, beta = -1;
    if (u < p[0][0]) {
      alpha = 1, beta = 1;
    } else if (u < p[0][0] + p[0][1]) {
      alpha = 1, beta = -1;
    } else if (u < p[0][0] + p[0][1] + p[1][0]) {
      alpha = -1, beta = 1;
    }
    run.records[t] = TrialRecord{t, sa, sb, alpha, beta};
  });

  std::array<double, 4> sums{};
  for (const auto& r : run.records) {
    const std::size_t c = cell_index(r.alice, r.bob);
    ++run.cells[c].count;
    sums[c] += r.outcome_a * r.outcome_b;
  }
  bool complete = true;
  double s = 0.0, var = 0.0;
  for (std::size_t c = 0; c < 4; ++c) {
    auto& cell = run.cells[c];
    if (cell.count == 0) {
      complete = false;
      continue;
    }
    const double n = static_cast<double>(cell.count);
    const double e = sums[c] / n;
    cell.correlation = e;
    cell.standard_error = std::sqrt(std::max(0.0, 1.0 - e * e) / n);
    s += kCellSigns[c] * e;
    var += *cell.standard_error * *cell.standard_error;
  }
  if (complete) {
    run.s_statistic = s;
    run.s_standard_error = std::sqrt(var);
  }
  return run;
}

/// Exact singlet CHSH value for the given plane angles (radians).
inline double chsh_exact(double a, double a_prime, double b, double b_prime) {
  auto e = [](double x, double y) {
    return singlet_joint(spin::Direction::in_plane(x), spin::Direction::in_plane(y)).correlation();
  };
  return chsh_combination(e(a, b), e(a, b_prime), e(a_prime, b), e(a_prime, b_prime));
}

struct ClassicalExtremes {
  int max = 0;
  int min = 0;
};

/// Brute force over the 16 assignments (A, A', B, B') in {+1, -1}^4.
inline ClassicalExtremes chsh_classical_extremes() {
  ClassicalExtremes out{-100, 100};
  for (int bits = 0; bits < 16; ++bits) {
    const int a = bits & 1 ? -1 : 1, ap = bits & 2 ? -1 : 1, b = bits & 4 ? -1 : 1, bp = bits & 8 ? -1 : 1;
    const int v = a * b + a * bp + ap * b - ap * bp;
    out.max = std::max(out.max, v);
    out.min = std::min(out.min, v);
  }
  return out;
}

inline double chsh_classical_max() { return chsh_classical_extremes().max; }

struct QuantumMax {
  double a_deg = 0.0, a_prime_deg = 0.0, b_deg = 0.0, b_prime_deg = 0.0;
  double s = 0.0;  // value of the combination at the maximizer; |s| is maximal
};

/// Grid search for the largest |s| over plane angles on a grid of spacing
/// `resolution_deg` (which must divide 360 and be at most 5 degrees). The
/// singlet correlation depends only on angle differences, so a is pinned to 0.
inline QuantumMax chsh_quantum_max(double resolution_deg) {
  if (!(resolution_deg > 0.0 && resolution_deg <= 5.0)) {
    throw Error(ErrorKind::InvalidArgument, "resolution must lie in (0, 5] degrees");
  }
  const long steps = std::lround(360.0 / resolution_deg);
  if (std::abs(steps * resolution_deg - 360.0) > 1e-9) {
    throw Error(ErrorKind::InvalidArgument, "resolution must divide 360 degrees");
  }
  const spin::Direction origin = spin::Direction::in_plane(0.0);
  std::vector<double> e(static_cast<std::size_t>(steps));
  for (long k = 0; k < steps; ++k) {
    e[static_cast<std::size_t>(k)] =
        singlet_joint(origin, spin::Direction::in_plane(radians(k * resolution_deg))).correlation();
  }
  auto corr = [&](long from, long to) { return e[static_cast<std::size_t>(((to - from) % steps + steps) % steps)]; };
  QuantumMax best;
  for (long ap = 0; ap < steps; ++ap) {
    for (long b = 0; b < steps; ++b) {
      for (long bp = 0; bp < steps; ++bp) {
        const double s = chsh_combination(corr(0, b), corr(0, bp), corr(ap, b), corr(ap, bp));
        if (std::abs(s) > std::abs(best.s)) {
          best = {0.0, ap * resolution_deg, b * resolution_deg, bp * resolution_deg, s};
        }
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Medical example: four treatment effects mu_a..mu_d, contrasts
// zeta^a = mu_a - (mu_b + mu_c + mu_d)/3 and zeta^b = mu_b - (mu_a + mu_c + mu_d)/3.

using Rational = boost::rational<long long>;

inline const std::array<Rational, 4>& zeta_a_coefficients() {
  static const std::array<Rational, 4> c{Rational(1), Rational(-1, 3), Rational(-1, 3), Rational(-1, 3)};
  return c;
}
inline const std::array<Rational, 4>& zeta_b_coefficients() {
  static const std::array<Rational, 4> c{Rational(-1, 3), Rational(1), Rational(-1, 3), Rational(-1, 3)};
  return c;
}

struct MedicalContrasts {
  std::array<std::array<Rational, 2>, 2> covariance;
  Rational rho;  // exact when the variances are equal, as here
};

/// Covariance of (zeta^a, zeta^b) for iid standard-normal mu, in exact rationals.
inline MedicalContrasts medical_contrasts() {
  auto dot = [](const std::array<Rational, 4>& x, const std::array<Rational, 4>& y) {
    Rational s(0);
    for (std::size_t k = 0; k < 4; ++k) s += x[k] * y[k];
    return s;
  };
  const auto& ca = zeta_a_coefficients();
  const auto& cb = zeta_b_coefficients();
  MedicalContrasts out;
  out.covariance = {{{dot(ca, ca), dot(ca, cb)}, {dot(cb, ca), dot(cb, cb)}}};
  if (out.covariance[0][0] != out.covariance[1][1]) {
    throw Error(ErrorKind::InvariantViolation, "contrast variances differ; rho is not rational");
  }
  out.rho = out.covariance[0][1] / out.covariance[0][0];
  return out;
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// P(Y > 0 | X > 0) for a standard bivariate normal with correlation rho.
inline double orthant_conditional(double rho) { return 0.5 + std::asin(rho) / std::numbers::pi; }

/// Monte Carlo of P(zeta^b > 0 | zeta^a > 0) under iid N(0, 1) treatment effects.
inline inference::MonteCarloEstimate medical_bayes_mc(std::uint64_t n_samples, std::uint64_t seed) {
  std::uint64_t cond = 0, both = 0;
  inference::for_each_replicate(n_samples, seed, [&](std::uint64_t, Engine& rng) {
    std::normal_distribution<double> n01;
    const double ma = n01(rng), mb = n01(rng), mc = n01(rng), md = n01(rng);
    const double za = ma - (mb + mc + md) / 3.0;
    const double zb = mb - (ma + mc + md) / 3.0;
    if (za > 0.0) {
      ++cond;
      if (zb > 0.0) ++both;
    }
  });
  if (cond == 0) throw Error(ErrorKind::ZeroEvidence, "no sample satisfied the conditioning event");
  return inference::proportion(both, cond);
}

/// Monte Carlo of P(Y > 0 | X > 0) sampling (X, Y) directly with correlation rho.
inline inference::MonteCarloEstimate bivariate_orthant_mc(double rho, std::uint64_t n_samples, std::uint64_t seed) {
  if (!(rho >= -1.0 && rho <= 1.0)) throw Error(ErrorKind::InvalidArgument, "rho must lie in [-1, 1]");
  const double tail = std::sqrt(1.0 - rho * rho);
  std::uint64_t cond = 0, both = 0;
  inference::for_each_replicate(n_samples, seed, [&](std::uint64_t, Engine& rng) {
    std::normal_distribution<double> n01;
    const double x = n01(rng);
    const double y = rho * x + tail * n01(rng);
    if (x > 0.0) {
      ++cond;
      if (y > 0.0) ++both;
    }
  });
  if (cond == 0) throw Error(ErrorKind::ZeroEvidence, "no sample satisfied the conditioning event");
  return inference::proportion(both, cond);
}

struct MedicalBayes {
  double closed_form = 0.0;
  inference::MonteCarloEstimate mc;
};

inline MedicalBayes medical_bayes(std::uint64_t n_samples, std::uint64_t seed) {
  if (n_samples < 10000) throw Error(ErrorKind::InvalidArgument, "need at least 10^4 samples");
  return {orthant_conditional(to_double(medical_contrasts().rho)), medical_bayes_mc(n_samples, seed)};
}

/// Bloch directions standing for the two contrasts.
inline spin::Direction medical_direction_a() { return spin::Direction::normalized(-1.0, -1.0, -1.0); }
inline spin::Direction medical_direction_b() { return spin::Direction::normalized(-1.0, 1.0, 1.0); }

struct MedicalQuantum {
  double a_dot_b = 0.0;
  double closed_form = 0.0;     // (1 + a.b) / 2
  double abstract_route = 0.0;  // |<a;+|b;+>|^2 from the component operators
};

inline MedicalQuantum medical_quantum() {
  const auto a = medical_direction_a();
  const auto b = medical_direction_b();
  return {spin::dot(a, b), spin_half_transition(a, b, +1), spin_half_transition_abstract(a, b, +1)};
}

/// Rows of the orthogonal map mu -> psi, entries in units of 1/2.
inline constexpr std::array<std::array<int, 4>, 4> kPsiRows{{
    {1, 1, 1, 1},
    {-1, -1, 1, 1},
    {-1, 1, -1, 1},
    {-1, 1, 1, -1},
}};

inline std::array<std::array<Rational, 4>, 4> psi_matrix() {
  std::array<std::array<Rational, 4>, 4> m;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = Rational(kPsiRows[i][j], 2);
  }
  return m;
}

inline std::array<double, 4> psi_transform(const std::array<double, 4>& mu) {
  std::array<double, 4> psi{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) psi[i] += 0.5 * kPsiRows[i][j] * mu[j];
  }
  return psi;
}

/// -2/3 (psi1 + psi2 + psi3)
inline double zeta_a_from_psi(const std::array<double, 4>& psi) { return -2.0 / 3.0 * (psi[1] + psi[2] + psi[3]); }
/// -2/3 (psi1 - psi2 - psi3)
inline double zeta_b_from_psi(const std::array<double, 4>& psi) { return -2.0 / 3.0 * (psi[1] - psi[2] - psi[3]); }

/// Previously published figure for the Bayesian conditional probability,
/// carried for comparison with the closed form.
inline constexpr double kReportedBayes = 0.43;

struct MedicalResult {
  double rho = 0.0;
  double bayes_closed = 0.0;
  double bayes_mc = 0.0;
  double mc_se = 0.0;
  double quantum = 0.0;
  double quantum_abstract = 0.0;
  double reported_bayes = kReportedBayes;
};

inline MedicalResult medical_report(std::uint64_t n_samples, std::uint64_t seed) {
  const auto bayes = medical_bayes(n_samples, seed);
  const auto q = medical_quantum();
  return {to_double(medical_contrasts().rho), bayes.closed_form, bayes.mc.value, bayes.mc.standard_error,
          q.closed_form, q.abstract_route, kReportedBayes};
}

}  // namespace epiq::experiments
