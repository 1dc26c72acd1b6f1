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
/// Classical inference companion: discrete Bayes posteriors, Monte Carlo
/// mean-square-error decomposition, equal-tail credibility intervals,
/// confidence coverage, one-sided p-values, and the translation-model check
/// that an equivariant interval has equal credibility (flat prior) and
/// confidence.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "epiq/error.hpp"
#include "epiq/random.hpp"

namespace epiq::inference {

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

class DiscretePrior {
 public:
  DiscretePrior(std::vector<double> values, std::vector<double> weights, double tol = 1e-12)
      : values_(std::move(values)), weights_(std::move(weights)) {
    if (values_.empty() || values_.size() != weights_.size()) {
      throw Error(ErrorKind::BadDistribution, "need one weight per value");
    }
    double sum = 0.0;
    for (double w : weights_) {
      if (!(w >= 0.0)) throw Error(ErrorKind::BadDistribution, "negative weight");
      sum += w;
    }
    if (std::abs(sum - 1.0) > tol) throw Error(ErrorKind::BadDistribution, "weights do not sum to 1");
  }

  static DiscretePrior uniform(std::vector<double> values) {
    std::vector<double> w(values.size(), 1.0 / static_cast<double>(values.size()));
    return DiscretePrior(std::move(values), std::move(w));
  }
  static DiscretePrior point_mass(double value) { return DiscretePrior({value}, {1.0}); }

  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<double> values_;
  std::vector<double> weights_;
};

/// Posterior weights proportional to likelihood(theta) * prior(theta).
inline DiscretePrior bayes_posterior(const DiscretePrior& prior, const std::function<double(double)>& likelihood) {
  std::vector<double> w(prior.size());
  double z = 0.0;
  for (std::size_t k = 0; k < prior.size(); ++k) {
    const double l = likelihood(prior.values()[k]);
    if (!(l >= 0.0)) throw Error(ErrorKind::InvalidArgument, "likelihood must be nonnegative");
    w[k] = l * prior.weights()[k];
    z += w[k];
  }
  if (!(z > 0.0)) throw Error(ErrorKind::ZeroEvidence, "every value has zero posterior weight");
  for (double& x : w) x /= z;
  return DiscretePrior(prior.values(), std::move(w), 1e-9);
}

inline double posterior_mean(const DiscretePrior& posterior) {
  double m = 0.0;
  for (std::size_t k = 0; k < posterior.size(); ++k) m += posterior.values()[k] * posterior.weights()[k];
  return m;
}

struct SimulationSpec {
  std::uint64_t replicates = 1;
  std::uint64_t seed = 0;
  double theta = 0.0;

  void validate() const {
    if (replicates < 1) throw Error(ErrorKind::InvalidArgument, "need at least one replicate");
  }
};

/// Draws one data set given the true parameter.
using Sampler = std::function<std::vector<double>(double theta, Engine& rng)>;
/// Maps a data set to a point estimate.
using Estimator = std::function<double(std::span<const double> data)>;

/// n iid N(mean, 1) draws.
inline Sampler normal_sampler(std::size_t n) {
  return [n](double theta, Engine& rng) {
    std::normal_distribution<double> dist(theta, 1.0);
    std::vector<double> x(n);
    for (auto& v : x) v = dist(rng);
    return x;
  };
}

inline double sample_mean(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

/// Calls f(replicate index, engine) for every replicate. Replicates are split
/// into chunks of `kChunkSize`, each drawing from its own substream.
template <class F>
void for_each_replicate(std::uint64_t replicates, std::uint64_t seed, F&& f) {
  for (std::uint64_t chunk = 0; chunk * kChunkSize < replicates; ++chunk) {
    Engine rng = substream(seed, chunk);
    const std::uint64_t end = std::min(replicates, (chunk + 1) * kChunkSize);
    for (std::uint64_t i = chunk * kChunkSize; i < end; ++i) f(i, rng);
  }
}

struct MonteCarloEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  std::uint64_t replicates = 0;
};

inline MonteCarloEstimate proportion(std::uint64_t hits, std::uint64_t n) {
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n};
}

struct MseDecomposition {
  double mse = 0.0;           // mean of (estimate - theta)^2
  double variance = 0.0;      // mean of (estimate - mean estimate)^2
  double bias_squared = 0.0;  // (mean estimate - theta)^2
  double mean_estimate = 0.0;
  double mse_standard_error = 0.0;
};

/// Empirical moments of the estimator over `spec.replicates` simulated data
/// sets. All three moments use the same sample, so mse = variance + bias^2
/// up to rounding.
inline MseDecomposition mse_decompose(const Estimator& estimator, const Sampler& sampler, const SimulationSpec& spec) {
  spec.validate();
  std::vector<double> est(spec.replicates);
  for_each_replicate(spec.replicates, spec.seed,
                     [&](std::uint64_t i, Engine& rng) { est[i] = estimator(sampler(spec.theta, rng)); });
  const double n = static_cast<double>(spec.replicates);
  MseDecomposition out;
  for (double e : est) out.mean_estimate += e;
  out.mean_estimate /= n;
  double sq2 = 0.0;
  for (double e : est) {
    const double err2 = (e - spec.theta) * (e - spec.theta);
    out.mse += err2;
    sq2 += err2 * err2;
    out.variance += (e - out.mean_estimate) * (e - out.mean_estimate);
  }
  out.mse /= n;
  out.variance /= n;
  out.bias_squared = (out.mean_estimate - spec.theta) * (out.mean_estimate - spec.theta);
  out.mse_standard_error = std::sqrt(std::max(0.0, sq2 / n - out.mse * out.mse) / n);
  return out;
}

struct IntervalEstimate {
  double lower;
  double upper;
  double level;

  IntervalEstimate(double lo, double hi, double lvl) : lower(lo), upper(hi), level(lvl) {
    if (!(lo <= hi)) throw Error(ErrorKind::InvalidArgument, "interval lower bound exceeds upper bound");
    if (!(lvl > 0.0 && lvl < 1.0)) throw Error(ErrorKind::InvalidArgument, "level must lie in (0, 1)");
  }
  bool contains(double x) const noexcept { return lower <= x && x <= upper; }
};

namespace detail {

inline void require_level(double level) {
  if (!(level > 0.0 && level < 1.0)) throw Error(ErrorKind::InvalidArgument, "level must lie in (0, 1)");
}

// Linear interpolation between order statistics (Hyndman-Fan type 7).
inline double sorted_quantile(const std::vector<double>& sorted, double q) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace detail

/// Equal-tail interval between the (1-level)/2 and (1+level)/2 sample quantiles.
inline IntervalEstimate credibility_interval(std::vector<double> samples, double level) {
  detail::require_level(level);
  if (samples.empty()) throw Error(ErrorKind::InvalidArgument, "no posterior samples");
  std::sort(samples.begin(), samples.end());
  const double alpha = 1.0 - level;
  return {detail::sorted_quantile(samples, alpha / 2.0), detail::sorted_quantile(samples, 1.0 - alpha / 2.0), level};
}

/// Equal-tail interval of a discrete posterior: each bound is the smallest
/// value whose cumulative probability reaches the tail level.
inline IntervalEstimate credibility_interval(const DiscretePrior& posterior, double level) {
  detail::require_level(level);
  std::vector<std::size_t> order(posterior.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return posterior.values()[a] < posterior.values()[b]; });
  const double alpha = 1.0 - level;
  auto quantile = [&](double q) {
    double cum = 0.0;
    for (std::size_t k : order) {
      cum += posterior.weights()[k];
      if (cum >= q - 1e-12) return posterior.values()[k];
    }
    return posterior.values()[order.back()];
  };
  return {quantile(alpha / 2.0), quantile(1.0 - alpha / 2.0), level};
}

/// Maps data to an interval; an empty optional is the empty interval.
using IntervalRule = std::function<std::optional<IntervalEstimate>(std::span<const double> data)>;

/// Fraction of simulated data sets whose interval contains spec.theta.
inline MonteCarloEstimate confidence_coverage(const IntervalRule& rule, const Sampler& sampler,
                                              const SimulationSpec& spec) {
  spec.validate();
  std::uint64_t hits = 0;
  for_each_replicate(spec.replicates, spec.seed, [&](std::uint64_t, Engine& rng) {
    const auto iv = rule(sampler(spec.theta, rng));
    if (iv && iv->contains(spec.theta)) ++hits;
  });
  return proportion(hits, spec.replicates);
}

/// Monte Carlo P^{theta0}(estimate(X) > observed) with theta0 = spec.theta.
/// With `discrete_ties`, replicates equal to `observed` count one half.
inline MonteCarloEstimate p_value_one_sided(const Sampler& sampler, const Estimator& estimator, double observed,
                                            const SimulationSpec& spec, bool discrete_ties = false) {
  spec.validate();
  double score = 0.0;
  double score_sq = 0.0;
  for_each_replicate(spec.replicates, spec.seed, [&](std::uint64_t, Engine& rng) {
    const double e = estimator(sampler(spec.theta, rng));
    double s = e > observed ? 1.0 : 0.0;
    if (discrete_ties && e == observed) s = 0.5;
    score += s;
    score_sq += s * s;
  });
  const double n = static_cast<double>(spec.replicates);
  const double p = score / n;
  return {p, std::sqrt(std::max(0.0, score_sq / n - p * p) / n), spec.replicates};
}

struct CredibilityCoverage {
  MonteCarloEstimate credibility;  // flat-prior posterior probability of [X + c1, X + c2]
  MonteCarloEstimate coverage;     // frequentist coverage of the same interval
  double analytic = 0.0;           // Phi(-c1) - Phi(-c2)

  double combined_standard_error() const {
    return std::hypot(credibility.standard_error, coverage.standard_error);
  }
};

/// X ~ N(theta, 1) under the translation group, flat (right-invariant) prior,
/// equivariant interval [X + c1, X + c2]. Each replicate draws X at the true
/// theta for the coverage estimate and one posterior draw theta* ~ N(X, 1)
/// for the credibility estimate.
inline CredibilityCoverage credibility_coverage_experiment(double c1, double c2, const SimulationSpec& spec) {
  spec.validate();
  if (!(c1 < c2)) throw Error(ErrorKind::InvalidArgument, "need c1 < c2");
  std::uint64_t covered = 0, credible = 0;
  for_each_replicate(spec.replicates, spec.seed, [&](std::uint64_t, Engine& rng) {
    std::normal_distribution<double> n01;
    const double x = spec.theta + n01(rng);
    const double posterior_draw = x + n01(rng);
    if (x + c1 <= spec.theta && spec.theta <= x + c2) ++covered;
    if (x + c1 <= posterior_draw && posterior_draw <= x + c2) ++credible;
  });
  return {proportion(credible, spec.replicates), proportion(covered, spec.replicates),
          normal_cdf(-c1) - normal_cdf(-c2)};
}

}  // namespace epiq::inference
