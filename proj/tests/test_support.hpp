#pragma once

// Shared oracles for the test suites: Monte Carlo projection histograms and
// the per-bin 3-sigma comparison used to validate analytic projections.

#include <cmath>
#include <cstdint>
#include <vector>

#include "lstune/beamsim.hpp"
#include "lstune/core.hpp"
#include "lstune/rng.hpp"

namespace lstune::oracles {

struct McHistogram {
  std::vector<std::int64_t> counts;  // row-major, same layout as ImageGrid
  std::int64_t n_in = 0;             // samples that landed inside the extent
  std::int64_t n_total = 0;
};

// Samples the exact 2D marginal of the mixture on the selected pair and bins
// it on the grid. Independent of lstune::project (direct Cholesky sampling).
inline McHistogram mc_projection_histogram(const BeamState& state, AxisPair pair,
                                           int width, int height, const Extent2& extent,
                                           std::int64_t n_samples, Rng& rng) {
  const int ia = static_cast<int>(pair.first);
  const int ib = static_cast<int>(pair.second);

  std::vector<double> cum;
  double acc = 0.0;
  for (const auto& c : state.components) {
    acc += c.weight;
    cum.push_back(acc);
  }

  McHistogram h;
  h.counts.assign(static_cast<std::size_t>(width) * height, 0);
  h.n_total = n_samples;
  const double dx = (extent.x_max - extent.x_min) / width;
  const double dy = (extent.y_max - extent.y_min) / height;

  for (std::int64_t s = 0; s < n_samples; ++s) {
    double u = rng.uniform() * acc;
    std::size_t ci = 0;
    while (ci + 1 < cum.size() && u > cum[ci]) ++ci;
    const auto& comp = state.components[ci];

    double s_aa = comp.cov(ia, ia);
    double s_ab = comp.cov(ia, ib);
    double s_bb = comp.cov(ib, ib);
    double l11 = std::sqrt(s_aa);
    double l21 = s_ab / l11;
    double l22 = std::sqrt(s_bb - l21 * l21);
    double z1 = rng.normal();
    double z2 = rng.normal();
    double a = comp.mean(ia) + l11 * z1;
    double b = comp.mean(ib) + l21 * z1 + l22 * z2;

    int ix = static_cast<int>(std::floor((a - extent.x_min) / dx));
    int iy = static_cast<int>(std::floor((b - extent.y_min) / dy));
    if (ix < 0 || ix >= width || iy < 0 || iy >= height) continue;
    ++h.counts[static_cast<std::size_t>(iy) * width + ix];
    ++h.n_in;
  }
  return h;
}

// Two-sided per-bin test at the 3-sigma level (p < 0.00135 per tail).
// Conditioned on landing inside the extent, bin counts are multinomial with
// the analytic normalized masses as cell probabilities; small expectations use
// an exact Poisson tail, large ones the normal approximation.
struct BinCheckResult {
  int violations = 0;
  int bins = 0;
  double worst_z = 0.0;
};

inline double poisson_upper_tail(double lambda, std::int64_t k) {
  // P(K >= k)
  double pmf = std::exp(-lambda);
  double cdf_below = 0.0;
  for (std::int64_t i = 0; i < k; ++i) {
    cdf_below += pmf;
    pmf *= lambda / static_cast<double>(i + 1);
  }
  return std::max(1.0 - cdf_below, 0.0);
}

inline double poisson_lower_tail(double lambda, std::int64_t k) {
  // P(K <= k)
  double pmf = std::exp(-lambda);
  double cdf = 0.0;
  for (std::int64_t i = 0; i <= k; ++i) {
    cdf += pmf;
    pmf *= lambda / static_cast<double>(i + 1);
  }
  return std::min(cdf, 1.0);
}

inline BinCheckResult compare_histogram_3sigma(const ImageGrid& analytic,
                                               const McHistogram& mc) {
  constexpr double kTail = 0.00135;  // one-sided mass beyond 3 sigma
  BinCheckResult res;
  res.bins = static_cast<int>(analytic.pixels.size());
  for (std::size_t i = 0; i < analytic.pixels.size(); ++i) {
    double p = analytic.pixels[i];
    double lambda = p * static_cast<double>(mc.n_in);
    std::int64_t k = mc.counts[i];
    bool violated;
    if (lambda < 25.0) {
      violated = poisson_upper_tail(lambda, k) < kTail ||
                 poisson_lower_tail(lambda, k) < kTail;
    } else {
      double sigma = std::sqrt(lambda * (1.0 - p));
      double z = (static_cast<double>(k) - lambda) / sigma;
      res.worst_z = std::max(res.worst_z, std::fabs(z));
      violated = std::fabs(z) > 3.0;
    }
    if (violated) ++res.violations;
  }
  return res;
}

// Upper bound on the number of 3-sigma violations expected from sampling noise
// alone: mean + 3 sd of Binomial(bins, 0.0027), plus one for slack.
inline int allowed_violations(int total_bins) {
  double mean = 0.0027 * total_bins;
  return static_cast<int>(mean + 3.0 * std::sqrt(mean) + 1.0) + 1;
}

}  // namespace lstune::oracles
