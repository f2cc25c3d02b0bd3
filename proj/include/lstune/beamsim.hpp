#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lstune/bvn.hpp"
#include "lstune/core.hpp"
#include "lstune/rng.hpp"

namespace lstune {

using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

// One Gaussian of the mixture; axis order (x, x', y, y', z, E).
struct GaussComponent {
  double weight = 1.0;
  Vec6 mean = Vec6::Zero();
  Mat6 cov = Mat6::Identity();
};

// Ground-truth 6D phase-space density: a Gaussian mixture. Weights sum to 1,
// covariances are symmetric positive-definite.
struct BeamState {
  std::vector<GaussComponent> components;

  void validate() const {
    if (components.empty()) throw std::invalid_argument("BeamState: no components");
    double total = 0.0;
    for (const auto& c : components) {
      if (!(c.weight > 0.0)) throw std::invalid_argument("BeamState: non-positive weight");
      total += c.weight;
      if ((c.cov - c.cov.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("BeamState: covariance not symmetric");
      }
      Eigen::LLT<Mat6> llt(c.cov);
      if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("BeamState: covariance not positive-definite");
      }
    }
    if (std::fabs(total - 1.0) > 1e-9) {
      throw std::invalid_argument("BeamState: weights sum to " + std::to_string(total));
    }
  }
};

// Linear transport: mean' = A mean + c, cov' = A cov A^T.
struct TransportMap {
  Mat6 matrix = Mat6::Identity();
  Vec6 offset = Vec6::Zero();

  bool invertible(double tol = 1e-12) const {
    return std::fabs(matrix.determinant()) > tol;
  }
};

// Strengths of the five parameter knobs. At the neutral parameter vector the
// map is the identity.
struct MapCoefficients {
  double drift_per_p1 = 0.4;    // transverse drift length
  double rot_per_p2 = 0.6;      // (z,E) rotation angle
  double chirp_per_p3 = 0.5;    // (z,E) shear (E += chirp * z)
  double rot_per_p4 = 0.3;      // (z,E) rotation phase offset
  double lens_per_p5 = 0.5;     // transverse thin-lens strength
  MachineParams neutral{};      // defaults to all-zero
};

// Builds the transport map for a parameter setting. Block structure:
//   (x,x') and (y,y') each get Drift(l) * Lens(q)  with l = drift_per_p1*dp1,
//   q = lens_per_p5*dp5 (lens applied first, then drift);
//   (z,E) gets Rot(theta) * Shear(chi) with theta = rot_per_p2*dp2 +
//   rot_per_p4*dp4, chi = chirp_per_p3*dp3 (shear first, then rotation).
// All blocks have unit determinant, so the map is always invertible.
inline TransportMap map_from_params(const MachineParams& params,
                                    const MapCoefficients& k = {}) {
  for (double v : params.p) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("map_from_params: non-finite parameter");
    }
  }
  std::array<double, kNumMachineParams> dp{};
  for (int i = 0; i < kNumMachineParams; ++i) dp[i] = params.p[i] - k.neutral.p[i];

  const double l = k.drift_per_p1 * dp[0];
  const double q = k.lens_per_p5 * dp[4];
  const double theta = k.rot_per_p2 * dp[1] + k.rot_per_p4 * dp[3];
  const double chi = k.chirp_per_p3 * dp[2];

  Eigen::Matrix2d transverse;
  transverse << 1.0 - l * q, l, -q, 1.0;      // Drift(l) * Lens(q)

  Eigen::Matrix2d rot;
  rot << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  Eigen::Matrix2d shear;
  shear << 1.0, 0.0, chi, 1.0;
  Eigen::Matrix2d longitudinal = rot * shear;

  TransportMap map;
  map.matrix.block<2, 2>(0, 0) = transverse;  // (x, x')
  map.matrix.block<2, 2>(2, 2) = transverse;  // (y, y')
  map.matrix.block<2, 2>(4, 4) = longitudinal;
  return map;
}

inline BeamState apply_map(const BeamState& state, const TransportMap& map) {
  if (!map.invertible()) {
    throw std::invalid_argument("apply_map: transport map is not invertible");
  }
  BeamState out = state;
  for (auto& c : out.components) {
    c.mean = map.matrix * c.mean + map.offset;
    c.cov = map.matrix * c.cov * map.matrix.transpose();
    c.cov = 0.5 * (c.cov + c.cov.transpose());  // scrub asymmetry roundoff
  }
  return out;
}

inline BeamState transport(const BeamState& state, const MachineParams& params,
                           const MapCoefficients& k = {}) {
  return apply_map(state, map_from_params(params, k));
}

struct ProjectionStats {
  double coverage_first = 1.0;   // mixture mass inside the extent, first axis
  double coverage_second = 1.0;  // and second axis
  bool warned = false;
};

// Exact 2D marginal of the mixture on the selected axis pair, as probability
// mass per pixel cell (differences of bivariate normal CDFs at cell corners),
// normalized to unit total. Columns follow the pair's first axis.
inline ImageGrid project(const BeamState& state, AxisPair pair, int width, int height,
                         const Extent2& extent, ProjectionStats* stats = nullptr) {
  const int ia = static_cast<int>(pair.first);
  const int ib = static_cast<int>(pair.second);
  ImageGrid img = ImageGrid::zeros(width, height, extent);

  double cov_a = 0.0, cov_b = 0.0;
  std::vector<double> fa(static_cast<std::size_t>(width) + 1);
  std::vector<double> fb(static_cast<std::size_t>(height) + 1);
  std::vector<double> corner(fa.size() * fb.size());

  for (const auto& comp : state.components) {
    const double mu_a = comp.mean(ia);
    const double mu_b = comp.mean(ib);
    const double s_aa = comp.cov(ia, ia);
    const double s_bb = comp.cov(ib, ib);
    const double s_ab = comp.cov(ia, ib);
    // smallest eigenvalue of the 2x2 marginal covariance
    const double tr = s_aa + s_bb;
    const double disc = std::sqrt((s_aa - s_bb) * (s_aa - s_bb) + 4.0 * s_ab * s_ab);
    if (0.5 * (tr - disc) < 1e-12) {
      throw std::runtime_error("project: collapsed projection on " + pair.name());
    }
    const double sig_a = std::sqrt(s_aa);
    const double sig_b = std::sqrt(s_bb);
    const double rho = std::clamp(s_ab / (sig_a * sig_b), -1.0 + 1e-12, 1.0 - 1e-12);

    for (int i = 0; i <= width; ++i) {
      double xa = extent.x_min + (extent.x_max - extent.x_min) * i / width;
      fa[i] = (xa - mu_a) / sig_a;
    }
    for (int j = 0; j <= height; ++j) {
      double xb = extent.y_min + (extent.y_max - extent.y_min) * j / height;
      fb[j] = (xb - mu_b) / sig_b;
    }
    for (int i = 0; i <= width; ++i) {
      for (int j = 0; j <= height; ++j) {
        corner[static_cast<std::size_t>(i) * fb.size() + j] = bvn_cdf(fa[i], fb[j], rho);
      }
    }
    for (int iy = 0; iy < height; ++iy) {
      for (int ix = 0; ix < width; ++ix) {
        const std::size_t c00 = static_cast<std::size_t>(ix) * fb.size() + iy;
        const std::size_t c10 = c00 + fb.size();
        double mass = corner[c10 + 1] - corner[c00 + 1] - corner[c10] + corner[c00];
        img.at(iy, ix) += comp.weight * std::max(mass, 0.0);
      }
    }
    cov_a += comp.weight * (norm_cdf(fa[width]) - norm_cdf(fa[0]));
    cov_b += comp.weight * (norm_cdf(fb[height]) - norm_cdf(fb[0]));
  }

  if (stats) {
    stats->coverage_first = cov_a;
    stats->coverage_second = cov_b;
    stats->warned = cov_a < 0.99 || cov_b < 0.99;
  }
  return normalize(img);
}

// ---------------------------------------------------------------------------
// Randomized initial states and dataset generation
// ---------------------------------------------------------------------------

// Sampling ranges for the randomized initial beam. Hidden-plane structure is
// deliberately correlated with the visible (x,y) plane (shared global scale,
// coupled means, width ratios) so the projection stack carries learnable
// cross-plane information.
struct InitialStateRanges {
  int n_components = 3;
  ParamRange weight_raw{0.5, 1.0};
  ParamRange global_scale{0.8, 1.2};
  ParamRange mean_transverse{-0.4, 0.4};   // mx, my
  ParamRange mean_angle{-0.15, 0.15};      // mx', my'
  ParamRange mean_long{-0.4, 0.4};         // independent part of mz, mE
  double mean_coupling = 0.5;              // mz = c*mx + (1-c)*u
  ParamRange sigma_transverse{0.18, 0.32};
  double sigma_angle_ratio = 0.6;
  double sigma_long_ratio = 1.0;
  double sigma_energy_ratio = 0.8;
  ParamRange ratio_wiggle{0.85, 1.15};
  ParamRange tilt{-0.5, 0.5};              // in-plane rotation angles
};

inline BeamState sample_initial_state(Rng& rng, const InitialStateRanges& r) {
  BeamState state;
  state.components.resize(r.n_components);
  double total = 0.0;
  for (auto& c : state.components) {
    c.weight = rng.uniform(r.weight_raw.lo, r.weight_raw.hi);
    total += c.weight;
  }
  for (auto& c : state.components) c.weight /= total;

  const double g = rng.uniform(r.global_scale.lo, r.global_scale.hi);
  for (auto& c : state.components) {
    const double mx = rng.uniform(r.mean_transverse.lo, r.mean_transverse.hi);
    const double my = rng.uniform(r.mean_transverse.lo, r.mean_transverse.hi);
    const double mxp = rng.uniform(r.mean_angle.lo, r.mean_angle.hi);
    const double myp = rng.uniform(r.mean_angle.lo, r.mean_angle.hi);
    const double uz = rng.uniform(r.mean_long.lo, r.mean_long.hi);
    const double uE = rng.uniform(r.mean_long.lo, r.mean_long.hi);
    c.mean << mx, mxp, my, myp,
        r.mean_coupling * mx + (1.0 - r.mean_coupling) * uz,
        r.mean_coupling * my + (1.0 - r.mean_coupling) * uE;

    const double sx = g * rng.uniform(r.sigma_transverse.lo, r.sigma_transverse.hi);
    const double sy = g * rng.uniform(r.sigma_transverse.lo, r.sigma_transverse.hi);
    const double sxp = r.sigma_angle_ratio * sx * rng.uniform(r.ratio_wiggle.lo, r.ratio_wiggle.hi);
    const double syp = r.sigma_angle_ratio * sy * rng.uniform(r.ratio_wiggle.lo, r.ratio_wiggle.hi);
    const double st = 0.5 * (sx + sy);
    const double sz = r.sigma_long_ratio * st * rng.uniform(r.ratio_wiggle.lo, r.ratio_wiggle.hi);
    const double sE = r.sigma_energy_ratio * st * rng.uniform(r.ratio_wiggle.lo, r.ratio_wiggle.hi);

    Vec6 sig;
    sig << sx, sxp, sy, syp, sz, sE;
    Mat6 cov = Mat6::Zero();
    for (int i = 0; i < 6; ++i) cov(i, i) = sig(i) * sig(i);

    // tilt each conjugate plane with a Givens rotation (keeps SPD exactly)
    Mat6 rot = Mat6::Identity();
    const int planes[3][2] = {{0, 1}, {2, 3}, {4, 5}};
    for (const auto& pl : planes) {
      const double th = rng.uniform(r.tilt.lo, r.tilt.hi);
      rot(pl[0], pl[0]) = std::cos(th);
      rot(pl[0], pl[1]) = -std::sin(th);
      rot(pl[1], pl[0]) = std::sin(th);
      rot(pl[1], pl[1]) = std::cos(th);
    }
    c.cov = rot * cov * rot.transpose();
    c.cov = 0.5 * (c.cov + c.cov.transpose());
  }
  return state;
}

inline MachineParams sample_params(Rng& rng, const ParamRanges& ranges) {
  MachineParams p;
  for (int i = 0; i < kNumMachineParams; ++i) {
    p.p[i] = rng.uniform(ranges.r[i].lo, ranges.r[i].hi);
  }
  return p;
}

inline ParamRanges default_param_ranges() {
  ParamRanges r;
  for (auto& pr : r.r) pr = {-1.0, 1.0};
  return r;
}

inline std::array<ParamRange, kNumAxes> default_axis_extent() {
  std::array<ParamRange, kNumAxes> e;
  for (auto& pr : e) pr = {-2.0, 2.0};
  return e;
}

inline std::vector<AxisPair> default_channels() {
  return {{Axis::X, Axis::Xp}, {Axis::Y, Axis::Yp}, {Axis::Z, Axis::E}};
}

inline Extent2 pair_extent(const std::array<ParamRange, kNumAxes>& axis_extent,
                           AxisPair pair) {
  const ParamRange& a = axis_extent[static_cast<int>(pair.first)];
  const ParamRange& b = axis_extent[static_cast<int>(pair.second)];
  return Extent2{a.lo, a.hi, b.lo, b.hi};
}

struct GeneratorConfig {
  std::uint64_t seed = 1;
  int n = 5000;
  int input_size = 16;
  int output_size = 32;
  ParamRanges param_ranges = default_param_ranges();
  InitialStateRanges state_ranges{};
  std::array<ParamRange, kNumAxes> axis_extent = default_axis_extent();
  std::vector<AxisPair> channels = default_channels();
  MapCoefficients map{};
};

struct SampleRecord {
  ImageGrid input;        // (x,y) projection of the initial state
  MachineParams params;
  ProjectionSet projections;  // transported state, configured channels
};

// Record i depends only on (seed, i), so any prefix of a longer run is
// reproducible and generation order is immaterial.
inline SampleRecord generate_record(const GeneratorConfig& cfg, std::uint64_t index) {
  Rng rng(mix_seed(cfg.seed, index));
  BeamState initial = sample_initial_state(rng, cfg.state_ranges);
  MachineParams params = sample_params(rng, cfg.param_ranges);

  SampleRecord rec;
  rec.input = project(initial, {Axis::X, Axis::Y}, cfg.input_size, cfg.input_size,
                      pair_extent(cfg.axis_extent, {Axis::X, Axis::Y}));
  rec.params = params;

  BeamState after = transport(initial, params, cfg.map);
  std::vector<ImageGrid> grids;
  grids.reserve(cfg.channels.size());
  for (AxisPair pair : cfg.channels) {
    grids.push_back(project(after, pair, cfg.output_size, cfg.output_size,
                            pair_extent(cfg.axis_extent, pair)));
  }
  rec.projections = ProjectionSet(cfg.channels, std::move(grids));
  return rec;
}

inline std::vector<SampleRecord> generate_dataset(const GeneratorConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("generate_dataset: n must be >= 1");
  std::vector<SampleRecord> records;
  records.reserve(cfg.n);
  for (int i = 0; i < cfg.n; ++i) {
    records.push_back(generate_record(cfg, static_cast<std::uint64_t>(i)));
  }
  return records;
}

// ---------------------------------------------------------------------------
// Smooth bounded drift of the source
// ---------------------------------------------------------------------------

struct Sinusoid {
  double amplitude = 0.0;
  double phase = 0.0;
};

// Periodic drift of machine parameters and of the initial beam. Every channel
// uses amp * (sin(2 pi t / period + phase) - sin(phase)), which vanishes at
// t = 0 and returns to zero every period.
struct DriftSchedule {
  double period = 2000.0;
  std::array<Sinusoid, kNumMachineParams> param_drift{};
  std::array<Sinusoid, kNumAxes> mean_drift{};
  std::array<Sinusoid, kNumAxes> scale_drift{};  // |amplitude| must stay < 0.5

  double eval(const Sinusoid& s, double t) const {
    return s.amplitude *
           (std::sin(6.283185307179586 * t / period + s.phase) - std::sin(s.phase));
  }

  void validate() const {
    if (!(period > 0.0)) throw std::invalid_argument("DriftSchedule: period must be > 0");
    for (const auto& s : scale_drift) {
      if (std::fabs(s.amplitude) >= 0.5) {
        throw std::invalid_argument("DriftSchedule: scale amplitude too large");
      }
    }
  }
};

inline std::pair<BeamState, MachineParams> drift_trajectory(
    double t, const DriftSchedule& sched, const BeamState& base_state,
    const MachineParams& base_params) {
  if (t < 0.0) throw std::invalid_argument("drift_trajectory: t must be >= 0");
  MachineParams params = base_params;
  for (int i = 0; i < kNumMachineParams; ++i) {
    params.p[i] += sched.eval(sched.param_drift[i], t);
  }
  TransportMap drift;
  for (int a = 0; a < kNumAxes; ++a) {
    drift.matrix(a, a) = 1.0 + sched.eval(sched.scale_drift[a], t);
    drift.offset(a) = sched.eval(sched.mean_drift[a], t);
  }
  return {apply_map(base_state, drift), params};
}

// ---------------------------------------------------------------------------
// System bounds (Lipschitz / variation / drift rate), verified by sampling
// ---------------------------------------------------------------------------

struct SystemBounds {
  double lipschitz_L = 1.2;
  double variation_M = 2.5;
  double drift_rate_MF = 0.001;
};

inline double operator_norm(const Mat6& m) {
  Eigen::JacobiSVD<Mat6> svd(m);
  return svd.singularValues()(0);
}

inline double estimate_map_lipschitz(const ParamRanges& ranges, const MapCoefficients& k,
                                     int n_pairs, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < n_pairs; ++i) {
    MachineParams p1 = sample_params(rng, ranges);
    MachineParams p2 = sample_params(rng, ranges);
    double dp = 0.0;
    for (int j = 0; j < kNumMachineParams; ++j) {
      double d = p1.p[j] - p2.p[j];
      dp += d * d;
    }
    dp = std::sqrt(dp);
    if (dp < 1e-9) continue;
    double dm = operator_norm(map_from_params(p1, k).matrix - map_from_params(p2, k).matrix);
    worst = std::max(worst, dm / dp);
  }
  return worst;
}

inline double estimate_map_variation(const ParamRanges& ranges, const MapCoefficients& k,
                                     int n_pairs, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < n_pairs; ++i) {
    MachineParams p1 = sample_params(rng, ranges);
    MachineParams p2 = sample_params(rng, ranges);
    worst = std::max(worst, operator_norm(map_from_params(p1, k).matrix -
                                          map_from_params(p2, k).matrix));
  }
  return worst;
}

// Finite-differenced norm of the drift-trajectory time derivative, stacked
// over parameters, component means, and covariance entries.
inline double estimate_drift_rate(const DriftSchedule& sched, const BeamState& base_state,
                                  const MachineParams& base_params, int n_samples,
                                  std::uint64_t seed) {
  Rng rng(seed);
  const double h = 1e-4;
  auto flatten = [](const BeamState& s, const MachineParams& p) {
    std::vector<double> v(p.p.begin(), p.p.end());
    for (const auto& c : s.components) {
      for (int i = 0; i < 6; ++i) v.push_back(c.mean(i));
      for (int i = 0; i < 6; ++i) {
        for (int j = i; j < 6; ++j) v.push_back(c.cov(i, j));
      }
    }
    return v;
  };
  double worst = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    double t = rng.uniform(0.0, sched.period);
    auto [s1, p1] = drift_trajectory(t, sched, base_state, base_params);
    auto [s2, p2] = drift_trajectory(t + h, sched, base_state, base_params);
    auto v1 = flatten(s1, p1);
    auto v2 = flatten(s2, p2);
    double acc = 0.0;
    for (std::size_t j = 0; j < v1.size(); ++j) {
      double d = (v2[j] - v1[j]) / h;
      acc += d * d;
    }
    worst = std::max(worst, std::sqrt(acc));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// PCA distribution-shift diagnostic
// ---------------------------------------------------------------------------

struct PcaComponentReport {
  int component = 0;
  double eigenvalue = 0.0;
  double overlap = 0.0;  // histogram overlap coefficient, in [0, 1]
  std::vector<double> bin_edges;
  std::vector<double> train_hist;  // fractions, sum to 1
  std::vector<double> test_hist;
};

// Fits principal components on mean-centered flattened train images (covariance
// eigendecomposition, components by descending eigenvalue, largest-magnitude
// loading made positive), projects both sets, and pairs up histograms.
inline std::vector<PcaComponentReport> pca_shift_report(
    const std::vector<ImageGrid>& train, const std::vector<ImageGrid>& test,
    int n_components, int n_bins = 50) {
  if (train.size() < 2 || test.size() < 2) {
    throw std::invalid_argument("pca_shift_report: need at least 2 images per set");
  }
  const int dim = train[0].width * train[0].height;
  for (const auto& g : train) {
    if (!g.same_shape(train[0])) throw std::invalid_argument("pca_shift_report: mixed shapes");
  }
  for (const auto& g : test) {
    if (!g.same_shape(train[0])) throw std::invalid_argument("pca_shift_report: mixed shapes");
  }
  if (n_components < 1 ||
      n_components > static_cast<int>(train.size()) - 1 || n_components > dim) {
    throw std::invalid_argument("pca_shift_report: fewer images than requested components");
  }

  const int n_train = static_cast<int>(train.size());
  Eigen::MatrixXd x(n_train, dim);
  for (int i = 0; i < n_train; ++i) {
    for (int j = 0; j < dim; ++j) x(i, j) = train[i].pixels[j];
  }
  Eigen::RowVectorXd mean = x.colwise().mean();
  Eigen::MatrixXd centered = x.rowwise() - mean;
  Eigen::MatrixXd cov = centered.transpose() * centered / double(n_train - 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("pca_shift_report: eigendecomposition failed");
  }

  std::vector<PcaComponentReport> reports;
  reports.reserve(n_components);
  for (int c = 0; c < n_components; ++c) {
    Eigen::VectorXd dir = solver.eigenvectors().col(dim - 1 - c);
    int peak = 0;
    for (int j = 1; j < dim; ++j) {
      if (std::fabs(dir(j)) > std::fabs(dir(peak))) peak = j;
    }
    if (dir(peak) < 0.0) dir = -dir;

    auto project_set = [&](const std::vector<ImageGrid>& set) {
      std::vector<double> out(set.size());
      for (std::size_t i = 0; i < set.size(); ++i) {
        double acc = 0.0;
        for (int j = 0; j < dim; ++j) acc += (set[i].pixels[j] - mean(j)) * dir(j);
        out[i] = acc;
      }
      return out;
    };
    std::vector<double> pt = project_set(train);
    std::vector<double> pq = project_set(test);

    double lo = pt[0], hi = pt[0];
    for (double v : pt) { lo = std::min(lo, v); hi = std::max(hi, v); }
    for (double v : pq) { lo = std::min(lo, v); hi = std::max(hi, v); }
    if (hi - lo < 1e-12) hi = lo + 1e-12;

    PcaComponentReport rep;
    rep.component = c;
    rep.eigenvalue = solver.eigenvalues()(dim - 1 - c);
    rep.bin_edges.resize(n_bins + 1);
    for (int b = 0; b <= n_bins; ++b) {
      rep.bin_edges[b] = lo + (hi - lo) * b / n_bins;
    }
    rep.train_hist.assign(n_bins, 0.0);
    rep.test_hist.assign(n_bins, 0.0);
    auto fill = [&](const std::vector<double>& vals, std::vector<double>& hist) {
      for (double v : vals) {
        int b = static_cast<int>((v - lo) / (hi - lo) * n_bins);
        b = std::clamp(b, 0, n_bins - 1);
        hist[b] += 1.0 / vals.size();
      }
    };
    fill(pt, rep.train_hist);
    fill(pq, rep.test_hist);
    rep.overlap = 0.0;
    for (int b = 0; b < n_bins; ++b) {
      rep.overlap += std::min(rep.train_hist[b], rep.test_hist[b]);
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace lstune
