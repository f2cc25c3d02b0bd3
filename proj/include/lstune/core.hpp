#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace lstune {

// Phase-space axes in canonical order (x, x', y, y', z, E).
enum class Axis : int { X = 0, Xp = 1, Y = 2, Yp = 3, Z = 4, E = 5 };

constexpr int kNumAxes = 6;

inline const char* axis_name(Axis a) {
  static const char* names[kNumAxes] = {"x", "x'", "y", "y'", "z", "E"};
  return names[static_cast<int>(a)];
}

// File-safe label ("x'" -> "xp").
inline const char* axis_key(Axis a) {
  static const char* keys[kNumAxes] = {"x", "xp", "y", "yp", "z", "E"};
  return keys[static_cast<int>(a)];
}

inline Axis axis_from_key(const std::string& key) {
  for (int i = 0; i < kNumAxes; ++i) {
    Axis a = static_cast<Axis>(i);
    if (key == axis_key(a)) return a;
  }
  throw std::invalid_argument("unknown axis key: " + key);
}

// One of the 15 distinct 2D projection planes of the 6D phase space.
struct AxisPair {
  Axis first{};
  Axis second{};

  bool operator==(const AxisPair&) const = default;

  std::string name() const {
    return std::string("(") + axis_name(first) + "," + axis_name(second) + ")";
  }
  std::string key() const {
    return std::string(axis_key(first)) + "_" + axis_key(second);
  }
};

// The 15 projection planes, in the order the channels are laid out.
inline const std::array<AxisPair, 15>& axis_pairs() {
  static const std::array<AxisPair, 15> pairs = {{
      {Axis::X, Axis::Y},   {Axis::X, Axis::Z},   {Axis::X, Axis::Xp},
      {Axis::X, Axis::Yp},  {Axis::X, Axis::E},   {Axis::Xp, Axis::Y},
      {Axis::Xp, Axis::Z},  {Axis::Xp, Axis::Yp}, {Axis::Xp, Axis::E},
      {Axis::Y, Axis::Z},   {Axis::Y, Axis::Yp},  {Axis::Y, Axis::E},
      {Axis::Yp, Axis::Z},  {Axis::Yp, Axis::E},  {Axis::Z, Axis::E},
  }};
  return pairs;
}

inline std::vector<AxisPair> enumerate_axis_pairs() {
  const auto& pairs = axis_pairs();
  return std::vector<AxisPair>(pairs.begin(), pairs.end());
}

inline int axis_pair_index(AxisPair p) {
  const auto& pairs = axis_pairs();
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
    if (pairs[i] == p) return i;
  }
  throw std::invalid_argument("not a canonical axis pair: " + p.name());
}

inline AxisPair axis_pair_from_key(const std::string& key) {
  auto sep = key.find('_');
  if (sep == std::string::npos) {
    throw std::invalid_argument("malformed axis-pair key: " + key);
  }
  return AxisPair{axis_from_key(key.substr(0, sep)),
                  axis_from_key(key.substr(sep + 1))};
}

// Physical ranges of a 2D grid. x spans columns (the pair's first axis),
// y spans rows (the second axis).
struct Extent2 {
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;

  bool operator==(const Extent2&) const = default;
};

// A 2D density projection. Pixel values are non-negative probability mass
// per cell; a normalized grid sums to 1. Row-major, pixels[row * width + col];
// cell (row, col) covers a fixed physical rectangle determined by extent, so
// a given pixel means the same physical region for every sample.
struct ImageGrid {
  int width = 0;
  int height = 0;
  Extent2 extent{};
  std::vector<double> pixels;

  static ImageGrid zeros(int width, int height, const Extent2& extent = {}) {
    ImageGrid g;
    g.width = width;
    g.height = height;
    g.extent = extent;
    g.pixels.assign(static_cast<std::size_t>(width) * height, 0.0);
    return g;
  }

  double& at(int row, int col) {
    return pixels[static_cast<std::size_t>(row) * width + col];
  }
  double at(int row, int col) const {
    return pixels[static_cast<std::size_t>(row) * width + col];
  }

  double sum() const {
    double s = 0.0;
    for (double v : pixels) s += v;
    return s;
  }

  bool same_shape(const ImageGrid& other) const {
    return width == other.width && height == other.height;
  }

  double cell_width() const { return (extent.x_max - extent.x_min) / width; }
  double cell_height() const { return (extent.y_max - extent.y_min) / height; }

  void validate() const {
    if (width <= 0 || height <= 0) {
      throw std::invalid_argument("ImageGrid: non-positive dimensions");
    }
    if (pixels.size() != static_cast<std::size_t>(width) * height) {
      throw std::invalid_argument("ImageGrid: pixel count does not match shape");
    }
    for (double v : pixels) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument("ImageGrid: pixel values must be finite and >= 0");
      }
    }
  }
};

inline std::string shape_string(const ImageGrid& g) {
  return std::to_string(g.width) + "x" + std::to_string(g.height);
}

// Mean squared error between two equal-shape grids:
//   (1 / (Nx Ny)) sum_ij (a_ij - b_ij)^2
inline double mse(const ImageGrid& a, const ImageGrid& b) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument("mse: grid shapes differ (" + shape_string(a) +
                                " vs " + shape_string(b) + ")");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    double d = a.pixels[i] - b.pixels[i];
    acc += d * d;
  }
  return acc / static_cast<double>(a.pixels.size());
}

// Rescales a grid to unit total mass. Rejects all-zero input.
inline ImageGrid normalize(const ImageGrid& g) {
  double total = g.sum();
  if (!(total > 0.0)) {
    throw std::invalid_argument("normalize: degenerate density (total mass is zero)");
  }
  ImageGrid out = g;
  for (double& v : out.pixels) v /= total;
  return out;
}

// Stack of projection channels, keyed by axis pair. Holds exactly the
// configured channel set; all grids share one shape.
class ProjectionSet {
 public:
  ProjectionSet() = default;

  ProjectionSet(std::vector<AxisPair> pairs, std::vector<ImageGrid> grids)
      : pairs_(std::move(pairs)), grids_(std::move(grids)) {
    if (pairs_.size() != grids_.size()) {
      throw std::invalid_argument("ProjectionSet: pair/grid count mismatch");
    }
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs_.size(); ++j) {
        if (pairs_[i] == pairs_[j]) {
          throw std::invalid_argument("ProjectionSet: duplicate channel " + pairs_[i].name());
        }
      }
      if (!grids_[i].same_shape(grids_[0])) {
        throw std::invalid_argument("ProjectionSet: channel shapes differ");
      }
    }
  }

  int count() const { return static_cast<int>(pairs_.size()); }
  const std::vector<AxisPair>& pairs() const { return pairs_; }
  const std::vector<ImageGrid>& grids() const { return grids_; }

  bool has_channel(AxisPair p) const {
    for (const auto& q : pairs_) {
      if (q == p) return true;
    }
    return false;
  }

  const ImageGrid& channel(AxisPair p) const {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (pairs_[i] == p) return grids_[i];
    }
    throw std::out_of_range("ProjectionSet: channel " + p.name() + " not configured");
  }

  ImageGrid& channel(AxisPair p) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (pairs_[i] == p) return grids_[i];
    }
    throw std::out_of_range("ProjectionSet: channel " + p.name() + " not configured");
  }

 private:
  std::vector<AxisPair> pairs_;
  std::vector<ImageGrid> grids_;
};

constexpr int kNumMachineParams = 5;

// The five accelerator-style knobs: gun energy analog, gun phase analog,
// buncher peak-field analog, buncher phase analog, solenoid analog.
struct MachineParams {
  std::array<double, kNumMachineParams> p{};

  bool operator==(const MachineParams&) const = default;
};

struct ParamRange {
  double lo = 0.0;
  double hi = 1.0;

  double center() const { return 0.5 * (lo + hi); }
  double half_width() const { return 0.5 * (hi - lo); }
  bool contains(double v) const { return v >= lo && v <= hi; }
};

struct ParamRanges {
  std::array<ParamRange, kNumMachineParams> r{};

  bool contains(const MachineParams& p) const {
    for (int i = 0; i < kNumMachineParams; ++i) {
      if (!r[i].contains(p.p[i])) return false;
    }
    return true;
  }
};

// Latent-space vector; addition is componentwise and length-checked.
struct LatentVector {
  std::vector<double> v;

  LatentVector() = default;
  explicit LatentVector(int n) : v(n, 0.0) {}
  explicit LatentVector(std::vector<double> values) : v(std::move(values)) {}

  int size() const { return static_cast<int>(v.size()); }
  double& operator[](int i) { return v[i]; }
  double operator[](int i) const { return v[i]; }

  LatentVector operator+(const LatentVector& other) const {
    if (v.size() != other.v.size()) {
      throw std::invalid_argument("LatentVector: length mismatch (" +
                                  std::to_string(v.size()) + " vs " +
                                  std::to_string(other.v.size()) + ")");
    }
    LatentVector out(*this);
    for (std::size_t i = 0; i < v.size(); ++i) out.v[i] += other.v[i];
    return out;
  }
};

}  // namespace lstune
