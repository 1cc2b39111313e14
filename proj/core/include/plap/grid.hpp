#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace plap {

// Uniform grid in 1, 2, or 3 dimensions; unused axes have extent 1.
// Values are stored row-major: index = (i*shape[1] + j)*shape[2] + k.
struct GridGeometry {
  int dim = 2;
  std::array<int, 3> shape{1, 1, 1};
  double h = 1.0;
  std::array<double, 3> origin{0.0, 0.0, 0.0};

  void validate() const;
  std::int64_t num_points() const {
    return static_cast<std::int64_t>(shape[0]) * shape[1] * shape[2];
  }
  std::int64_t index(int i, int j, int k) const {
    return (static_cast<std::int64_t>(i) * shape[1] + j) * shape[2] + k;
  }
  std::array<std::int64_t, 3> strides() const {
    return {static_cast<std::int64_t>(shape[1]) * shape[2],
            static_cast<std::int64_t>(shape[2]), 1};
  }
  double coord(int axis, int idx) const { return origin[axis] + h * idx; }
  std::array<double, 3> point(int i, int j, int k) const {
    return {coord(0, i), coord(1, j), coord(2, k)};
  }
  bool operator==(const GridGeometry&) const = default;

  static GridGeometry unit_square(int cells_per_axis, int dim = 2,
                                  std::array<double, 3> origin = {0.0, 0.0, 0.0});
};

using PointFunction = std::function<double(const std::array<double, 3>&)>;

// Scalar grid function. `margin` counts boundary layers (per axis, both ends)
// whose values are not meaningful; derived fields grow it by their stencil
// width. Values at invalid points are kept at 0.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(const GridGeometry& geom, int margin = 0, double fill = 0.0);

  static ScalarField sample(const GridGeometry& geom, const PointFunction& f);

  const GridGeometry& geom() const { return geom_; }
  int margin() const { return margin_; }
  void set_margin(int m) { margin_ = m; }

  double at(int i, int j = 0, int k = 0) const { return values_[geom_.index(i, j, k)]; }
  double& at(int i, int j = 0, int k = 0) { return values_[geom_.index(i, j, k)]; }

  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }
  const double* data() const { return values_.data(); }
  double* data() { return values_.data(); }

  // True when per-axis indices lie in [margin, extent-1-margin] on used axes.
  bool valid(int i, int j = 0, int k = 0) const;
  double max_abs_valid() const;

 private:
  GridGeometry geom_;
  int margin_ = 0;
  std::vector<double> values_;
};

struct VectorField {
  std::vector<ScalarField> comp;  // one ScalarField per axis, size dim

  const GridGeometry& geom() const { return comp.front().geom(); }
  int margin() const { return comp.front().margin(); }
};

// Symmetric matrix field stored as the packed upper triangle (i <= j).
struct SymMatrixField {
  int dim = 0;
  std::vector<ScalarField> comp;  // size dim*(dim+1)/2

  static int pack_index(int i, int j, int dim);
  const ScalarField& entry(int i, int j) const { return comp[pack_index(i, j, dim)]; }
  ScalarField& entry(int i, int j) { return comp[pack_index(i, j, dim)]; }
  const GridGeometry& geom() const { return comp.front().geom(); }
  int margin() const { return comp.front().margin(); }
};

// Scalar grid function on a space-time cylinder: one spatial layer per time
// level, layer count = steps + 1, layer k at time dt*k. Carries a spatial
// margin and a valid layer range [first_valid_layer, last_valid_layer] for
// derived quantities such as forward-difference time derivatives.
class SpaceTimeField {
 public:
  SpaceTimeField() = default;
  SpaceTimeField(const GridGeometry& geom, double dt, int steps, int margin = 0);

  const GridGeometry& geom() const { return geom_; }
  double dt() const { return dt_; }
  int steps() const { return steps_; }
  double time(int layer) const { return dt_ * layer; }

  int margin() const { return margin_; }
  void set_margin(int m) { margin_ = m; }
  int first_valid_layer() const { return time_lo_; }
  int last_valid_layer() const { return time_hi_; }
  void set_valid_layers(int lo, int hi) { time_lo_ = lo; time_hi_ = hi; }

  double at(int layer, int i, int j = 0, int k = 0) const {
    return values_[static_cast<std::size_t>(layer) * layer_size_ + geom_.index(i, j, k)];
  }
  double& at(int layer, int i, int j = 0, int k = 0) {
    return values_[static_cast<std::size_t>(layer) * layer_size_ + geom_.index(i, j, k)];
  }
  std::span<const double> layer(int k) const {
    return {values_.data() + static_cast<std::size_t>(k) * layer_size_, layer_size_};
  }
  std::span<double> layer(int k) {
    return {values_.data() + static_cast<std::size_t>(k) * layer_size_, layer_size_};
  }
  ScalarField layer_field(int k) const;

  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

 private:
  GridGeometry geom_;
  double dt_ = 0.0;
  int steps_ = 0;
  int margin_ = 0;
  int time_lo_ = 0;
  int time_hi_ = 0;
  std::size_t layer_size_ = 0;
  std::vector<double> values_;
};

// Localized integration domain: a sup-norm ball-box B(z,r), or the parabolic
// cylinder Q_r(z,s) = (s - r^2, s] x B(z,r).
struct Region {
  enum class Kind { Ball, Cylinder };

  Kind kind = Kind::Ball;
  std::array<double, 3> center{0.0, 0.0, 0.0};
  double radius = 0.0;
  double time_anchor = 0.0;  // s, cylinders only

  static Region ball(std::array<double, 3> center, double radius);
  static Region cylinder(std::array<double, 3> center, double radius,
                         double time_anchor);
  // 2B(z,r) = B(z,2r); Q_{2r}(z,s) = (s - 4r^2, s] x B(z,2r).
  Region doubled() const;
};

// Applies f(i, j, k) to every point whose used-axis indices lie in
// [margin, extent-1-margin], in row-major order.
void for_each_point(const GridGeometry& geom, int margin,
                    const std::function<void(int, int, int)>& f);

}  // namespace plap
