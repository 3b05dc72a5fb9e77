#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bpv/errors.hpp"

namespace bpv {

/// Doubly periodic uniform grid on [0, lx) x [0, ly).
///
/// Points sit at (i*dx, j*dy). Storage of every field on the grid is
/// row-major with i (the x index) fastest: index = i + nx*j.
class Grid {
 public:
  Grid(int nx, int ny, double lx, double ly);

  int nx() const noexcept { return nx_; }
  int ny() const noexcept { return ny_; }
  double lx() const noexcept { return lx_; }
  double ly() const noexcept { return ly_; }
  double dx() const noexcept { return lx_ / nx_; }
  double dy() const noexcept { return ly_ / ny_; }
  double cell_area() const noexcept { return dx() * dy(); }
  std::size_t size() const noexcept { return static_cast<std::size_t>(nx_) * ny_; }

  double x(int i) const noexcept { return i * dx(); }
  double y(int j) const noexcept { return j * dy(); }
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) + static_cast<std::size_t>(nx_) * j;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int nx_;
  int ny_;
  double lx_;
  double ly_;
};

/// Real scalar field sampled on a grid (psi, zeta, ...).
class RealField {
 public:
  explicit RealField(const Grid& grid, double fill = 0.0);
  RealField(const Grid& grid, std::vector<double> values);

  template <class F>
  static RealField from_function(const Grid& grid, F&& f) {
    RealField out(grid);
    for (int j = 0; j < grid.ny(); ++j)
      for (int i = 0; i < grid.nx(); ++i) out(i, j) = f(grid.x(i), grid.y(j));
    return out;
  }

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }

  double& operator()(int i, int j) noexcept { return values_[grid_.index(i, j)]; }
  double operator()(int i, int j) const noexcept { return values_[grid_.index(i, j)]; }
  double& operator[](std::size_t k) noexcept { return values_[k]; }
  double operator[](std::size_t k) const noexcept { return values_[k]; }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }
  double* data() noexcept { return values_.data(); }
  const double* data() const noexcept { return values_.data(); }

  RealField& operator+=(const RealField& o);
  RealField& operator-=(const RealField& o);
  RealField& operator*=(double s);

  friend RealField operator+(RealField a, const RealField& b) { return a += b; }
  friend RealField operator-(RealField a, const RealField& b) { return a -= b; }
  friend RealField operator*(RealField a, double s) { return a *= s; }
  friend RealField operator*(double s, RealField a) { return a *= s; }

  bool all_finite() const noexcept;
  double mean() const noexcept;
  double max_abs() const noexcept;
  /// Euclidean norm of the value array (no area weight).
  double l2() const noexcept;
  void subtract_mean() noexcept;

 private:
  Grid grid_;
  std::vector<double> values_;
};

void require_same_grid(const RealField& a, const RealField& b, const char* where);

/// Relative L2 distance ||a-b|| / ||b|| (absolute when b is zero).
double relative_l2(const RealField& a, const RealField& b);

}  // namespace bpv
