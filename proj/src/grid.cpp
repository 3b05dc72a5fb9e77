#include "bpv/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bpv/kernels.hpp"

namespace bpv {

Grid::Grid(int nx, int ny, double lx, double ly) : nx_(nx), ny_(ny), lx_(lx), ly_(ly) {
  if (nx < 4 || ny < 4 || nx % 2 != 0 || ny % 2 != 0)
    throw ConfigError("grid counts must be even and >= 4, got " + std::to_string(nx) + "x" +
                      std::to_string(ny));
  if (!(lx > 0.0) || !(ly > 0.0) || !std::isfinite(lx) || !std::isfinite(ly))
    throw ConfigError("grid lengths must be positive and finite");
}

RealField::RealField(const Grid& grid, double fill) : grid_(grid), values_(grid.size(), fill) {}

RealField::RealField(const Grid& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw ShapeError("value array of size " + std::to_string(values_.size()) +
                     " does not match grid of size " + std::to_string(grid_.size()));
}

RealField& RealField::operator+=(const RealField& o) {
  require_same_grid(*this, o, "operator+=");
  kernels::axpy(1.0, o.values(), values());
  return *this;
}

RealField& RealField::operator-=(const RealField& o) {
  require_same_grid(*this, o, "operator-=");
  kernels::axpy(-1.0, o.values(), values());
  return *this;
}

RealField& RealField::operator*=(double s) {
  kernels::scale(s, values());
  return *this;
}

bool RealField::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

double RealField::mean() const noexcept {
  return kernels::sum(grid_, values()) / static_cast<double>(values_.size());
}

double RealField::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double RealField::l2() const noexcept { return std::sqrt(kernels::dot(grid_, values(), values())); }

void RealField::subtract_mean() noexcept {
  const double m = mean();
  for (double& v : values_) v -= m;
}

void require_same_grid(const RealField& a, const RealField& b, const char* where) {
  if (!(a.grid() == b.grid())) throw ShapeError(std::string(where) + ": fields live on different grids");
}

double relative_l2(const RealField& a, const RealField& b) {
  require_same_grid(a, b, "relative_l2");
  const double nb = b.l2();
  const double d = (a - b).l2();
  return nb > 0.0 ? d / nb : d;
}

}  // namespace bpv
