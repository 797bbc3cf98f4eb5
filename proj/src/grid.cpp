#include <cmath>
#include <numbers>
#include <string>

#include "ghl/error.hpp"
#include "ghl/numerics.hpp"

namespace ghl {

Grid::Grid(double L, int N) : half_width(L), npoints(N) {
  if (!(L > 0) || !std::isfinite(L)) throw InvalidParameter("grid half-width must be positive");
  if (N < 16 || (N & (N - 1)) != 0)
    throw InvalidParameter("grid size must be a power of two >= 16, got " + std::to_string(N));
}

double Grid::wavenumber(int k) const { return std::numbers::pi * k / half_width; }

GridFunction::GridFunction(const Grid& g, double fill)
    : grid_(g), v_(static_cast<std::size_t>(g.npoints), fill) {}

GridFunction::GridFunction(const Grid& g, std::vector<double> values)
    : grid_(g), v_(std::move(values)) {
  if (static_cast<int>(v_.size()) != g.npoints)
    throw GridMismatch("value count " + std::to_string(v_.size()) + " does not match grid size " +
                       std::to_string(g.npoints));
}

GridFunction GridFunction::sample(const Grid& g, const std::function<double(double)>& f) {
  GridFunction r(g);
  for (int i = 0; i < g.npoints; ++i) r[i] = f(g.x(i));
  return r;
}

double GridFunction::max_abs() const {
  double m = 0;
  for (double v : v_) m = std::max(m, std::abs(v));
  return m;
}

double GridFunction::l2() const {
  double s = 0;
  for (double v : v_) s += v * v;
  return std::sqrt(grid_.spacing() * s);
}

bool GridFunction::all_finite() const {
  for (double v : v_)
    if (!std::isfinite(v)) return false;
  return true;
}

void require_same_grid(const GridFunction& a, const GridFunction& b) {
  if (!(a.grid() == b.grid()) || a.size() != b.size())
    throw GridMismatch("operands live on different grids");
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
  require_same_grid(*this, o);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
  require_same_grid(*this, o);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

GridFunction& GridFunction::operator*=(double s) {
  for (double& v : v_) v *= s;
  return *this;
}

GridFunction operator*(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b);
  GridFunction r(a.grid());
  for (int i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
  return r;
}

}  // namespace ghl
