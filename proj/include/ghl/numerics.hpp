#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <vector>

namespace ghl {

class ClosedForm;
struct HierarchyEquation;

/// Uniform periodic grid on [-L, L) with N points, N a power of two >= 16.
struct Grid {
  double half_width = 40;
  int npoints = 2048;

  Grid() = default;
  Grid(double L, int N);

  double spacing() const { return 2 * half_width / npoints; }
  double x(int i) const { return -half_width + i * spacing(); }
  double length() const { return 2 * half_width; }
  /// Angular wavenumber of FFT bin k (k <= N/2).
  double wavenumber(int k) const;

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.half_width == b.half_width && a.npoints == b.npoints;
  }
};

class GridFunction {
 public:
  GridFunction() = default;
  explicit GridFunction(const Grid& g, double fill = 0.0);
  GridFunction(const Grid& g, std::vector<double> values);
  static GridFunction sample(const Grid& g, const std::function<double(double)>& f);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& values() const { return v_; }
  std::vector<double>& values() { return v_; }
  int size() const { return static_cast<int>(v_.size()); }
  double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }

  double max_abs() const;
  double l2() const;  // sqrt(h sum v^2)
  bool all_finite() const;

  GridFunction& operator+=(const GridFunction& o);
  GridFunction& operator-=(const GridFunction& o);
  GridFunction& operator*=(double s);
  friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
  friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
  friend GridFunction operator*(GridFunction a, double s) { return a *= s; }
  friend GridFunction operator*(double s, GridFunction a) { return a *= s; }
  /// pointwise product
  friend GridFunction operator*(const GridFunction& a, const GridFunction& b);

 private:
  Grid grid_;
  std::vector<double> v_;
};

/// Throws GridMismatch unless a and b share a grid.
void require_same_grid(const GridFunction& a, const GridFunction& b);

// ---------------------------------------------------------------- spectral

/// Forward real FFT: N/2+1 complex bins, unnormalized.
std::vector<std::complex<double>> forward_fft(const GridFunction& f);
/// Inverse of forward_fft (includes the 1/N).
GridFunction inverse_fft(const Grid& g, const std::vector<std::complex<double>>& spec);

/// Fourier multiplier (i xi)^order. The Nyquist bin is zeroed for odd orders.
GridFunction spectral_derivative(const GridFunction& f, int order);

/// h * sum f
double quadrature(const GridFunction& f);

/// sqrt((h/N) sum_k (1 + xi_k^2)^s |f_k|^2) over the full two-sided spectrum.
double sobolev_norm(const GridFunction& f, double s);

/// u, u_x, ..., u_{K x} on a grid.
struct DerivativeStack {
  std::vector<GridFunction> d;
  int order() const { return static_cast<int>(d.size()) - 1; }
  const GridFunction& operator[](int j) const { return d[static_cast<std::size_t>(j)]; }
  const Grid& grid() const { return d.front().grid(); }
};

DerivativeStack spectral_stack(const GridFunction& f, int order);
/// Exact derivatives of a closed form sampled on the grid (OpenMP over points).
DerivativeStack analytic_stack(const ClosedForm& u, double t, const Grid& g, int order);

/// u(t, .) on the grid.
GridFunction sample_solution(const ClosedForm& u, double t, const Grid& g);

/// Exact chain-rule time derivative of a closed form sampled on the grid.
GridFunction time_derivative(const ClosedForm& u, double t, const Grid& g);

/// RHS F of u_t = F with numeric mu. Derivatives are computed spectrally.
GridFunction rhs_eval(const HierarchyEquation& eqn, const GridFunction& f, double mu);
/// Same from a precomputed derivative stack (order >= 2n+1).
GridFunction rhs_eval(const HierarchyEquation& eqn, const DerivativeStack& s, double mu);

/// Rows "x,value" with 17 significant digits, with a header line.
void write_csv(std::ostream& os, const GridFunction& f, const char* column = "u");

}  // namespace ghl
