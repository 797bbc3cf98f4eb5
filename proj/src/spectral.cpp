#include <fftw3.h>

#include <cmath>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>

#include "ghl/closedform.hpp"
#include "ghl/error.hpp"
#include "ghl/hierarchy.hpp"
#include "ghl/kernels.hpp"
#include "ghl/numerics.hpp"

namespace ghl {
namespace {

// FFTW's planner is not thread safe; execution on distinct plans is.
std::mutex g_planner_mutex;

struct Workspace {
  int n;
  double* real;
  fftw_complex* spec;
  fftw_plan fwd;
  fftw_plan bwd;

  explicit Workspace(int n_) : n(n_) {
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    real = fftw_alloc_real(static_cast<std::size_t>(n));
    spec = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
    fwd = fftw_plan_dft_r2c_1d(n, real, spec, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_1d(n, spec, real, FFTW_ESTIMATE);
  }
  ~Workspace() {
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(real);
    fftw_free(spec);
  }
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;
};

Workspace& workspace(int n) {
  thread_local std::map<int, std::unique_ptr<Workspace>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Workspace>(n);
  return *slot;
}

}  // namespace

std::vector<std::complex<double>> forward_fft(const GridFunction& f) {
  const int n = f.size();
  Workspace& w = workspace(n);
  std::copy(f.values().begin(), f.values().end(), w.real);
  fftw_execute(w.fwd);
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n / 2 + 1));
  for (int k = 0; k <= n / 2; ++k) out[static_cast<std::size_t>(k)] = {w.spec[k][0], w.spec[k][1]};
  return out;
}

GridFunction inverse_fft(const Grid& g, const std::vector<std::complex<double>>& spec) {
  const int n = g.npoints;
  if (static_cast<int>(spec.size()) != n / 2 + 1) throw GridMismatch("spectrum size mismatch");
  Workspace& w = workspace(n);
  for (int k = 0; k <= n / 2; ++k) {
    w.spec[k][0] = spec[static_cast<std::size_t>(k)].real();
    w.spec[k][1] = spec[static_cast<std::size_t>(k)].imag();
  }
  fftw_execute(w.bwd);
  GridFunction r(g);
  for (int i = 0; i < n; ++i) r[i] = w.real[i] / n;
  return r;
}

GridFunction spectral_derivative(const GridFunction& f, int order) {
  if (order < 0) throw InvalidParameter("derivative order must be nonnegative");
  if (order == 0) return f;
  const Grid& g = f.grid();
  auto spec = forward_fft(f);
  const int n = g.npoints;
  for (int k = 0; k <= n / 2; ++k) {
    std::complex<double> mult = std::pow(std::complex<double>(0.0, g.wavenumber(k)), order);
    if (k == n / 2 && order % 2 == 1) mult = 0.0;
    spec[static_cast<std::size_t>(k)] *= mult;
  }
  return inverse_fft(g, spec);
}

double quadrature(const GridFunction& f) {
  double s = 0;
  for (double v : f.values()) s += v;
  return f.grid().spacing() * s;
}

double sobolev_norm(const GridFunction& f, double s) {
  if (s < 0) throw InvalidParameter("Sobolev index must be nonnegative");
  const Grid& g = f.grid();
  const int n = g.npoints;
  const auto spec = forward_fft(f);
  double acc = 0;
  for (int k = 0; k <= n / 2; ++k) {
    const double xi = g.wavenumber(k);
    const double w = (k == 0 || k == n / 2) ? 1.0 : 2.0;
    acc += w * std::pow(1.0 + xi * xi, s) * std::norm(spec[static_cast<std::size_t>(k)]);
  }
  return std::sqrt(g.spacing() / n * acc);
}

DerivativeStack spectral_stack(const GridFunction& f, int order) {
  DerivativeStack s;
  s.d.push_back(f);
  if (order <= 0) return s;
  const Grid& g = f.grid();
  const int n = g.npoints;
  const auto base = forward_fft(f);
  for (int j = 1; j <= order; ++j) {
    auto spec = base;
    for (int k = 0; k <= n / 2; ++k) {
      std::complex<double> mult = std::pow(std::complex<double>(0.0, g.wavenumber(k)), j);
      if (k == n / 2 && j % 2 == 1) mult = 0.0;
      spec[static_cast<std::size_t>(k)] *= mult;
    }
    s.d.push_back(inverse_fft(g, spec));
  }
  return s;
}

DerivativeStack analytic_stack(const ClosedForm& u, double t, const Grid& g, int order) {
  std::vector<std::vector<double>> cols;
  sample_parallel(u, t, g, order, cols);
  DerivativeStack s;
  for (auto& c : cols) s.d.emplace_back(g, std::move(c));
  return s;
}

GridFunction sample_solution(const ClosedForm& u, double t, const Grid& g) {
  return analytic_stack(u, t, g, 0).d.front();
}

GridFunction time_derivative(const ClosedForm& u, double t, const Grid& g) {
  GridFunction r(g);
  const int n = g.npoints;
  std::exception_ptr err;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    try {
      r[i] = u.time_derivative(t, g.x(i));
    } catch (...) {
#pragma omp critical(ghl_td_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return r;
}

GridFunction rhs_eval(const HierarchyEquation& eqn, const GridFunction& f, double mu) {
  return rhs_eval(eqn, spectral_stack(f, eqn.rhs.max_order()), mu);
}

GridFunction rhs_eval(const HierarchyEquation& eqn, const DerivativeStack& s, double mu) {
  const CompiledPoly p = compile(eqn.rhs, mu);
  if (s.order() < p.max_order)
    throw InvalidParameter("derivative stack too short for the equation");
  std::vector<double> out;
  eval_poly_parallel(p, s, out);
  return GridFunction(s.grid(), std::move(out));
}

void write_csv(std::ostream& os, const GridFunction& f, const char* column) {
  const auto old = os.precision(17);
  os << "x," << column << "\n";
  for (int i = 0; i < f.size(); ++i) os << f.grid().x(i) << "," << f[i] << "\n";
  os.precision(old);
}

}  // namespace ghl
