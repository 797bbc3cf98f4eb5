#include "ghl/kernels.hpp"

#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <exception>

#include "ghl/closedform.hpp"
#include "ghl/error.hpp"

namespace ghl {

CompiledPoly compile(const DiffPoly& p, double mu) {
  CompiledPoly c;
  for (const auto& [m, coef] : p.terms()) {
    if (!coef.is_real()) throw RealnessViolation("cannot compile a complex coefficient");
    c.terms.push_back({coef.re().get_d() * std::pow(mu, m.mu_power), m.exps});
    c.max_order = std::max(c.max_order, m.top_order());
  }
  return c;
}

namespace {

inline double ipow(double x, int e) {
  double r = 1.0;
  for (; e > 0; --e) r *= x;
  return r;
}

inline double eval_point(const CompiledPoly& p, const DerivativeStack& s, int i) {
  double acc = 0;
  for (const auto& t : p.terms) {
    double v = t.coef;
    for (const auto& [j, e] : t.exps) v *= ipow(s[j][i], e);
    acc += v;
  }
  return acc;
}

}  // namespace

void eval_poly_serial(const CompiledPoly& p, const DerivativeStack& s, std::vector<double>& out) {
  const int n = s.grid().npoints;
  out.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = eval_point(p, s, i);
}

void eval_poly_parallel(const CompiledPoly& p, const DerivativeStack& s,
                        std::vector<double>& out) {
  const int n = s.grid().npoints;
  out.assign(static_cast<std::size_t>(n), 0.0);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = eval_point(p, s, i);
}

void sample_serial(const ClosedForm& u, double t, const Grid& g, int order,
                   std::vector<std::vector<double>>& out) {
  const int n = g.npoints;
  out.assign(static_cast<std::size_t>(order + 1), std::vector<double>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    const auto d = u.x_derivatives(t, g.x(i), order);
    for (int j = 0; j <= order; ++j) out[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(j)];
  }
}

void sample_parallel(const ClosedForm& u, double t, const Grid& g, int order,
                     std::vector<std::vector<double>>& out) {
  const int n = g.npoints;
  out.assign(static_cast<std::size_t>(order + 1), std::vector<double>(static_cast<std::size_t>(n)));
  std::exception_ptr err;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    try {
      const auto d = u.x_derivatives(t, g.x(i), order);
      for (int j = 0; j <= order; ++j) out[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(j)];
    } catch (...) {
#pragma omp critical(ghl_sample_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

int thread_count() { return omp_get_max_threads(); }

void apply_thread_limit_from_env() {
  const char* v = std::getenv("GHL_THREADS");
  if (v == nullptr) return;
  const int n = std::atoi(v);
  if (n > 0) omp_set_num_threads(n);
}

}  // namespace ghl
