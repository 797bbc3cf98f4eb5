#pragma once

#include <utility>
#include <vector>

#include "ghl/diffpoly.hpp"
#include "ghl/numerics.hpp"

namespace ghl {

/// A differential polynomial with mu substituted and real double coefficients,
/// ready for pointwise evaluation.
struct CompiledPoly {
  struct Term {
    double coef;
    std::vector<std::pair<int, int>> exps;
  };
  std::vector<Term> terms;
  int max_order = -1;
};

/// Throws RealnessViolation on complex coefficients.
CompiledPoly compile(const DiffPoly& p, double mu);

// Serial reference kernels and their OpenMP counterparts. Results are
// identical up to floating-point reassociation (none happens per point, so
// they agree bitwise in practice).
void eval_poly_serial(const CompiledPoly& p, const DerivativeStack& s, std::vector<double>& out);
void eval_poly_parallel(const CompiledPoly& p, const DerivativeStack& s, std::vector<double>& out);

void sample_serial(const ClosedForm& u, double t, const Grid& g, int order,
                   std::vector<std::vector<double>>& out);
void sample_parallel(const ClosedForm& u, double t, const Grid& g, int order,
                     std::vector<std::vector<double>>& out);

/// Number of OpenMP threads in use (GHL_THREADS caps it when set).
int thread_count();
void apply_thread_limit_from_env();

}  // namespace ghl
