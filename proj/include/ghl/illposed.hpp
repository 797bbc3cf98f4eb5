#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "ghl/closedform.hpp"
#include "ghl/numerics.hpp"

namespace ghl {

/// Default cap on the separation time; keeps the sampling box below ~2^21 points
/// for alpha <= 80 at n = 2.
inline constexpr double kIllposedTimeCap = 0.06;

struct IllposedConfig {
  int n = 2;
  double s = 0.5;
  double alpha = 20;
  double delta_sep = 0.1;
  double mu = 0;
  double T = 0;  // <= 0 selects default_time()

  double beta() const;  // alpha^{-2s}
  /// Throws InvalidParameter unless beta/alpha < 0.05 and the rest is in range.
  void validate() const;
  /// 10 alpha^{4s-2n+1} / delta, capped at kIllposedTimeCap.
  double default_time() const;
  double time() const { return T > 0 ? T : default_time(); }
};

/// alpha_{1,2} = alpha +- delta / (2 alpha^{2s}), shared beta, mu, n, zero
/// phases. DeltaViolation if either discriminant is not positive.
std::pair<BreatherParams, BreatherParams> construct_pair(const IllposedConfig& cfg);

struct IllposedReport {
  double T = 0;
  double beta = 0;
  double norm1_0 = 0;  // ||B1(0)||_{H^s}
  double norm2_0 = 0;
  double norm1_T = 0;
  double norm2_T = 0;
  double d0 = 0;  // ||B1(0) - B2(0)||_{H^s}
  double dT = 0;
  double ratio = 0;
  double separation = 0;             // |gamma1 - gamma2| T, distance of the envelope centres
  double separation_in_widths = 0;   // separation * beta
  double tail = 0;                   // largest |B| on the box edges relative to sup |B|
  int npoints_0 = 0;
  int npoints_T = 0;
};

/// Samples both breathers from the closed form at t = 0 and t = T on boxes
/// that hold their supports, and measures H^s distances. GridTooSmall if the
/// tails at the box edges exceed 1e-10 of the peak or the box needs > 2^23 points.
IllposedReport run_experiment(const IllposedConfig& cfg);

/// sup |B - 2 beta cos(alpha y1) sech(beta y2)| / sup |B| over a box holding the
/// envelope of B at time t.
double carrier_envelope_error(const BreatherParams& p, double t);

/// Rows "alpha,s,d0,dT,ratio" for every alpha in the list (parallel over runs).
std::vector<IllposedReport> sweep(const IllposedConfig& base, const std::vector<double>& alphas);
void write_sweep_csv(std::ostream& os, const IllposedConfig& base, const std::vector<double>& alphas,
                     const std::vector<IllposedReport>& reports);

}  // namespace ghl
