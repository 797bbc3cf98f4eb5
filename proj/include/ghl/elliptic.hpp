#pragma once

#include "ghl/jet.hpp"

namespace ghl {

// All elliptic functions take the parameter m (K(m) = int (1 - m sin^2)^{-1/2}),
// not the modulus.

/// Complete elliptic integral of the first kind by the AGM. DomainError
/// outside [0, 1).
double elliptic_K(double param);

struct JacobiValues {
  double sn = 0;
  double cn = 1;
  double dn = 1;
  double nd = 1;
};

/// Descending Landen / AGM evaluation, 0 <= param <= 1.
JacobiValues jacobi(double u, double param);

struct JacobiJets {
  Jet sn, cn, dn;
};

/// Taylor jets of sn, cn, dn at (u0 + rate*h), from the ODE system
/// sn' = cn dn, cn' = -sn dn, dn' = -m sn cn.
JacobiJets jacobi_jets(int order, double u0, double rate, double param);

}  // namespace ghl
