#pragma once

#include "lagfun/types.hpp"

namespace lagfun {

/// Kummer's confluent hypergeometric function 1F1(a;b;z), entire in z.
/// Terminates exactly when a is a nonpositive integer. Throws PoleError for
/// inadmissible b and NonConvergence if the series fails to stabilize.
Cplx hyp1f1(Cplx a, Cplx b, Cplx z);

/// Tricomi's function U(a;b;z), principal branch (cut along (-inf,0]).
/// For b within 1e-6 of an integer the value is the average of two
/// evaluations at complex-offset b, a limit scheme for the removable
/// singularity of the defining two-term combination.
Cplx hypU(Cplx a, Cplx b, Cplx z);

/// Gauss hypergeometric 2F1(a,b;c;z) for real z <= 0 only: direct series for
/// z >= -1/2, Pfaff transformation below. Terminating cases are summed
/// exactly for any z <= 0.
Cplx hyp2f1_neg(Cplx a, Cplx b, Cplx c, double z);

}  // namespace lagfun
