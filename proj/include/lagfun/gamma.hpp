#pragma once

#include "lagfun/types.hpp"

namespace lagfun {

/// Principal branch of log Gamma(z). Throws PoleError at nonpositive integers.
Cplx lngamma(Cplx z);

/// Gamma(z) = exp(lngamma(z)).
Cplx gamma_fn(Cplx z);

/// |Gamma(z)|, computed from the real part of lngamma for stability.
double gamma_abs(Cplx z);

/// 1/Gamma(z), entire: returns 0 at nonpositive integers.
Cplx rgamma(Cplx z);

/// Pochhammer symbol (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
Cplx pochhammer(Cplx a, int n);

/// log sin(pi z), stable for large |Im z|.
Cplx lnsinpi(Cplx z);

}  // namespace lagfun
