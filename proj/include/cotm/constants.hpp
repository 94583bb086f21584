#pragma once

// Analytic constants at a requested decimal precision: pi, log 2, and the
// Dirichlet eta and Riemann zeta functions at positive integers.

#include "cotm/real.hpp"

namespace cotm::hp {

Real pi(Precision p);
Real log2(Precision p);

/// Number of terms the accelerated alternating sum uses for `p` digits.
int eta_terms(Precision p);

/// Dirichlet eta at an integer s >= 1, eta(1) = log 2.
///
/// Evaluated with the Cohen-Rodriguez Villegas-Zagier acceleration of the
/// alternating series sum (-1)^k / (k+1)^s. Since 1/(k+1)^s is totally
/// monotone, the error after n terms is at most 2 / (3 + sqrt 8)^n, and n is
/// chosen from the precision so that this is below 10^{-(P+3)}.
Real eta(int s, Precision p);

/// Riemann zeta at an integer s >= 2, computed as eta(s) / (1 - 2^{1-s}).
Real zeta(int s, Precision p);

/// zeta(2l) = (2 pi)^{2l} |B_{2l}| / (2 (2l)!), for l >= 1.
Real zeta_even_closed_form(int l, Precision p);

}  // namespace cotm::hp
