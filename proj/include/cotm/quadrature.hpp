#pragma once

// Double-exponential (tanh-sinh) quadrature at arbitrary precision.
//
// x = c + h tanh(pi/2 sinh t) maps the real line onto (a, b) and makes the
// trapezoidal rule converge geometrically in the number of nodes, even for
// integrands with logarithmic or algebraic singularities at the endpoints.
// Each level halves the step; the estimate stops when two successive levels
// agree within the requested tolerance.
//
// Integrands receive an Abscissa carrying the distances to both endpoints,
// computed without cancellation, so that factors such as log(x) or
// 1/sqrt(1 - x^2) can be evaluated accurately arbitrarily close to a or b.
// The endpoints themselves are never evaluated.

#include <functional>
#include <stdexcept>
#include <vector>

#include "cotm/real.hpp"

namespace cotm::quad {

using hp::Precision;
using hp::Real;

struct Abscissa {
    Real x;
    Real from_a;  // x - a
    Real to_b;    // b - x
};

using Integrand1D = std::function<Real(const Abscissa&)>;
using Integrand2D = std::function<Real(const Abscissa& x0, const Abscissa& x1)>;

struct QuadratureOptions {
    int level_cap = 12;
    int min_level = 3;
};

struct QuadratureResult {
    Real value;
    Real error;                // |I_L - I_{L-1}| at the last level (plus inner error in 2-D)
    int levels = 0;            // last level evaluated
    bool converged = false;
    std::vector<Real> deltas;  // |I_L - I_{L-1}| for L = 1..levels
};

class NonConvergence : public std::runtime_error {
public:
    explicit NonConvergence(QuadratureResult best);
    const QuadratureResult& best() const noexcept { return best_; }

private:
    QuadratureResult best_;
};

/// Integral of f over (a, b). Nodes are generated at P+10 digits and cached.
/// Throws NonConvergence when the level cap is reached first.
QuadratureResult integrate_1d(const Integrand1D& f, const Real& a, const Real& b, Precision p,
                              const Real& tol, QuadratureOptions opts = {});

/// Same, but returns the best estimate with converged = false instead of throwing.
QuadratureResult try_integrate_1d(const Integrand1D& f, const Real& a, const Real& b, Precision p,
                                  const Real& tol, QuadratureOptions opts = {});

/// Iterated integral over the unit square: the inner integral over x0 is
/// taken to tol / 50 at every outer node x1.
QuadratureResult integrate_2d_iterated(const Integrand2D& f, Precision p, const Real& tol,
                                       QuadratureOptions opts = {});

/// C(m) = (1/m!) int_0^pi (theta^m / 2) cot(theta / 2) dtheta.
QuadratureResult moment_quadrature(int m, Precision p, const Real& tol,
                                   QuadratureOptions opts = {});

/// The same moment after v = 2 sin(theta/2):
/// int_0^2 [2 arcsin(v/2)]^m / m! dv / v.
QuadratureResult moment_quadrature_arcsin_form(int m, Precision p, const Real& tol,
                                               QuadratureOptions opts = {});

/// Number of cached node levels for a precision (for tests).
std::size_t cached_levels(Precision p);

}  // namespace cotm::quad
