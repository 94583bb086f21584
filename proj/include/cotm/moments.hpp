#pragma once

// Moments of the cotangent,
//
//   C(m) = (1/m!) int_0^pi (theta^m / 2) cot(theta / 2) dtheta,
//
// by four independent routes, and the recursive harmonic series that
// connect them:
//
//   R_odd(k)  = sum_{i1 >= i2 >= ... >= ik >= 0} prod 1/(2i+1)^2
//   R_even(k) = sum_{i1 >= i2 >= ... >= ik >= 1} prod 1/i^2
//   A_1(k), A_0(k): the same with strictly increasing indices
//   S_odd(l)  = sum_j C(2j,j) 4^{-j} / (2j+1)^2 * W_l(j)
//   S_even(l) = 1/2 sum_j 4^j / (j^3 C(2j,j)) * W_l(j)
//
// where W_l(j) is the l-fold inclusive nested tail sum of the same inverse
// squares starting at index j.

#include <string>
#include <vector>

#include "cotm/cfn.hpp"
#include "cotm/exact.hpp"
#include "cotm/quadrature.hpp"
#include "cotm/real.hpp"
#include "cotm/report.hpp"

namespace cotm::moments {

using cfn::Parity;
using exact::BigRational;
using hp::Precision;
using hp::Real;

enum class Route { eta_closed_form, cfn_series, nested_series, quadrature };

std::string to_string(Route r);
/// Accepts "eta", "cfn", "nested", "quad" (and the long names).
Route parse_route(const std::string& name);

struct MomentValue {
    int m = 0;
    Route route = Route::eta_closed_form;
    Real value;
    long terms = 0;     // series cutoff or quadrature level
    Real error_bound;
};

enum class Family { r_odd, r_even, a0, a1, s_odd, s_even, k0, k1 };
enum class Method { closed_form, truncated_sum, quadrature, partitions, recurrence };

std::string to_string(Family f);
std::string to_string(Method m);

struct SeriesValue {
    Family family = Family::r_odd;
    int index = 0;
    Real value;
    Method method = Method::closed_form;
    Real error_bound;
    long terms = 0;
};

// --- moment routes ---------------------------------------------------------

/// sum_{l <= m/2} (-1)^l pi^{m-2l} / (m-2l)! eta(2l+1)
///   + [m even] (-1)^{m/2} zeta(m+1)
MomentValue c_eta_route(int m, Precision p);

/// C(2k+1) = 2^{2k+1} sum_j C(2j,j) 4^{-j} H1(k,j) / (2j+1)^2,
/// C(2k)   = 1/2 sum_j 4^j H0(k,j) / (j^3 C(2j,j)),
/// summed for j <= n_terms. The H values are advanced by their recurrences
/// alongside the sum. The reported bound is rigorous: H1(k,j) <= A_1(k),
/// H0(k,j) <= A_0(k-1) and the central binomial bounds give a j^{-5/2}
/// majorant whose tail is at most (2/3) N^{-3/2} times its prefactor.
MomentValue c_cfn_route(int m, Precision p, long n_terms);

/// Exact j-th summand of the cfn route, from the exact H tables.
BigRational cfn_route_term_exact(int m, unsigned j);

/// Partial sums of the cfn route after every `stride` terms, up to n_terms.
std::vector<Real> cfn_route_partial_sums(int m, Precision p, long n_terms, long stride);

/// C(2k+1) = sum_{l<=k} (-1)^l 2^{2l+1} pi^{2k-2l} / (2k-2l)! S_odd(l)
/// C(2k+2) = sum_{l<=k} (-1)^l pi^{2k-2l} / (2k-2l+1)! S_even(l)
MomentValue c_nested_route(int m, Precision p, long n);

MomentValue c_quadrature_route(int m, Precision p, const Real& tol);

// --- recursive series --------------------------------------------------------

/// (pi/2)^{2k} E*_{2k} / (2k)!
SeriesValue r_odd(int k, Precision p);
/// 2 (2^{2k-1} - 1) |B_{2k}| pi^{2k} / (2k)!
SeriesValue r_even(int k, Precision p);

/// R via the cycle index: (1/k!) sum_pi a(pi) prod_l w(2l)^{pi_l},
/// w(2l) = zeta(2l) (even) or (1 - 2^{-2l}) zeta(2l) (odd).
SeriesValue r_via_partitions(int k, Parity kind, Precision p);

/// R with every index <= n. Bound: tuples with a larger index contribute at
/// most R(1)^{k-1} * sum_{i>n} w(i).
SeriesValue r_truncated(int k, Parity kind, Precision p, long n);

/// A_1(k) = (pi/2)^{2k} / (2k)!,  A_0(k) = pi^{2k} / (2k+1)!
SeriesValue a1(int k, Precision p);
SeriesValue a0(int k, Precision p);
/// A(k) = sum_{l=1}^{k} (-1)^{l+1} R(l) A(k-l), from the closed-form R.
SeriesValue a1_by_recurrence(int k, Precision p);
SeriesValue a0_by_recurrence(int k, Precision p);

/// S_odd(l), S_even(l) truncated at n. The innermost tail sum beyond n is
/// added by Euler-Maclaurin; the bound covers that remainder, the dropped
/// deeper tails (at most T^i with T = sum_{j>n} w(j)) and the outer tail.
SeriesValue s_odd(int l, Precision p, long n);
SeriesValue s_even(int l, Precision p, long n);

/// W_d(j) for d <= depth and j <= jmax (j >= 1 for the even family),
/// indexed [d][j]; W_0 = 1. `bound[d]` bounds the error of W_d.
struct TailSums {
    std::vector<std::vector<Real>> values;
    std::vector<Real> bound;
};
TailSums nested_tail_sums(Parity kind, int depth, unsigned jmax, Precision p, long n);

// --- kernels -----------------------------------------------------------------

/// K1(z) = sum_j C(2j,j) (z/2)^{2j} / (2j+1)^2 = (1/z) int_0^z arcsin(y)/y dy
Real kernel_k1(const Real& z, Precision p);
/// K0(z) = 1/2 sum_{j>=1} (4z)^j / (j^3 C(2j,j)) = int_0^z arcsin^2(sqrt y)/y dy
Real kernel_k0(const Real& z, Precision p);
Real kernel_k1_series(const Real& z, Precision p);
Real kernel_k0_series(const Real& z, Precision p);
Real kernel_k1_quadrature(const Real& z, Precision p);
Real kernel_k0_quadrature(const Real& z, Precision p);

// --- identity suites -----------------------------------------------------------

/// sum C(2j,j) (x/2)^{2j} = 1/sqrt(1-x^2) and
/// 1/2 sum (2x)^{2j} / (j^2 C(2j,j)) = arcsin^2 x at each sample in [0, 0.9].
VerificationReport binomial_gf_identities(Precision p, const std::vector<Real>& samples);

struct ConsequenceOptions {
    long series_terms = 100000;
    double series_tol = 1e-4;
    double quadrature_check_tol = 1e-12;
    double quadrature_tol_2d = 1e-14;
};

/// The four k = 0, 1 identities, each by nested series, quadrature and the
/// closed form in pi, log 2, eta(3), eta(5).
VerificationReport verify_consequences(Precision p, const ConsequenceOptions& opts = {});

/// int_0^1 x^j log^l x dx = (-1)^l l! / (j+1)^{l+1} for j <= jmax, l <= lmax.
VerificationReport verify_log_power_integrals(Precision p, int jmax, int lmax);

/// H1(k,j) = sum_{l<=k} (pi/2)^{2l}/(2l)! (-1)^{k-l} W^odd_{k-l}(j) and
/// H0(k+1,j) = sum_{l<=k} pi^{2l}/(2l+1)! (-1)^{k-l} W^even_{k-l}(j), j >= 1.
VerificationReport verify_h_integral_reduction(int k, unsigned jmax, long n, Precision p);

}  // namespace cotm::moments
