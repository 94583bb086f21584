// Identity suites owned by the moments module.

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "cotm/constants.hpp"
#include "cotm/moments.hpp"

namespace cotm::moments {

namespace {

using quad::Abscissa;

std::string padded(int width, long v) {
    std::ostringstream os;
    os << std::setw(width) << std::setfill('0') << v;
    return os.str();
}

// log x on (0, 1], accurate near both ends.
Real log_unit(const Abscissa& a) {
    if (a.x < Real(0.5, Precision(5))) return log(a.x);
    return log1p(-a.to_b);
}

// arcsin(sqrt y) given y and 1 - y.
Real arcsin_sqrt(const Real& y, const Real& one_minus_y, const Real& half_pi) {
    if (y < Real(0.5, Precision(5))) return asin(sqrt(y));
    return half_pi - asin(sqrt(one_minus_y));
}

// 1 - x0 x1 from the distances to 1.
Real one_minus_product(const Abscissa& a, const Abscissa& b) {
    return a.to_b + b.to_b - a.to_b * b.to_b;
}

struct Consequence {
    std::string name;
    std::string anchor;
    Real closed;
    SeriesValue series;
    bool negate_series;
};

}  // namespace

VerificationReport binomial_gf_identities(Precision p, const std::vector<Real>& samples) {
    VerificationReport report("binomial-gf");
    const Precision work = p.widened(5);
    const Real tol = hp::pow10(-(p.digits() - 10), p);
    const Real eps = hp::pow10(-(p.digits() + 3), work);
    int index = 0;
    for (const Real& sample : samples) {
        if (!(sample >= 0) || sample > Real(0.9, Precision(5)) + Real(1e-12, Precision(5)))
            throw std::invalid_argument("binomial gf samples must lie in [0, 0.9]");
        const Real x = hp::round_to(sample, work);
        const Real x2 = sqr(x);
        const Real ratio = x2 / (1 - x2);

        Real first(0, work);
        Real c(1, work);
        Real xp(1, work);
        for (unsigned long j = 0;; ++j) {
            Real term = c * xp;
            first += term;
            if (term * ratio < eps) break;
            c.mul_ui(2 * j + 1);
            c.div_ui(2 * j + 2);
            xp *= x2;
        }

        Real second(0, work);
        c = Real(1, work);
        c.div_ui(2);
        xp = x2;
        for (unsigned long j = 1; !x.is_zero(); ++j) {
            Real term = xp / c;
            term.div_ui(j);
            term.div_ui(j);
            second += term;
            if (term * ratio < eps) break;
            c.mul_ui(2 * j + 1);
            c.div_ui(2 * j + 2);
            xp *= x2;
        }
        second /= 2;

        const std::string tag = "binomial-gf/x" + padded(2, index) + "/";
        report.add_numeric(tag + "inverse-sqrt", "sum_j C(2j,j) (x/2)^{2j} = 1/sqrt(1-x^2)", first,
                           1 / sqrt(1 - x2), tol);
        report.add_numeric(tag + "arcsin-squared",
                           "1/2 sum_{j>=1} (2x)^{2j} / (j^2 C(2j,j)) = arcsin(x)^2", second,
                           sqr(asin(x)), tol);
        ++index;
    }
    return report;
}

VerificationReport verify_consequences(Precision p, const ConsequenceOptions& opts) {
    VerificationReport report("consequences");
    const Precision work = p.widened(5);
    const Real pi = hp::pi(work);
    const Real half_pi = pi / 2;
    const Real log2 = hp::log2(work);
    const Real eta3 = hp::eta(3, work);
    const Real eta5 = hp::eta(5, work);

    std::vector<Consequence> items;
    items.push_back({"k0-odd", "int_0^1 -log(x)/sqrt(1-x^2) dx = S_odd(0) = (pi/2) log 2",
                     half_pi * log2, s_odd(0, work, opts.series_terms), false});
    items.push_back({"k1-odd",
                     "int int log(x0) log(x1) / (sqrt(1-x0^2 x1^2) (1-x1^2)) = S_odd(1) = "
                     "pi^3/24 log 2 + pi/8 eta(3)",
                     pow(pi, 3) / 24 * log2 + pi / 8 * eta3, s_odd(1, work, opts.series_terms),
                     false});
    items.push_back({"k0-even", "int_0^1 arcsin^2(sqrt x)/x dx = S_even(0) = pi^2/2 log 2 - 7/3 eta(3)",
                     sqr(pi) / 2 * log2 - 7 * eta3 / 3, s_even(0, work, opts.series_terms), false});
    items.push_back({"k1-even",
                     "int int arcsin^2(sqrt(x0 x1))/(x0 x1) log(x1)/(1-x1) = -S_even(1) = "
                     "-pi^4/24 log 2 - pi^2/9 eta(3) + 31/15 eta(5)",
                     -pow(pi, 4) / 24 * log2 - sqr(pi) / 9 * eta3 + 31 * eta5 / 15,
                     s_even(1, work, opts.series_terms), true});

    const Real zero(0, work);
    const Real one(1, work);
    const Real tol_1d = hp::pow10(-(p.digits() - 5), work);
    const Real tol_2d(opts.quadrature_tol_2d, work);
    std::vector<Real> quadratures;

    quadratures.push_back(quad::integrate_1d(
        [&](const Abscissa& a) { return -log_unit(a) / sqrt(a.to_b * (1 + a.x)); }, zero, one, work,
        tol_1d).value);
    quadratures.push_back(quad::integrate_2d_iterated(
        [&](const Abscissa& a, const Abscissa& b) {
            const Real q = one_minus_product(a, b);
            return log_unit(a) * log_unit(b) /
                   (sqrt(q * (1 + a.x * b.x)) * b.to_b * (1 + b.x));
        },
        work, tol_2d).value);
    quadratures.push_back(quad::integrate_1d(
        [&](const Abscissa& a) { return sqr(arcsin_sqrt(a.x, a.to_b, half_pi)) / a.x; }, zero, one,
        work, tol_1d).value);
    quadratures.push_back(quad::integrate_2d_iterated(
        [&](const Abscissa& a, const Abscissa& b) {
            const Real y = a.x * b.x;
            const Real s = arcsin_sqrt(y, one_minus_product(a, b), half_pi);
            return sqr(s) / y * log_unit(b) / b.to_b;
        },
        work, tol_2d).value);

    const Real series_tol(opts.series_tol, work);
    const Real quad_tol(opts.quadrature_check_tol, work);
    for (std::size_t i = 0; i < items.size(); ++i) {
        const Consequence& c = items[i];
        const std::string tag = "consequences/" + c.name + "/";
        const Real series = c.negate_series ? -c.series.value : c.series.value;
        report.add_numeric(tag + "series-vs-closed", c.anchor, series, c.closed, series_tol);
        report.add_numeric(tag + "series-within-bound", c.anchor, series, c.closed,
                           c.series.error_bound);
        report.add_numeric(tag + "quadrature-vs-closed", c.anchor, quadratures[i], c.closed,
                           quad_tol);
    }

    // The one-dimensional case of the integral representation gives C(1) directly.
    report.add_numeric("consequences/dimension-one", "-2 int_0^1 log(x)/sqrt(1-x^2) dx = C(1)",
                       2 * quadratures[0], c_eta_route(1, work).value, quad_tol);
    return report;
}

VerificationReport verify_log_power_integrals(Precision p, int jmax, int lmax) {
    if (jmax < 0 || lmax < 0) throw std::invalid_argument("log-power integrals: negative bound");
    VerificationReport report("log-power");
    const Precision work = p.widened(5);
    const Real tol = hp::pow10(-(p.digits() - 10), p);
    const Real zero(0, work);
    const Real one(1, work);
    for (int j = 0; j <= jmax; ++j) {
        for (int l = 0; l <= lmax; ++l) {
            auto f = [&](const Abscissa& a) { return pow(a.x, j) * pow(log_unit(a), l); };
            const auto r = quad::integrate_1d(f, zero, one, work, hp::pow10(-(p.digits() + 2), work));
            Real expected = Real(exact::factorial(static_cast<unsigned>(l)), work) /
                            pow(Real(j + 1, work), l + 1);
            if (l % 2 == 1) expected = -expected;
            report.add_numeric("log-power/j" + padded(2, j) + "/l" + padded(2, l),
                               "int_0^1 x^j log^l(x) dx = (-1)^l l! / (j+1)^{l+1}", r.value,
                               expected, tol);
        }
    }
    return report;
}

VerificationReport verify_h_integral_reduction(int k, unsigned jmax, long n, Precision p) {
    if (k < 0 || k > 3) throw std::invalid_argument("h reduction: k must lie in 0..3");
    if (jmax > 20) throw std::invalid_argument("h reduction: jmax must be <= 20");
    VerificationReport report("h-reduction");
    const Precision work = p.widened(5);
    const Real pi = hp::pi(work);
    const auto uk = static_cast<unsigned>(k);
    const unsigned nmax = std::max(jmax, uk + 1);
    const auto h1 = cfn::build_h1(uk, nmax);
    const auto h0 = cfn::build_h0(uk + 1, nmax);
    const TailSums odd = nested_tail_sums(Parity::odd, k, jmax, work, n);
    const TailSums even = nested_tail_sums(Parity::even, k, jmax, work, n);
    const Real rounding = hp::pow10(-(p.digits() - 5), work);

    for (unsigned j = 0; j <= jmax; ++j) {
        Real rhs(0, work);
        Real bound = rounding;
        for (int l = 0; l <= k; ++l) {
            const Real weight = pow(pi / 2, 2 * l) /
                                Real(exact::factorial(static_cast<unsigned>(2 * l)), work);
            const Real term = weight * odd.values[k - l][j];
            if ((k - l) % 2 == 0) rhs += term;
            else rhs -= term;
            bound += weight * odd.bound[k - l];
        }
        report.add_numeric("h-reduction/h1/k" + std::to_string(k) + "/j" + padded(2, j),
                           "H1(k,j) = sum_l (pi/2)^{2l}/(2l)! (-1)^{k-l} W_odd_{k-l}(j)",
                           Real(h1(uk, j), work), rhs, bound);
    }
    for (unsigned j = 1; j <= jmax; ++j) {
        Real rhs(0, work);
        Real bound = rounding;
        for (int l = 0; l <= k; ++l) {
            const Real weight = pow(pi, 2 * l) /
                                Real(exact::factorial(static_cast<unsigned>(2 * l + 1)), work);
            const Real term = weight * even.values[k - l][j];
            if ((k - l) % 2 == 0) rhs += term;
            else rhs -= term;
            bound += weight * even.bound[k - l];
        }
        report.add_numeric("h-reduction/h0/k" + std::to_string(k + 1) + "/j" + padded(2, j),
                           "H0(k+1,j) = sum_l pi^{2l}/(2l+1)! (-1)^{k-l} W_even_{k-l}(j)",
                           Real(h0(uk + 1, j), work), rhs, bound);
    }
    return report;
}

}  // namespace cotm::moments
