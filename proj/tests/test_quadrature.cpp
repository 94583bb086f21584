#include <doctest.h>

#include <cmath>

#include "cotm/constants.hpp"
#include "cotm/quadrature.hpp"

using namespace cotm::quad;
using cotm::hp::pow10;

namespace {

// Midpoint rule in double for (1/m!) int_0^pi (t^m/2) cot(t/2) dt.
double midpoint_moment(int m, int steps) {
    const double pi = std::acos(-1.0);
    const double h = pi / steps;
    double sum = 0;
    for (int i = 0; i < steps; ++i) {
        const double t = (i + 0.5) * h;
        sum += std::pow(t, m) / 2 / std::tan(t / 2);
    }
    return sum * h / std::tgamma(m + 1.0);
}

}  // namespace

TEST_CASE("polynomial and logarithmic integrands") {
    const Precision p(40);
    const Real zero(0, p), one(1, p);
    const Real tol = pow10(-35, p);

    auto square = integrate_1d([](const Abscissa& a) { return sqr(a.x); }, zero, one, p, tol);
    CHECK(abs(square.value - Real(1, p) / 3) < tol);
    CHECK(square.converged);

    auto lg = integrate_1d([](const Abscissa& a) { return log(a.x); }, zero, one, p, tol);
    CHECK(abs(lg.value + 1) < tol);
}

TEST_CASE("endpoint singularity through the distance to b") {
    const Precision p(40);
    // int_{-1}^{1} dx / sqrt(1 - x^2) = pi, with 1 - x^2 = (x - a)(b - x).
    auto r = integrate_1d([](const Abscissa& a) { return 1 / sqrt(a.from_a * a.to_b); },
                          Real(-1, p), Real(1, p), p, pow10(-35, p));
    CHECK(abs(r.value - cotm::hp::pi(p)) < pow10(-34, p));
}

TEST_CASE("moment of the cotangent") {
    const Precision p(40);
    const auto r = moment_quadrature(1, p, pow10(-30, p));
    const Real expected = cotm::hp::pi(p) * cotm::hp::log2(p);
    CHECK(abs(r.value - expected) < pow10(-30, p));
    CHECK(std::abs(r.value.to_double() - midpoint_moment(1, 100000)) < 1e-8);

    for (int m = 1; m <= 5; ++m) {
        CAPTURE(m);
        const auto a = moment_quadrature(m, p, pow10(-30, p));
        const auto b = moment_quadrature_arcsin_form(m, p, pow10(-30, p));
        CHECK(abs(a.value - b.value) < pow10(-29, p));
        CHECK(std::abs(a.value.to_double() - midpoint_moment(m, 100000)) < 1e-8);
    }
    CHECK_THROWS(moment_quadrature(0, p, pow10(-10, p)));
}

TEST_CASE("iterated two-dimensional rule") {
    const Precision p(30);
    auto r = integrate_2d_iterated([](const Abscissa& a, const Abscissa& b) { return a.x * b.x; }, p,
                                   pow10(-20, p));
    CHECK(abs(r.value - Real(1, p) / 4) < pow10(-20, p));
    // int int log(x0 x1) = -2
    auto s = integrate_2d_iterated(
        [](const Abscissa& a, const Abscissa& b) { return log(a.x * b.x); }, p, pow10(-15, p));
    CHECK(abs(s.value + 2) < pow10(-15, p));
}

TEST_CASE("level sequence and convergence reporting") {
    const Precision p(30);
    const Real zero(0, p), one(1, p);
    auto f = [](const Abscissa& a) { return log(a.x) * log(a.x); };
    const auto r = integrate_1d(f, zero, one, p, pow10(-25, p));
    CHECK(r.levels >= 3);
    CHECK(r.deltas.size() == static_cast<std::size_t>(r.levels));
    CHECK(r.deltas.back() <= r.deltas.front());
    CHECK(cached_levels(p) >= static_cast<std::size_t>(r.levels) + 1);

    QuadratureOptions tight;
    tight.level_cap = 2;
    tight.min_level = 1;
    const auto best = try_integrate_1d(f, zero, one, p, pow10(-28, p), tight);
    CHECK_FALSE(best.converged);
    CHECK_THROWS_AS(integrate_1d(f, zero, one, p, pow10(-28, p), tight), NonConvergence);
    CHECK_THROWS_AS(integrate_1d(f, one, zero, p, pow10(-10, p)), std::invalid_argument);
}
