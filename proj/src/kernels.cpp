#include <stdexcept>

#include "cotm/constants.hpp"
#include "cotm/moments.hpp"

namespace cotm::moments {

namespace {

constexpr double kSeriesLimit = 0.75;
constexpr double kSeriesMax = 0.95;

void check_domain(const Real& z) {
    if (!(z >= 0 && z <= 1)) throw std::domain_error("kernel argument must lie in [0, 1]");
}

void check_series_domain(const Real& z) {
    check_domain(z);
    if (z.to_double() > kSeriesMax) throw std::domain_error("kernel series used too close to 1");
}

// arcsin(y) given both y and 1 - y.
Real arcsin_split(const Real& y, const Real& one_minus_y, const Real& half_pi) {
    if (y < Real(0.5, Precision(5))) return asin(y);
    return half_pi - 2 * asin(sqrt(one_minus_y / 2));
}

// arcsin(sqrt y) given both y and 1 - y.
Real arcsin_sqrt_split(const Real& y, const Real& one_minus_y, const Real& half_pi) {
    if (y < Real(0.5, Precision(5))) return asin(sqrt(y));
    return half_pi - asin(sqrt(one_minus_y));
}

}  // namespace

Real kernel_k1_series(const Real& z_in, Precision p) {
    check_series_domain(z_in);
    const Precision work = p.widened(5);
    const Real z = hp::round_to(z_in, work);
    const Real z2 = sqr(z);
    const Real eps = hp::pow10(-(p.digits() + 3), work);
    const Real ratio = z2 / (1 - z2);
    Real sum(0, work);
    Real c(1, work);   // C(2j,j)/4^j
    Real zp(1, work);  // z^{2j}
    for (unsigned long j = 0;; ++j) {
        Real term = c * zp;
        term.div_ui(2 * j + 1);
        term.div_ui(2 * j + 1);
        sum += term;
        if (term * ratio < eps) break;
        c.mul_ui(2 * j + 1);
        c.div_ui(2 * j + 2);
        zp *= z2;
    }
    return hp::round_to(sum, p);
}

Real kernel_k0_series(const Real& z_in, Precision p) {
    check_series_domain(z_in);
    const Precision work = p.widened(5);
    const Real z = hp::round_to(z_in, work);
    if (z.is_zero()) return Real(0, p);
    const Real eps = hp::pow10(-(p.digits() + 3), work);
    const Real ratio = z / (1 - z);
    Real sum(0, work);
    Real c(1, work);
    c.div_ui(2);  // C(2,1)/4
    Real zp = z;
    for (unsigned long j = 1;; ++j) {
        Real term = zp / c;
        term.div_ui(j);
        term.div_ui(j);
        term.div_ui(j);
        sum += term;
        if (term * ratio < eps) break;
        c.mul_ui(2 * j + 1);
        c.div_ui(2 * j + 2);
        zp *= z;
    }
    return hp::round_to(sum / 2, p);
}

Real kernel_k1_quadrature(const Real& z_in, Precision p) {
    check_domain(z_in);
    const Precision work = p.widened(5);
    const Real z = hp::round_to(z_in, work);
    if (z.is_zero()) return Real(1, p);
    const Real half_pi = hp::pi(work) / 2;
    const Real one_minus_z = 1 - z;
    // K1(z) = int_0^1 arcsin(z u) / (z u) du
    auto f = [&](const quad::Abscissa& u) {
        const Real y = z * u.x;
        return arcsin_split(y, one_minus_z + z * u.to_b, half_pi) / y;
    };
    const auto r = quad::integrate_1d(f, Real(0, work), Real(1, work), work,
                                      hp::pow10(-(p.digits() + 2), work));
    return hp::round_to(r.value, p);
}

Real kernel_k0_quadrature(const Real& z_in, Precision p) {
    check_domain(z_in);
    const Precision work = p.widened(5);
    const Real z = hp::round_to(z_in, work);
    if (z.is_zero()) return Real(0, p);
    const Real half_pi = hp::pi(work) / 2;
    const Real one_minus_z = 1 - z;
    // K0(z) = int_0^1 arcsin^2(sqrt(z u)) / u du
    auto f = [&](const quad::Abscissa& u) {
        const Real y = z * u.x;
        return sqr(arcsin_sqrt_split(y, one_minus_z + z * u.to_b, half_pi)) / u.x;
    };
    const auto r = quad::integrate_1d(f, Real(0, work), Real(1, work), work,
                                      hp::pow10(-(p.digits() + 2), work));
    return hp::round_to(r.value, p);
}

Real kernel_k1(const Real& z, Precision p) {
    check_domain(z);
    return z.to_double() <= kSeriesLimit ? kernel_k1_series(z, p) : kernel_k1_quadrature(z, p);
}

Real kernel_k0(const Real& z, Precision p) {
    check_domain(z);
    return z.to_double() <= kSeriesLimit ? kernel_k0_series(z, p) : kernel_k0_quadrature(z, p);
}

}  // namespace cotm::moments
