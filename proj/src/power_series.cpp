#include "cotm/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace cotm::exact {

RationalPowerSeries::RationalPowerSeries(std::size_t order) : coeffs_(order + 1, BigRational(0)) {}

RationalPowerSeries::RationalPowerSeries(std::vector<BigRational> coefficients, std::size_t order)
    : coeffs_(std::move(coefficients)) {
    coeffs_.resize(order + 1, BigRational(0));
}

const BigRational& RationalPowerSeries::operator[](std::size_t power) const {
    if (power > order()) throw std::out_of_range("power beyond truncation order");
    return coeffs_[power];
}

BigRational& RationalPowerSeries::operator[](std::size_t power) {
    if (power > order()) throw std::out_of_range("power beyond truncation order");
    return coeffs_[power];
}

RationalPowerSeries RationalPowerSeries::truncated(std::size_t order) const {
    return RationalPowerSeries(
        std::vector<BigRational>(coeffs_.begin(),
                                 coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1)),
        std::min(order, this->order()));
}

RationalPowerSeries& RationalPowerSeries::operator+=(const RationalPowerSeries& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

RationalPowerSeries& RationalPowerSeries::operator*=(const BigRational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

RationalPowerSeries operator*(const RationalPowerSeries& a, const RationalPowerSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    RationalPowerSeries r(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (b.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

RationalPowerSeries RationalPowerSeries::reciprocal() const {
    if (coeffs_[0] == 0) throw std::domain_error("reciprocal: zero constant term");
    RationalPowerSeries r(order());
    r.coeffs_[0] = 1 / coeffs_[0];
    for (std::size_t n = 1; n <= order(); ++n) {
        BigRational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * r.coeffs_[n - k];
        r.coeffs_[n] = -acc / coeffs_[0];
    }
    return r;
}

RationalPowerSeries RationalPowerSeries::compose(const RationalPowerSeries& g) const {
    if (g[0] != 0) throw std::domain_error("compose: inner series must have zero constant term");
    const std::size_t order = std::min(this->order(), g.order());
    // Horner: f0 + g (f1 + g (f2 + ...)), truncated throughout.
    RationalPowerSeries inner = g.truncated(order);
    RationalPowerSeries acc(order);
    for (std::size_t k = order + 1; k-- > 0;) {
        acc = acc * inner;
        acc.coeffs_[0] += coeffs_[k];
    }
    return acc;
}

RationalPowerSeries fps_arcsin(std::size_t order) {
    if (order < 1) throw std::invalid_argument("fps_arcsin: order must be >= 1");
    RationalPowerSeries s(order);
    for (unsigned n = 0; 2 * n + 1 <= order; ++n) {
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), 16, n);
        den *= 2 * n + 1;
        s[2 * n + 1] = make_rational(binomial_int(2 * n, n), den);
    }
    return s;
}

RationalPowerSeries fps_power(const RationalPowerSeries& s, unsigned m) {
    if (m == 0) throw std::invalid_argument("fps_power: exponent must be positive");
    RationalPowerSeries result = s;
    RationalPowerSeries base = s;
    bool first = true;
    for (unsigned e = m; e > 0; e >>= 1) {
        if (e & 1u) {
            result = first ? base : result * base;
            first = false;
        }
        if (e > 1) base = base * base;
    }
    return result;
}

RationalPowerSeries fps_cos(std::size_t order) {
    RationalPowerSeries c(order);
    for (unsigned n = 0; 2 * n <= order; ++n) {
        BigRational term(1, 1);
        term /= BigRational(factorial(2 * n));
        c[2 * n] = n % 2 == 0 ? term : BigRational(-term);
    }
    return c;
}

}  // namespace cotm::exact
