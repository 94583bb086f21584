#pragma once

#include <cstddef>
#include <vector>

#include "cotm/exact.hpp"

namespace cotm::exact {

/// Power series over the rationals truncated after z^order. All arithmetic
/// is exact through the truncation order; mixing orders truncates to the
/// smaller one.
class RationalPowerSeries {
public:
    explicit RationalPowerSeries(std::size_t order);
    RationalPowerSeries(std::vector<BigRational> coefficients, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const BigRational& operator[](std::size_t power) const;
    BigRational& operator[](std::size_t power);
    const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }

    RationalPowerSeries truncated(std::size_t order) const;

    RationalPowerSeries& operator+=(const RationalPowerSeries& o);
    RationalPowerSeries& operator*=(const BigRational& c);

    friend RationalPowerSeries operator+(RationalPowerSeries a, const RationalPowerSeries& b) {
        return a += b;
    }
    friend RationalPowerSeries operator*(const RationalPowerSeries& a, const RationalPowerSeries& b);
    friend RationalPowerSeries operator*(RationalPowerSeries a, const BigRational& c) {
        return a *= c;
    }
    friend bool operator==(const RationalPowerSeries&, const RationalPowerSeries&) = default;

    /// Multiplicative inverse; requires a non-zero constant term.
    RationalPowerSeries reciprocal() const;

    /// f(g(z)); requires g(0) = 0.
    RationalPowerSeries compose(const RationalPowerSeries& g) const;

private:
    std::vector<BigRational> coeffs_;
};

/// 2 arcsin(z/2) through z^order: the z^{2n+1} coefficient is
/// C(2n, n) / (16^n (2n+1)), even coefficients vanish.
RationalPowerSeries fps_arcsin(std::size_t order);

/// s^m for m >= 1, by binary powering.
RationalPowerSeries fps_power(const RationalPowerSeries& s, unsigned m);

/// cos z through z^order.
RationalPowerSeries fps_cos(std::size_t order);

}  // namespace cotm::exact
