#pragma once

// Precision-parameterized real numbers backed by MPFR.
//
// A Real carries its own binary precision. Binary operations produce a
// result at the smaller of the two operand precisions; operations with
// machine integers keep the precision of the Real operand.

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace cotm::hp {

/// Working precision expressed in decimal digits.
class Precision {
public:
    static constexpr int kGuardBits = 34;  // a little over 10 decimal digits

    constexpr explicit Precision(int digits) : digits_(digits) {
        if (digits < 1) throw std::invalid_argument("precision must be at least one digit");
    }

    constexpr int digits() const noexcept { return digits_; }
    mpfr_prec_t bits() const noexcept;
    Precision widened(int extra_digits) const { return Precision(digits_ + extra_digits); }

    friend constexpr auto operator<=>(Precision, Precision) = default;

private:
    int digits_;
};

class Real {
public:
    Real();  // zero at 64 bits
    Real(long value, Precision p);
    Real(int value, Precision p) : Real(static_cast<long>(value), p) {}
    Real(double value, Precision p);
    Real(const mpq_class& value, Precision p);
    Real(const mpz_class& value, Precision p);
    Real(const std::string& decimal, Precision p);

    static Real with_bits(mpfr_prec_t bits);  // zero at an explicit binary precision

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_prec_t bits() const noexcept { return mpfr_get_prec(v_); }
    /// Decimal digits this value can faithfully represent, guard bits excluded.
    int digits() const noexcept;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    int sign() const noexcept { return mpfr_sgn(v_); }

    /// Round to `significant` decimal digits, e.g. "3.1415926535897932385".
    std::string str(int significant) const;
    /// Scientific notation with `significant` digits, e.g. "1.25e-12".
    std::string sci(int significant = 6) const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real& operator+=(long o);
    Real& operator-=(long o);
    Real& operator*=(long o);
    Real& operator/=(long o);
    Real& mul_ui(unsigned long o);
    Real& div_ui(unsigned long o);

    Real operator-() const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator+(Real a, long b) { return a += b; }
    friend Real operator-(Real a, long b) { return a -= b; }
    friend Real operator*(Real a, long b) { return a *= b; }
    friend Real operator/(Real a, long b) { return a /= b; }
    friend Real operator+(long a, Real b) { return b += a; }
    friend Real operator-(long a, const Real& b);
    friend Real operator*(long a, Real b) { return b *= a; }
    friend Real operator/(long a, const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
    friend std::partial_ordering operator<=>(const Real& a, long b);

    mpfr_srcptr get() const noexcept { return v_; }
    mpfr_ptr get() noexcept { return v_; }

private:
    explicit Real(mpfr_prec_t bits);
    mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

Real abs(const Real& x);
Real sqr(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real cot(const Real& x);
Real asin(const Real& x);
Real atan(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real pow(const Real& x, long n);
Real ldexp(const Real& x, long e);  // x * 2^e
Real max(const Real& a, const Real& b);

/// x rounded (or widened) to precision p.
Real round_to(const Real& x, Precision p);

/// 10^e at precision p.
Real pow10(long e, Precision p);

/// Positive absolute tolerance.
class Tolerance {
public:
    explicit Tolerance(Real bound);
    /// 10^{-digits}
    static Tolerance digits(int digits, Precision p);

    const Real& bound() const noexcept { return bound_; }
    bool admits(const Real& difference) const { return abs(difference) <= bound_; }

private:
    Real bound_;
};

}  // namespace cotm::hp
