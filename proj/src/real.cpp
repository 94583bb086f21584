#include "cotm/real.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

namespace cotm::hp {

namespace {

constexpr double kLog2Of10 = 3.3219280948873623;

mpfr_prec_t min_bits(const Real& a, const Real& b) { return std::min(a.bits(), b.bits()); }

template <typename F>
Real unary(const Real& x, F f) {
    Real r = Real::with_bits(x.bits());
    f(r.get(), x.get(), MPFR_RNDN);
    return r;
}

}  // namespace

mpfr_prec_t Precision::bits() const noexcept {
    return static_cast<mpfr_prec_t>(std::ceil(digits_ * kLog2Of10)) + kGuardBits;
}

Real::Real() : Real(mpfr_prec_t{64}) { mpfr_set_zero(v_, 1); }

Real::Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); }

Real Real::with_bits(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_zero(r.v_, 1);
    return r;
}

Real::Real(long value, Precision p) : Real(p.bits()) { mpfr_set_si(v_, value, MPFR_RNDN); }

Real::Real(double value, Precision p) : Real(p.bits()) { mpfr_set_d(v_, value, MPFR_RNDN); }

Real::Real(const mpq_class& value, Precision p) : Real(p.bits()) {
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const mpz_class& value, Precision p) : Real(p.bits()) {
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal, Precision p) : Real(p.bits()) {
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("not a decimal number: " + decimal);
}

Real::Real(const Real& other) : Real(other.bits()) { mpfr_set(v_, other.v_, MPFR_RNDN); }

Real::Real(Real&& other) noexcept : Real(MPFR_PREC_MIN) { mpfr_swap(v_, other.v_); }

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.bits());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

int Real::digits() const noexcept {
    return static_cast<int>((bits() - Precision::kGuardBits) / kLog2Of10);
}

std::string Real::str(int significant) const {
    if (significant < 1) significant = 1;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", significant, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

std::string Real::sci(int significant) const {
    if (significant < 1) significant = 1;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", significant - 1, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

Real& Real::operator+=(const Real& o) {
    if (o.bits() < bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator-=(const Real& o) {
    if (o.bits() < bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator*=(const Real& o) {
    if (o.bits() < bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator/=(const Real& o) {
    if (o.bits() < bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator+=(long o) {
    mpfr_add_si(v_, v_, o, MPFR_RNDN);
    return *this;
}
Real& Real::operator-=(long o) {
    mpfr_sub_si(v_, v_, o, MPFR_RNDN);
    return *this;
}
Real& Real::operator*=(long o) {
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
}
Real& Real::operator/=(long o) {
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
}
Real& Real::mul_ui(unsigned long o) {
    mpfr_mul_ui(v_, v_, o, MPFR_RNDN);
    return *this;
}
Real& Real::div_ui(unsigned long o) {
    mpfr_div_ui(v_, v_, o, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const { return unary(*this, mpfr_neg); }

Real operator+(const Real& a, const Real& b) {
    Real r = Real::with_bits(min_bits(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator-(const Real& a, const Real& b) {
    Real r = Real::with_bits(min_bits(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, const Real& b) {
    Real r = Real::with_bits(min_bits(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, const Real& b) {
    Real r = Real::with_bits(min_bits(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator-(long a, const Real& b) {
    Real r = Real::with_bits(b.bits());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}
Real operator/(long a, const Real& b) {
    Real r = Real::with_bits(b.bits());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
    if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp_si(a.v_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(x.digits()); }

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqr(const Real& x) { return unary(x, mpfr_sqr); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real tan(const Real& x) { return unary(x, mpfr_tan); }
Real cot(const Real& x) { return unary(x, mpfr_cot); }
Real asin(const Real& x) { return unary(x, mpfr_asin); }
Real atan(const Real& x) { return unary(x, mpfr_atan); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real tanh(const Real& x) { return unary(x, mpfr_tanh); }

Real pow(const Real& x, long n) {
    Real r = Real::with_bits(x.bits());
    mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
    return r;
}

Real ldexp(const Real& x, long e) {
    Real r = Real::with_bits(x.bits());
    mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real round_to(const Real& x, Precision p) {
    Real r = Real::with_bits(p.bits());
    mpfr_set(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real pow10(long e, Precision p) {
    Real r = Real::with_bits(p.bits());
    mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
    return r;
}

Tolerance::Tolerance(Real bound) : bound_(std::move(bound)) {
    if (!(bound_ > 0)) throw std::invalid_argument("tolerance must be positive");
}

Tolerance Tolerance::digits(int digits, Precision p) { return Tolerance(pow10(-digits, p)); }

}  // namespace cotm::hp
