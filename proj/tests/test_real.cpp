#include <doctest.h>

#include "cotm/constants.hpp"
#include "cotm/real.hpp"

using namespace cotm::hp;

namespace {

// atan(1/q) by its Taylor series.
Real atan_inverse(long q, Precision p) {
    const Real eps = pow10(-(p.digits() + 5), p);
    Real power = Real(1, p) / q;
    const Real q2(q * q, p);
    Real sum(0, p);
    for (long n = 0;; ++n) {
        Real term = power / (2 * n + 1);
        if (n % 2 == 0) sum += term;
        else sum -= term;
        if (abs(term) < eps) break;
        power /= q2;
    }
    return sum;
}

Real machin_pi(Precision p) { return 16 * atan_inverse(5, p) - 4 * atan_inverse(239, p); }

// log 2 = sum_k 1 / (k 2^k)
Real log2_series(Precision p) {
    const Real eps = pow10(-(p.digits() + 5), p);
    Real sum(0, p);
    Real half_pow(1, p);
    for (long k = 1;; ++k) {
        half_pow /= 2;
        Real term = half_pow / k;
        sum += term;
        if (term < eps) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("pi against Machin's formula") {
    for (int d : {20, 50, 120}) {
        const Precision p(d);
        CHECK(abs(pi(p) - machin_pi(p.widened(5))) < pow10(-d, p));
    }
    CHECK(pi(Precision(20)).str(20) == "3.1415926535897932385");
}

TEST_CASE("log 2 against its binary series") {
    const Precision p(60);
    CHECK(abs(log2(p) - log2_series(p.widened(5))) < pow10(-60, p));
    CHECK(abs(eta(1, p) - log2(p)) < pow10(-60, p));
}

TEST_CASE("eta(3) against a brute-force alternating sum") {
    const Precision p(30);
    Real sum(0, p);
    for (long k = 1; k <= 2000; ++k) {
        Real term = Real(1, p) / pow(Real(k, p), 3);
        if (k % 2 == 1) sum += term;
        else sum -= term;
    }
    CHECK(abs(eta(3, p) - sum) < Real(1e-9, p));
    CHECK(eta(3, p).str(29) == "0.90154267736969571404980362113");
}

TEST_CASE("eta(2) and zeta at even integers") {
    const Precision p(50);
    CHECK(abs(eta(2, p) - sqr(pi(p)) / 12) < pow10(-48, p));
    for (int l = 1; l <= 10; ++l) {
        CAPTURE(l);
        const Real closed = zeta_even_closed_form(l, p);
        CHECK(abs(zeta(2 * l, p) - closed) < pow10(-48, p));
    }
    CHECK(abs(zeta(2, p) - sqr(pi(p)) / 6) < pow10(-48, p));
}

TEST_CASE("eta and zeta reject out-of-range arguments") {
    const Precision p(20);
    CHECK_THROWS(eta(0, p));
    CHECK_THROWS(zeta(1, p));
    CHECK_THROWS(zeta_even_closed_form(0, p));
}

TEST_CASE("constants agree across precisions") {
    const Real lo = eta(5, Precision(30));
    const Real hi = eta(5, Precision(80));
    CHECK(abs(lo - hi) < pow10(-30, Precision(80)));
    CHECK(eta_terms(Precision(80)) > eta_terms(Precision(30)));
}

TEST_CASE("precision propagation") {
    const Precision lo(30), hi(60);
    const Real a(1, lo), b(1, hi);
    CHECK((a + b).bits() == lo.bits());
    CHECK((b * 2).bits() == hi.bits());
    CHECK((3 - b).bits() == hi.bits());
    CHECK(round_to(a, hi).bits() == hi.bits());
    CHECK(Real(1, hi).digits() >= 60);
    CHECK_THROWS(Precision(0));
}

TEST_CASE("arithmetic and formatting") {
    const Precision p(40);
    const Real x("0.1", p);
    CHECK(abs(10 * x - 1) < pow10(-39, p));
    CHECK(Real(mpq_class(1, 3), p).str(5) == "0.33333");
    CHECK(Real(2, p).sci(3) == "2.00e+00");
    CHECK(Real(-4, p).sign() < 0);
    CHECK(sqrt(Real(2, p)) * sqrt(Real(2, p)) - 2 < pow10(-38, p));
    CHECK(abs(asin(Real(1, p)) - pi(p) / 2) < pow10(-39, p));
    CHECK(abs(log1p(Real("1e-30", p)) - Real("1e-30", p)) < pow10(-59, p));
    CHECK(abs(cot(pi(p) / 4) - 1) < pow10(-38, p));
    CHECK(ldexp(Real(3, p), -1) == Real(1.5, p));
    CHECK(pow(Real(2, p), 10) == 1024);
    CHECK(Real(5, p) > Real(4, p));
    CHECK(Real(5, p) > 4);
}

TEST_CASE("tolerance") {
    const Precision p(30);
    const Tolerance t = Tolerance::digits(20, p);
    CHECK(t.admits(pow10(-21, p)));
    CHECK(t.admits(-pow10(-21, p)));
    CHECK_FALSE(t.admits(pow10(-19, p)));
    CHECK_THROWS(Tolerance(Real(0, p)));
}
