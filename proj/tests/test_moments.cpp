#include <doctest.h>

#include "cotm/constants.hpp"
#include "cotm/moments.hpp"

using namespace cotm;
using namespace cotm::moments;
using hp::pi;
using hp::pow10;
using hp::sqr;

namespace {

const Precision P30(30);
const Precision P50(50);

}  // namespace

TEST_CASE("eta route, expanded by hand") {
    const Real log2 = hp::log2(P50);
    CHECK(abs(c_eta_route(1, P50).value - pi(P50) * log2) < pow10(-48, P50));
    CHECK(abs(c_eta_route(2, P50).value -
              (sqr(pi(P50)) / 2 * log2 - 7 * hp::zeta(3, P50) / 4)) < pow10(-48, P50));
    const Real c4 = pow(pi(P50), 4) / 24 * log2 - sqr(pi(P50)) / 2 * hp::eta(3, P50) +
                    31 * hp::eta(5, P50) / 15;
    CHECK(abs(c_eta_route(4, P50).value - c4) < pow10(-48, P50));
    CHECK(c_eta_route(1, P50).value.str(22).rfind("2.17758609030360213050", 0) == 0);
    CHECK_THROWS(c_eta_route(0, P50));
}

TEST_CASE("eta route against quadrature") {
    for (int m = 1; m <= 8; ++m) {
        CAPTURE(m);
        const auto q = c_quadrature_route(m, P50, pow10(-40, P50));
        CHECK(abs(q.value - c_eta_route(m, P50).value) < pow10(-35, P50));
    }
}

TEST_CASE("cfn route terms") {
    CHECK(cfn_route_term_exact(1, 0) == 2);
    CHECK(cfn_route_term_exact(2, 0) == 0);
    CHECK(cfn_route_term_exact(2, 1) == 1);  // 1/2 * 4 * 1 / (1 * 2)
    for (int m = 1; m <= 6; ++m)
        for (unsigned j = m / 2; j <= 12; ++j) {  // H(k, j) vanishes below j = k
            CAPTURE(m);
            CAPTURE(j);
            CHECK(cfn_route_term_exact(m, j) > 0);
        }

    // The streamed sum reproduces the exact partial sum.
    for (int m = 1; m <= 6; ++m) {
        exact::BigRational partial = 0;
        for (unsigned j = 0; j <= 20; ++j) partial += cfn_route_term_exact(m, j);
        CHECK(abs(c_cfn_route(m, P30, 20).value - Real(partial, P30)) < pow10(-27, P30));
    }
    CHECK_THROWS(c_cfn_route(4, P30, 3));
}

TEST_CASE("cfn route partial sums rise monotonically") {
    for (int m : {1, 2, 5}) {
        const auto sums = cfn_route_partial_sums(m, P30, 2000, 100);
        CHECK(sums.size() == 20);
        for (std::size_t i = 1; i < sums.size(); ++i) CHECK(sums[i - 1] <= sums[i]);
        CHECK(sums.back() < c_eta_route(m, P30).value);
    }
}

TEST_CASE("cfn route converges within its bound") {
    const auto c2 = c_cfn_route(2, P30, 100000);
    const Real gap = abs(c2.value - c_eta_route(2, P30).value);
    CHECK(gap < Real(1e-7, P30));
    CHECK(gap <= c2.error_bound);
}

TEST_CASE("R closed forms") {
    CHECK(abs(r_odd(1, P50).value - sqr(pi(P50)) / 8) < pow10(-48, P50));
    CHECK(abs(r_odd(2, P50).value - 5 * pow(pi(P50), 4) / 384) < pow10(-48, P50));
    CHECK(abs(r_even(1, P50).value - sqr(pi(P50)) / 6) < pow10(-48, P50));
    CHECK(abs(r_via_partitions(2, Parity::even, P50).value - 7 * pow(pi(P50), 4) / 360) <
          pow10(-48, P50));
    CHECK_THROWS(r_odd(0, P50));
}

TEST_CASE("R closed forms against the cycle-index sum") {
    for (int k = 1; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(abs(r_via_partitions(k, Parity::odd, P50).value - r_odd(k, P50).value) <
              pow10(-42, P50));
        CHECK(abs(r_via_partitions(k, Parity::even, P50).value - r_even(k, P50).value) <
              pow10(-42, P50));
    }
}

TEST_CASE("R closed forms against truncated nested sums") {
    for (int k = 1; k <= 3; ++k) {
        for (Parity kind : {Parity::odd, Parity::even}) {
            const auto t = r_truncated(k, kind, P30, 10000);
            const Real closed = kind == Parity::odd ? r_odd(k, P30).value : r_even(k, P30).value;
            CHECK(t.value < closed);
            CHECK(closed - t.value <= t.error_bound);
            CHECK(t.method == Method::truncated_sum);
        }
    }
}

TEST_CASE("A series") {
    CHECK(a1(0, P50).value == 1);
    CHECK(a0(0, P50).value == 1);
    CHECK(abs(a1(1, P50).value - sqr(pi(P50)) / 8) < pow10(-48, P50));
    CHECK(abs(a0(1, P50).value - sqr(pi(P50)) / 6) < pow10(-48, P50));
    for (int k = 0; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(abs(a1_by_recurrence(k, P50).value - a1(k, P50).value) < pow10(-42, P50));
        CHECK(abs(a0_by_recurrence(k, P50).value - a0(k, P50).value) < pow10(-42, P50));
    }
}

TEST_CASE("S series against their closed forms") {
    const Real log2 = hp::log2(P30);
    const Real eta3 = hp::eta(3, P30);
    struct Case {
        SeriesValue s;
        Real closed;
    };
    const std::vector<Case> cases{
        {s_odd(0, P30, 20000), pi(P30) / 2 * log2},
        {s_odd(1, P30, 20000), pow(pi(P30), 3) / 24 * log2 + pi(P30) / 8 * eta3},
        {s_even(0, P30, 20000), sqr(pi(P30)) / 2 * log2 - 7 * eta3 / 3},
    };
    for (const auto& c : cases) {
        CHECK(abs(c.s.value - c.closed) <= c.s.error_bound);
        CHECK(c.s.error_bound < Real(1e-5, P30));
    }
    // The plain outer sum only grows with the cutoff.
    CHECK(s_odd(0, P30, 1000).value < s_odd(0, P30, 2000).value);
    CHECK(s_even(0, P30, 1000).value < s_even(0, P30, 2000).value);
}

TEST_CASE("nested route") {
    for (int m = 1; m <= 6; ++m) {
        CAPTURE(m);
        const auto s = c_nested_route(m, P30, 10000);
        const Real gap = abs(s.value - c_eta_route(m, P30).value);
        CHECK(gap <= s.error_bound);
        CHECK(gap < Real(1e-4, P30));
    }
}

TEST_CASE("nested tail sums") {
    const auto t = nested_tail_sums(Parity::odd, 2, 5, P30, 10000);
    CHECK(t.values[0][3] == 1);
    // W_1(1) = sum_{i>=1} 1/(2i+1)^2 = pi^2/8 - 1
    CHECK(abs(t.values[1][1] - (sqr(pi(P30)) / 8 - 1)) <= t.bound[1] + pow10(-25, P30));
    CHECK(t.values[2][0] > t.values[2][1]);
    CHECK_THROWS(nested_tail_sums(Parity::odd, 1, 50, P30, 10));
}

TEST_CASE("kernels") {
    const Real zero(0, P30), one(1, P30);
    CHECK(kernel_k1(zero, P30) == 1);
    CHECK(kernel_k0(zero, P30) == 0);
    CHECK(abs(kernel_k1(one, P30) - pi(P30) / 2 * hp::log2(P30)) < pow10(-20, P30));
    CHECK(abs(kernel_k0(one, P30) - c_eta_route(2, P30).value) < pow10(-20, P30));
    for (const char* z : {"0.25", "0.5", "0.75"}) {
        CAPTURE(z);
        const Real x(std::string(z), P30);
        CHECK(abs(kernel_k1_series(x, P30) - kernel_k1_quadrature(x, P30)) < pow10(-20, P30));
        CHECK(abs(kernel_k0_series(x, P30) - kernel_k0_quadrature(x, P30)) < pow10(-20, P30));
    }
    CHECK_THROWS_AS(kernel_k1(Real(-0.1, P30), P30), std::domain_error);
    CHECK_THROWS_AS(kernel_k0(Real(1.1, P30), P30), std::domain_error);
}

TEST_CASE("binomial generating functions") {
    std::vector<Real> xs;
    for (const char* x : {"0", "0.5", "0.9"}) xs.emplace_back(std::string(x), P30);
    const auto report = binomial_gf_identities(P30, xs);
    CHECK(report.checks().size() == 6);
    CHECK(report.all_passed());
    CHECK_THROWS(binomial_gf_identities(P30, {Real(0.95, P30)}));
}

TEST_CASE("consequence identities") {
    const auto report = verify_consequences(P30);
    CHECK(report.checks().size() == 13);
    CHECK(report.all_passed());
}

TEST_CASE("log-power integrals") {
    const auto report = verify_log_power_integrals(P30, 6, 3);
    CHECK(report.checks().size() == 28);
    CHECK(report.all_passed());
}

TEST_CASE("H integral reduction") {
    for (int k = 0; k <= 2; ++k) {
        const auto report = verify_h_integral_reduction(k, 10, 20000, P30);
        CHECK(report.checks().size() == 21);
        CHECK(report.all_passed());
    }
    CHECK_THROWS(verify_h_integral_reduction(4, 10, 1000, P30));
}

TEST_CASE("route names") {
    CHECK(parse_route("eta") == Route::eta_closed_form);
    CHECK(parse_route("quad") == Route::quadrature);
    CHECK(to_string(Route::cfn_series) == "cfn-series");
    CHECK_THROWS(parse_route("simpson"));
    CHECK(to_string(Family::s_even) == "S_even");
}
