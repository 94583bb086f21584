#include <doctest.h>

#include <set>

#include "cotm/exact.hpp"
#include "cotm/power_series.hpp"

using namespace cotm::exact;

namespace {

std::vector<std::vector<BigInt>> pascal(unsigned rows) {
    std::vector<std::vector<BigInt>> t(rows + 1);
    for (unsigned n = 0; n <= rows; ++n) {
        t[n].assign(n + 1, 1);
        for (unsigned k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
}

// Akiyama-Tanigawa; yields B_1 = +1/2.
BigRational akiyama_tanigawa(unsigned n) {
    std::vector<BigRational> a(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        a[m] = BigRational(1, m + 1);
        for (unsigned j = m; j >= 1; --j) {
            a[j - 1] = j * (a[j - 1] - a[j]);
            a[j - 1].canonicalize();
        }
    }
    return a[0];
}

// sec z by long division of 1 by cos z.
std::vector<BigRational> secant_series(unsigned order) {
    std::vector<BigRational> c(order + 1, 0), s(order + 1, 0);
    BigInt f = 1;
    for (unsigned n = 0; n <= order; ++n) {
        if (n > 0) f *= n;
        if (n % 2 == 0) c[n] = BigRational((n / 2) % 2 == 0 ? 1 : -1) / BigRational(f);
    }
    for (unsigned n = 0; n <= order; ++n) {
        BigRational acc = n == 0 ? 1 : 0;
        for (unsigned k = 1; k <= n; ++k) acc -= c[k] * s[n - k];
        s[n] = acc;
    }
    return s;
}

// Euler's pentagonal number recurrence.
std::vector<BigInt> partition_counts(unsigned n) {
    std::vector<BigInt> p(n + 1, 0);
    p[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > static_cast<int>(m)) break;
            const int sign = k % 2 == 1 ? 1 : -1;
            p[m] += sign * p[m - g1];
            if (g2 <= static_cast<int>(m)) p[m] += sign * p[m - g2];
        }
    }
    return p;
}

}  // namespace

TEST_CASE("factorials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(odd_double_factorial(0) == 1);
    CHECK(odd_double_factorial(3) == 15);
    CHECK(odd_double_factorial(5) == 945);
}

TEST_CASE("binomial matches Pascal's triangle") {
    const auto t = pascal(40);
    for (unsigned n = 0; n <= 40; ++n)
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(binomial_int(n, k) == t[n][k]);
            CHECK(binomial(n, k) == BigRational(t[n][k]));
        }
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == BigRational(-1, 2));
    CHECK(bernoulli(2) == BigRational(1, 6));
    CHECK(bernoulli(12) == BigRational(-691, 2730));
    for (unsigned n = 2; n <= 40; ++n) {
        CAPTURE(n);
        CHECK(bernoulli(n) == akiyama_tanigawa(n));
        if (n % 2 == 1) CHECK(bernoulli(n) == 0);
    }
}

TEST_CASE("zigzag numbers are the secant coefficients") {
    const auto sec = secant_series(30);
    for (unsigned n = 0; n <= 30; n += 2) {
        CAPTURE(n);
        CHECK(euler_zigzag(n) == sec[n] * BigRational(factorial(n)));
    }
    CHECK(euler_zigzag(8) == 1385);
    CHECK_THROWS_AS(euler_zigzag(3), std::invalid_argument);
}

TEST_CASE("partitions") {
    const auto counts = partition_counts(20);
    CHECK(counts[10] == 42);
    for (unsigned k = 1; k <= 20; ++k) {
        const auto ps = partitions(k);
        CHECK(BigInt(ps.size()) == counts[k]);
        std::set<std::string> seen;
        for (const auto& p : ps) {
            CHECK(p.total() == k);
            seen.insert(p.str());
        }
        CHECK(seen.size() == ps.size());
        CHECK(ps.front().parts() == std::vector<unsigned>{k});
        CHECK(ps.back().length() == k);
    }
    CHECK(partitions(3)[1].str() == "[1^1,2^1]");
    CHECK_THROWS(partitions(0));
}

TEST_CASE("cycle counts sum to k!") {
    for (unsigned k = 1; k <= 9; ++k) {
        BigRational sum = 0;
        for (const auto& p : partitions(k)) sum += cycle_count(p);
        CHECK(sum == BigRational(factorial(k)));
    }
    CHECK(cycle_count(Partition({0, 0, 1})) == 2);  // 3-cycles in S_3
}

TEST_CASE("rational serialization") {
    CHECK(to_string(make_rational(2, 4)) == "1/2");
    CHECK(to_string(BigRational(7)) == "7");
    CHECK(to_string(make_rational(-3, 9)) == "-1/3");
    CHECK(parse_rational("117469/99225") == make_rational(117469, 99225));
    CHECK(parse_rational(to_string(make_rational(22, 7))) == make_rational(22, 7));
}

TEST_CASE("power series: arcsin, powers and composition") {
    const auto a = fps_arcsin(9);
    CHECK(a[0] == 0);
    CHECK(a[1] == 1);
    CHECK(a[3] == BigRational(1, 24));
    CHECK(a[2] == 0);

    // sin(t/2) composed with 2 arcsin(z/2) is z/2.
    RationalPowerSeries half_sin(9);
    BigInt f = 1;
    for (unsigned n = 1; n <= 9; ++n) {
        f *= n;
        if (n % 2 == 1) {
            BigInt two_n;
            mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
            half_sin[n] = BigRational(((n - 1) / 2) % 2 == 0 ? 1 : -1) / BigRational(f * two_n);
        }
    }
    const auto id = half_sin.compose(a);
    for (unsigned n = 0; n <= 9; ++n) CHECK(id[n] == (n == 1 ? BigRational(1, 2) : BigRational(0)));

    const auto sq = fps_power(a, 2);
    CHECK(sq == a * a);
    CHECK_THROWS(fps_power(a, 0));

    const auto sec = fps_cos(12).reciprocal();
    for (unsigned n = 0; n <= 12; n += 2) CHECK(sec[n] * BigRational(factorial(n)) == euler_zigzag(n));

    CHECK_THROWS(a.reciprocal());
    CHECK_THROWS(a.compose(fps_cos(9)));
    CHECK_THROWS(a[10]);
}
