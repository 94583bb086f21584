#include "cotm/cfn.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "cotm/power_series.hpp"

namespace cotm::cfn {

using exact::BigInt;
using exact::make_rational;

TriangularTable::TriangularTable(Parity kind, unsigned kmax, unsigned nmax)
    : kind_(kind), kmax_(kmax), nmax_(nmax),
      values_(static_cast<std::size_t>(kmax + 1) * (nmax + 1), BigRational(0)) {
    if (kmax > nmax) throw std::invalid_argument("table bounds require kmax <= nmax");
}

const BigRational& TriangularTable::operator()(unsigned k, unsigned n) const {
    if (k > kmax_ || n > nmax_) throw std::out_of_range("table index out of range");
    return values_[static_cast<std::size_t>(k) * (nmax_ + 1) + n];
}

BigRational& TriangularTable::operator()(unsigned k, unsigned n) {
    if (k > kmax_ || n > nmax_) throw std::out_of_range("table index out of range");
    return values_[static_cast<std::size_t>(k) * (nmax_ + 1) + n];
}

std::string TriangularTable::to_csv() const {
    std::ostringstream os;
    for (unsigned k = 0; k <= kmax_; ++k) {
        for (unsigned n = 0; n <= nmax_; ++n) {
            if (n > 0) os << ',';
            os << exact::to_string((*this)(k, n));
        }
        os << '\n';
    }
    return os.str();
}

nlohmann::ordered_json TriangularTable::to_json() const {
    auto rows = nlohmann::ordered_json::array();
    for (unsigned k = 0; k <= kmax_; ++k) {
        auto row = nlohmann::ordered_json::array();
        for (unsigned n = 0; n <= nmax_; ++n) row.push_back(exact::to_string((*this)(k, n)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string TriangularTable::to_text() const {
    std::size_t width = 1;
    for (const auto& v : values_) width = std::max(width, exact::to_string(v).size());
    width += 1;
    std::ostringstream os;
    os << std::setw(4) << "k\\n";
    for (unsigned n = 0; n <= nmax_; ++n) os << std::setw(static_cast<int>(width)) << n;
    os << '\n';
    for (unsigned k = 0; k <= kmax_; ++k) {
        os << std::setw(4) << k;
        for (unsigned n = 0; n <= nmax_; ++n)
            os << std::setw(static_cast<int>(width)) << exact::to_string((*this)(k, n));
        os << '\n';
    }
    return os.str();
}

CfnTable build_t0(unsigned kmax, unsigned nmax) {
    CfnTable t(Parity::even, kmax, nmax);
    t(0, 0) = 1;
    for (unsigned k = 0; k <= kmax; ++k) {
        for (unsigned n = 1; n <= nmax; ++n) {
            const BigRational diag = k > 0 ? t(k - 1, n - 1) : BigRational(0);
            const unsigned long sq = static_cast<unsigned long>(n - 1) * (n - 1);
            t(k, n) = diag + sq * t(k, n - 1);
        }
    }
    return t;
}

CfnTable build_t1(unsigned kmax, unsigned nmax) {
    CfnTable t(Parity::odd, kmax, nmax);
    // Row zero is ((2n-1)!!)^2 / 4^n, which is also what the recurrence
    // produces from an all-zero row k = -1.
    for (unsigned n = 0; n <= nmax; ++n) {
        const BigInt df = exact::odd_double_factorial(n);
        BigInt four_n;
        mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
        t(0, n) = make_rational(df * df, four_n);
    }
    for (unsigned k = 1; k <= kmax; ++k) {
        for (unsigned n = 1; n <= nmax; ++n) {
            // (n - 1/2)^2 = (2n-1)^2 / 4
            const BigRational sq = make_rational(BigInt(2 * n - 1) * (2 * n - 1), 4);
            t(k, n) = t(k - 1, n - 1) + sq * t(k, n - 1);
        }
    }
    return t;
}

HarmonicTable build_h0(unsigned kmax, unsigned nmax) {
    HarmonicTable h(Parity::even, kmax, nmax);
    h(0, 0) = 1;
    if (kmax >= 1)
        for (unsigned n = 1; n <= nmax; ++n) h(1, n) = 1;
    for (unsigned k = 2; k <= kmax; ++k) {
        for (unsigned n = k; n <= nmax; ++n) {
            const unsigned i = n - 1;
            h(k, n) = h(k, n - 1) + h(k - 1, i) / BigRational(BigInt(i) * i);
        }
    }
    return h;
}

HarmonicTable build_h1(unsigned kmax, unsigned nmax) {
    HarmonicTable h(Parity::odd, kmax, nmax);
    for (unsigned n = 0; n <= nmax; ++n) h(0, n) = 1;
    for (unsigned k = 1; k <= kmax; ++k) {
        for (unsigned n = k; n <= nmax; ++n) {
            const unsigned i = n - 1;
            h(k, n) = h(k, n - 1) + h(k - 1, i) / BigRational(BigInt(2 * i + 1) * (2 * i + 1));
        }
    }
    return h;
}

VerificationReport check_factorial_relation(unsigned kmax, unsigned nmax) {
    VerificationReport report("factorial-relation");
    const auto t0 = build_t0(kmax, nmax);
    const auto t1 = build_t1(kmax, nmax);
    const auto h0 = build_h0(kmax, nmax);
    const auto h1 = build_h1(kmax, nmax);

    for (unsigned k = 0; k <= kmax; ++k) {
        for (unsigned n = 0; n <= nmax; ++n) {
            std::ostringstream id;
            id << "factorial-relation/t1/k" << std::setw(2) << std::setfill('0') << k << "/n"
               << std::setw(3) << n;
            BigInt two_pow;
            mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * k);
            BigInt sixteen_n;
            mpz_ui_pow_ui(sixteen_n.get_mpz_t(), 16, n);
            const BigRational scale =
                make_rational(two_pow * exact::binomial_int(2 * n, n) * exact::factorial(2 * n),
                              sixteen_n);
            report.add_exact(id.str(), "t1(k,n) = 2^{2k} C(2n,n) (2n)!/2^{4n} H1(k,n)", t1(k, n),
                             scale * h1(k, n));

            if (n == 0) continue;
            std::ostringstream id0;
            id0 << "factorial-relation/t0/k" << std::setw(2) << std::setfill('0') << k << "/n"
                << std::setw(3) << n;
            const BigInt f = exact::factorial(n - 1);
            report.add_exact(id0.str(), "t0(k,n) = (n-1)!^2 H0(k,n)", t0(k, n),
                             BigRational(f * f) * h0(k, n));
        }
    }
    return report;
}

VerificationReport check_generating_functions(unsigned kmax, unsigned order) {
    if (order < 2 * kmax) throw std::invalid_argument("check_generating_functions: order < 2 kmax");
    VerificationReport report("generating-functions");
    const unsigned nmax = order / 2;
    const std::size_t series_order = 2 * nmax + 1;
    const auto t0 = build_t0(std::min(kmax, nmax), nmax);
    const auto t1 = build_t1(std::min(kmax, nmax), nmax);
    const auto arcsin2 = exact::fps_arcsin(series_order);

    auto make_id = [](const char* side, unsigned k, unsigned n) {
        std::ostringstream id;
        id << "gf/" << side << "/k" << std::setw(2) << std::setfill('0') << k << "/n"
           << std::setw(3) << n;
        return id.str();
    };

    for (unsigned k = 0; k <= kmax; ++k) {
        exact::RationalPowerSeries even(series_order);
        if (k == 0) {
            even[0] = 1;
        } else {
            even = exact::fps_power(arcsin2, 2 * k);
        }
        even *= BigRational(1) / BigRational(exact::factorial(2 * k));
        const auto odd = exact::fps_power(arcsin2, 2 * k + 1) *
                         (BigRational(1) / BigRational(exact::factorial(2 * k + 1)));

        for (unsigned n = 0; n <= nmax; ++n) {
            const BigRational t0v = k <= t0.kmax() ? t0(k, n) : BigRational(0);
            const BigRational t1v = k <= t1.kmax() ? t1(k, n) : BigRational(0);
            report.add_exact(make_id("t0", k, n),
                             "[z^{2n}] [2 arcsin(z/2)]^{2k}/(2k)! = t0(k,n)/(2n)!", even[2 * n],
                             t0v / BigRational(exact::factorial(2 * n)));
            report.add_exact(make_id("t1", k, n),
                             "[z^{2n+1}] [2 arcsin(z/2)]^{2k+1}/(2k+1)! = t1(k,n)/(2n+1)!",
                             odd[2 * n + 1], t1v / BigRational(exact::factorial(2 * n + 1)));
        }
        // Parity: the even power has no odd coefficients and vice versa.
        bool parity_ok = true;
        for (std::size_t p = 0; p <= series_order; ++p) {
            if (p % 2 == 1 && even[p] != 0) parity_ok = false;
            if (p % 2 == 0 && odd[p] != 0) parity_ok = false;
        }
        std::ostringstream id;
        id << "gf/parity/k" << std::setw(2) << std::setfill('0') << k;
        report.add_condition(id.str(), "even powers of 2 arcsin(z/2) are even series, odd powers odd",
                             "parity", "parity", parity_ok);
    }
    return report;
}

const std::vector<std::vector<std::string>>& reference_t0() {
    static const std::vector<std::vector<std::string>> v{
        {"1", "0", "0", "0", "0", "0"},      {"0", "1", "1", "4", "36", "576"},
        {"0", "0", "1", "5", "49", "820"},   {"0", "0", "0", "1", "14", "273"},
        {"0", "0", "0", "0", "1", "30"},     {"0", "0", "0", "0", "0", "1"},
    };
    return v;
}

const std::vector<std::vector<std::string>>& reference_t1() {
    static const std::vector<std::vector<std::string>> v{
        {"1", "1/4", "9/16", "225/64", "11025/256", "893025/1024"},
        {"0", "1", "5/2", "259/16", "3229/16", "1057221/256"},
        {"0", "0", "1", "35/4", "987/8", "86405/32"},
        {"0", "0", "0", "1", "21", "4389/8"},
        {"0", "0", "0", "0", "1", "165/4"},
        {"0", "0", "0", "0", "0", "1"},
    };
    return v;
}

const std::vector<std::vector<std::string>>& reference_h0() {
    static const std::vector<std::vector<std::string>> v{
        {"1", "0", "0", "0", "0", "0"},
        {"0", "1", "1", "1", "1", "1"},
        {"0", "0", "1", "5/4", "49/36", "205/144"},
        {"0", "0", "0", "1/4", "7/18", "91/192"},
    };
    return v;
}

const std::vector<std::vector<std::string>>& reference_h1() {
    static const std::vector<std::vector<std::string>> v{
        {"1", "1", "1", "1", "1", "1"},
        {"0", "1", "10/9", "259/225", "12916/11025", "117469/99225"},
        {"0", "0", "1/9", "7/45", "94/525", "34562/178605"},
        {"0", "0", "0", "1/225", "4/525", "418/42525"},
    };
    return v;
}

VerificationReport check_reference_tables() {
    VerificationReport report("tables");
    auto compare = [&](const char* name, const TriangularTable& table,
                       const std::vector<std::vector<std::string>>& ref) {
        for (unsigned k = 0; k < ref.size(); ++k) {
            for (unsigned n = 0; n < ref[k].size(); ++n) {
                std::ostringstream id;
                id << "tables/" << name << "/k" << k << "/n" << n;
                report.add_exact(id.str(), std::string("reference array of ") + name,
                                 table(k, n), exact::parse_rational(ref[k][n]));
            }
        }
    };
    compare("t0", build_t0(5, 5), reference_t0());
    compare("t1", build_t1(5, 5), reference_t1());
    compare("h0", build_h0(3, 5), reference_h0());
    compare("h1", build_h1(3, 5), reference_h1());
    return report;
}

}  // namespace cotm::cfn
