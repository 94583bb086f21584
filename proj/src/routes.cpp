// The four routes to C(m).

#include <stdexcept>

#include "cotm/constants.hpp"
#include "cotm/moments.hpp"

namespace cotm::moments {

namespace {

Real factorial_real(unsigned n, Precision p) { return Real(exact::factorial(n), p); }

void require_moment(int m) {
    if (m < 1) throw std::invalid_argument("moment index must be >= 1");
}

// (2/3) N^{-3/2}: majorant of sum_{j>N} j^{-5/2}.
Real j_tail(long n, Precision p) {
    const Real rn(n, p);
    return 2 / (3 * rn * sqrt(rn));
}

// Running state of the cfn-route sum: H values for the current j and the
// central binomial ratio c_j = C(2j,j)/4^j.
class CfnStream {
public:
    CfnStream(int m, Precision p) : p_(p), odd_(m % 2 == 1), k_(m / 2), c_(1, p), sum_(0, p) {
        h_.assign(static_cast<std::size_t>(k_) + 1, Real(0, p));
        if (odd_) {
            h_[0] = Real(1, p);
            j_ = 0;
        } else {
            // j starts at 1 with H0(1,1) = 1 and H0(i,1) = 0 for i >= 2
            h_[1] = Real(1, p);
            j_ = 1;
            c_.div_ui(2);
        }
        if (odd_) {
            scale_ = ldexp(Real(1, p), 2 * k_ + 1);
        } else {
            scale_ = Real(1, p) / 2;
        }
    }

    long index() const { return j_; }
    const Real& sum() const { return sum_; }

    // Adds term j and advances to j + 1.
    void step() {
        const auto j = static_cast<unsigned long>(j_);
        Real term;
        if (odd_) {
            term = c_ * h_[k_];
            term.div_ui(2 * j + 1);
            term.div_ui(2 * j + 1);
        } else {
            term = h_[k_] / c_;
            term.div_ui(j);
            term.div_ui(j);
            term.div_ui(j);
        }
        sum_ += scale_ * term;

        if (odd_) {
            Real w = Real(1, p_);
            w.div_ui(2 * j + 1);
            w.div_ui(2 * j + 1);
            for (int i = k_; i >= 1; --i) h_[i] += h_[i - 1] * w;
        } else {
            Real w = Real(1, p_);
            w.div_ui(j);
            w.div_ui(j);
            for (int i = k_; i >= 2; --i) h_[i] += h_[i - 1] * w;
        }
        c_.mul_ui(2 * j + 1);
        c_.div_ui(2 * j + 2);
        ++j_;
    }

private:
    Precision p_;
    bool odd_;
    int k_;
    long j_ = 0;
    Real c_;
    Real sum_;
    Real scale_;
    std::vector<Real> h_;
};

// Bound on the cfn-route terms beyond index n. H1(k,j) <= R_odd(1)^k / k!
// and H0(k,j) <= R_even(1)^{k-1} / (k-1)! (strict nesting), combined with
// the central binomial bounds and the j^{-5/2} integral comparison.
Real cfn_tail_bound(int m, long n, Precision p) {
    const int k = m / 2;
    const Real pi = hp::pi(p);
    if (m % 2 == 1) {
        const Real h_max = pow(sqr(pi) / 8, k) / factorial_real(static_cast<unsigned>(k), p);
        return ldexp(h_max, 2 * k + 1) / (4 * sqrt(pi)) * j_tail(n, p);
    }
    const Real h_max =
        pow(sqr(pi) / 6, k - 1) / factorial_real(static_cast<unsigned>(k - 1), p);
    return h_max / 2 * sqrt(pi) * sqrt(1 + Real(1, p) / (2 * n + 2)) * j_tail(n, p);
}

}  // namespace

std::string to_string(Route r) {
    switch (r) {
        case Route::eta_closed_form: return "eta-closed-form";
        case Route::cfn_series: return "cfn-series";
        case Route::nested_series: return "nested-series";
        case Route::quadrature: return "quadrature";
    }
    return "?";
}

Route parse_route(const std::string& name) {
    if (name == "eta" || name == "eta-closed-form") return Route::eta_closed_form;
    if (name == "cfn" || name == "cfn-series") return Route::cfn_series;
    if (name == "nested" || name == "nested-series") return Route::nested_series;
    if (name == "quad" || name == "quadrature") return Route::quadrature;
    throw std::invalid_argument("unknown route: " + name);
}

MomentValue c_eta_route(int m, Precision p) {
    require_moment(m);
    const Precision work = p.widened(5);
    const Real pi = hp::pi(work);
    Real sum(0, work);
    for (int l = 0; 2 * l <= m; ++l) {
        Real term = pow(pi, m - 2 * l) / factorial_real(static_cast<unsigned>(m - 2 * l), work) *
                    hp::eta(2 * l + 1, work);
        if (l % 2 == 0) sum += term;
        else sum -= term;
    }
    if (m % 2 == 0) {
        const Real z = hp::zeta(m + 1, work);
        if ((m / 2) % 2 == 0) sum += z;
        else sum -= z;
    }
    return MomentValue{m, Route::eta_closed_form, hp::round_to(sum, p), 0,
                       hp::pow10(-(p.digits() - 2), p)};
}

MomentValue c_cfn_route(int m, Precision p, long n_terms) {
    require_moment(m);
    if (n_terms < m) throw std::invalid_argument("cfn route: N must be >= m");
    const Precision work = p.widened(5);
    CfnStream stream(m, work);
    while (stream.index() <= n_terms) stream.step();
    const Real bound = cfn_tail_bound(m, n_terms, work) + hp::pow10(-(p.digits() - 2), work);
    return MomentValue{m, Route::cfn_series, hp::round_to(stream.sum(), p), n_terms,
                       hp::round_to(bound, p)};
}

BigRational cfn_route_term_exact(int m, unsigned j) {
    require_moment(m);
    const auto k = static_cast<unsigned>(m / 2);
    const unsigned nmax = std::max(j, k);
    const BigRational central = exact::binomial(2 * j, j);
    exact::BigInt four_j;
    mpz_ui_pow_ui(four_j.get_mpz_t(), 4, j);
    if (m % 2 == 1) {
        const auto h1 = cfn::build_h1(k, nmax);
        exact::BigInt two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * k + 1);
        const exact::BigInt sq = exact::BigInt(2 * j + 1) * (2 * j + 1);
        return BigRational(two_pow) * central / BigRational(four_j) * h1(k, j) / BigRational(sq);
    }
    if (j == 0) return 0;
    const auto h0 = cfn::build_h0(k, nmax);
    const exact::BigInt cube = exact::BigInt(j) * j * j;
    return BigRational(four_j) * h0(k, j) / (2 * BigRational(cube) * central);
}

std::vector<Real> cfn_route_partial_sums(int m, Precision p, long n_terms, long stride) {
    require_moment(m);
    if (stride < 1) throw std::invalid_argument("cfn partial sums: stride must be >= 1");
    CfnStream stream(m, p.widened(5));
    std::vector<Real> out;
    long count = 0;
    while (stream.index() <= n_terms) {
        stream.step();
        if (++count % stride == 0) out.push_back(hp::round_to(stream.sum(), p));
    }
    return out;
}

MomentValue c_nested_route(int m, Precision p, long n) {
    require_moment(m);
    const Precision work = p.widened(5);
    const Real pi = hp::pi(work);
    Real sum(0, work);
    Real bound(0, work);
    if (m % 2 == 1) {
        const int k = (m - 1) / 2;
        // deepest first: one dynamic-programming pass serves every l
        for (int l = k; l >= 0; --l) {
            const SeriesValue s = s_odd(l, work, n);
            const Real coeff = ldexp(pow(pi, 2 * k - 2 * l), 2 * l + 1) /
                               factorial_real(static_cast<unsigned>(2 * k - 2 * l), work);
            if (l % 2 == 0) sum += coeff * s.value;
            else sum -= coeff * s.value;
            bound += coeff * s.error_bound;
        }
    } else {
        const int k = (m - 2) / 2;
        // deepest first: one dynamic-programming pass serves every l
        for (int l = k; l >= 0; --l) {
            const SeriesValue s = s_even(l, work, n);
            const Real coeff = pow(pi, 2 * k - 2 * l) /
                               factorial_real(static_cast<unsigned>(2 * k - 2 * l + 1), work);
            if (l % 2 == 0) sum += coeff * s.value;
            else sum -= coeff * s.value;
            bound += coeff * s.error_bound;
        }
    }
    return MomentValue{m, Route::nested_series, hp::round_to(sum, p), n, hp::round_to(bound, p)};
}

MomentValue c_quadrature_route(int m, Precision p, const Real& tol) {
    require_moment(m);
    const quad::QuadratureResult r = quad::moment_quadrature(m, p, tol);
    return MomentValue{m, Route::quadrature, hp::round_to(r.value, p), r.levels,
                       hp::round_to(r.error, p) + hp::pow10(-(p.digits() - 2), p)};
}

}  // namespace cotm::moments
