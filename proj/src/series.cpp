// Recursive harmonic series R, A, S and the nested tail-sum dynamic program.

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "cotm/constants.hpp"
#include "cotm/moments.hpp"

namespace cotm::moments {

namespace {

Real rational(const BigRational& q, Precision p) { return Real(q, p); }

Real factorial_real(unsigned n, Precision p) { return Real(exact::factorial(n), p); }

// Inverse square weight of the family at index j.
Real weight(Parity kind, unsigned long j, Precision p) {
    Real w(1, p);
    const unsigned long q = kind == Parity::odd ? 2 * j + 1 : j;
    w.div_ui(q);
    w.div_ui(q);
    return w;
}

unsigned long first_index(Parity kind) { return kind == Parity::odd ? 0 : 1; }

// sum_{j>n} w(j) <= 1/(4n) (odd) or 1/n (even)
Real tail_weight_bound(Parity kind, long n, Precision p) {
    return Real(1, p) / (kind == Parity::odd ? 4 * n : n);
}

// sum_j w(j) over all j: pi^2/8 (odd) or pi^2/6 (even)
Real total_weight(Parity kind, Precision p) {
    return sqr(hp::pi(p)) / (kind == Parity::odd ? 8 : 6);
}

struct HurwitzTail {
    Real value;
    Real error;
};

// zeta(2, a) = sum_{i>=0} 1/(a+i)^2 by Euler-Maclaurin:
// 1/a + 1/(2a^2) + sum_r B_{2r} / a^{2r+1}. The remainder is bounded by the
// first omitted term.
HurwitzTail hurwitz_zeta2(const Real& a, Precision p) {
    const Real eps = hp::pow10(-(p.digits() + 5), p);
    Real value = 1 / a + 1 / (2 * sqr(a));
    Real last;
    bool have_last = false;
    for (unsigned r = 1;; ++r) {
        Real term = rational(exact::bernoulli(2 * r), p) / pow(a, 2 * static_cast<long>(r) + 1);
        Real mag = abs(term);
        if (mag < eps || (have_last && mag >= last)) return {value, mag};
        value += term;
        last = std::move(mag);
        have_last = true;
    }
}

// Tail of the innermost weight sum beyond n.
HurwitzTail weight_tail(Parity kind, long n, Precision p) {
    if (kind == Parity::odd) {
        // sum_{j>n} 1/(2j+1)^2 = zeta(2, n + 3/2) / 4
        Real a = Real(2 * n + 3, p) / 2;
        HurwitzTail t = hurwitz_zeta2(a, p);
        return {t.value / 4, t.error / 4};
    }
    return hurwitz_zeta2(Real(n + 1, p), p);
}

// Sum over j > n of the outer coefficient of S: C(2j,j) 4^{-j} / (2j+1)^2
// (odd) or 4^j / (2 j^3 C(2j,j)) (even). Uses
// 1/sqrt(pi (j + 1/2)) <= C(2j,j) 4^{-j} <= 1/sqrt(pi j) and
// sum_{j>n} j^{-5/2} <= (2/3) n^{-3/2}.
Real outer_tail_bound(Parity kind, long n, Precision p) {
    const Real sqrt_pi = sqrt(hp::pi(p));
    const Real j_tail = 2 / (3 * Real(n, p) * sqrt(Real(n, p)));
    if (kind == Parity::odd) return j_tail / (4 * sqrt_pi);
    return sqrt_pi / 2 * sqrt(1 + Real(1, p) / (2 * n + 2)) * j_tail;
}

struct NestedPass {
    int depth = 0;
    std::vector<Real> s;      // S(l), l <= depth
    std::vector<Real> bound;  // bound on |S(l) - computed|
    TailSums tails;
};

// Backward pass j = n .. first: maintains W_i(j) for i <= depth, where
// W_1 starts from the Euler-Maclaurin tail beyond n and deeper levels start
// from zero, and accumulates S(l) += outer(j) W_l(j).
NestedPass run_nested(Parity kind, int depth, unsigned jkeep, Precision p, long n) {
    if (n < 1) throw std::invalid_argument("nested series: cutoff must be >= 1");
    if (depth < 0) throw std::invalid_argument("nested series: depth must be >= 0");
    const Precision work = p.widened(5);
    const unsigned long first = first_index(kind);
    const auto un = static_cast<unsigned long>(n);

    // c_j = C(2j,j) / 4^j at j = n.
    Real c(1, work);
    for (unsigned long j = 1; j <= un; ++j) {
        c.mul_ui(2 * j - 1);
        c.div_ui(2 * j);
    }

    const HurwitzTail tail = weight_tail(kind, n, work);
    std::vector<Real> w_level(static_cast<std::size_t>(depth) + 1, Real(0, work));
    w_level[0] = Real(1, work);
    if (depth >= 1) w_level[1] = tail.value;

    NestedPass pass;
    pass.depth = depth;
    pass.s.assign(static_cast<std::size_t>(depth) + 1, Real(0, work));
    if (jkeep >= first) {
        pass.tails.values.assign(static_cast<std::size_t>(depth) + 1,
                                 std::vector<Real>(jkeep + 1, Real(0, work)));
    }

    for (unsigned long j = un + 1; j-- > first;) {
        const Real w = weight(kind, j, work);
        for (int i = 1; i <= depth; ++i) w_level[i] += w * w_level[i - 1];

        Real outer(1, work);
        if (kind == Parity::odd) {
            outer = c;
            outer.div_ui(2 * j + 1);
            outer.div_ui(2 * j + 1);
        } else {
            outer = 1 / (2 * c);
            outer.div_ui(j);
            outer.div_ui(j);
            outer.div_ui(j);
        }
        for (int l = 0; l <= depth; ++l) pass.s[l] += outer * w_level[l];

        if (j <= jkeep)
            for (int d = 0; d <= depth; ++d) pass.tails.values[d][j] = w_level[d];

        if (j >= 1) {
            c.mul_ui(2 * j);
            c.div_ui(2 * j - 1);
        }
    }

    // Error of W_i: e_1 = Euler-Maclaurin remainder, e_i <= R(1) e_{i-1} + T^i.
    const Real t = tail_weight_bound(kind, n, work);
    const Real r1 = total_weight(kind, work);
    pass.tails.bound.assign(static_cast<std::size_t>(depth) + 1, Real(0, work));
    if (depth >= 1) pass.tails.bound[1] = tail.error;
    for (int i = 2; i <= depth; ++i)
        pass.tails.bound[i] = r1 * pass.tails.bound[i - 1] + pow(t, i);

    const Real outer_tail = outer_tail_bound(kind, n, work);
    const Real outer_total = pass.s[0] + outer_tail;
    const Real rounding = hp::pow10(-(p.digits() - 1), work);
    pass.bound.reserve(static_cast<std::size_t>(depth) + 1);
    for (int l = 0; l <= depth; ++l)
        pass.bound.push_back(outer_total * pass.tails.bound[l] + outer_tail * pow(t, l) + rounding);
    return pass;
}

class NestedCache {
public:
    NestedPass get(Parity kind, int depth, Precision p, long n) {
        const Key key{kind == Parity::odd, p.digits(), n};
        std::lock_guard lock(mu_);
        auto it = cache_.find(key);
        if (it == cache_.end() || it->second.depth < depth)
            it = cache_.insert_or_assign(key, run_nested(kind, depth, 0, p, n)).first;
        return it->second;
    }

private:
    using Key = std::tuple<bool, int, long>;
    std::mutex mu_;
    std::map<Key, NestedPass> cache_;
};

NestedCache& nested_cache() {
    static NestedCache c;
    return c;
}

SeriesValue nested_series(Family family, Parity kind, int l, Precision p, long n) {
    if (l < 0) throw std::invalid_argument("nested series: index must be >= 0");
    const NestedPass pass = nested_cache().get(kind, l, p, n);
    return SeriesValue{family, l, hp::round_to(pass.s[l], p), Method::truncated_sum,
                       pass.bound[l], n};
}

Real r_closed(int k, Parity kind, Precision p) {
    if (kind == Parity::odd) return r_odd(k, p).value;
    return r_even(k, p).value;
}

SeriesValue a_by_recurrence(Family family, Parity kind, int k, Precision p) {
    if (k < 0) throw std::invalid_argument("A(k): k must be >= 0");
    const Precision work = p.widened(5);
    std::vector<Real> a{Real(1, work)};
    std::vector<Real> r{Real(0, work)};
    for (int i = 1; i <= k; ++i) r.push_back(r_closed(i, kind, work));
    for (int i = 1; i <= k; ++i) {
        Real acc(0, work);
        for (int l = 1; l <= i; ++l) {
            Real term = r[l] * a[i - l];
            if (l % 2 == 1) acc += term;
            else acc -= term;
        }
        a.push_back(std::move(acc));
    }
    return SeriesValue{family, k, hp::round_to(a[k], p), Method::recurrence,
                       hp::pow10(-(p.digits() - 3), p), k};
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::r_odd: return "R_odd";
        case Family::r_even: return "R_even";
        case Family::a0: return "A0";
        case Family::a1: return "A1";
        case Family::s_odd: return "S_odd";
        case Family::s_even: return "S_even";
        case Family::k0: return "K0";
        case Family::k1: return "K1";
    }
    return "?";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::closed_form: return "closed-form";
        case Method::truncated_sum: return "truncated-sum";
        case Method::quadrature: return "quadrature";
        case Method::partitions: return "partitions";
        case Method::recurrence: return "recurrence";
    }
    return "?";
}

SeriesValue r_odd(int k, Precision p) {
    if (k < 1) throw std::invalid_argument("R_odd: k must be >= 1");
    const Precision work = p.widened(3);
    const auto k2 = static_cast<unsigned>(2 * k);
    Real v = pow(hp::pi(work) / 2, 2 * k) * rational(exact::euler_zigzag(k2), work) /
             factorial_real(k2, work);
    return SeriesValue{Family::r_odd, k, hp::round_to(v, p), Method::closed_form,
                       hp::pow10(-(p.digits() - 1), p), 0};
}

SeriesValue r_even(int k, Precision p) {
    if (k < 1) throw std::invalid_argument("R_even: k must be >= 1");
    const Precision work = p.widened(3);
    const auto k2 = static_cast<unsigned>(2 * k);
    exact::BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, k2 - 1);
    const BigRational coeff = 2 * BigRational(two_pow - 1) * abs(exact::bernoulli(k2)) /
                              BigRational(exact::factorial(k2));
    Real v = rational(coeff, work) * pow(hp::pi(work), 2 * k);
    return SeriesValue{Family::r_even, k, hp::round_to(v, p), Method::closed_form,
                       hp::pow10(-(p.digits() - 1), p), 0};
}

SeriesValue r_via_partitions(int k, Parity kind, Precision p) {
    if (k < 1) throw std::invalid_argument("R via partitions: k must be >= 1");
    const Precision work = p.widened(5);
    std::vector<Real> w{Real(0, work)};
    for (int l = 1; l <= k; ++l) {
        Real z = hp::zeta(2 * l, work);
        if (kind == Parity::odd) z *= 1 - ldexp(Real(1, work), -2 * l);
        w.push_back(std::move(z));
    }
    const BigRational inv_kfact = BigRational(1) / BigRational(exact::factorial(static_cast<unsigned>(k)));
    Real sum(0, work);
    for (const auto& part : exact::partitions(static_cast<unsigned>(k))) {
        Real term = rational(exact::cycle_count(part) * inv_kfact, work);
        for (int l = 1; l <= k; ++l) {
            const unsigned mult = part.multiplicity(static_cast<unsigned>(l));
            if (mult > 0) term *= pow(w[l], mult);
        }
        sum += term;
    }
    return SeriesValue{kind == Parity::odd ? Family::r_odd : Family::r_even, k,
                       hp::round_to(sum, p), Method::partitions, hp::pow10(-(p.digits() - 3), p),
                       0};
}

SeriesValue r_truncated(int k, Parity kind, Precision p, long n) {
    if (k < 1) throw std::invalid_argument("R truncated: k must be >= 1");
    if (n < 1) throw std::invalid_argument("R truncated: cutoff must be >= 1");
    const Precision work = p.widened(5);
    // P_m(i) = sum_{i' <= i} w(i') P_{m-1}(i'), P_0 = 1; R_trunc = P_k(n).
    std::vector<Real> prefix(static_cast<std::size_t>(k) + 1, Real(0, work));
    prefix[0] = Real(1, work);
    for (unsigned long i = first_index(kind); i <= static_cast<unsigned long>(n); ++i) {
        const Real w = weight(kind, i, work);
        for (int m = 1; m <= k; ++m) prefix[m] += w * prefix[m - 1];
    }
    const Real bound = pow(total_weight(kind, work), k - 1) * tail_weight_bound(kind, n, work) +
                       hp::pow10(-(p.digits() - 1), work);
    return SeriesValue{kind == Parity::odd ? Family::r_odd : Family::r_even, k,
                       hp::round_to(prefix[k], p), Method::truncated_sum, hp::round_to(bound, p), n};
}

SeriesValue a1(int k, Precision p) {
    if (k < 0) throw std::invalid_argument("A1: k must be >= 0");
    const Precision work = p.widened(3);
    Real v = pow(hp::pi(work) / 2, 2 * k) / factorial_real(static_cast<unsigned>(2 * k), work);
    return SeriesValue{Family::a1, k, hp::round_to(v, p), Method::closed_form,
                       hp::pow10(-(p.digits() - 1), p), 0};
}

SeriesValue a0(int k, Precision p) {
    if (k < 0) throw std::invalid_argument("A0: k must be >= 0");
    const Precision work = p.widened(3);
    Real v = pow(hp::pi(work), 2 * k) / factorial_real(static_cast<unsigned>(2 * k + 1), work);
    return SeriesValue{Family::a0, k, hp::round_to(v, p), Method::closed_form,
                       hp::pow10(-(p.digits() - 1), p), 0};
}

SeriesValue a1_by_recurrence(int k, Precision p) {
    return a_by_recurrence(Family::a1, Parity::odd, k, p);
}

SeriesValue a0_by_recurrence(int k, Precision p) {
    return a_by_recurrence(Family::a0, Parity::even, k, p);
}

SeriesValue s_odd(int l, Precision p, long n) {
    return nested_series(Family::s_odd, Parity::odd, l, p, n);
}

SeriesValue s_even(int l, Precision p, long n) {
    return nested_series(Family::s_even, Parity::even, l, p, n);
}

TailSums nested_tail_sums(Parity kind, int depth, unsigned jmax, Precision p, long n) {
    if (n < static_cast<long>(jmax)) throw std::invalid_argument("tail sums: cutoff below jmax");
    return run_nested(kind, depth, jmax, p, n).tails;
}

}  // namespace cotm::moments
