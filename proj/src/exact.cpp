#include "cotm/exact.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cotm::exact {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const BigRational& q) { return q.get_str(10); }

BigRational parse_rational(const std::string& text) {
    BigRational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (q.get_den() == 0) throw std::domain_error("zero denominator: " + text);
    q.canonicalize();
    return q;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt odd_double_factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 1; i <= n; ++i) r *= 2 * i - 1;
    return r;
}

BigInt binomial_int(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigRational binomial(unsigned n, unsigned k) { return BigRational(binomial_int(n, k)); }

namespace {

// Growable tables shared by all threads; extended under the lock and only
// ever read by copy.
struct BernoulliTable {
    std::mutex mu;
    std::vector<BigRational> values{BigRational(1)};
};

struct ZigzagTable {
    std::mutex mu;
    std::vector<BigInt> values;  // zigzag numbers A000111, all n
};

}  // namespace

BigRational bernoulli(unsigned n) {
    static BernoulliTable table;
    std::lock_guard lock(table.mu);
    auto& b = table.values;
    while (b.size() <= n) {
        const unsigned m = static_cast<unsigned>(b.size());
        BigRational sum = 0;
        for (unsigned j = 0; j < m; ++j) sum += binomial(m + 1, j) * b[j];
        b.push_back(-sum / (m + 1));
    }
    return b[n];
}

BigRational euler_zigzag(unsigned n) {
    if (n % 2 != 0) throw std::invalid_argument("euler_zigzag: index must be even");
    static ZigzagTable table;
    std::lock_guard lock(table.mu);
    auto& z = table.values;
    if (z.size() <= n) {
        // Seidel boustrophedon: row r has entries E(r, 0..r), E(r, 0) = 0 for
        // r > 0, E(r, c) = E(r, c-1) + E(r-1, r-c); the zigzag number is E(r, r).
        z.clear();
        std::vector<BigInt> prev{1};
        z.push_back(1);
        for (unsigned r = 1; r <= n; ++r) {
            std::vector<BigInt> row(r + 1);
            row[0] = 0;
            for (unsigned c = 1; c <= r; ++c) row[c] = row[c - 1] + prev[r - c];
            z.push_back(row[r]);
            prev = std::move(row);
        }
    }
    return BigRational(z[n]);
}

Partition::Partition(std::vector<unsigned> multiplicities) : mult_(std::move(multiplicities)) {
    while (!mult_.empty() && mult_.back() == 0) mult_.pop_back();
    for (unsigned l = 1; l <= mult_.size(); ++l) {
        total_ += l * mult_[l - 1];
        length_ += mult_[l - 1];
    }
}

std::vector<unsigned> Partition::parts() const {
    std::vector<unsigned> out;
    out.reserve(length_);
    for (unsigned l = static_cast<unsigned>(mult_.size()); l >= 1; --l)
        out.insert(out.end(), mult_[l - 1], l);
    return out;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (unsigned l = 1; l <= mult_.size(); ++l) {
        if (mult_[l - 1] == 0) continue;
        if (!first) os << ',';
        os << l << '^' << mult_[l - 1];
        first = false;
    }
    os << ']';
    return os.str();
}

std::vector<Partition> partitions(unsigned k) {
    if (k == 0) throw std::invalid_argument("partitions: k must be positive");
    std::vector<Partition> out;

    // Walk part lists in reverse lexicographic order: start from [k] and
    // repeatedly split the rightmost part larger than one.
    std::vector<unsigned> parts{k};
    for (;;) {
        std::vector<unsigned> mult(k, 0);
        for (unsigned p : parts) ++mult[p - 1];
        out.emplace_back(std::move(mult));

        unsigned ones = 0;
        while (!parts.empty() && parts.back() == 1) {
            parts.pop_back();
            ++ones;
        }
        if (parts.empty()) break;
        const unsigned split = parts.back() - 1;
        parts.back() = split;
        unsigned rest = ones + 1;
        while (rest > split) {
            parts.push_back(split);
            rest -= split;
        }
        if (rest > 0) parts.push_back(rest);
    }
    return out;
}

BigRational cycle_count(const Partition& p) {
    BigInt den = 1;
    for (unsigned l = 1; l <= p.multiplicities().size(); ++l) {
        const unsigned m = p.multiplicity(l);
        BigInt lp;
        mpz_ui_pow_ui(lp.get_mpz_t(), l, m);
        den *= factorial(m) * lp;
    }
    return make_rational(factorial(p.total()), den);
}

}  // namespace cotm::exact
