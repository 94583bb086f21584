#pragma once

// Exact integer and rational combinatorics.
//
// BigInt and BigRational are GMP's C++ classes. gmpxx canonicalizes the
// results of all rational arithmetic; values built from a numerator and a
// denominator should go through make_rational() so they are reduced too.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cotm::exact {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const BigRational& q);
BigRational parse_rational(const std::string& text);

BigInt factorial(unsigned n);
/// (2n-1)!! = 1 * 3 * ... * (2n-1); equal to 1 for n = 0.
BigInt odd_double_factorial(unsigned n);

/// C(n, k); zero when k > n.
BigRational binomial(unsigned n, unsigned k);
BigInt binomial_int(unsigned n, unsigned k);

/// Bernoulli number B_n with B_1 = -1/2, from sum_{j<=n} C(n+1, j) B_j = 0.
BigRational bernoulli(unsigned n);

/// Secant (zigzag) number E*_n = n! [z^n] sec z, n even.
/// Throws std::invalid_argument for odd n.
BigRational euler_zigzag(unsigned n);

/// Partition of k stored as multiplicities: multiplicity(l) is the number of
/// parts equal to l.
class Partition {
public:
    explicit Partition(std::vector<unsigned> multiplicities);

    /// The partitioned integer, sum of l * pi_l.
    unsigned total() const noexcept { return total_; }
    /// Number of parts, sum of pi_l.
    unsigned length() const noexcept { return length_; }
    unsigned multiplicity(unsigned part) const noexcept {
        return part >= 1 && part <= mult_.size() ? mult_[part - 1] : 0;
    }
    const std::vector<unsigned>& multiplicities() const noexcept { return mult_; }

    /// Parts in non-increasing order, e.g. {3, 1} for [1^1, 3^1].
    std::vector<unsigned> parts() const;
    /// "[1^2,2^1]"
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> mult_;
    unsigned total_ = 0;
    unsigned length_ = 0;
};

/// All partitions of k >= 1, in decreasing-part lexicographic order
/// ([k] first, [1^k] last).
std::vector<Partition> partitions(unsigned k);

/// Number of permutations of S_k with cycle type p:
/// k! prod_l 1 / (pi_l! l^{pi_l}).
BigRational cycle_count(const Partition& p);

}  // namespace cotm::exact
