#pragma once

// Central factorial numbers and recursive harmonic numbers of order two.
//
//   t0(k, n) = |t(2n, 2k)|,   t1(k, n) = |t(2n+1, 2k+1)|
//   t0(k, n) = t0(k-1, n-1) + (n-1)^2 t0(k, n-1)
//   t1(k, n) = t1(k-1, n-1) + (n-1/2)^2 t1(k, n-1)
//
//   H0(k, n) = sum_{i=k-1}^{n-1} H0(k-1, i) / i^2         (k >= 2)
//   H1(k, n) = sum_{i=k-1}^{n-1} H1(k-1, i) / (2i+1)^2    (k >= 1)
//
// Tables are indexed (k, n) with 0 <= k <= kmax, 0 <= n <= nmax and hold
// exact rationals; entries with k > n are zero.

#include <string>
#include <vector>

#include <json.hpp>

#include "cotm/exact.hpp"
#include "cotm/report.hpp"

namespace cotm::cfn {

using exact::BigRational;

enum class Parity { even, odd };

class TriangularTable {
public:
    TriangularTable(Parity kind, unsigned kmax, unsigned nmax);

    Parity kind() const noexcept { return kind_; }
    unsigned kmax() const noexcept { return kmax_; }
    unsigned nmax() const noexcept { return nmax_; }

    const BigRational& operator()(unsigned k, unsigned n) const;
    BigRational& operator()(unsigned k, unsigned n);

    /// One line per k, cells "p/q" separated by commas.
    std::string to_csv() const;
    /// Array of rows, each an array of "p/q" strings.
    nlohmann::ordered_json to_json() const;
    /// Aligned columns with k/n headers, for terminals.
    std::string to_text() const;

private:
    Parity kind_;
    unsigned kmax_;
    unsigned nmax_;
    std::vector<BigRational> values_;
};

/// t0 (even) or t1 (odd) central factorial numbers.
class CfnTable : public TriangularTable {
    using TriangularTable::TriangularTable;
};

/// H0 (even) or H1 (odd) recursive harmonic numbers.
class HarmonicTable : public TriangularTable {
    using TriangularTable::TriangularTable;
};

CfnTable build_t0(unsigned kmax, unsigned nmax);
CfnTable build_t1(unsigned kmax, unsigned nmax);
HarmonicTable build_h0(unsigned kmax, unsigned nmax);
HarmonicTable build_h1(unsigned kmax, unsigned nmax);

/// t0(k,n) = (n-1)!^2 H0(k,n) for n >= 1 and
/// t1(k,n) = 2^{2k} C(2n,n) (2n)! / 2^{4n} H1(k,n) for n >= 0.
VerificationReport check_factorial_relation(unsigned kmax, unsigned nmax);

/// [2 arcsin(z/2)]^{2k} / (2k)! = sum_n t0(k,n) z^{2n} / (2n)! and
/// [2 arcsin(z/2)]^{2k+1} / (2k+1)! = sum_n t1(k,n) z^{2n+1} / (2n+1)!,
/// compared coefficient by coefficient for k <= kmax, n <= order / 2.
VerificationReport check_generating_functions(unsigned kmax, unsigned order);

/// Published reference values for 0 <= k, n <= 5 (t0, t1) and
/// 0 <= k <= 3, 0 <= n <= 5 (H0, H1), as "p/q" strings indexed [k][n].
const std::vector<std::vector<std::string>>& reference_t0();
const std::vector<std::vector<std::string>>& reference_t1();
const std::vector<std::vector<std::string>>& reference_h0();
const std::vector<std::vector<std::string>>& reference_h1();

/// Generated tables against the reference arrays, entry by entry.
VerificationReport check_reference_tables();

}  // namespace cotm::cfn
