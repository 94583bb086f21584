#pragma once

// Identity-check records and their JSON form.
//
// A check compares two sides of an identity. Numeric checks record both
// sides, their absolute difference and the tolerance; exact checks record
// the two sides as rationals with diff "0"/"1" and tol "0".

#include <string>
#include <vector>

#include <json.hpp>

#include "cotm/exact.hpp"
#include "cotm/real.hpp"

namespace cotm {

struct CheckRecord {
    std::string id;
    std::string anchor;  // human-readable statement of the identity
    std::string lhs;
    std::string rhs;
    std::string diff;
    std::string tol;
    bool pass = false;
};

class VerificationReport {
public:
    explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

    const std::string& suite() const noexcept { return suite_; }
    const std::vector<CheckRecord>& checks() const noexcept { return checks_; }

    /// Passes iff |lhs - rhs| <= tol.
    const CheckRecord& add_numeric(std::string id, std::string anchor, const hp::Real& lhs,
                                   const hp::Real& rhs, const hp::Real& tol);
    /// Passes iff lhs == rhs exactly.
    const CheckRecord& add_exact(std::string id, std::string anchor, const exact::BigRational& lhs,
                                 const exact::BigRational& rhs);
    /// Passes iff `condition`; lhs/rhs are free-form descriptions.
    const CheckRecord& add_condition(std::string id, std::string anchor, std::string lhs,
                                     std::string rhs, bool condition);

    void merge(const VerificationReport& other);
    /// Orders checks by id so reports do not depend on evaluation order.
    void sort();

    std::size_t passed() const;
    std::size_t failed() const { return checks_.size() - passed(); }
    bool all_passed() const { return failed() == 0; }

    /// {suite, config, checks:[{id, anchor, lhs, rhs, diff, tol, pass}],
    ///  summary:{pass, fail}}
    nlohmann::ordered_json to_json(const nlohmann::ordered_json& config) const;

private:
    std::string suite_;
    std::vector<CheckRecord> checks_;
};

}  // namespace cotm
