#include "cotm/report.hpp"

#include <algorithm>

namespace cotm {

namespace {

int display_digits(const hp::Real& a, const hp::Real& b) {
    return std::max(std::min(a.digits(), b.digits()), 6);
}

}  // namespace

const CheckRecord& VerificationReport::add_numeric(std::string id, std::string anchor,
                                                   const hp::Real& lhs, const hp::Real& rhs,
                                                   const hp::Real& tol) {
    const hp::Real diff = abs(lhs - rhs);
    const int digits = display_digits(lhs, rhs);
    CheckRecord r{std::move(id), std::move(anchor), lhs.str(digits), rhs.str(digits),
                  diff.sci(3),   tol.sci(3),        diff <= tol};
    if (!diff.is_finite()) r.pass = false;
    checks_.push_back(std::move(r));
    return checks_.back();
}

const CheckRecord& VerificationReport::add_exact(std::string id, std::string anchor,
                                                 const exact::BigRational& lhs,
                                                 const exact::BigRational& rhs) {
    const bool equal = lhs == rhs;
    checks_.push_back(CheckRecord{std::move(id), std::move(anchor), exact::to_string(lhs),
                                  exact::to_string(rhs), equal ? "0" : "1", "0", equal});
    return checks_.back();
}

const CheckRecord& VerificationReport::add_condition(std::string id, std::string anchor,
                                                     std::string lhs, std::string rhs,
                                                     bool condition) {
    checks_.push_back(CheckRecord{std::move(id), std::move(anchor), std::move(lhs), std::move(rhs),
                                  condition ? "0" : "1", "0", condition});
    return checks_.back();
}

void VerificationReport::merge(const VerificationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

void VerificationReport::sort() {
    std::stable_sort(checks_.begin(), checks_.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
}

std::size_t VerificationReport::passed() const {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [](const CheckRecord& r) { return r.pass; }));
}

nlohmann::ordered_json VerificationReport::to_json(const nlohmann::ordered_json& config) const {
    nlohmann::ordered_json j;
    j["suite"] = suite_;
    j["config"] = config;
    auto& checks = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : checks_) {
        checks.push_back({{"id", r.id},
                          {"anchor", r.anchor},
                          {"lhs", r.lhs},
                          {"rhs", r.rhs},
                          {"diff", r.diff},
                          {"tol", r.tol},
                          {"pass", r.pass}});
    }
    j["summary"] = {{"pass", passed()}, {"fail", failed()}};
    return j;
}

}  // namespace cotm
