#include "cotm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cotm/cfn.hpp"
#include "cotm/constants.hpp"
#include "cotm/moments.hpp"

namespace cotm::verify {

namespace {

using hp::Precision;
using hp::Real;
namespace mo = moments;

Precision precision(const SuiteConfig& cfg) { return Precision(cfg.digits); }

Real quadrature_tol(const SuiteConfig& cfg) {
    const Precision p = precision(cfg);
    if (cfg.tol) return Real(*cfg.tol, p);
    return hp::pow10(-(cfg.digits - 10), p);
}

std::string kind_name(cfn::Parity kind) { return kind == cfn::Parity::odd ? "odd" : "even"; }

std::string index_tag(const char* prefix, int v) {
    std::string s = std::to_string(v);
    if (s.size() < 2) s.insert(0, 2 - s.size(), '0');
    return prefix + s;
}

void note(const Progress& progress, const std::string& msg) {
    if (progress) progress(msg);
}

}  // namespace

nlohmann::ordered_json SuiteConfig::to_json() const {
    nlohmann::ordered_json j;
    j["digits"] = digits;
    j["n"] = n;
    if (tol) j["tol"] = *tol;
    else j["tol"] = nullptr;
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"all",          "tables", "closed-forms",
                                                "consequences", "gf",     "routes",
                                                "h-reduction"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

VerificationReport tables_suite(const SuiteConfig&) {
    VerificationReport report("tables");
    report.merge(cfn::check_reference_tables());
    report.merge(cfn::check_factorial_relation(12, 20));
    return report;
}

VerificationReport gf_suite(const SuiteConfig& cfg) {
    VerificationReport report("gf");
    report.merge(cfn::check_generating_functions(4, 30));
    const Precision p = precision(cfg);
    std::vector<Real> samples;
    for (const char* x : {"0", "0.25", "0.5", "0.75", "0.9"}) samples.emplace_back(std::string(x), p);
    report.merge(mo::binomial_gf_identities(p, samples));
    return report;
}

VerificationReport closed_forms_suite(const SuiteConfig& cfg) {
    VerificationReport report("closed-forms");
    const Precision p = precision(cfg);
    const Real tight = hp::pow10(-(cfg.digits - 8), p);

    for (cfn::Parity kind : {cfn::Parity::odd, cfn::Parity::even}) {
        const std::string name = kind_name(kind);
        const std::string anchor =
            kind == cfn::Parity::odd
                ? "R_odd(k) = (pi/2)^{2k} E*_{2k} / (2k)!"
                : "R_even(k) = 2 (2^{2k-1} - 1) |B_{2k}| pi^{2k} / (2k)!";
        for (int k = 1; k <= 6; ++k) {
            const Real closed = kind == cfn::Parity::odd ? mo::r_odd(k, p).value : mo::r_even(k, p).value;
            report.add_numeric("closed-forms/r-" + name + "/" + index_tag("k", k) + "/partitions",
                               anchor + " vs cycle-index sum over partitions",
                               mo::r_via_partitions(k, kind, p).value, closed, tight);
            if (k <= 3) {
                const mo::SeriesValue t = mo::r_truncated(k, kind, p, 10000);
                report.add_numeric("closed-forms/r-" + name + "/" + index_tag("k", k) + "/truncated",
                                   anchor + " vs nested sum truncated at 10^4", t.value, closed,
                                   t.error_bound);
            }
        }
    }

    for (int k = 0; k <= 6; ++k) {
        report.add_numeric("closed-forms/a1/" + index_tag("k", k),
                           "A_1(k) = (pi/2)^{2k}/(2k)! = sum_l (-1)^{l+1} R_odd(l) A_1(k-l)",
                           mo::a1_by_recurrence(k, p).value, mo::a1(k, p).value, tight);
        report.add_numeric("closed-forms/a0/" + index_tag("k", k),
                           "A_0(k) = pi^{2k}/(2k+1)! = sum_l (-1)^{l+1} R_even(l) A_0(k-l)",
                           mo::a0_by_recurrence(k, p).value, mo::a0(k, p).value, tight);
    }

    for (unsigned k = 1; k <= 10; ++k) {
        exact::BigRational sum = 0;
        for (unsigned l = 0; l <= k; ++l) {
            const exact::BigRational term = exact::binomial(2 * k, 2 * l) * exact::euler_zigzag(2 * l);
            if (l % 2 == 1) sum += term;
            else sum -= term;
        }
        report.add_exact("closed-forms/euler-binomial/" + index_tag("k", static_cast<int>(k)),
                         "sum_{l=0}^{k} (-1)^{l+1} C(2k,2l) E*_{2l} = 0", sum, 0);
    }

    const Real kernel_tol = hp::pow10(-(cfg.digits - 10), p);
    int idx = 0;
    for (const char* z : {"0.25", "0.5", "0.75"}) {
        const Real zr(std::string(z), p);
        const std::string tag = index_tag("z", idx++);
        report.add_numeric("closed-forms/kernel-k1/" + tag,
                           "K1 series = (1/z) int_0^z arcsin(y)/y dy",
                           mo::kernel_k1_series(zr, p), mo::kernel_k1_quadrature(zr, p), kernel_tol);
        report.add_numeric("closed-forms/kernel-k0/" + tag,
                           "K0 series = int_0^z arcsin^2(sqrt y)/y dy",
                           mo::kernel_k0_series(zr, p), mo::kernel_k0_quadrature(zr, p), kernel_tol);
    }
    const Real one(1, p);
    report.add_numeric("closed-forms/kernel-k1/at-one", "K1(1) = (pi/2) log 2",
                       mo::kernel_k1(one, p), hp::pi(p) / 2 * hp::log2(p), kernel_tol);
    report.add_numeric("closed-forms/kernel-k0/at-one", "K0(1) = C(2)", mo::kernel_k0(one, p),
                       mo::c_eta_route(2, p).value, kernel_tol);
    return report;
}

VerificationReport consequences_suite(const SuiteConfig& cfg) {
    VerificationReport report("consequences");
    const Precision p = precision(cfg);
    mo::ConsequenceOptions opts;
    opts.series_terms = cfg.n;
    report.merge(mo::verify_consequences(p, opts));
    report.merge(mo::verify_log_power_integrals(p, 6, 3));
    return report;
}

VerificationReport routes_suite(const SuiteConfig& cfg, const Progress& progress) {
    VerificationReport report("routes");
    const Precision p = precision(cfg);
    const Real qtol = quadrature_tol(cfg);
    const Real agree = max(hp::pow10(-(cfg.digits - 15), p), 4 * qtol);
    const Real cfn_limit(1e-7, p);
    const Real nested_limit(1e-4, p);

    for (int m = 1; m <= 8; ++m) {
        note(progress, "routes: C(" + std::to_string(m) + ") eta vs quadrature");
        const mo::MomentValue eta = mo::c_eta_route(m, p);
        const mo::MomentValue q = mo::c_quadrature_route(m, p, qtol);
        const std::string tag = "routes/" + index_tag("m", m) + "/";
        report.add_numeric(tag + "eta-vs-quadrature",
                           "C(m) = (1/m!) int_0^pi (t^m/2) cot(t/2) dt = eta/zeta combination",
                           q.value, eta.value, agree);
        if (m > 6) continue;

        note(progress, "routes: C(" + std::to_string(m) + ") cfn series");
        const mo::MomentValue c = mo::c_cfn_route(m, p, cfg.n);
        report.add_numeric(tag + "cfn-vs-eta", "C(m) as central-binomial series over H tables",
                           c.value, eta.value, c.error_bound);
        report.add_condition(tag + "cfn-bound", "cfn tail bound below 1e-7",
                             c.error_bound.sci(3), "1e-7", c.error_bound < cfn_limit);

        note(progress, "routes: C(" + std::to_string(m) + ") nested series");
        const mo::MomentValue s = mo::c_nested_route(m, p, cfg.n);
        report.add_numeric(tag + "nested-vs-eta",
                           "C(m) as weighted sum of nested series S(l)", s.value, eta.value,
                           nested_limit);
        report.add_numeric(tag + "nested-within-bound",
                           "C(m) as weighted sum of nested series S(l)", s.value, eta.value,
                           s.error_bound);
    }
    return report;
}

VerificationReport h_reduction_suite(const SuiteConfig& cfg) {
    VerificationReport report("h-reduction");
    for (int k = 0; k <= 2; ++k)
        report.merge(mo::verify_h_integral_reduction(k, 10, cfg.n, precision(cfg)));
    return report;
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg,
                             const Progress& progress) {
    if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + name);
    VerificationReport report(name);
    auto want = [&](const char* s) { return name == "all" || name == s; };
    if (want("tables")) {
        note(progress, "suite tables");
        report.merge(tables_suite(cfg));
    }
    if (want("gf")) {
        note(progress, "suite gf");
        report.merge(gf_suite(cfg));
    }
    if (want("closed-forms")) {
        note(progress, "suite closed-forms");
        report.merge(closed_forms_suite(cfg));
    }
    if (want("consequences")) {
        note(progress, "suite consequences");
        report.merge(consequences_suite(cfg));
    }
    if (want("routes")) {
        note(progress, "suite routes");
        report.merge(routes_suite(cfg, progress));
    }
    if (want("h-reduction")) {
        note(progress, "suite h-reduction");
        report.merge(h_reduction_suite(cfg));
    }
    report.sort();
    return report;
}

}  // namespace cotm::verify
