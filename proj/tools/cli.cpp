#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cotm/cfn.hpp"
#include "cotm/constants.hpp"
#include "cotm/moments.hpp"
#include "cotm/verify.hpp"

namespace cotm::cli {

namespace {

using nlohmann::ordered_json;
using hp::Precision;
using hp::Real;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int digits = 50;
    long n = 100000;
    double tol = 0;  // 0: derived from digits
    std::string format;
    std::string out;

    // moments
    std::string m = "1";
    std::string routes = "eta";
    // tables
    std::string which = "t0";
    unsigned kmax = 5;
    unsigned nmax = 5;
    // verify
    std::string suite = "all";
    // constants
    std::vector<std::string> names;
};

void validate_common(const Options& o) {
    if (o.digits < 10) throw UsageError("--digits must be at least 10");
    if (o.n < 10) throw UsageError("--n must be at least 10");
    if (o.tol < 0) throw UsageError("--tol must be positive");
}

Real tolerance(const Options& o) {
    const Precision p(o.digits);
    if (o.tol > 0) return Real(o.tol, p);
    return hp::pow10(-(o.digits - 10), p);
}

std::string timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

ordered_json metadata() {
    ordered_json j;
    j["generated"] = timestamp();
    j["program"] = "cotmoments";
    return j;
}

ordered_json config_json(const Options& o) {
    ordered_json j;
    j["digits"] = o.digits;
    j["n"] = o.n;
    j["tol"] = tolerance(o).sci(3);
    return j;
}

// Writes to --out when given, otherwise to `out`.
void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot open output file: " + o.out);
    f << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) parts.push_back(item);
    return parts;
}

int parse_int(const std::string& s, const char* what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw UsageError(std::string("invalid ") + what + ": " + s);
    }
    if (used != s.size()) throw UsageError(std::string("invalid ") + what + ": " + s);
    return v;
}

// "3", "1..4" or "1,3,5".
std::vector<int> parse_moments(const std::string& spec) {
    std::vector<int> ms;
    for (const std::string& part : split(spec, ',')) {
        const auto dots = part.find("..");
        if (dots == std::string::npos) {
            ms.push_back(parse_int(part, "moment index"));
            continue;
        }
        const int lo = parse_int(part.substr(0, dots), "moment range");
        const int hi = parse_int(part.substr(dots + 2), "moment range");
        if (hi < lo) throw UsageError("empty moment range: " + part);
        for (int m = lo; m <= hi; ++m) ms.push_back(m);
    }
    if (ms.empty()) throw UsageError("no moment index given");
    for (int m : ms)
        if (m < 1) throw UsageError("moment index must be >= 1");
    return ms;
}

int cmd_moments(const Options& o, std::ostream& out, std::ostream& err) {
    validate_common(o);
    const std::vector<int> ms = parse_moments(o.m);
    std::vector<moments::Route> routes;
    for (const std::string& r : split(o.routes, ',')) {
        try {
            routes.push_back(moments::parse_route(r));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (routes.empty()) throw UsageError("no route given");
    for (int m : ms) {
        for (auto r : routes) {
            const int cap = r == moments::Route::eta_closed_form ? 40 : 12;
            if (m > cap)
                throw UsageError("moment index " + std::to_string(m) + " exceeds " +
                                 std::to_string(cap) + " for route " + moments::to_string(r));
        }
        if (std::find(routes.begin(), routes.end(), moments::Route::cfn_series) != routes.end() &&
            o.n < m)
            throw UsageError("--n must be >= m for the cfn route");
    }

    const Precision p(o.digits);
    const Real tol = tolerance(o);
    std::vector<moments::MomentValue> rows;
    for (int m : ms) {
        for (auto r : routes) {
            err << "C(" << m << ") via " << moments::to_string(r) << '\n';
            switch (r) {
                case moments::Route::eta_closed_form: rows.push_back(moments::c_eta_route(m, p)); break;
                case moments::Route::cfn_series: rows.push_back(moments::c_cfn_route(m, p, o.n)); break;
                case moments::Route::nested_series:
                    rows.push_back(moments::c_nested_route(m, p, o.n));
                    break;
                case moments::Route::quadrature:
                    rows.push_back(moments::c_quadrature_route(m, p, tol));
                    break;
            }
        }
    }

    // Pairwise agreement within the combined error bounds.
    bool agree = true;
    ordered_json gaps = ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if (rows[i].m != rows[j].m) continue;
            const Real gap = abs(rows[i].value - rows[j].value);
            const Real allowed = rows[i].error_bound + rows[j].error_bound;
            const bool ok = gap <= allowed;
            agree = agree && ok;
            gaps.push_back({{"m", rows[i].m},
                            {"routes", moments::to_string(rows[i].route) + "/" +
                                           moments::to_string(rows[j].route)},
                            {"gap", gap.sci(3)},
                            {"allowed", allowed.sci(3)},
                            {"pass", ok}});
            if (!ok)
                err << "disagreement at C(" << rows[i].m << "): gap " << gap.sci(3) << " > "
                    << allowed.sci(3) << '\n';
        }
    }

    const std::string format = o.format.empty() ? "text" : o.format;
    std::ostringstream os;
    if (format == "json") {
        ordered_json j;
        j["command"] = "moments";
        j["config"] = config_json(o);
        j["rows"] = ordered_json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"m", r.m},
                                 {"route", moments::to_string(r.route)},
                                 {"value", r.value.str(o.digits)},
                                 {"terms", r.terms},
                                 {"error_bound", r.error_bound.sci(3)}});
        j["agreement"] = gaps;
        j["metadata"] = metadata();
        os << j.dump(2) << '\n';
    } else if (format == "csv") {
        os << "m,route,value,terms,error_bound\n";
        for (const auto& r : rows)
            os << r.m << ',' << moments::to_string(r.route) << ',' << r.value.str(o.digits) << ','
               << r.terms << ',' << r.error_bound.sci(3) << '\n';
    } else {
        for (const auto& r : rows)
            os << std::setw(3) << r.m << "  " << std::left << std::setw(16)
               << moments::to_string(r.route) << std::right << "  " << r.value.str(o.digits)
               << "  +/- " << r.error_bound.sci(3) << '\n';
    }
    emit(o, out, os.str());
    return agree ? kExitPass : kExitFailure;
}

int cmd_tables(const Options& o, std::ostream& out) {
    if (o.kmax > o.nmax) throw UsageError("--kmax must not exceed --nmax");
    if (o.nmax > 200) throw UsageError("--nmax must not exceed 200");
    cfn::TriangularTable table = [&]() -> cfn::TriangularTable {
        if (o.which == "t0") return cfn::build_t0(o.kmax, o.nmax);
        if (o.which == "t1") return cfn::build_t1(o.kmax, o.nmax);
        if (o.which == "h0") return cfn::build_h0(o.kmax, o.nmax);
        if (o.which == "h1") return cfn::build_h1(o.kmax, o.nmax);
        throw UsageError("--which must be one of t0, t1, h0, h1");
    }();
    const std::string format = o.format.empty() ? "csv" : o.format;
    if (format == "csv") {
        emit(o, out, table.to_csv());
    } else if (format == "json") {
        ordered_json j;
        j["table"] = o.which;
        j["kmax"] = o.kmax;
        j["nmax"] = o.nmax;
        j["rows"] = table.to_json();
        emit(o, out, j.dump(2) + "\n");
    } else {
        emit(o, out, table.to_text());
    }
    return kExitPass;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    validate_common(o);
    if (!verify::is_suite(o.suite)) throw UsageError("unknown suite: " + o.suite);
    if (!o.format.empty() && o.format != "json") throw UsageError("verify writes JSON reports only");
    verify::SuiteConfig cfg;
    cfg.digits = o.digits;
    cfg.n = o.n;
    if (o.tol > 0) cfg.tol = o.tol;
    const VerificationReport report =
        verify::run_suite(o.suite, cfg, [&](const std::string& msg) { err << msg << '\n'; });
    ordered_json j = report.to_json(config_json(o));
    j["metadata"] = metadata();
    emit(o, out, j.dump(2) + "\n");
    for (const CheckRecord& c : report.checks())
        if (!c.pass)
            err << "FAIL " << c.id << ": " << c.lhs << " vs " << c.rhs << " (diff " << c.diff
                << ", tol " << c.tol << ")\n";
    err << report.passed() << " passed, " << report.failed() << " failed\n";
    return report.all_passed() ? kExitPass : kExitFailure;
}

int parse_suffix(const std::string& name, const std::string& prefix) {
    return parse_int(name.substr(prefix.size()), "constant index");
}

int cmd_constants(const Options& o, std::ostream& out) {
    if (o.digits < 1) throw UsageError("--digits must be positive");
    if (o.names.empty()) throw UsageError("no constant named");
    const Precision p(o.digits);
    std::ostringstream os;
    for (const std::string& name : o.names) {
        Real v;
        if (name == "pi") {
            v = hp::pi(p);
        } else if (name == "log2") {
            v = hp::log2(p);
        } else if (name.rfind("eta", 0) == 0 && name.size() > 3) {
            const int s = parse_suffix(name, "eta");
            if (s < 1) throw UsageError("eta needs s >= 1");
            v = hp::eta(s, p);
        } else if (name.rfind("zeta", 0) == 0 && name.size() > 4) {
            const int s = parse_suffix(name, "zeta");
            if (s < 2) throw UsageError("zeta needs s >= 2");
            v = hp::zeta(s, p);
        } else {
            throw UsageError("unknown constant: " + name);
        }
        os << name << ' ' << v.str(o.digits) << '\n';
    }
    emit(o, out, os.str());
    return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Moments of the cotangent: routes, tables and identity checks", "cotmoments"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "TOML or INI file with default option values");
    app.add_option("--digits", o.digits, "working precision in decimal digits")
        ->envname(kDigitsEnv)
        ->capture_default_str();
    app.add_option("--n", o.n, "series cutoff")->capture_default_str();
    app.add_option("--tol", o.tol, "quadrature tolerance (default 10^-(digits-10))");
    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", o.out, "output path (default stdout)");

    auto* moments_cmd = app.add_subcommand("moments", "evaluate C(m) by one or more routes");
    moments_cmd->add_option("--m", o.m, "moment indices: 3, 1..4 or 1,3,5")->capture_default_str();
    moments_cmd->add_option("--route", o.routes, "comma-separated: eta, cfn, nested, quad")
        ->capture_default_str();

    auto* tables_cmd = app.add_subcommand("tables", "print exact cfn or harmonic tables");
    tables_cmd->add_option("--which", o.which, "t0, t1, h0 or h1")->capture_default_str();
    tables_cmd->add_option("--kmax", o.kmax, "last row")->capture_default_str();
    tables_cmd->add_option("--nmax", o.nmax, "last column")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "run identity suites and write a JSON report");
    verify_cmd->add_option("--suite", o.suite, "all, tables, closed-forms, consequences, gf, routes, h-reduction")
        ->capture_default_str();

    auto* constants_cmd = app.add_subcommand("constants", "print pi, log2, etaN, zetaN");
    constants_cmd->add_option("names", o.names, "constant names")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*moments_cmd) return cmd_moments(o, out, err);
        if (*tables_cmd) return cmd_tables(o, out);
        if (*verify_cmd) return cmd_verify(o, out, err);
        if (*constants_cmd) return cmd_constants(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace cotm::cli
