#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using cotm::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tmp_path(const std::string& name) {
    const char* dir = std::getenv("COTMOMENTS_TEST_TMP");
    return std::string(dir ? dir : ".") + "/" + name;
}

nlohmann::json without_metadata(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    j.erase("metadata");
    return j;
}

}  // namespace

TEST_CASE("constants") {
    auto r = call({"constants", "pi", "--digits", "20"});
    CHECK(r.code == 0);
    CHECK(r.out == "pi 3.1415926535897932385\n");

    r = call({"constants", "eta3", "eta1", "log2", "--digits", "30"});
    CHECK(r.code == 0);
    CHECK(r.out.find("eta3 0.90154267736969571404980362113") == 0);
    std::istringstream lines(r.out);
    std::string n1, v1, n2, v2, n3, v3;
    lines >> n1 >> v1 >> n2 >> v2 >> n3 >> v3;
    CHECK(v2 == v3);

    CHECK(call({"constants", "gamma"}).code == 2);
    CHECK(call({"constants", "zeta1"}).code == 2);
    CHECK(call({"constants"}).code == 2);
}

TEST_CASE("moments") {
    auto r = call({"moments", "--m", "1", "--route", "eta"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2.17758609030360213050") != std::string::npos);

    r = call({"moments", "--m", "1..4", "--route", "eta,quad", "--digits", "50", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"].size() == 8);
    CHECK(j["agreement"].size() == 4);
    for (const auto& g : j["agreement"]) {
        CHECK(g["pass"] == true);
        CHECK(std::stod(g["gap"].get<std::string>()) < 1e-35);
    }

    r = call({"moments", "--m", "2,3", "--route", "nested", "--format", "csv", "--digits", "20",
              "--n", "1000"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("m,route,value,terms,error_bound\n", 0) == 0);

    CHECK(call({"moments", "--m", "0"}).code == 2);
    CHECK(call({"moments", "--m", "4..2"}).code == 2);
    CHECK(call({"moments", "--m", "x"}).code == 2);
    CHECK(call({"moments", "--m", "13", "--route", "quad"}).code == 2);
    CHECK(call({"moments", "--m", "41"}).code == 2);
    CHECK(call({"moments", "--route", "simpson"}).code == 2);
    CHECK(call({"moments", "--digits", "5"}).code == 2);
    CHECK(call({"moments", "--format", "xml"}).code == 2);
}

TEST_CASE("tables") {
    auto r = call({"tables", "--which", "t0", "--kmax", "5", "--nmax", "5"});
    CHECK(r.code == 0);
    std::istringstream rows(r.out);
    std::string row;
    for (int k = 0; k <= 2; ++k) std::getline(rows, row);
    CHECK(row == "0,0,1,5,49,820");

    r = call({"tables", "--which", "h1", "--kmax", "3", "--nmax", "5", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["rows"][1][5] == "117469/99225");

    CHECK(call({"tables", "--which", "t1", "--kmax", "0", "--nmax", "0"}).out == "1\n");
    CHECK(call({"tables", "--which", "t2"}).code == 2);
    CHECK(call({"tables", "--kmax", "6", "--nmax", "5"}).code == 2);
    CHECK(call({"tables", "--kmax", "1", "--nmax", "201"}).code == 2);
}

TEST_CASE("verify writes a deterministic report") {
    const auto a = call({"verify", "--suite", "gf", "--digits", "30"});
    CHECK(a.code == 0);
    const auto j = nlohmann::json::parse(a.out);
    for (const char* key : {"suite", "config", "checks", "summary", "metadata"}) CHECK(j.contains(key));
    CHECK(j["summary"]["fail"] == 0);
    const auto& first = j["checks"][0];
    for (const char* key : {"id", "anchor", "lhs", "rhs", "diff", "tol", "pass"})
        CHECK(first.contains(key));

    const auto b = call({"verify", "--suite", "gf", "--digits", "30"});
    CHECK(without_metadata(a.out) == without_metadata(b.out));

    CHECK(call({"verify", "--suite", "everything"}).code == 2);
    CHECK(call({"verify", "--suite", "tables", "--format", "csv"}).code == 2);
}

TEST_CASE("verify consequences") {
    const auto r = call({"verify", "--suite", "consequences", "--digits", "40"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    int identities = 0;
    for (const auto& c : j["checks"])
        if (c["id"].get<std::string>().find("quadrature-vs-closed") != std::string::npos) ++identities;
    CHECK(identities == 4);
}

TEST_CASE("output file") {
    const std::string path = tmp_path("cli_table.csv");
    const auto r = call({"tables", "--which", "h0", "--kmax", "3", "--nmax", "5", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::string first;
    std::getline(f, first);
    CHECK(first == "1,0,0,0,0,0");
}

TEST_CASE("defaults from environment and config file") {
    setenv(cotm::cli::kDigitsEnv, "12", 1);
    auto r = call({"constants", "pi"});
    CHECK(r.out == "pi 3.14159265359\n");
    r = call({"constants", "pi", "--digits", "5"});
    CHECK(r.out == "pi 3.1416\n");
    unsetenv(cotm::cli::kDigitsEnv);

    const std::string cfg = tmp_path("cli_config.toml");
    std::ofstream(cfg) << "digits = 15\n";
    r = call({"--config", cfg, "constants", "pi"});
    CHECK(r.out == "pi 3.14159265358979\n");
    r = call({"--config", cfg, "constants", "pi", "--digits", "8"});
    CHECK(r.out == "pi 3.1415927\n");
}

TEST_CASE("usage errors") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}
