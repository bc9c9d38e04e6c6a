#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using qbracket::cli::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) { return std::string(QBRACKET_GOLDEN_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("qbracket_test_" + name);
}

// Sets QBRACKET_CONFIG for the lifetime of the object.
class ScopedConfig {
public:
    explicit ScopedConfig(const std::string& json) : path_(temp_file("config.json")) {
        std::ofstream(path_) << json;
        setenv("QBRACKET_CONFIG", path_.c_str(), 1);
    }
    ~ScopedConfig() {
        unsetenv("QBRACKET_CONFIG");
        std::filesystem::remove(path_);
    }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("hook evaluations") {
    CHECK(run({"eval", "fhook", "--parts", "4,3,1", "--a", "3", "--t", "1"}).out == "307/96\n");
    CHECK(run({"eval", "fhook", "--parts", "4,3,1", "--a", "3", "--t", "2"}).out == "139/216\n");
    CHECK(run({"eval", "fhook", "--parts", "4,3,1", "--a", "3", "--t", "3"}).out == "3/8\n");
    const auto bad = run({"eval", "fhook", "--parts", "3,4", "--a", "2", "--t", "1"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("numeric evaluations") {
    const auto eta = run({"eval", "eta", "--z", "0.5i"});
    CHECK(eta.code == 0);
    CHECK(eta.out.rfind("0.837755", 0) == 0);
    CHECK(run({"eval", "eta", "--z", "0.5-1i"}).code == 2);
    CHECK(run({"eval", "eta", "--z", "0.01i"}).code == 2);
    CHECK(run({"eval", "omega", "--D", "-4"}).code == 0);
    CHECK(run({"eval", "psi", "--k", "1", "--z", "2i"}).out.rfind("0.0454034891", 0) == 0);
}

TEST_CASE("verify exit codes") {
    const auto ok = run({"verify", "theorem1", "--a", "3", "--t", "2", "--order", "30"});
    CHECK(ok.code == 0);
    const auto j = nlohmann::json::parse(ok.out);
    CHECK(j["pass"] == true);
    CHECK(run({"verify", "theorem1", "--a", "3", "--t", "0"}).code == 2);
    CHECK(run({"verify", "no-such-suite"}).code == 2);
    CHECK(run({}).code == 2);
    // an impossible tolerance turns a passing check into a verification failure
    CHECK(run({"verify", "berndt", "--k", "1", "--tol", "1e-30"}).code == 1);
}

TEST_CASE("corollary report at 2i") {
    const auto r = run({"verify", "corollary4", "--k", "1", "--z", "2i", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0.0541965") != std::string::npos);
}

TEST_CASE("tables") {
    const auto t = run({"table", "asymptotic", "--k", "3", "--t", "2,1.5,1,0.5,0.1"});
    CHECK(t.code == 0);
    CHECK(std::count(t.out.begin(), t.out.end(), '\n') == 6);
    CHECK(run({"table", "asymptotic", "--k", "4", "--t", "1"}).code == 2);
    const auto c = run({"table", "theorem1-coeffs", "--a", "2", "--t", "1", "--order", "10"});
    CHECK(c.code == 0);
}

TEST_CASE("weight-one record is not a gate") {
    const auto r = run({"a1", "--t", "0.1"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["asserted"] == false);
    CHECK(j["rows"][0].contains("bernoulli_value"));
    CHECK(j["rows"][0].contains("classical_value"));
}

TEST_CASE("golden files") {
    CHECK(run({"table", "asymptotic", "--k", "3", "--t", "2,1.5,1,0.5,0.1", "--golden", golden("asymptotic_k3.csv")})
              .code == 0);
    CHECK(run({"table", "theorem1-coeffs", "--a", "2", "--t", "1", "--order", "10", "--golden",
               golden("theorem1_coeffs_a2_t1.csv")})
              .code == 0);
    // a different table must not match
    CHECK(run({"table", "asymptotic", "--k", "5", "--t", "2,1.5,1,0.5,0.1", "--golden", golden("asymptotic_k3.csv")})
              .code == 1);
    CHECK(run({"table", "asymptotic", "--k", "3", "--t", "1", "--golden", golden("missing.csv")}).code == 2);
}

TEST_CASE("reports written to a file") {
    const auto path = temp_file("report.json");
    const auto r = run({"verify", "s2k", "--k", "2", "--order", "10", "--output", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    CHECK(nlohmann::json::parse(in)["pass"] == true);
    std::filesystem::remove(path);
}

TEST_CASE("configuration precedence") {
    {
        ScopedConfig cfg(R"({"format": "text", "order": 12})");
        const auto r = run({"verify", "s2k", "--k", "1"});
        CHECK(r.code == 0);
        CHECK_FALSE(nlohmann::json::accept(r.out));
        CHECK(r.out.find("12") != std::string::npos);
        // flags beat the file
        CHECK(nlohmann::json::accept(run({"verify", "s2k", "--k", "1", "--format", "json"}).out));
        CHECK(nlohmann::json::parse(run({"verify", "s2k", "--k", "1", "--format", "json"}).out)["order"] == 12);
        CHECK(nlohmann::json::parse(run({"verify", "s2k", "--k", "1", "--format", "json", "--order", "7"}).out)["order"] ==
              7);
    }
    {
        ScopedConfig cfg(R"({"tol": -1})");
        CHECK(run({"verify", "berndt", "--k", "1"}).code == 2);
    }
    {
        ScopedConfig cfg("not json");
        CHECK(run({"verify", "s2k", "--k", "1"}).code == 2);
    }
    // defaults again once the variable is gone
    CHECK(nlohmann::json::parse(run({"verify", "s2k", "--k", "1"}).out)["order"] == 40);
}

TEST_CASE("identical inputs give identical reports") {
    const std::vector<std::string> args{"verify", "theorem6-cocycle", "--a", "-1"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const std::vector<std::string> hook{"verify", "hanji", "--k", "2", "--t", "1", "--order", "10"};
    CHECK(run(hook).out == run(hook).out);
}

}  // TEST_SUITE
