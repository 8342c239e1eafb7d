#include "rnnen/cli.hpp"
#include "rnnen/io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

using namespace rnnen;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "rnnen");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "rnnen_test_cli";
    fs::create_directories(dir);
    return dir / name;
}

std::string write_spec(const std::string& name, const RnnSpec& spec) {
    const fs::path path = scratch(name);
    save_spec(spec, path);
    return path.string();
}

}  // namespace

TEST_CASE("commutation check passes on any valid spec", "[cli]") {
    const Run r = run({"verify", "--spec", write_spec("canonical.json", canonical_spec()), "--check", "commutation"});
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out).at("verdict") == "pass");
}

TEST_CASE("stability of the canonical system", "[cli]") {
    const Run r = run({"stability", "--spec", "canonical"});
    REQUIRE(r.code == kExitOk);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("verdict") == "asymptotically-stable");
    REQUIRE(doc.at("eigenvalues").size() == 2);
    for (const auto& z : doc.at("eigenvalues")) {
        CHECK(std::abs(z.at("re").get<double>() + 1.5) < 1e-7);
        CHECK(std::abs(z.at("im").get<double>()) < 1e-7);
    }
}

TEST_CASE("invalid specs exit with status 2", "[cli]") {
    nlohmann::json doc = spec_to_json(canonical_spec());
    doc["lambda"] = {0.0, 2.0};
    const std::string path = scratch("zero-lambda.json").string();
    write_text(path, doc.dump());
    const Run r = run({"synthesize", "--spec", path, "--representation", "parallel-rc"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("lambda[0]") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2", "[cli]") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"verify", "--spec", "canonical", "--check", "bogus"}).code == kExitUsage);
    CHECK(run({"stability"}).code == kExitUsage);
    CHECK(run({"stability", "--spec", scratch("missing.json").string()}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("failing verification exits with status 1", "[cli]") {
    const Run r = run({"verify", "--spec", "canonical", "--check", "linearization", "--amplitudes", "40,20,10"});
    CHECK(r.code == kExitVerificationFailed);
    CHECK(nlohmann::json::parse(r.out).at("verdict") == "fail");
}

TEST_CASE("verify all runs every check", "[cli]") {
    const fs::path report = scratch("report.json");
    const Run r = run({"verify", "--spec", "canonical", "--check", "all", "--report", report.string()});
    CHECK(r.code == kExitOk);
    const nlohmann::json doc = nlohmann::json::parse(read_text(report));
    REQUIRE(doc.size() == 5);
    for (const auto& entry : doc) CHECK(entry.at("verdict") == "pass");
}

TEST_CASE("simulate modes agree on the linear system", "[cli]") {
    RnnSpec spec = canonical_spec();
    spec.activation = ActivationKind::Identity;
    const std::string path = write_spec("identity.json", spec);
    const Run linear = run({"simulate", "--spec", path, "--mode", "linear", "--t-end", "1", "--dt", "0.01"});
    const Run en = run({"simulate", "--spec", path, "--mode", "en", "--t-end", "1", "--dt", "0.01"});
    const Run series = run({"simulate", "--spec", path, "--mode", "en", "--representation", "series-rl", "--t-end",
                            "1", "--dt", "0.01"});
    REQUIRE(linear.code == kExitOk);
    REQUIRE(en.code == kExitOk);
    REQUIRE(series.code == kExitOk);
    CHECK(linear.out.rfind("t,h_1,h_2\n", 0) == 0);
    CHECK(en.out.rfind("t,v_1,v_2\n", 0) == 0);
    CHECK(series.out.rfind("t,i_1,i_2\n", 0) == 0);
    CHECK(std::count(linear.out.begin(), linear.out.end(), '\n') == 102);
}

TEST_CASE("exported netlists simulate through the netlist mode", "[cli]") {
    const fs::path netlist = scratch("canonical.cir");
    REQUIRE(run({"export-netlist", "--spec", "canonical", "--t-end", "1", "--dt", "0.001", "--out",
                 netlist.string()})
                .code == kExitOk);
    const Run r = run({"simulate", "--mode", "netlist", "--netlist", netlist.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("t,v_1,v_2\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1002);
}

TEST_CASE("linearize and synthesize print documents", "[cli]") {
    const Run lin = run({"linearize", "--spec", "canonical"});
    REQUIRE(lin.code == kExitOk);
    CHECK(nlohmann::json::parse(lin.out).contains("A"));
    const Run net = run({"synthesize", "--spec", "canonical", "--representation", "series-rl", "--inductance", "1,2"});
    REQUIRE(net.code == kExitOk);
    CHECK(nlohmann::json::parse(net.out).at("representation") == "series-rl");
    CHECK(run({"synthesize", "--spec", "canonical", "--capacitance", "1,2,3"}).code == kExitUsage);
}
