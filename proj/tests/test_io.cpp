#include "rnnen/error.hpp"
#include "rnnen/io.hpp"

#include "support/random_systems.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

using namespace rnnen;
namespace fs = std::filesystem;

namespace {

const char* kMinimal = R"({"n": 1, "m": 0, "lambda": [1.0], "w": [[0.0]], "w_tilde": [],
                           "activation": "identity", "h0": [1.0], "input": {"kind": "zero"}})";

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "rnnen_test_io";
    fs::create_directories(dir);
    return dir / name;
}

bool same_spec(const RnnSpec& a, const RnnSpec& b) {
    return a.n == b.n && a.m == b.m && a.lambda == b.lambda && a.w == b.w && a.w_tilde.rows() == b.w_tilde.rows() &&
           a.w_tilde.cols() == b.w_tilde.cols() && a.w_tilde == b.w_tilde && a.activation == b.activation &&
           a.h0 == b.h0 && a.input == b.input;
}

template <class F>
const Error capture(F&& f) {
    try {
        f();
    } catch (const ValidationError& e) {
        return e;
    } catch (const Error& e) {
        return e;
    }
    FAIL("expected an error");
    return Error(Errc::InvalidArgument, "", "");
}

}  // namespace

TEST_CASE("minimal document loads", "[io]") {
    const ValidatedSpec spec = parse_spec(kMinimal);
    CHECK(spec.n() == 1);
    CHECK(spec->lambda(0) == 1.0);
    CHECK(spec->activation == ActivationKind::Identity);
    CHECK(spec->input.is_zero());
}

TEST_CASE("validation failures carry key paths", "[io]") {
    nlohmann::json doc = nlohmann::json::parse(kMinimal);
    doc["lambda"] = {0.0};
    try {
        (void)spec_from_json(doc);
        FAIL("lambda = 0 accepted");
    } catch (const ValidationError& e) {
        CHECK(e.code() == Errc::ValidationError);
        CHECK(e.cause() == Errc::NonPositiveLambda);
        CHECK(e.where() == "lambda[0]");
    }

    doc = nlohmann::json::parse(kMinimal);
    doc.erase("w");
    const Error missing = capture([&] { (void)spec_from_json(doc); });
    CHECK(missing.code() == Errc::ParseError);
    CHECK(missing.where() == "w");

    doc = nlohmann::json::parse(kMinimal);
    doc["extra"] = 1;
    CHECK(capture([&] { (void)spec_from_json(doc); }).where() == "extra");

    doc = nlohmann::json::parse(kMinimal);
    doc["lambda"] = {"fast"};
    CHECK(capture([&] { (void)spec_from_json(doc); }).where() == "lambda[0]");

    doc = nlohmann::json::parse(kMinimal);
    doc["activation"] = "logistic";
    CHECK(capture([&] { (void)spec_from_json(doc); }).code() == Errc::ParseError);

    doc = nlohmann::json::parse(kMinimal);
    doc["input"] = {{"kind", "step"}, {"amplitude", nlohmann::json::array()}, {"onset", -1.0}};
    CHECK(capture([&] { (void)spec_from_json(doc); }).code() == Errc::ValidationError);

    CHECK(capture([] { (void)parse_spec("{ not json"); }).code() == Errc::ParseError);
    CHECK(capture([] { (void)load_spec(scratch("does-not-exist.json")); }).code() == Errc::IoError);
}

TEST_CASE("ragged matrices are a dimension mismatch", "[io]") {
    nlohmann::json doc = nlohmann::json::parse(kMinimal);
    doc["n"] = 2;
    doc["lambda"] = {1.0, 1.0};
    doc["h0"] = {0.0, 0.0};
    doc["w"] = {{0.0, 1.0}, {0.0}};
    try {
        (void)spec_from_json(doc);
        FAIL("ragged w accepted");
    } catch (const ValidationError& e) {
        CHECK(e.cause() == Errc::DimensionMismatch);
        CHECK(e.where() == "w[1]");
    }
}

TEST_CASE("spec files round-trip every value", "[io]") {
    testing::SystemGenerator gen(51);
    const fs::path path = scratch("roundtrip.json");
    for (int trial = 0; trial < 100; ++trial) {
        const auto kind = static_cast<ActivationKind>(gen.integer(0, 2));
        RnnSpec s = gen.stable_spec(8, kind, 3);
        s.lambda *= std::pow(10.0, gen.uniform(-5.0, 5.0));
        save_spec(s, path);
        CHECK(same_spec(load_spec(path).spec(), s));
    }
    fs::remove(path);
}

TEST_CASE("trajectory CSV is deterministic", "[io]") {
    Trajectory two{{0.0, 0.5}, Matrix(2, 1), {"h_1"}};
    two.states << 1.0, 0.1;
    CHECK(format_trajectory(two) == "t,h_1\n0,1\n0.5,0.10000000000000001\n");

    const Trajectory empty{{}, Matrix(0, 2), {"v_1", "v_2"}};
    CHECK(format_trajectory(empty) == "t,v_1,v_2\n");

    const fs::path a = scratch("a.csv");
    const fs::path b = scratch("b.csv");
    const Trajectory traj = simulate_nonlinear(validate_spec(canonical_spec()), 1.0, 0.01);
    write_trajectory(traj, a);
    write_trajectory(traj, b);
    CHECK(read_text(a) == read_text(b));
    CHECK(read_text(a) == format_trajectory(traj));
    fs::remove(a);
    fs::remove(b);
}

TEST_CASE("report documents carry check, metric, tolerance and verdict", "[io]") {
    VerificationReport r;
    r.check = "duality";
    r.metric = 1e-8;
    r.tolerance = 1e-6;
    r.pass = true;
    const nlohmann::json doc = report_to_json(r);
    CHECK(doc.at("check") == "duality");
    CHECK(doc.at("metric") == 1e-8);
    CHECK(doc.at("tolerance") == 1e-6);
    CHECK(doc.at("verdict") == "pass");
}
