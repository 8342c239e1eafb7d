#include "rnnen/error.hpp"
#include "rnnen/io.hpp"
#include "rnnen/verify.hpp"

#include "support/random_systems.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace rnnen;
using Catch::Matchers::WithinAbs;

namespace {

ValidatedSpec canonical() { return validate_spec(canonical_spec()); }

ValidatedSpec uncoupled() {
    RnnSpec s = canonical_spec();
    s.w.setZero();
    s.activation = ActivationKind::Identity;
    return validate_spec(s);
}

Vector vec2(Real a, Real b) {
    Vector v(2);
    v << a, b;
    return v;
}

}  // namespace

TEST_CASE("equivalence of RNN and network trajectories", "[verify]") {
    const VerificationReport plain = verify_equivalence(uncoupled(), Vector::Ones(2), 5.0, 0.01);
    CHECK(plain.pass);
    CHECK(plain.metric <= 1e-10);

    CHECK(verify_equivalence(canonical(), Vector::Ones(2), 5.0, 0.01).pass);
    const VerificationReport scaled = verify_equivalence(canonical(), vec2(3.0, 7.0), 5.0, 0.01);
    CHECK(scaled.pass);
    CHECK(scaled.check == "equivalence");
    CHECK(scaled.tolerance == kEquivalenceTolerance);
}

TEST_CASE("duality of the parallel and series realizations", "[verify]") {
    const VerificationReport plain = verify_duality(uncoupled(), Vector::Ones(2), Vector::Ones(2), 5.0, 0.01);
    CHECK(plain.pass);
    CHECK(plain.metric <= 1e-10);
    CHECK(verify_duality(canonical(), vec2(0.5, 2.0), vec2(4.0, 0.25), 5.0, 0.01).pass);

    // Self-excitation w_11 = 2 lambda_1 makes the first mode grow.
    RnnSpec s = canonical_spec();
    s.activation = ActivationKind::Identity;
    s.w(0, 0) = 2.0 * s.lambda(0);
    const ValidatedSpec unstable = validate_spec(s);
    REQUIRE(poles_and_stability(linearize(unstable)).verdict == StabilityVerdict::Unstable);
    CHECK(verify_duality(unstable, Vector::Ones(2), Vector::Ones(2), 1.0, 0.01).pass);
    CHECK(verify_equivalence(unstable, Vector::Ones(2), 1.0, 0.01).pass);
}

TEST_CASE("linearization error shrinks with the cube of the amplitude", "[verify]") {
    const VerificationReport report = verify_linearization_order(canonical(), {0.2, 0.1, 0.05}, 5.0, 0.01);
    CHECK(report.pass);
    CHECK(report.comparison == ">=");
    CHECK_THAT(report.metric, WithinAbs(3.0, 0.1));
    REQUIRE(report.series.at("errors").size() == 3);

    RnnSpec logistic = canonical_spec();
    logistic.activation = ActivationKind::NormalizedLogistic;
    CHECK(verify_linearization_order(validate_spec(logistic), {0.2, 0.1, 0.05, 0.025}, 5.0, 0.01).pass);
}

TEST_CASE("identity activation is reported as exactly linear", "[verify]") {
    RnnSpec s = canonical_spec();
    s.activation = ActivationKind::Identity;
    const VerificationReport report = verify_linearization_order(validate_spec(s), {0.2, 0.1, 0.05}, 5.0, 0.01);
    CHECK(report.pass);
    CHECK(report.note.rfind("exact-linear", 0) == 0);
    for (Real e : report.series.at("errors")) CHECK(e <= kExactLinearBound);
}

TEST_CASE("linearization check validates its amplitudes", "[verify]") {
    auto code = [](const std::vector<Real>& amplitudes) {
        try {
            (void)verify_linearization_order(canonical(), amplitudes, 5.0, 0.01);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::ValidationError;
    };
    CHECK(code({0.1, 0.1, 0.1}) == Errc::InvalidArgument);
    CHECK(code({0.05, 0.1}) == Errc::InvalidArgument);
    CHECK(code({0.1}) == Errc::InvalidArgument);
    CHECK(code({0.1, -0.1}) == Errc::InvalidArgument);
    CHECK(code({1e-9, 1e-10}) == Errc::DegenerateFit);
}

TEST_CASE("discretization and linearization commute", "[verify]") {
    const VerificationReport report = verify_commutation(canonical(), 0.1);
    CHECK(report.pass);
    const LinearRnn lin = linearize(canonical());
    CHECK(linear_euler_map(lin, 0.1) == Matrix::Identity(2, 2) + 0.1 * lin.a);

    const VerificationReport zero = verify_commutation(canonical(), 0.0);
    CHECK(zero.pass);
    CHECK(euler_jacobian_at_origin(canonical(), 0.0) == Matrix::Identity(2, 2));

    // Independent oracle: central differences of the Euler map at the origin.
    const Real dt = 0.01;
    const Real eps = 1e-6;
    Matrix fd(2, 2);
    for (Index j = 0; j < 2; ++j) {
        const Vector e = Vector::Unit(2, j) * eps;
        fd.col(j) = (euler_step(canonical(), e, 0.0, dt) - euler_step(canonical(), -e, 0.0, dt)) / (2 * eps);
    }
    CHECK((fd - linear_euler_map(lin, dt)).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(verify_commutation(canonical(), dt).metric <= 1e-16);
}

TEST_CASE("capacitance scaling leaves trajectories unchanged", "[verify]") {
    const VerificationReport doubled = verify_scale_invariance(canonical(), vec2(1.0, 3.0), vec2(2.0, 6.0), 5.0, 0.01);
    CHECK(doubled.pass);
    CHECK(doubled.scalars.at("omega_difference") <= 1e-12);

    testing::SystemGenerator gen(41);
    for (int trial = 0; trial < 10; ++trial) {
        const RnnSpec s = gen.stable_spec(6, ActivationKind::Identity);
        const ValidatedSpec spec = validate_spec(s);
        const VerificationReport r = verify_scale_invariance(spec, gen.uniform_vector(s.n, 0.1, 10.0),
                                                             gen.uniform_vector(s.n, 0.1, 10.0),
                                                             testing::horizon(s), testing::fine_dt(s));
        CHECK(r.pass);
    }

    try {
        (void)verify_scale_invariance(canonical(), vec2(1.0, 1.0), vec2(1.0, 0.0), 5.0, 0.01);
        FAIL("zero capacitance accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonPositiveCapacitance);
    }
}

TEST_CASE("fitted slope recovers an exact power law", "[verify]") {
    std::vector<Real> x;
    std::vector<Real> y;
    for (Real a : {0.2, 0.1, 0.05, 0.025}) {
        x.push_back(std::log(a));
        y.push_back(std::log(7.0 * a * a * a));
    }
    CHECK_THAT(fitted_slope(x, y), WithinAbs(3.0, 1e-12));
    CHECK_THROWS_AS(fitted_slope({1.0, 1.0}, {0.0, 1.0}), Error);
}
