#include "rnnen/error.hpp"
#include "rnnen/io.hpp"
#include "rnnen/laplace.hpp"
#include "rnnen/network.hpp"

#include "support/random_systems.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace rnnen;
using Catch::Matchers::WithinAbs;

namespace {

LinearRnn from_a(const Matrix& a) {
    LinearRnn lin;
    lin.a = a;
    lin.w_tilde = Matrix::Zero(a.rows(), 0);
    lin.h0 = Vector::Zero(a.rows());
    lin.input = InputSignal::zero(0);
    return lin;
}

}  // namespace

TEST_CASE("decay transfer evaluates h0 / (s + lambda)", "[laplace]") {
    CHECK(decay_transfer(1.0, 1.0, {1.0, 0.0}) == Complex(0.5, 0.0));
    CHECK(decay_transfer(2.0, 3.0, {0.0, 0.0}) == Complex(1.5, 0.0));
    for (Complex s : {Complex(0.0, 1.0), Complex(-3.0, 2.0), Complex(7.0, 0.0)}) {
        CHECK(decay_transfer(1.3, 0.0, s) == Complex(0.0, 0.0));
    }
    const RationalEval parts = decay_transfer_eval(2.0, 3.0, {-2.0, 0.0});
    CHECK(parts.denominator == Complex(0.0, 0.0));
    try {
        (void)decay_transfer(2.0, 3.0, {-2.0, 0.0});
        FAIL("pole accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::PoleEvaluation);
    }
}

TEST_CASE("system transfer reduces to the scalar decay transfer", "[laplace]") {
    const LinearRnn scalar = make_linear_rnn(Vector::Ones(1), Matrix::Zero(1, 1), Matrix::Zero(1, 0),
                                             Vector::Ones(1), InputSignal::zero(0));
    const ComplexVector v = system_transfer_apply(scalar, {1.0, 0.0}, ComplexVector::Ones(1), ComplexVector(0));
    CHECK(std::abs(v(0) - Complex(0.5, 0.0)) < 1e-15);

    const LinearRnn canonical = linearize(validate_spec(canonical_spec()));
    CHECK(system_transfer_apply(canonical, {0.3, 0.2}, ComplexVector::Zero(2), ComplexVector(0)).isZero(0.0));
}

TEST_CASE("resolvent at s = 0 matches Cramer's rule", "[laplace]") {
    const LinearRnn lin = linearize(validate_spec(canonical_spec()));
    // Solve (-A) V = (1, 0) by Cramer's rule with -A = [[1, -0.5], [0.5, 2]].
    const Real a11 = 1.0, a12 = -0.5, a21 = 0.5, a22 = 2.0;
    const Real det = a11 * a22 - a12 * a21;
    const Real v1 = (1.0 * a22 - a12 * 0.0) / det;
    const Real v2 = (a11 * 0.0 - 1.0 * a21) / det;
    ComplexVector v0(2);
    v0 << 1.0, 0.0;
    const ComplexVector v = system_transfer_apply(lin, {0.0, 0.0}, v0, ComplexVector(0));
    CHECK_THAT(v(0).real(), WithinAbs(v1, 1e-15));
    CHECK_THAT(v(1).real(), WithinAbs(v2, 1e-15));
    CHECK(v(0).imag() == 0.0);
}

TEST_CASE("resolvent is singular exactly at the poles", "[laplace]") {
    const LinearRnn lin = linearize(validate_spec(canonical_spec()));
    try {
        (void)system_transfer_apply(lin, {-1.5, 0.0}, ComplexVector::Ones(2), ComplexVector(0));
        FAIL("pole accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SingularResolvent);
    }
}

TEST_CASE("network and RNN transfer functions coincide", "[laplace]") {
    testing::SystemGenerator gen(5);
    for (int trial = 0; trial < 20; ++trial) {
        const RnnSpec s = gen.stable_spec(6, ActivationKind::Identity);
        const LinearRnn lin = linearize(validate_spec(s));
        const ParallelRcNetwork net = synthesize_parallel(lin, gen.uniform_vector(s.n, 0.1, 10.0));
        const Complex point(gen.uniform(-1.0, 1.0), gen.uniform(-2.0, 2.0));
        const ComplexVector v0 = lin.h0.cast<Complex>();
        const ComplexVector u = gen.uniform_vector(s.m, -1.0, 1.0).cast<Complex>();
        const ComplexVector a = system_transfer_apply(lin, point, v0, u);
        const ComplexVector b = system_transfer_apply(net, point, v0, u);
        CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-9 * (1.0 + a.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("stability verdicts follow the spectral abscissa", "[laplace]") {
    Matrix diag = Matrix::Zero(2, 2);
    diag.diagonal() << -1.0, -2.0;
    const StabilityReport stable = poles_and_stability(from_a(diag));
    CHECK(stable.verdict == StabilityVerdict::AsymptoticallyStable);
    CHECK(stable.eigenvalues == std::vector<Complex>{{-2.0, 0.0}, {-1.0, 0.0}});
    CHECK(stable.spectral_abscissa == -1.0);

    Matrix rotation(2, 2);
    rotation << 0.0, 1.0, -1.0, 0.0;
    const StabilityReport marginal = poles_and_stability(from_a(rotation));
    CHECK(marginal.verdict == StabilityVerdict::Marginal);
    REQUIRE(marginal.eigenvalues.size() == 2);
    CHECK(std::abs(marginal.eigenvalues[0] - Complex(0.0, -1.0)) < 1e-15);
    CHECK(std::abs(marginal.eigenvalues[1] - Complex(0.0, 1.0)) < 1e-15);

    const StabilityReport canonical = poles_and_stability(linearize(validate_spec(canonical_spec())));
    CHECK(canonical.verdict == StabilityVerdict::AsymptoticallyStable);
    for (const Complex& z : canonical.eigenvalues) CHECK(std::abs(z - Complex(-1.5, 0.0)) < 1e-7);

    CHECK(poles_and_stability(from_a(Matrix::Identity(1, 1))).verdict == StabilityVerdict::Unstable);
    CHECK(std::string(verdict_name(StabilityVerdict::Marginal)) == "marginal");
}

TEST_CASE("poles are the eigenvalues of the trace-determinant polynomial", "[laplace]") {
    testing::SystemGenerator gen(8);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix a = gen.uniform_matrix(2, 2, -3.0, 3.0);
        const Real tr = a.trace();
        const Real det = a.determinant();
        const Complex disc = std::sqrt(Complex(tr * tr - 4.0 * det, 0.0));
        std::vector<Complex> expected{(tr - disc) / 2.0, (tr + disc) / 2.0};
        std::sort(expected.begin(), expected.end(), [](const Complex& x, const Complex& y) {
            return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
        });
        const StabilityReport report = analyze_stability(a);
        for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(report.eigenvalues[i] - expected[i]) < 1e-9);
        const Real abscissa = std::max(expected[0].real(), expected[1].real());
        if (abscissa < -kMarginalBand) CHECK(report.verdict == StabilityVerdict::AsymptoticallyStable);
        if (abscissa > kMarginalBand) CHECK(report.verdict == StabilityVerdict::Unstable);
    }
}
