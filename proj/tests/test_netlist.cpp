#include "rnnen/error.hpp"
#include "rnnen/io.hpp"
#include "rnnen/netlist.hpp"

#include "support/random_systems.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

using namespace rnnen;

namespace {

Errc parse_error(const std::string& text) {
    try {
        (void)parse_netlist(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("netlist accepted: " << text);
    return Errc::InvalidArgument;
}

LinearRnn single_port() {
    return make_linear_rnn(Vector::Constant(1, 2.0), Matrix::Zero(1, 1), Matrix::Zero(1, 0), Vector::Ones(1),
                           InputSignal::zero(0));
}

}  // namespace

TEST_CASE("single R||C port emits the five-line body", "[netlist]") {
    const Netlist nl = emit_netlist(synthesize_parallel(single_port(), Vector::Ones(1)), TranSettings{0.001, 1.0});
    CHECK(nl.text() == "C1 n1 0 1\nR1 n1 0 0.5\n.IC V(n1)=1\n.TRAN 0.001 1 UIC\n.END\n");
    CHECK(nl.port_nodes == std::vector<std::string>{"n1"});
}

TEST_CASE("uncoupled ports emit no G lines", "[netlist]") {
    const LinearRnn lin = make_linear_rnn(Vector::Ones(2), Matrix::Zero(2, 2), Matrix::Zero(2, 0), Vector::Ones(2),
                                          InputSignal::zero(0));
    for (const auto& line : emit_netlist(synthesize_parallel(lin)).lines) CHECK(line[0] != 'G');
}

TEST_CASE("unit capacitances put w on the G lines", "[netlist]") {
    const Netlist nl = emit_netlist(synthesize_parallel(linearize(validate_spec(canonical_spec()))));
    std::vector<std::string> g_lines;
    for (const auto& line : nl.lines) {
        if (line[0] == 'G') g_lines.push_back(line);
    }
    CHECK(g_lines == std::vector<std::string>{"G1_2 0 n1 n2 0 0.5", "G2_1 0 n2 n1 0 -0.5"});
}

TEST_CASE("series networks emit inductors and current-controlled couplings", "[netlist]") {
    const SeriesRlNetwork net = synthesize_series(linearize(validate_spec(canonical_spec())));
    const std::string text = emit_netlist(net).text();
    CHECK(text.find("L1 n1 nmid1 1\n") != std::string::npos);
    CHECK(text.find("R1 nmid1 0 1\n") != std::string::npos);
    CHECK(text.find("H1_2 n1 0 L2 0.5\n") != std::string::npos);
    CHECK(text.find(".IC I(L2)=-1\n") != std::string::npos);
    const ParsedNetlist back = parse_netlist(text);
    REQUIRE(std::holds_alternative<SeriesRlNetwork>(back.network));
    CHECK(same_elements(back.network, Network(net)));
}

TEST_CASE("parse inverts emit and emit is byte-stable", "[netlist]") {
    testing::SystemGenerator gen(17);
    for (int trial = 0; trial < 100; ++trial) {
        const RnnSpec s = gen.stable_spec(6, ActivationKind::Identity, 3);
        const LinearRnn lin = linearize(validate_spec(s));
        const Vector elements = gen.uniform_vector(s.n, 1e-3, 1e3);
        const Network net = trial % 2 == 0 ? Network(synthesize_parallel(lin, elements))
                                           : Network(synthesize_series(lin, elements));
        const TranSettings tran{gen.uniform(1e-4, 1e-2), gen.uniform(1.0, 20.0)};
        const Netlist first = emit_netlist(net, tran);
        const ParsedNetlist parsed = parse_netlist(first.text());
        CHECK(same_elements(parsed.network, net));
        REQUIRE(parsed.tran.has_value());
        CHECK(parsed.tran->dt == tran.dt);
        CHECK(parsed.tran->t_end == tran.t_end);
        CHECK(emit_netlist(parsed.network, *parsed.tran).text() == first.text());
    }
}

TEST_CASE("format_real round-trips through strtod", "[netlist]") {
    testing::SystemGenerator gen(2);
    for (int trial = 0; trial < 1000; ++trial) {
        const Real x = gen.uniform(-1.0, 1.0) * std::pow(10.0, gen.uniform(-30.0, 30.0));
        CHECK(std::strtod(format_real(x).c_str(), nullptr) == x);
    }
}

TEST_CASE("parser rejects unknown elements and dangling nodes", "[netlist]") {
    CHECK(parse_error("Q1 n1 0 5\n") == Errc::UnknownElement);
    CHECK(parse_error("C1 n1 0 1\nR1 n1 0 1\n.FOO 3\n") == Errc::UnknownElement);
    CHECK(parse_error("C1 n1 0 1\nR1 n1 0 1\nG1_2 0 n1 n2 0 0.5\n") == Errc::DanglingNode);
    CHECK(parse_error("C1 n1 0\n") == Errc::SyntaxError);
    CHECK(parse_error("C1 n1 0 abc\n") == Errc::SyntaxError);

    try {
        (void)parse_netlist("C1 n1 0 1\nR1 n1 0 1\nX7 a b\n");
    } catch (const Error& e) {
        CHECK(e.where() == "line 3");
    }
}

TEST_CASE("parser accepts comments, blank lines and mixed case", "[netlist]") {
    const std::string text =
        "* header\n\nc1 n1 0 2\nr1 n1 0 0.25\n.ic v(n1)=0.5\n.tran 0.01 2 uic\n.end\n";
    const ParsedNetlist parsed = parse_netlist(text);
    const auto& net = std::get<ParallelRcNetwork>(parsed.network);
    CHECK(net.c(0) == 2.0);
    CHECK(net.r(0) == 0.25);
    CHECK(net.v0(0) == 0.5);
    CHECK(parsed.tran->t_end == 2.0);
}

TEST_CASE("input waveforms survive the round-trip", "[netlist]") {
    const LinearRnn base = linearize(validate_spec(canonical_spec()));
    std::vector<InputSignal> inputs{
        InputSignal::constant(Vector::Constant(1, 0.3)),
        InputSignal::step(Vector::Constant(1, -0.7), 1.25),
        InputSignal::sinusoid(Vector::Constant(1, 2.0), 3.0, 0.1),
        InputSignal::piecewise_linear({0.0, 1.0, 2.5}, {Vector::Constant(1, 0.0), Vector::Constant(1, 1.0),
                                                        Vector::Constant(1, -0.5)}),
    };
    for (const auto& input : inputs) {
        const LinearRnn lin = make_linear_rnn(base.lambda, base.w, Matrix::Constant(2, 1, 0.5), base.h0, input);
        for (const Network& net : {Network(synthesize_parallel(lin)), Network(synthesize_series(lin))}) {
            const ParsedNetlist parsed = parse_netlist(emit_netlist(net).text());
            CHECK(same_elements(parsed.network, net));
            CHECK(std::visit([](const auto& x) { return x.u; }, parsed.network) == input);
        }
    }
}
