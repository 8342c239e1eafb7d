#include "rnnen/cli.hpp"

#include "rnnen/circuit_sim.hpp"
#include "rnnen/error.hpp"
#include "rnnen/io.hpp"
#include "rnnen/laplace.hpp"
#include "rnnen/netlist.hpp"
#include "rnnen/network.hpp"
#include "rnnen/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>

namespace rnnen {

namespace {

struct Options {
    std::string spec_path;
    std::string mode = "nonlinear";
    std::string representation = "parallel-rc";
    std::string netlist_path;
    std::string out_path;
    std::string check = "all";
    std::vector<Real> capacitance;
    std::vector<Real> capacitance2;
    std::vector<Real> inductance;
    std::vector<Real> amplitudes{0.2, 0.1, 0.05, 0.025};
    std::optional<Real> t_end;
    std::optional<Real> dt;
};

ValidatedSpec resolve_spec(const std::string& path) {
    if (path == "canonical" && !std::filesystem::exists(path)) return validate_spec(canonical_spec());
    return load_spec(path);
}

Vector element_values(const std::vector<Real>& given, Index n, Real fill, const char* name) {
    if (given.empty()) return Vector::Constant(n, fill);
    if (static_cast<Index>(given.size()) != n) {
        throw Error(Errc::DimensionMismatch, name, "expected " + std::to_string(n) + " values");
    }
    return Eigen::Map<const Vector>(given.data(), n);
}

Real default_t_end(const ValidatedSpec& spec, const Options& opt) {
    return opt.t_end.value_or(5.0 * max_tau(spec.spec()));
}

Real default_dt(const ValidatedSpec& spec, const Options& opt) {
    return opt.dt.value_or(std::min(1e-3, min_tau(spec.spec()) / 100.0));
}

Network synthesize_from(const ValidatedSpec& spec, const Options& opt) {
    const LinearRnn lin = linearize(spec);
    if (opt.representation == "series-rl") {
        return synthesize_series(lin, element_values(opt.inductance, spec.n(), 1.0, "inductance"));
    }
    return synthesize_parallel(lin, element_values(opt.capacitance, spec.n(), 1.0, "capacitance"));
}

void emit(const Options& opt, std::ostream& out, const std::string& text) {
    if (opt.out_path.empty()) {
        out << text;
    } else {
        write_text(opt.out_path, text);
    }
}

int cmd_simulate(const Options& opt, std::ostream& out) {
    Trajectory traj;
    if (opt.mode == "netlist" && !opt.netlist_path.empty()) {
        const NetlistDeck deck = parse_deck(read_text(opt.netlist_path));
        const TranSettings tran = deck.tran.value_or(TranSettings{});
        traj = simulate_netlist_mna(deck, opt.t_end.value_or(tran.t_end), opt.dt.value_or(tran.dt));
    } else {
        if (opt.spec_path.empty()) throw Error(Errc::InvalidArgument, "--spec", "a spec document is required");
        const ValidatedSpec spec = resolve_spec(opt.spec_path);
        const Real t_end = default_t_end(spec, opt);
        const Real dt = default_dt(spec, opt);
        if (opt.mode == "nonlinear") {
            traj = simulate_nonlinear(spec, t_end, dt);
        } else if (opt.mode == "linear") {
            traj = simulate_linear(linearize(spec), t_end, dt);
        } else if (opt.mode == "en") {
            traj = simulate_en(synthesize_from(spec, opt), t_end, dt);
        } else {
            const Netlist netlist = emit_netlist(synthesize_from(spec, opt), TranSettings{dt, t_end});
            traj = simulate_netlist_mna(netlist.text(), t_end, dt);
        }
    }
    emit(opt, out, format_trajectory(traj));
    return kExitOk;
}

int cmd_linearize(const Options& opt, std::ostream& out) {
    const ValidatedSpec spec = resolve_spec(opt.spec_path);
    emit(opt, out, linear_to_json(linearize(spec)).dump(2) + "\n");
    return kExitOk;
}

int cmd_synthesize(const Options& opt, std::ostream& out) {
    const ValidatedSpec spec = resolve_spec(opt.spec_path);
    emit(opt, out, network_to_json(synthesize_from(spec, opt)).dump(2) + "\n");
    return kExitOk;
}

int cmd_export(const Options& opt, std::ostream& out) {
    const ValidatedSpec spec = resolve_spec(opt.spec_path);
    const TranSettings tran{default_dt(spec, opt), default_t_end(spec, opt)};
    emit(opt, out, emit_netlist(synthesize_from(spec, opt), tran).text());
    return kExitOk;
}

int cmd_stability(const Options& opt, std::ostream& out) {
    const ValidatedSpec spec = resolve_spec(opt.spec_path);
    emit(opt, out, stability_to_json(poles_and_stability(linearize(spec))).dump(2) + "\n");
    return kExitOk;
}

VerificationReport run_check(const std::string& check, const ValidatedSpec& spec, const Options& opt) {
    const Real t_end = default_t_end(spec, opt);
    const Real dt = default_dt(spec, opt);
    const Index n = spec.n();
    const Vector c1 = element_values(opt.capacitance, n, 1.0, "capacitance");
    if (check == "equivalence") return verify_equivalence(spec, c1, t_end, dt);
    if (check == "duality") {
        return verify_duality(spec, c1, element_values(opt.inductance, n, 1.0, "inductance"), t_end, dt);
    }
    if (check == "linearization") return verify_linearization_order(spec, opt.amplitudes, t_end, dt);
    if (check == "commutation") return verify_commutation(spec, opt.dt.value_or(0.1));
    if (check == "scale-invariance") {
        const Vector c2 = opt.capacitance2.empty() ? Vector(2.0 * c1)
                                                   : element_values(opt.capacitance2, n, 1.0, "capacitance2");
        return verify_scale_invariance(spec, c1, c2, t_end, dt);
    }
    throw Error(Errc::InvalidArgument, "--check", "unknown check '" + check + "'");
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const ValidatedSpec spec = resolve_spec(opt.spec_path);
    std::vector<VerificationReport> reports;
    if (opt.check == "all") {
        const std::vector<std::string> checks{"equivalence", "duality", "linearization", "commutation",
                                              "scale-invariance"};
        std::vector<std::future<VerificationReport>> jobs;
        for (const auto& check : checks) {
            jobs.push_back(std::async(std::launch::async, [&, check] { return run_check(check, spec, opt); }));
        }
        for (auto& job : jobs) reports.push_back(job.get());
    } else {
        reports.push_back(run_check(opt.check, spec, opt));
    }
    nlohmann::json doc;
    if (reports.size() == 1) {
        doc = report_to_json(reports.front());
    } else {
        doc = nlohmann::json::array();
        for (const auto& r : reports) doc.push_back(report_to_json(r));
    }
    emit(opt, out, doc.dump(2) + "\n");
    const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
    return all_pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Map continuous-time RNNs onto equivalent electrical networks", "rnnen"};
    app.require_subcommand(1);

    auto add_spec = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--spec", opt.spec_path, "RNN spec document (or 'canonical')");
        if (required) o->required();
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--t-end", opt.t_end, "End time (default 5 * max tau)");
        sub->add_option("--dt", opt.dt, "Time step (default min(1e-3, min tau / 100))");
    };
    auto add_elements = [&](CLI::App* sub) {
        sub->add_option("--representation", opt.representation, "parallel-rc or series-rl")
            ->check(CLI::IsMember({"parallel-rc", "series-rl"}));
        sub->add_option("--capacitance", opt.capacitance, "Port capacitances, comma separated")->delimiter(',');
        sub->add_option("--inductance", opt.inductance, "Port inductances, comma separated")->delimiter(',');
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opt.out_path, "Output file (default stdout)"); };

    auto* simulate = app.add_subcommand("simulate", "Simulate the RNN, its linearization, or a circuit realization");
    add_spec(simulate, false);
    simulate->add_option("--mode", opt.mode, "nonlinear, linear, en or netlist")
        ->check(CLI::IsMember({"nonlinear", "linear", "en", "netlist"}));
    simulate->add_option("--netlist", opt.netlist_path, "Netlist to simulate in netlist mode");
    add_elements(simulate);
    add_grid(simulate);
    add_out(simulate);

    auto* lin = app.add_subcommand("linearize", "Print A = w - lambda and the input path");
    add_spec(lin, true);
    add_out(lin);

    auto* synth = app.add_subcommand("synthesize", "Synthesize the parallel-RC or series-RL network");
    add_spec(synth, true);
    add_elements(synth);
    add_out(synth);

    auto* exporter = app.add_subcommand("export-netlist", "Write the synthesized network as a netlist");
    add_spec(exporter, true);
    add_elements(exporter);
    add_grid(exporter);
    add_out(exporter);

    auto* stability = app.add_subcommand("stability", "Poles of the linearized system and stability verdict");
    add_spec(stability, true);
    add_out(stability);

    auto* verify = app.add_subcommand("verify", "Run equivalence checks");
    add_spec(verify, true);
    verify->add_option("--check", opt.check, "equivalence, duality, linearization, commutation, scale-invariance or all")
        ->check(CLI::IsMember({"equivalence", "duality", "linearization", "commutation", "scale-invariance", "all"}));
    add_elements(verify);
    verify->add_option("--capacitance2", opt.capacitance2, "Second capacitance set for scale invariance")
        ->delimiter(',');
    verify->add_option("--amplitudes", opt.amplitudes, "Decreasing amplitudes for the linearization check")
        ->delimiter(',');
    add_grid(verify);
    verify->add_option("--report", opt.out_path, "Write the report here instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(opt, out);
        if (lin->parsed()) return cmd_linearize(opt, out);
        if (synth->parsed()) return cmd_synthesize(opt, out);
        if (exporter->parsed()) return cmd_export(opt, out);
        if (stability->parsed()) return cmd_stability(opt, out);
        if (verify->parsed()) return cmd_verify(opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace rnnen
