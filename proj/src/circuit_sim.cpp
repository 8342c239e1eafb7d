#include "rnnen/circuit_sim.hpp"

#include "rnnen/error.hpp"
#include "rnnen/propagator.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cctype>

namespace rnnen {

namespace {

constexpr Index kGround = -1;

template <class Net>
Trajectory propagate_network(const Net& net, const Vector& x0, Real t_end, Real dt, const char* prefix) {
    const TimeGrid grid(t_end, dt);
    const NetworkDynamics dyn = dynamics(net);
    const Real fastest = dyn.lambda.maxCoeff();
    if (dt > 1.0 / fastest) {
        throw Error(Errc::StepTooLarge, "dt", "step exceeds the shortest port time constant");
    }
    const LtiPropagator propagator(dyn.state_matrix(), dyn.omega_tilde, net.u);
    return propagator.run(x0, grid, indexed_labels(prefix, x0.size()));
}

std::string upper(const std::string& s) {
    std::string out = s;
    for (char& ch : out) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return out;
}

InputSignal waveform_signal(const Waveform& w) {
    const auto& p = w.params;
    switch (w.kind) {
    case SignalKind::Constant:
        return InputSignal::constant(Vector::Constant(1, p[0]));
    case SignalKind::Step:
        return InputSignal::step(Vector::Constant(1, p[0]), p[1]);
    case SignalKind::Sinusoid:
        return InputSignal::sinusoid(Vector::Constant(1, p[0]), p[1], p[2]);
    case SignalKind::PiecewiseLinear: {
        std::vector<Real> times;
        std::vector<Vector> values;
        for (std::size_t i = 0; i + 1 < p.size(); i += 2) {
            times.push_back(p[i]);
            values.push_back(Vector::Constant(1, p[i + 1]));
        }
        return InputSignal::piecewise_linear(std::move(times), std::move(values));
    }
    case SignalKind::Zero:
        break;
    }
    return InputSignal::zero(1);
}

class Stamper {
public:
    explicit Stamper(MnaSystem& sys) : sys_(sys) {}

    void g(Index row, Index col, Real value) {
        if (row != kGround && col != kGround) sys_.g(row, col) += value;
    }
    void c(Index row, Index col, Real value) {
        if (row != kGround && col != kGround) sys_.cm(row, col) += value;
    }
    void conductance(Index a, Index b, Real value) {
        g(a, a, value);
        g(b, b, value);
        g(a, b, -value);
        g(b, a, -value);
    }
    void capacitance(Index a, Index b, Real value) {
        c(a, a, value);
        c(b, b, value);
        c(a, b, -value);
        c(b, a, -value);
    }
    /// Branch current `j` leaves node p and enters node q.
    void branch_incidence(Index p, Index q, Index j) {
        g(p, j, 1.0);
        g(q, j, -1.0);
        g(j, p, 1.0);
        g(j, q, -1.0);
    }

private:
    MnaSystem& sys_;
};

}  // namespace

Trajectory simulate_en(const ParallelRcNetwork& net, Real t_end, Real dt) {
    return propagate_network(net, net.v0, t_end, dt, "v");
}

Trajectory simulate_en(const SeriesRlNetwork& net, Real t_end, Real dt) {
    return propagate_network(net, net.i0, t_end, dt, "i");
}

Trajectory simulate_en(const Network& net, Real t_end, Real dt) {
    return std::visit([&](const auto& concrete) { return simulate_en(concrete, t_end, dt); }, net);
}

MnaSystem assemble_mna(const NetlistDeck& deck) {
    MnaSystem sys;
    auto node = [&](const std::string& name) -> Index {
        if (name == "0") return kGround;
        return sys.node_index.at(name);
    };

    for (const auto& el : deck.elements) {
        for (const auto& name : el.nodes) {
            if (name != "0" && !sys.node_index.count(name)) {
                sys.node_index.emplace(name, static_cast<Index>(sys.unknown_names.size()));
                sys.unknown_names.push_back("v(" + name + ")");
            }
        }
    }

    std::map<std::string, Index> inductor_current;
    for (const auto& el : deck.elements) {
        if (el.type != ElementType::Inductor) continue;
        inductor_current.emplace(upper(el.name), static_cast<Index>(sys.unknown_names.size()));
        sys.unknown_names.push_back("i(" + el.name + ")");
    }

    // Voltage-defined node pairs: stacked controlled sources, plus the driving
    // node of each inductor.
    std::map<std::pair<std::string, std::string>, Index> stacked;
    auto stacked_branch = [&](const std::string& p, const std::string& q) {
        const auto key = std::make_pair(p, q);
        auto it = stacked.find(key);
        if (it != stacked.end()) return it->second;
        const Index j = static_cast<Index>(sys.unknown_names.size());
        sys.unknown_names.push_back("i(E:" + p + "," + q + ")");
        stacked.emplace(key, j);
        return j;
    };
    for (const auto& el : deck.elements) {
        if (el.type == ElementType::Ccvs || el.type == ElementType::Vcvs) stacked_branch(el.nodes[0], el.nodes[1]);
    }
    for (const auto& el : deck.elements) {
        if (el.type != ElementType::Inductor || el.nodes[0] == "0") continue;
        const bool driven = std::any_of(stacked.begin(), stacked.end(),
                                        [&](const auto& entry) { return entry.first.first == el.nodes[0]; });
        if (!driven) stacked_branch(el.nodes[0], "0");
    }

    std::vector<std::pair<const NetlistElement*, Index>> independent;
    for (const auto& el : deck.elements) {
        if (el.type != ElementType::VoltageSource) continue;
        independent.emplace_back(&el, static_cast<Index>(sys.unknown_names.size()));
        sys.unknown_names.push_back("i(" + el.name + ")");
    }

    const Index size = static_cast<Index>(sys.unknown_names.size());
    sys.g = Matrix::Zero(size, size);
    sys.cm = Matrix::Zero(size, size);
    sys.b = Matrix::Zero(size, static_cast<Index>(independent.size()));
    sys.x0 = Vector::Zero(size);

    Stamper st(sys);
    for (const auto& [pair, j] : stacked) st.branch_incidence(node(pair.first), node(pair.second), j);

    for (const auto& el : deck.elements) {
        switch (el.type) {
        case ElementType::Resistor:
            st.conductance(node(el.nodes[0]), node(el.nodes[1]), 1.0 / el.value);
            break;
        case ElementType::Capacitor:
            st.capacitance(node(el.nodes[0]), node(el.nodes[1]), el.value);
            break;
        case ElementType::Inductor: {
            const Index i = inductor_current.at(upper(el.name));
            st.branch_incidence(node(el.nodes[0]), node(el.nodes[1]), i);
            st.c(i, i, -el.value);
            break;
        }
        case ElementType::Vccs: {
            // Current g (v(c+) - v(c-)) flows out of n+ through the source into n-.
            const Index np = node(el.nodes[0]);
            const Index nn = node(el.nodes[1]);
            const Index cp = node(el.nodes[2]);
            const Index cn = node(el.nodes[3]);
            st.g(np, cp, el.value);
            st.g(np, cn, -el.value);
            st.g(nn, cp, -el.value);
            st.g(nn, cn, el.value);
            break;
        }
        case ElementType::Ccvs: {
            const Index j = stacked.at({el.nodes[0], el.nodes[1]});
            st.g(j, inductor_current.at(upper(el.control)), -el.value);
            break;
        }
        case ElementType::Vcvs: {
            const Index j = stacked.at({el.nodes[0], el.nodes[1]});
            st.g(j, node(el.nodes[2]), -el.value);
            st.g(j, node(el.nodes[3]), el.value);
            break;
        }
        case ElementType::VoltageSource:
            break;
        }
    }
    for (std::size_t s = 0; s < independent.size(); ++s) {
        const auto& [el, j] = independent[s];
        st.branch_incidence(node(el->nodes[0]), node(el->nodes[1]), j);
        sys.b(j, static_cast<Index>(s)) = 1.0;
        sys.sources.push_back(el->waveform);
    }

    for (const auto& ic : deck.initial_conditions) {
        const Index idx = ic.is_current ? inductor_current.at(upper(ic.target)) : node(ic.target);
        if (idx != kGround) sys.x0[idx] = ic.value;
    }

    // Port quantities, ordered by port index.
    std::vector<std::pair<Index, Index>> ports;
    const bool series = deck.is_series();
    for (const auto& el : deck.elements) {
        if (series && el.type == ElementType::Inductor) {
            ports.emplace_back(el.indices[0], inductor_current.at(upper(el.name)));
        } else if (!series && el.type == ElementType::Capacitor) {
            ports.emplace_back(el.indices[0], node(el.nodes[0]));
        }
    }
    if (ports.empty()) throw Error(Errc::SyntaxError, "ports", "netlist declares no capacitor or inductor ports");
    std::sort(ports.begin(), ports.end());
    for (const auto& [k, idx] : ports) {
        sys.outputs.push_back(idx);
        sys.labels.push_back((series ? "i_" : "v_") + std::to_string(k));
    }
    return sys;
}

Trajectory simulate_netlist_mna(const NetlistDeck& deck, Real t_end, Real dt) {
    const TimeGrid grid(t_end, dt);
    const MnaSystem sys = assemble_mna(deck);
    const Index size = sys.size();

    std::vector<InputSignal> signals;
    for (const auto& w : sys.sources) signals.push_back(waveform_signal(w));
    auto sources_at = [&](Real t) {
        Vector s(static_cast<Index>(signals.size()));
        for (std::size_t i = 0; i < signals.size(); ++i) s[static_cast<Index>(i)] = signals[i].component(0, t);
        return s;
    };

    std::vector<bool> dynamic(static_cast<std::size_t>(size));
    std::vector<Index> alg;
    std::vector<Index> dyn;
    for (Index i = 0; i < size; ++i) {
        dynamic[static_cast<std::size_t>(i)] = !sys.cm.row(i).isZero(0.0);
        (dynamic[static_cast<std::size_t>(i)] ? dyn : alg).push_back(i);
    }

    // Consistent start: dynamic unknowns from the initial conditions, the rest
    // from the algebraic rows at t = 0.
    Vector x = Vector::Zero(size);
    for (Index i : dyn) x[i] = sys.x0[i];
    const Vector b0 = sys.b * sources_at(0.0);
    if (!alg.empty()) {
        const Index na = static_cast<Index>(alg.size());
        Matrix gaa(na, na);
        Vector rhs(na);
        for (Index r = 0; r < na; ++r) {
            rhs[r] = b0[alg[static_cast<std::size_t>(r)]];
            for (Index i : dyn) rhs[r] -= sys.g(alg[static_cast<std::size_t>(r)], i) * x[i];
            for (Index c = 0; c < na; ++c) gaa(r, c) = sys.g(alg[static_cast<std::size_t>(r)], alg[static_cast<std::size_t>(c)]);
        }
        const Eigen::FullPivLU<Matrix> lu(gaa);
        if (!lu.isInvertible()) {
            throw Error(Errc::SingularSystem, "t=0", "algebraic part of the nodal equations is singular (floating node?)");
        }
        const Vector xa = lu.solve(rhs);
        for (Index r = 0; r < na; ++r) x[alg[static_cast<std::size_t>(r)]] = xa[r];
    }

    auto factor = [&](Real h) {
        Matrix lhs(size, size);
        for (Index i = 0; i < size; ++i) {
            lhs.row(i) = dynamic[static_cast<std::size_t>(i)] ? Matrix(sys.cm.row(i) / h + 0.5 * sys.g.row(i))
                                                               : Matrix(sys.g.row(i));
        }
        Eigen::FullPivLU<Matrix> lu(lhs);
        if (!lu.isInvertible()) {
            throw Error(Errc::SingularSystem, "transient", "trapezoidal system matrix is singular (floating node?)");
        }
        return lu;
    };
    const Eigen::FullPivLU<Matrix> regular = factor(grid.dt());
    const bool short_last = grid.last_step() != grid.dt();
    const Eigen::FullPivLU<Matrix> last = short_last ? factor(grid.last_step()) : regular;

    Trajectory traj;
    traj.times = grid.times();
    traj.labels = sys.labels;
    const Index outputs = static_cast<Index>(sys.outputs.size());
    traj.states.resize(static_cast<Index>(grid.size()), outputs);
    auto record = [&](std::size_t i) {
        for (Index k = 0; k < outputs; ++k) traj.states(static_cast<Index>(i), k) = x[sys.outputs[static_cast<std::size_t>(k)]];
    };
    record(0);

    Vector b_now = b0;
    for (std::size_t i = 0; i < grid.steps(); ++i) {
        const Real h = grid.step(i);
        const Vector b_next = sys.b * sources_at(grid.time(i + 1));
        const Vector gx = sys.g * x;
        const Vector cx = sys.cm * x;
        Vector rhs(size);
        for (Index r = 0; r < size; ++r) {
            rhs[r] = dynamic[static_cast<std::size_t>(r)] ? cx[r] / h - 0.5 * gx[r] + 0.5 * (b_now[r] + b_next[r])
                                                          : b_next[r];
        }
        const auto& lu = (short_last && i + 1 == grid.steps()) ? last : regular;
        x = lu.solve(rhs);
        b_now = b_next;
        record(i + 1);
    }
    return traj;
}

Trajectory simulate_netlist_mna(std::string_view netlist_text, Real t_end, Real dt) {
    return simulate_netlist_mna(parse_deck(netlist_text), t_end, dt);
}

Trajectory simulate_netlist_mna(std::string_view netlist_text) {
    const NetlistDeck deck = parse_deck(netlist_text);
    if (!deck.tran) throw Error(Errc::SyntaxError, ".TRAN", "netlist has no .TRAN directive");
    return simulate_netlist_mna(deck, deck.tran->t_end, deck.tran->dt);
}

EnergyReport initial_energy(const ParallelRcNetwork& net) {
    EnergyReport report;
    for (Index k = 0; k < net.n(); ++k) {
        const Real e = 0.5 * net.c[k] * net.v0[k] * net.v0[k];
        report.per_port.push_back(e);
        report.total += e;
    }
    return report;
}

EnergyReport initial_energy(const SeriesRlNetwork& net) {
    EnergyReport report;
    for (Index k = 0; k < net.n(); ++k) {
        const Real e = 0.5 * net.l[k] * net.i0[k] * net.i0[k];
        report.per_port.push_back(e);
        report.total += e;
    }
    return report;
}

EnergyReport initial_energy(const Network& net) {
    return std::visit([](const auto& concrete) { return initial_energy(concrete); }, net);
}

std::vector<Real> stored_energy(const Network& net, const Trajectory& traj) {
    const Vector& element = std::holds_alternative<ParallelRcNetwork>(net) ? std::get<ParallelRcNetwork>(net).c
                                                                         : std::get<SeriesRlNetwork>(net).l;
    if (traj.dimension() != element.size()) {
        throw Error(Errc::DimensionMismatch, "trajectory", "trajectory width differs from port count");
    }
    std::vector<Real> out(traj.samples());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto row = traj.states.row(static_cast<Index>(i));
        out[i] = 0.5 * (row.array().square() * element.transpose().array()).sum();
    }
    return out;
}

}  // namespace rnnen
