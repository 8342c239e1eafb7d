#pragma once

#include "rnnen/netlist.hpp"
#include "rnnen/network.hpp"
#include "rnnen/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace rnnen {

/// Integrates dx/dt = -Lambda x + Omega x + Omega_tilde u with the exact
/// propagator. Coordinates are labelled v_k (parallel) or i_k (series).
/// Throws StepTooLarge if dt > min_k 1/Lambda_k.
[[nodiscard]] Trajectory simulate_en(const ParallelRcNetwork& net, Real t_end, Real dt);
[[nodiscard]] Trajectory simulate_en(const SeriesRlNetwork& net, Real t_end, Real dt);
[[nodiscard]] Trajectory simulate_en(const Network& net, Real t_end, Real dt);

/// Nodal equations Cm dx/dt + G x = B s(t) assembled from element stamps.
/// Unknowns are node voltages, then inductor currents, then branch currents
/// of voltage-defined nodes and independent sources.
struct MnaSystem {
    std::map<std::string, Index> node_index;
    std::vector<std::string> unknown_names;
    Matrix g;
    Matrix cm;
    Matrix b;                       // maps independent source values into rows
    Vector x0;                      // initial values of the dynamic unknowns
    std::vector<Index> outputs;     // unknown index of each port quantity
    std::vector<std::string> labels;
    std::vector<Waveform> sources;  // one per column of b

    [[nodiscard]] Index size() const noexcept { return g.rows(); }
};

/// Stamps every element of the deck.
[[nodiscard]] MnaSystem assemble_mna(const NetlistDeck& deck);

/// Trapezoidal integration of the assembled system; algebraic rows are
/// enforced at each new time point. Returns port voltages (parallel form) or
/// port inductor currents (series form). Throws SingularSystem.
[[nodiscard]] Trajectory simulate_netlist_mna(const NetlistDeck& deck, Real t_end, Real dt);
[[nodiscard]] Trajectory simulate_netlist_mna(std::string_view netlist_text, Real t_end, Real dt);
/// Uses the .TRAN settings of the netlist.
[[nodiscard]] Trajectory simulate_netlist_mna(std::string_view netlist_text);

struct EnergyReport {
    std::vector<Real> per_port;  // joules
    Real total = 0.0;
};

/// 1/2 C_k v_k(0)^2 per port, or 1/2 L_k i_k(0)^2 for the series form.
[[nodiscard]] EnergyReport initial_energy(const ParallelRcNetwork& net);
[[nodiscard]] EnergyReport initial_energy(const SeriesRlNetwork& net);
[[nodiscard]] EnergyReport initial_energy(const Network& net);

/// Total stored port energy at each sample of a simulate_en trajectory.
[[nodiscard]] std::vector<Real> stored_energy(const Network& net, const Trajectory& traj);

}  // namespace rnnen
