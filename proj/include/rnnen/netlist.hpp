#pragma once

// Line-oriented netlist for the synthesized networks.
//
//   C<k> n<k> 0 <value>                 capacitor, port k to ground
//   R<k> n<k> 0 <value>                 resistor, port k to ground (parallel form)
//   L<k> n<k> nmid<k> <value>           inductor (series form)
//   R<k> nmid<k> 0 <value>              loop resistor (series form)
//   G<k>_<j> 0 n<k> n<j> 0 <g>          current g*v(n<j>) injected into n<k>
//   GX<k>_<l> 0 n<k> nu<l> 0 <g>        input coupling from source node nu<l>
//   H<k>_<j> n<k> 0 L<j> <r>            voltage r*i(L<j>) (series form)
//   EX<k>_<l> n<k> 0 nu<l> 0 <g>        voltage g*v(nu<l>) (series form)
//   V<l> nu<l> 0 <waveform>             external excitation u_l
//   .IC V(n<k>)=<v0> | .IC I(L<k>)=<i0>
//   .TRAN <dt> <t_end> UIC
//   .END
//
// Waveforms: DC <a> | STEP <a> <onset> | SIN <a> <omega> <phase> |
// PWL <t1> <v1> <t2> <v2> ...
//
// '*' starts a comment line. Element letters and directives are
// case-insensitive. Controlled voltage sources sharing a node pair are
// stacked in series; the first node of an inductor with no such source is
// tied to ground.

#include "rnnen/network.hpp"
#include "rnnen/signal.hpp"
#include "rnnen/types.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rnnen {

struct TranSettings {
    Real dt = 1e-3;
    Real t_end = 1.0;
};

/// Emitted netlist: ordered lines (no trailing newlines) plus the node that
/// carries each port.
struct Netlist {
    std::vector<std::string> lines;
    std::vector<std::string> port_nodes;

    [[nodiscard]] std::string text() const;
};

enum class ElementType { Capacitor, Resistor, Inductor, Vccs, Ccvs, Vcvs, VoltageSource };

/// Per-source waveform; `params` follow the keyword in source order.
struct Waveform {
    SignalKind kind = SignalKind::Zero;
    std::vector<Real> params;
};

struct NetlistElement {
    ElementType type;
    std::string name;                // as written, e.g. "G1_2"
    std::vector<Index> indices;      // numeric fields of the name, e.g. {1, 2}
    std::vector<std::string> nodes;  // terminals, then control nodes
    std::string control;             // controlling inductor of a Ccvs
    Real value = 0.0;
    Waveform waveform;               // VoltageSource only
    int line = 0;
};

struct InitialCondition {
    bool is_current = false;  // I(L<k>) rather than V(node)
    std::string target;       // node name or inductor name
    Real value = 0.0;
    int line = 0;
};

/// Parsed element list, independent of how the network will be read.
struct NetlistDeck {
    std::vector<NetlistElement> elements;
    std::vector<InitialCondition> initial_conditions;
    std::optional<TranSettings> tran;

    [[nodiscard]] bool is_series() const;
};

/// Throws SyntaxError(line), UnknownElement(line) or DanglingNode(name).
[[nodiscard]] NetlistDeck parse_deck(std::string_view text);

struct ParsedNetlist {
    Network network;
    std::optional<TranSettings> tran;
};

[[nodiscard]] Netlist emit_netlist(const Network& net, const TranSettings& tran = {});
[[nodiscard]] Netlist emit_netlist(const ParallelRcNetwork& net, const TranSettings& tran = {});
[[nodiscard]] Netlist emit_netlist(const SeriesRlNetwork& net, const TranSettings& tran = {});

/// Exact inverse of emit_netlist on its image.
[[nodiscard]] ParsedNetlist parse_netlist(std::string_view text);
[[nodiscard]] Network network_from_deck(const NetlistDeck& deck);

/// %.17g formatting used for every numeric field.
[[nodiscard]] std::string format_real(Real value);

}  // namespace rnnen
