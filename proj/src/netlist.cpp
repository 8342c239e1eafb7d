#include "rnnen/netlist.hpp"

#include "rnnen/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace rnnen {

namespace {

// ---------------------------------------------------------------------------
// Lexing helpers
// ---------------------------------------------------------------------------

std::string upper(std::string_view s) {
    std::string out(s);
    for (char& ch : out) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

[[noreturn]] void syntax(int line, const std::string& message) {
    throw Error(Errc::SyntaxError, "line " + std::to_string(line), message);
}

Real parse_number(std::string_view token, int line) {
    Real value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
        syntax(line, "bad numeric field '" + std::string(token) + "'");
    }
    return value;
}

/// Splits the numeric part of an element name: "12_3" -> {12, 3}.
std::vector<Index> parse_indices(std::string_view digits, std::size_t expected, int line, std::string_view name) {
    std::vector<Index> out;
    std::size_t pos = 0;
    while (pos <= digits.size()) {
        const std::size_t end = std::min(digits.find('_', pos), digits.size());
        const std::string_view part = digits.substr(pos, end - pos);
        Index value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || value < 1) {
            syntax(line, "malformed element name '" + std::string(name) + "'");
        }
        out.push_back(value);
        pos = end + 1;
    }
    if (out.size() != expected) {
        syntax(line, "malformed element name '" + std::string(name) + "'");
    }
    return out;
}

void expect_fields(const std::vector<std::string_view>& fields, std::size_t count, int line) {
    if (fields.size() != count) {
        syntax(line, "expected " + std::to_string(count) + " fields, got " + std::to_string(fields.size()));
    }
}

Waveform parse_waveform(const std::vector<std::string_view>& fields, std::size_t first, int line) {
    if (fields.size() <= first) syntax(line, "missing waveform");
    const std::string keyword = upper(fields[first]);
    std::vector<Real> params;
    for (std::size_t i = first + 1; i < fields.size(); ++i) params.push_back(parse_number(fields[i], line));
    Waveform wave;
    wave.params = params;
    if (keyword == "DC") {
        if (params.size() != 1) syntax(line, "DC takes one value");
        wave.kind = SignalKind::Constant;
    } else if (keyword == "STEP") {
        if (params.size() != 2) syntax(line, "STEP takes amplitude and onset");
        wave.kind = SignalKind::Step;
    } else if (keyword == "SIN") {
        if (params.size() != 3) syntax(line, "SIN takes amplitude, omega and phase");
        wave.kind = SignalKind::Sinusoid;
    } else if (keyword == "PWL") {
        if (params.empty() || params.size() % 2 != 0) syntax(line, "PWL takes time/value pairs");
        wave.kind = SignalKind::PiecewiseLinear;
    } else {
        syntax(line, "unknown waveform '" + std::string(fields[first]) + "'");
    }
    return wave;
}

/// Parses "V(node)=value" or "I(name)=value".
InitialCondition parse_ic(std::string_view token, int line) {
    const auto open = token.find('(');
    const auto close = token.find(')');
    const auto eq = token.find('=');
    if (open != 1 || close == std::string_view::npos || close < open + 2 || eq != close + 1) {
        syntax(line, "malformed initial condition '" + std::string(token) + "'");
    }
    InitialCondition ic;
    const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    if (kind == 'V') {
        ic.is_current = false;
    } else if (kind == 'I') {
        ic.is_current = true;
    } else {
        syntax(line, "initial condition must be V(node) or I(element)");
    }
    ic.target = std::string(token.substr(open + 1, close - open - 1));
    ic.value = parse_number(token.substr(eq + 1), line);
    ic.line = line;
    return ic;
}

void parse_directive(const std::vector<std::string_view>& fields, int line, NetlistDeck& deck, bool& ended) {
    const std::string word = upper(fields[0]);
    if (word == ".IC") {
        if (fields.size() < 2) syntax(line, ".IC needs at least one assignment");
        for (std::size_t i = 1; i < fields.size(); ++i) deck.initial_conditions.push_back(parse_ic(fields[i], line));
    } else if (word == ".TRAN") {
        if (fields.size() != 3 && fields.size() != 4) syntax(line, ".TRAN takes dt, t_end and optional UIC");
        if (fields.size() == 4 && upper(fields[3]) != "UIC") syntax(line, "only UIC transients are supported");
        if (deck.tran) syntax(line, "duplicate .TRAN");
        const Real dt = parse_number(fields[1], line);
        const Real t_end = parse_number(fields[2], line);
        if (!(dt > 0.0) || !(t_end > 0.0)) syntax(line, ".TRAN values must be positive");
        deck.tran = TranSettings{dt, t_end};
    } else if (word == ".END") {
        ended = true;
    } else {
        throw Error(Errc::UnknownElement, "line " + std::to_string(line),
                    "unknown directive '" + std::string(fields[0]) + "'");
    }
}

NetlistElement parse_element(const std::vector<std::string_view>& fields, int line) {
    const std::string_view name = fields[0];
    const std::string head = upper(name);
    NetlistElement el;
    el.name = std::string(name);
    el.line = line;

    auto two_terminal = [&](ElementType type) {
        expect_fields(fields, 4, line);
        el.type = type;
        el.indices = parse_indices(name.substr(1), 1, line, name);
        el.nodes = {std::string(fields[1]), std::string(fields[2])};
        el.value = parse_number(fields[3], line);
    };

    switch (head[0]) {
    case 'C':
        two_terminal(ElementType::Capacitor);
        if (!(el.value > 0.0)) syntax(line, "capacitance must be positive");
        break;
    case 'R':
        two_terminal(ElementType::Resistor);
        if (!(el.value > 0.0)) syntax(line, "resistance must be positive");
        break;
    case 'L':
        two_terminal(ElementType::Inductor);
        if (!(el.value > 0.0)) syntax(line, "inductance must be positive");
        break;
    case 'G': {
        expect_fields(fields, 6, line);
        el.type = ElementType::Vccs;
        const bool input = head.size() > 1 && head[1] == 'X';
        el.indices = parse_indices(name.substr(input ? 2 : 1), 2, line, name);
        el.nodes = {std::string(fields[1]), std::string(fields[2]), std::string(fields[3]), std::string(fields[4])};
        el.value = parse_number(fields[5], line);
        break;
    }
    case 'E': {
        if (head.size() < 2 || head[1] != 'X') {
            throw Error(Errc::UnknownElement, "line " + std::to_string(line),
                        "unsupported element '" + std::string(name) + "'");
        }
        expect_fields(fields, 6, line);
        el.type = ElementType::Vcvs;
        el.indices = parse_indices(name.substr(2), 2, line, name);
        el.nodes = {std::string(fields[1]), std::string(fields[2]), std::string(fields[3]), std::string(fields[4])};
        el.value = parse_number(fields[5], line);
        break;
    }
    case 'H':
        expect_fields(fields, 5, line);
        el.type = ElementType::Ccvs;
        el.indices = parse_indices(name.substr(1), 2, line, name);
        el.nodes = {std::string(fields[1]), std::string(fields[2])};
        el.control = std::string(fields[3]);
        el.value = parse_number(fields[4], line);
        break;
    case 'V':
        if (fields.size() < 4) syntax(line, "voltage source needs nodes and a waveform");
        el.type = ElementType::VoltageSource;
        el.indices = parse_indices(name.substr(1), 1, line, name);
        el.nodes = {std::string(fields[1]), std::string(fields[2])};
        el.waveform = parse_waveform(fields, 3, line);
        break;
    default:
        throw Error(Errc::UnknownElement, "line " + std::to_string(line),
                    "unknown element '" + std::string(name) + "'");
    }
    return el;
}

void check_references(const NetlistDeck& deck) {
    std::set<std::string> declared{"0"};
    std::set<std::string> names;
    std::set<std::string> inductors;
    for (const auto& el : deck.elements) {
        if (!names.insert(upper(el.name)).second) syntax(el.line, "duplicate element '" + el.name + "'");
        switch (el.type) {
        case ElementType::Capacitor:
        case ElementType::Resistor:
        case ElementType::Inductor:
        case ElementType::VoltageSource:
            declared.insert(el.nodes.begin(), el.nodes.end());
            if (el.nodes[0] == el.nodes[1]) syntax(el.line, "element shorted onto a single node");
            break;
        default:
            break;
        }
        if (el.type == ElementType::Inductor) inductors.insert(upper(el.name));
    }
    for (const auto& el : deck.elements) {
        for (const auto& node : el.nodes) {
            if (!declared.count(node)) {
                throw Error(Errc::DanglingNode, node,
                            "node referenced by " + el.name + " is not attached to any two-terminal element");
            }
        }
        if (el.type == ElementType::Ccvs && !inductors.count(upper(el.control))) {
            throw Error(Errc::DanglingNode, el.control, "controlling inductor of " + el.name + " does not exist");
        }
    }
    for (const auto& ic : deck.initial_conditions) {
        if (ic.is_current ? !inductors.count(upper(ic.target)) : !declared.count(ic.target)) {
            throw Error(Errc::DanglingNode, ic.target, "initial condition refers to an unknown target");
        }
    }
}

// ---------------------------------------------------------------------------
// Emission helpers
// ---------------------------------------------------------------------------

std::string port_node(Index k) { return "n" + std::to_string(k + 1); }
std::string source_node(Index l) { return "nu" + std::to_string(l + 1); }

std::string waveform_text(const InputSignal& u, Index l) {
    switch (u.kind()) {
    case SignalKind::Zero:
        return "DC 0";
    case SignalKind::Constant:
        return "DC " + format_real(u.amplitude()[l]);
    case SignalKind::Step:
        return "STEP " + format_real(u.amplitude()[l]) + " " + format_real(u.onset());
    case SignalKind::Sinusoid:
        return "SIN " + format_real(u.amplitude()[l]) + " " + format_real(u.omega()) + " " + format_real(u.phase());
    case SignalKind::PiecewiseLinear: {
        std::string out = "PWL";
        for (std::size_t i = 0; i < u.sample_times().size(); ++i) {
            out += " " + format_real(u.sample_times()[i]) + " " + format_real(u.sample_values()[i][l]);
        }
        return out;
    }
    }
    return "DC 0";
}

void emit_sources(const InputSignal& u, Index m, std::vector<std::string>& lines) {
    for (Index l = 0; l < m; ++l) {
        lines.push_back("V" + std::to_string(l + 1) + " " + source_node(l) + " 0 " + waveform_text(u, l));
    }
}

void emit_decomposition_comments(const Matrix& coupling, std::vector<std::string>& lines) {
    const GyratorDecomposition parts = gyrator_decompose(coupling);
    for (Index k = 0; k < coupling.rows(); ++k) {
        for (Index j = k + 1; j < coupling.cols(); ++j) {
            const Real sym = parts.alpha_sym(k, j);
            const Real anti = parts.alpha_anti(k, j);
            if (sym == 0.0 && anti == 0.0) continue;
            lines.push_back("* coupling " + port_node(k) + " " + port_node(j) + ": reciprocal " + format_real(sym) +
                            " gyrator " + format_real(anti));
        }
    }
}

void emit_tail(const TranSettings& tran, std::vector<std::string>& lines) {
    lines.push_back(".TRAN " + format_real(tran.dt) + " " + format_real(tran.t_end) + " UIC");
    lines.push_back(".END");
}

// ---------------------------------------------------------------------------
// Deck -> network
// ---------------------------------------------------------------------------

struct PortTable {
    Index n = 0;
    Index m = 0;
    std::map<std::string, Index> node_to_port;
    std::vector<std::string> port_nodes;
    std::vector<std::string> source_nodes;
};

const NetlistElement* find_indexed(const NetlistDeck& deck, ElementType type, Index k) {
    for (const auto& el : deck.elements) {
        if (el.type == type && el.indices.size() == 1 && el.indices[0] == k) return &el;
    }
    return nullptr;
}

Index count_of(const NetlistDeck& deck, ElementType type) {
    Index count = 0;
    Index max_index = 0;
    for (const auto& el : deck.elements) {
        if (el.type != type) continue;
        ++count;
        max_index = std::max(max_index, el.indices[0]);
    }
    if (max_index != count) {
        throw Error(Errc::SyntaxError, "ports", "element indices must run contiguously from 1");
    }
    return count;
}

InputSignal assemble_input(const NetlistDeck& deck, const PortTable& ports) {
    if (ports.m == 0) return InputSignal::zero(0);
    std::vector<const Waveform*> waves(static_cast<std::size_t>(ports.m));
    int first_line = 0;
    for (Index l = 0; l < ports.m; ++l) {
        const NetlistElement* v = find_indexed(deck, ElementType::VoltageSource, l + 1);
        waves[static_cast<std::size_t>(l)] = &v->waveform;
        if (l == 0) first_line = v->line;
    }
    const Waveform& ref = *waves.front();
    auto mismatch = [&]() { syntax(first_line, "all sources must share waveform kind and timing"); };
    Vector amplitude(ports.m);
    for (Index l = 0; l < ports.m; ++l) {
        const Waveform& w = *waves[static_cast<std::size_t>(l)];
        if (w.kind != ref.kind) mismatch();
        if (ref.kind == SignalKind::PiecewiseLinear) {
            if (w.params.size() != ref.params.size()) mismatch();
            for (std::size_t i = 0; i < w.params.size(); i += 2) {
                if (w.params[i] != ref.params[i]) mismatch();
            }
        } else {
            for (std::size_t i = 1; i < w.params.size(); ++i) {
                if (w.params[i] != ref.params[i]) mismatch();
            }
            amplitude[l] = w.params[0];
        }
    }
    try {
        switch (ref.kind) {
        case SignalKind::Constant:
            return InputSignal::constant(amplitude);
        case SignalKind::Step:
            return InputSignal::step(amplitude, ref.params[1]);
        case SignalKind::Sinusoid:
            return InputSignal::sinusoid(amplitude, ref.params[1], ref.params[2]);
        case SignalKind::PiecewiseLinear: {
            const std::size_t samples = ref.params.size() / 2;
            std::vector<Real> times(samples);
            std::vector<Vector> values(samples, Vector(ports.m));
            for (std::size_t i = 0; i < samples; ++i) {
                times[i] = ref.params[2 * i];
                for (Index l = 0; l < ports.m; ++l) {
                    values[i][l] = waves[static_cast<std::size_t>(l)]->params[2 * i + 1];
                }
            }
            return InputSignal::piecewise_linear(std::move(times), std::move(values));
        }
        case SignalKind::Zero:
            break;
        }
    } catch (const Error& e) {
        syntax(first_line, e.what());
    }
    return InputSignal::zero(ports.m);
}

PortTable collect_ports(const NetlistDeck& deck, ElementType port_element) {
    PortTable ports;
    ports.n = count_of(deck, port_element);
    ports.m = count_of(deck, ElementType::VoltageSource);
    if (ports.n == 0) throw Error(Errc::SyntaxError, "ports", "netlist declares no ports");
    for (Index k = 1; k <= ports.n; ++k) {
        const NetlistElement* el = find_indexed(deck, port_element, k);
        if (port_element == ElementType::Capacitor && el->nodes[1] != "0") {
            syntax(el->line, "port capacitor must return to ground");
        }
        if (!ports.node_to_port.emplace(el->nodes[0], k - 1).second) {
            syntax(el->line, "two ports share node " + el->nodes[0]);
        }
        ports.port_nodes.push_back(el->nodes[0]);
    }
    for (Index l = 1; l <= ports.m; ++l) {
        const NetlistElement* v = find_indexed(deck, ElementType::VoltageSource, l);
        if (v->nodes[1] != "0") syntax(v->line, "source must return to ground");
        ports.source_nodes.push_back(v->nodes[0]);
    }
    return ports;
}

Index source_index(const PortTable& ports, const std::string& node, Index l, int line) {
    if (l < 1 || l > ports.m || ports.source_nodes[static_cast<std::size_t>(l - 1)] != node) {
        syntax(line, "input coupling does not reference its source node");
    }
    return l - 1;
}

void place(Matrix& target, Index row, Index col, Real value, int line) {
    if (row < 0 || row >= target.rows() || col < 0 || col >= target.cols()) {
        syntax(line, "coupling index out of range");
    }
    if (target(row, col) != 0.0) syntax(line, "duplicate coupling entry");
    target(row, col) = value;
}

ParallelRcNetwork parallel_from_deck(const NetlistDeck& deck) {
    const PortTable ports = collect_ports(deck, ElementType::Capacitor);
    ParallelRcNetwork net;
    net.c.resize(ports.n);
    net.r.resize(ports.n);
    net.alpha = Matrix::Zero(ports.n, ports.n);
    net.beta = Matrix::Zero(ports.n, ports.m);
    net.v0 = Vector::Zero(ports.n);
    if (count_of(deck, ElementType::Resistor) != ports.n) {
        throw Error(Errc::SyntaxError, "ports", "every port needs exactly one resistor");
    }
    for (Index k = 0; k < ports.n; ++k) {
        const NetlistElement* c = find_indexed(deck, ElementType::Capacitor, k + 1);
        const NetlistElement* r = find_indexed(deck, ElementType::Resistor, k + 1);
        if (r->nodes[0] != c->nodes[0] || r->nodes[1] != "0") {
            syntax(r->line, "port resistor must sit in parallel with its capacitor");
        }
        net.c[k] = c->value;
        net.r[k] = r->value;
    }
    for (const auto& el : deck.elements) {
        switch (el.type) {
        case ElementType::Vccs: {
            const bool input = upper(el.name).rfind("GX", 0) == 0;
            const Index k = el.indices[0] - 1;
            if (el.nodes[0] != "0" || el.nodes[3] != "0" || k >= ports.n ||
                el.nodes[1] != ports.port_nodes[static_cast<std::size_t>(k)]) {
                syntax(el.line, "coupling source must inject from ground into its port node");
            }
            if (input) {
                place(net.beta, k, source_index(ports, el.nodes[2], el.indices[1], el.line), el.value, el.line);
            } else {
                const Index j = el.indices[1] - 1;
                if (j >= ports.n || el.nodes[2] != ports.port_nodes[static_cast<std::size_t>(j)]) {
                    syntax(el.line, "coupling source must be controlled by its port node");
                }
                place(net.alpha, k, j, el.value, el.line);
            }
            break;
        }
        case ElementType::Ccvs:
        case ElementType::Vcvs:
            syntax(el.line, "controlled voltage sources belong to the series form");
        default:
            break;
        }
    }
    for (const auto& ic : deck.initial_conditions) {
        const auto it = ports.node_to_port.find(ic.target);
        if (ic.is_current || it == ports.node_to_port.end()) {
            syntax(ic.line, "parallel form takes initial voltages on port nodes only");
        }
        net.v0[it->second] = ic.value;
    }
    net.u = assemble_input(deck, ports);
    return net;
}

SeriesRlNetwork series_from_deck(const NetlistDeck& deck) {
    const PortTable ports = collect_ports(deck, ElementType::Inductor);
    SeriesRlNetwork net;
    net.l.resize(ports.n);
    net.r.resize(ports.n);
    net.zeta = Matrix::Zero(ports.n, ports.n);
    net.beta_s = Matrix::Zero(ports.n, ports.m);
    net.i0 = Vector::Zero(ports.n);
    if (count_of(deck, ElementType::Resistor) != ports.n) {
        throw Error(Errc::SyntaxError, "ports", "every loop needs exactly one resistor");
    }
    std::map<std::string, Index> inductor_port;
    for (Index k = 0; k < ports.n; ++k) {
        const NetlistElement* l = find_indexed(deck, ElementType::Inductor, k + 1);
        const NetlistElement* r = find_indexed(deck, ElementType::Resistor, k + 1);
        if (r->nodes[0] != l->nodes[1] || r->nodes[1] != "0") {
            syntax(r->line, "loop resistor must close its inductor to ground");
        }
        net.l[k] = l->value;
        net.r[k] = r->value;
        inductor_port[upper(l->name)] = k;
    }
    for (const auto& el : deck.elements) {
        if (el.type == ElementType::Capacitor || el.type == ElementType::Vccs) {
            syntax(el.line, "capacitors and current sources belong to the parallel form");
        }
        if (el.type != ElementType::Ccvs && el.type != ElementType::Vcvs) continue;
        const Index k = el.indices[0] - 1;
        if (el.nodes[1] != "0" || k >= ports.n || el.nodes[0] != ports.port_nodes[static_cast<std::size_t>(k)]) {
            syntax(el.line, "loop source must drive its port node against ground");
        }
        if (el.type == ElementType::Ccvs) {
            const Index j = el.indices[1] - 1;
            const auto it = inductor_port.find(upper(el.control));
            if (it == inductor_port.end() || it->second != j) {
                syntax(el.line, "coupling source must be controlled by its port inductor");
            }
            place(net.zeta, k, j, el.value, el.line);
        } else {
            if (el.nodes[3] != "0") syntax(el.line, "input source must be referenced to ground");
            place(net.beta_s, k, source_index(ports, el.nodes[2], el.indices[1], el.line), el.value, el.line);
        }
    }
    for (const auto& ic : deck.initial_conditions) {
        const auto it = inductor_port.find(upper(ic.target));
        if (!ic.is_current || it == inductor_port.end()) {
            syntax(ic.line, "series form takes initial currents on port inductors only");
        }
        net.i0[it->second] = ic.value;
    }
    net.u = assemble_input(deck, ports);
    return net;
}

}  // namespace

std::string format_real(Real value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string Netlist::text() const {
    std::string out;
    for (const auto& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

bool NetlistDeck::is_series() const {
    return std::any_of(elements.begin(), elements.end(),
                       [](const NetlistElement& el) { return el.type == ElementType::Inductor; });
}

NetlistDeck parse_deck(std::string_view text) {
    NetlistDeck deck;
    bool ended = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size() && !ended) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view raw = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        const auto fields = split_fields(raw);
        if (fields.empty() || fields[0].front() == '*') continue;
        if (fields[0].front() == '.') {
            parse_directive(fields, line_no, deck, ended);
        } else {
            deck.elements.push_back(parse_element(fields, line_no));
        }
    }
    check_references(deck);
    return deck;
}

Network network_from_deck(const NetlistDeck& deck) {
    if (deck.is_series()) return series_from_deck(deck);
    return parallel_from_deck(deck);
}

ParsedNetlist parse_netlist(std::string_view text) {
    const NetlistDeck deck = parse_deck(text);
    return ParsedNetlist{network_from_deck(deck), deck.tran};
}

Netlist emit_netlist(const ParallelRcNetwork& net, const TranSettings& tran) {
    Netlist out;
    const Index n = net.n();
    for (Index k = 0; k < n; ++k) {
        const std::string idx = std::to_string(k + 1);
        out.lines.push_back("C" + idx + " " + port_node(k) + " 0 " + format_real(net.c[k]));
        out.lines.push_back("R" + idx + " " + port_node(k) + " 0 " + format_real(net.r[k]));
        out.port_nodes.push_back(port_node(k));
    }
    emit_sources(net.u, net.m(), out.lines);
    emit_decomposition_comments(net.alpha, out.lines);
    for (Index k = 0; k < n; ++k) {
        for (Index j = 0; j < n; ++j) {
            if (net.alpha(k, j) == 0.0) continue;
            out.lines.push_back("G" + std::to_string(k + 1) + "_" + std::to_string(j + 1) + " 0 " + port_node(k) +
                                " " + port_node(j) + " 0 " + format_real(net.alpha(k, j)));
        }
    }
    for (Index k = 0; k < n; ++k) {
        for (Index l = 0; l < net.m(); ++l) {
            if (net.beta(k, l) == 0.0) continue;
            out.lines.push_back("GX" + std::to_string(k + 1) + "_" + std::to_string(l + 1) + " 0 " + port_node(k) +
                                " " + source_node(l) + " 0 " + format_real(net.beta(k, l)));
        }
    }
    for (Index k = 0; k < n; ++k) {
        out.lines.push_back(".IC V(" + port_node(k) + ")=" + format_real(net.v0[k]));
    }
    emit_tail(tran, out.lines);
    return out;
}

Netlist emit_netlist(const SeriesRlNetwork& net, const TranSettings& tran) {
    Netlist out;
    const Index n = net.n();
    for (Index k = 0; k < n; ++k) {
        const std::string idx = std::to_string(k + 1);
        out.lines.push_back("L" + idx + " " + port_node(k) + " nmid" + idx + " " + format_real(net.l[k]));
        out.lines.push_back("R" + idx + " nmid" + idx + " 0 " + format_real(net.r[k]));
        out.port_nodes.push_back(port_node(k));
    }
    emit_sources(net.u, net.m(), out.lines);
    emit_decomposition_comments(net.zeta, out.lines);
    for (Index k = 0; k < n; ++k) {
        for (Index j = 0; j < n; ++j) {
            if (net.zeta(k, j) == 0.0) continue;
            out.lines.push_back("H" + std::to_string(k + 1) + "_" + std::to_string(j + 1) + " " + port_node(k) +
                                " 0 L" + std::to_string(j + 1) + " " + format_real(net.zeta(k, j)));
        }
    }
    for (Index k = 0; k < n; ++k) {
        for (Index l = 0; l < net.m(); ++l) {
            if (net.beta_s(k, l) == 0.0) continue;
            out.lines.push_back("EX" + std::to_string(k + 1) + "_" + std::to_string(l + 1) + " " + port_node(k) +
                                " 0 " + source_node(l) + " 0 " + format_real(net.beta_s(k, l)));
        }
    }
    for (Index k = 0; k < n; ++k) {
        out.lines.push_back(".IC I(L" + std::to_string(k + 1) + ")=" + format_real(net.i0[k]));
    }
    emit_tail(tran, out.lines);
    return out;
}

Netlist emit_netlist(const Network& net, const TranSettings& tran) {
    return std::visit([&](const auto& concrete) { return emit_netlist(concrete, tran); }, net);
}

}  // namespace rnnen
