#include "rnnen/io.hpp"

#include "rnnen/error.hpp"
#include "rnnen/netlist.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace rnnen {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& key, const std::string& message) {
    throw Error(Errc::ParseError, key, message);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) parse_error(path + key, "missing key");
    return *it;
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) parse_error(path + key, "unknown key");
    }
}

Real number(const json& value, const std::string& path) {
    if (!value.is_number()) parse_error(path, "expected a number");
    return value.get<Real>();
}

Index integer(const json& value, const std::string& path) {
    if (!value.is_number_integer()) parse_error(path, "expected an integer");
    return value.get<Index>();
}

Vector vector_of(const json& value, const std::string& path) {
    if (!value.is_array()) parse_error(path, "expected an array of numbers");
    Vector out(static_cast<Index>(value.size()));
    for (std::size_t i = 0; i < value.size(); ++i) {
        out[static_cast<Index>(i)] = number(value[i], path + "[" + std::to_string(i) + "]");
    }
    return out;
}

Matrix matrix_of(const json& value, Index cols_if_empty, const std::string& path) {
    if (!value.is_array()) parse_error(path, "expected an array of rows");
    const Index rows = static_cast<Index>(value.size());
    if (rows == 0) return Matrix(0, cols_if_empty);
    if (!value[0].is_array()) parse_error(path + "[0]", "expected a row array");
    const Index cols = static_cast<Index>(value[0].size());
    Matrix out(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const std::string row_path = path + "[" + std::to_string(i) + "]";
        const json& row = value[static_cast<std::size_t>(i)];
        if (!row.is_array()) parse_error(row_path, "expected a row array");
        if (static_cast<Index>(row.size()) != cols) {
            throw ValidationError(Error(Errc::DimensionMismatch, row_path, "ragged matrix row"), row_path);
        }
        for (Index j = 0; j < cols; ++j) {
            out(i, j) = number(row[static_cast<std::size_t>(j)], row_path + "[" + std::to_string(j) + "]");
        }
    }
    return out;
}

json vector_json(const Vector& v) {
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

json matrix_json(const Matrix& m) {
    json out = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

InputSignal signal_from_json(const json& doc, Index m) {
    const std::string path = "input.";
    if (!doc.is_object()) parse_error("input", "expected an object");
    const json& kind_value = require(doc, "kind", path);
    if (!kind_value.is_string()) parse_error("input.kind", "expected a string");
    const std::string kind = kind_value.get<std::string>();

    try {
        if (kind == "zero") {
            reject_unknown(doc, {"kind"}, path);
            return InputSignal::zero(m);
        }
        if (kind == "constant") {
            reject_unknown(doc, {"kind", "amplitude"}, path);
            return InputSignal::constant(vector_of(require(doc, "amplitude", path), "input.amplitude"));
        }
        if (kind == "step") {
            reject_unknown(doc, {"kind", "amplitude", "onset"}, path);
            return InputSignal::step(vector_of(require(doc, "amplitude", path), "input.amplitude"),
                                     number(require(doc, "onset", path), "input.onset"));
        }
        if (kind == "sinusoid") {
            reject_unknown(doc, {"kind", "amplitude", "omega", "phase"}, path);
            return InputSignal::sinusoid(vector_of(require(doc, "amplitude", path), "input.amplitude"),
                                         number(require(doc, "omega", path), "input.omega"),
                                         number(require(doc, "phase", path), "input.phase"));
        }
        if (kind == "piecewise-linear") {
            reject_unknown(doc, {"kind", "times", "values"}, path);
            const Vector times = vector_of(require(doc, "times", path), "input.times");
            const Matrix values = matrix_of(require(doc, "values", path), m, "input.values");
            std::vector<Real> t(times.data(), times.data() + times.size());
            std::vector<Vector> v;
            for (Index i = 0; i < values.rows(); ++i) v.push_back(values.row(i).transpose());
            return InputSignal::piecewise_linear(std::move(t), std::move(v));
        }
    } catch (const Error& e) {
        if (e.code() != Errc::BadSignal) throw;
        throw ValidationError(e, "input." + e.where());
    }
    parse_error("input.kind", "unknown signal kind '" + kind + "'");
}

json signal_to_json(const InputSignal& u) {
    json out;
    out["kind"] = signal_kind_name(u.kind());
    switch (u.kind()) {
    case SignalKind::Zero:
        break;
    case SignalKind::Constant:
        out["amplitude"] = vector_json(u.amplitude());
        break;
    case SignalKind::Step:
        out["amplitude"] = vector_json(u.amplitude());
        out["onset"] = u.onset();
        break;
    case SignalKind::Sinusoid:
        out["amplitude"] = vector_json(u.amplitude());
        out["omega"] = u.omega();
        out["phase"] = u.phase();
        break;
    case SignalKind::PiecewiseLinear: {
        out["times"] = u.sample_times();
        json values = json::array();
        for (const auto& v : u.sample_values()) values.push_back(vector_json(v));
        out["values"] = std::move(values);
        break;
    }
    }
    return out;
}

json complex_list(const std::vector<Complex>& values) {
    json out = json::array();
    for (const Complex& z : values) out.push_back({{"re", z.real()}, {"im", z.imag()}});
    return out;
}

}  // namespace

ValidatedSpec spec_from_json(const json& doc) {
    if (!doc.is_object()) parse_error("", "spec document must be an object");
    reject_unknown(doc, {"n", "m", "lambda", "w", "w_tilde", "activation", "h0", "input"}, "");

    RnnSpec spec;
    spec.n = integer(require(doc, "n", ""), "n");
    spec.m = integer(require(doc, "m", ""), "m");
    spec.lambda = vector_of(require(doc, "lambda", ""), "lambda");
    spec.w = matrix_of(require(doc, "w", ""), spec.n, "w");
    spec.w_tilde = matrix_of(require(doc, "w_tilde", ""), spec.m, "w_tilde");
    if (spec.w_tilde.rows() == 0 && spec.m == 0) spec.w_tilde = Matrix(spec.n, 0);
    const json& activation = require(doc, "activation", "");
    if (!activation.is_string()) parse_error("activation", "expected a string");
    const auto kind = parse_activation(activation.get<std::string>());
    if (!kind) parse_error("activation", "unknown activation '" + activation.get<std::string>() + "'");
    spec.activation = *kind;
    spec.h0 = vector_of(require(doc, "h0", ""), "h0");
    spec.input = signal_from_json(require(doc, "input", ""), spec.m);

    try {
        return validate_spec(std::move(spec));
    } catch (const Error& e) {
        throw ValidationError(e, e.where());
    }
}

ValidatedSpec parse_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_error("", e.what());
    }
    return spec_from_json(doc);
}

ValidatedSpec load_spec(const std::filesystem::path& path) { return parse_spec(read_text(path)); }

json spec_to_json(const RnnSpec& spec) {
    json out;
    out["n"] = spec.n;
    out["m"] = spec.m;
    out["lambda"] = vector_json(spec.lambda);
    out["w"] = matrix_json(spec.w);
    out["w_tilde"] = matrix_json(spec.w_tilde);
    out["activation"] = std::string(activation_name(spec.activation));
    out["h0"] = vector_json(spec.h0);
    out["input"] = signal_to_json(spec.input);
    return out;
}

void save_spec(const RnnSpec& spec, const std::filesystem::path& path) {
    write_text(path, spec_to_json(spec).dump(2) + "\n");
}

RnnSpec canonical_spec() {
    RnnSpec spec;
    spec.n = 2;
    spec.m = 0;
    spec.lambda = Vector(2);
    spec.lambda << 1.0, 2.0;
    spec.w = Matrix(2, 2);
    spec.w << 0.0, 0.5, -0.5, 0.0;
    spec.w_tilde = Matrix(2, 0);
    spec.activation = ActivationKind::Tanh;
    spec.h0 = Vector(2);
    spec.h0 << 1.0, -1.0;
    spec.input = InputSignal::zero(0);
    return spec;
}

std::string format_trajectory(const Trajectory& traj) {
    std::string out = "t";
    for (const auto& label : traj.labels) out += "," + label;
    out += '\n';
    for (std::size_t i = 0; i < traj.samples(); ++i) {
        out += format_real(traj.times[i]);
        for (Index k = 0; k < traj.states.cols(); ++k) {
            out += ',';
            out += format_real(traj.states(static_cast<Index>(i), k));
        }
        out += '\n';
    }
    return out;
}

void write_trajectory(const Trajectory& traj, const std::filesystem::path& path) {
    write_text(path, format_trajectory(traj));
}

json report_to_json(const VerificationReport& report) {
    json out;
    out["check"] = report.check;
    out["metric"] = report.metric;
    out["tolerance"] = report.tolerance;
    out["comparison"] = report.comparison;
    out["verdict"] = report.pass ? "pass" : "fail";
    if (!report.note.empty()) out["note"] = report.note;
    if (!report.scalars.empty()) out["scalars"] = report.scalars;
    if (!report.series.empty()) out["series"] = report.series;
    return out;
}

json stability_to_json(const StabilityReport& report) {
    json out;
    out["eigenvalues"] = complex_list(report.eigenvalues);
    out["spectral_abscissa"] = report.spectral_abscissa;
    out["verdict"] = verdict_name(report.verdict);
    return out;
}

json network_to_json(const Network& net) {
    json out;
    if (const auto* p = std::get_if<ParallelRcNetwork>(&net)) {
        out["representation"] = "parallel-rc";
        out["C"] = vector_json(p->c);
        out["R"] = vector_json(p->r);
        out["alpha"] = matrix_json(p->alpha);
        out["beta"] = matrix_json(p->beta);
        out["v0"] = vector_json(p->v0);
        out["u"] = signal_to_json(p->u);
    } else {
        const auto& s = std::get<SeriesRlNetwork>(net);
        out["representation"] = "series-rl";
        out["L"] = vector_json(s.l);
        out["R"] = vector_json(s.r);
        out["zeta"] = matrix_json(s.zeta);
        out["beta_s"] = matrix_json(s.beta_s);
        out["i0"] = vector_json(s.i0);
        out["u"] = signal_to_json(s.u);
    }
    const Matrix& coupling = std::holds_alternative<ParallelRcNetwork>(net) ? std::get<ParallelRcNetwork>(net).alpha
                                                                           : std::get<SeriesRlNetwork>(net).zeta;
    const GyratorDecomposition parts = gyrator_decompose(coupling);
    json elements = json::array();
    for (const auto& el : parts.elements) {
        elements.push_back({{"kind", el.kind == CouplingKind::Resistive ? "reciprocal" : "gyrator"},
                            {"ports", {el.k + 1, el.j + 1}},
                            {"value", el.g}});
    }
    out["coupling"] = {{"symmetric", matrix_json(parts.alpha_sym)},
                       {"antisymmetric", matrix_json(parts.alpha_anti)},
                       {"elements", std::move(elements)}};
    const NetworkDynamics dyn = dynamics(net);
    out["dynamics"] = {{"Lambda", vector_json(dyn.lambda)},
                       {"Omega", matrix_json(dyn.omega)},
                       {"Omega_tilde", matrix_json(dyn.omega_tilde)}};
    return out;
}

json linear_to_json(const LinearRnn& lin) {
    json out;
    out["A"] = matrix_json(lin.a);
    out["w_tilde"] = matrix_json(lin.w_tilde);
    out["h0"] = vector_json(lin.h0);
    out["input"] = signal_to_json(lin.input);
    return out;
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoError, path.string(), "cannot open file for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::IoError, path.string(), "cannot open file for writing");
    out << text;
    if (!out) throw Error(Errc::IoError, path.string(), "write failed");
}

}  // namespace rnnen
