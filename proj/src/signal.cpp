#include "rnnen/signal.hpp"

#include "rnnen/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rnnen {

namespace {

void require_finite(const Vector& v, const char* field) {
    for (Index i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) {
            throw Error(Errc::BadSignal, std::string(field) + "[" + std::to_string(i) + "]",
                        "non-finite value");
        }
    }
}

void require_finite(Real x, const char* field) {
    if (!std::isfinite(x)) {
        throw Error(Errc::BadSignal, field, "non-finite value");
    }
}

}  // namespace

InputSignal InputSignal::zero(Index m) {
    if (m < 0) {
        throw Error(Errc::BadSignal, "m", "negative input count");
    }
    InputSignal s;
    s.kind_ = SignalKind::Zero;
    s.m_ = m;
    return s;
}

InputSignal InputSignal::constant(Vector amplitude) {
    require_finite(amplitude, "amplitude");
    if (amplitude.isZero(0.0)) {
        return zero(amplitude.size());
    }
    InputSignal s;
    s.kind_ = SignalKind::Constant;
    s.m_ = amplitude.size();
    s.amplitude_ = std::move(amplitude);
    return s;
}

InputSignal InputSignal::step(Vector amplitude, Real onset) {
    require_finite(amplitude, "amplitude");
    require_finite(onset, "onset");
    if (onset < 0.0) {
        throw Error(Errc::BadSignal, "onset", "step onset must be >= 0");
    }
    InputSignal s;
    s.kind_ = SignalKind::Step;
    s.m_ = amplitude.size();
    s.amplitude_ = std::move(amplitude);
    s.onset_ = onset;
    return s;
}

InputSignal InputSignal::sinusoid(Vector amplitude, Real omega, Real phase) {
    require_finite(amplitude, "amplitude");
    require_finite(omega, "omega");
    require_finite(phase, "phase");
    InputSignal s;
    s.kind_ = SignalKind::Sinusoid;
    s.m_ = amplitude.size();
    s.amplitude_ = std::move(amplitude);
    s.omega_ = omega;
    s.phase_ = phase;
    return s;
}

InputSignal InputSignal::piecewise_linear(std::vector<Real> times, std::vector<Vector> values) {
    if (times.empty()) {
        throw Error(Errc::BadSignal, "times", "piecewise-linear signal needs at least one sample");
    }
    if (times.size() != values.size()) {
        throw Error(Errc::BadSignal, "values", "sample count differs from time count");
    }
    const Index m = values.front().size();
    for (std::size_t i = 0; i < times.size(); ++i) {
        const std::string at = "[" + std::to_string(i) + "]";
        if (!std::isfinite(times[i])) {
            throw Error(Errc::BadSignal, "times" + at, "non-finite value");
        }
        if (i > 0 && !(times[i] > times[i - 1])) {
            throw Error(Errc::BadSignal, "times" + at, "sample times must be strictly increasing");
        }
        if (values[i].size() != m) {
            throw Error(Errc::BadSignal, "values" + at, "inconsistent sample width");
        }
        require_finite(values[i], "values");
    }
    InputSignal s;
    s.kind_ = SignalKind::PiecewiseLinear;
    s.m_ = m;
    s.times_ = std::move(times);
    s.values_ = std::move(values);
    return s;
}

Real InputSignal::component(Index l, Real t) const {
    switch (kind_) {
    case SignalKind::Zero:
        return 0.0;
    case SignalKind::Constant:
        return amplitude_[l];
    case SignalKind::Step:
        return t >= onset_ ? amplitude_[l] : 0.0;
    case SignalKind::Sinusoid:
        return amplitude_[l] * std::sin(omega_ * t + phase_);
    case SignalKind::PiecewiseLinear: {
        if (t <= times_.front()) return values_.front()[l];
        if (t >= times_.back()) return values_.back()[l];
        const auto hi = static_cast<std::size_t>(
            std::upper_bound(times_.begin(), times_.end(), t) - times_.begin());
        const std::size_t lo = hi - 1;
        const Real frac = (t - times_[lo]) / (times_[hi] - times_[lo]);
        return values_[lo][l] + frac * (values_[hi][l] - values_[lo][l]);
    }
    }
    return 0.0;
}

Vector InputSignal::operator()(Real t) const {
    Vector x(m_);
    if (kind_ == SignalKind::Zero) {
        x.setZero();
        return x;
    }
    for (Index l = 0; l < m_; ++l) {
        x[l] = component(l, t);
    }
    return x;
}

std::vector<Real> InputSignal::breakpoints(Real a, Real b) const {
    std::vector<Real> out;
    if (kind_ == SignalKind::Step) {
        if (onset_ > a && onset_ < b) out.push_back(onset_);
    } else if (kind_ == SignalKind::PiecewiseLinear) {
        for (Real t : times_) {
            if (t > a && t < b) out.push_back(t);
        }
    }
    return out;
}

bool operator==(const InputSignal& a, const InputSignal& b) {
    if (a.kind_ != b.kind_ || a.m_ != b.m_) return false;
    switch (a.kind_) {
    case SignalKind::Zero:
        return true;
    case SignalKind::Constant:
        return a.amplitude_ == b.amplitude_;
    case SignalKind::Step:
        return a.amplitude_ == b.amplitude_ && a.onset_ == b.onset_;
    case SignalKind::Sinusoid:
        return a.amplitude_ == b.amplitude_ && a.omega_ == b.omega_ && a.phase_ == b.phase_;
    case SignalKind::PiecewiseLinear:
        return a.times_ == b.times_ && a.values_ == b.values_;
    }
    return false;
}

const char* signal_kind_name(SignalKind kind) noexcept {
    switch (kind) {
    case SignalKind::Zero: return "zero";
    case SignalKind::Constant: return "constant";
    case SignalKind::Step: return "step";
    case SignalKind::Sinusoid: return "sinusoid";
    case SignalKind::PiecewiseLinear: return "piecewise-linear";
    }
    return "zero";
}

}  // namespace rnnen
