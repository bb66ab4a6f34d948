#include "pulsemux/pulse_model.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pulsemux/signal_core.hpp"

namespace pulsemux {

void PulseSpec::validate() const {
    if (amplitude < 0.0) throw Error("PulseSpec: amplitude must be a magnitude (>= 0)");
    if (!(rise_tau > 0.0) || !(rise_tau < fall_tau_fast) || !(fall_tau_fast < fall_tau_slow))
        throw Error("PulseSpec: need 0 < rise_tau < fall_tau_fast < fall_tau_slow");
    if (slow_fraction < 0.0 || slow_fraction > 1.0)
        throw Error("PulseSpec: slow_fraction must be in [0, 1]");
}

void DelayLineSpec::validate() const {
    if (delay < 0.0) throw Error("DelayLineSpec: delay must be >= 0");
    if (attenuation_fraction < 0.0 || attenuation_fraction >= 1.0)
        throw Error("DelayLineSpec: attenuation_fraction must be in [0, 1)");
    if (!(bandwidth_hz > 0.0)) throw Error("DelayLineSpec: bandwidth_hz must be > 0");
}

double pulse_shape(const PulseSpec& spec, double t) {
    if (t < 0.0) return 0.0;
    const double rise = 1.0 - std::exp(-t / spec.rise_tau);
    const double fall = (1.0 - spec.slow_fraction) * std::exp(-t / spec.fall_tau_fast) +
                        spec.slow_fraction * std::exp(-t / spec.fall_tau_slow);
    return rise * rise * fall;
}

std::pair<double, double> pulse_shape_peak(const PulseSpec& spec) {
    // Golden-section search in units of rise_tau; the shape is unimodal.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.0;
    double b = 60.0 * spec.fall_tau_slow / spec.rise_tau;
    auto g = [&](double u) { return pulse_shape(spec, u * spec.rise_tau); };
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    for (int it = 0; it < 200 && (b - a) > 1e-14 * b; ++it) {
        if (g(c) > g(d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - inv_phi * (b - a);
        d = a + inv_phi * (b - a);
    }
    const double u = 0.5 * (a + b);
    return {g(u), u * spec.rise_tau};
}

double pulse_width(const PulseSpec& spec) {
    spec.validate();
    auto [peak, t_peak] = pulse_shape_peak(spec);
    const double target = 1e-3 * peak;
    double lo = t_peak;
    double hi = t_peak;
    while (pulse_shape(spec, hi) > target) hi *= 2.0;
    for (int it = 0; it < 200 && (hi - lo) > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (pulse_shape(spec, mid) > target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Waveform synth_pulse(const PulseSpec& spec, double sample_period, Index n_samples) {
    spec.validate();
    if (!(sample_period > 0.0) || n_samples < 1)
        throw Error("synth_pulse: bad grid");
    const double record = static_cast<double>(n_samples) * sample_period;
    if (spec.amplitude > 0.0 && spec.arrival_time + pulse_width(spec) > record)
        throw PulseExceedsRecord("synth_pulse: arrival + pulse width exceeds the record");

    Waveform w;
    w.samples = Eigen::VectorXd::Zero(n_samples);
    w.sample_period = sample_period;
    if (spec.amplitude == 0.0) return w;

    const double norm = spec.amplitude / pulse_shape_peak(spec).first;
    for (Index k = 0; k < n_samples; ++k) {
        const double t = static_cast<double>(k) * sample_period - spec.arrival_time;
        if (t >= 0.0) w.samples[k] = norm * pulse_shape(spec, t);
    }
    return w;
}

std::pair<Waveform, Waveform> copy_signal(const Waveform& w) {
    w.validate();
    Waveform out = w;
    out.samples *= 2.0;
    return {out, out};
}

Waveform apply_delay_line(const Waveform& w, const DelayLineSpec& dl) {
    w.validate();
    dl.validate();
    const Index n = w.size();
    const Index shift = static_cast<Index>(std::llround(dl.delay / w.sample_period));

    // One-pole low-pass, y[k] = y[k-1] + a (x[k] - y[k-1]).
    const double a = 1.0 - std::exp(-2.0 * M_PI * dl.bandwidth_hz * w.sample_period);
    const double gain = 1.0 - dl.attenuation_fraction;
    Eigen::VectorXd filtered(n);
    double acc = 0.0;
    for (Index k = 0; k < n; ++k) {
        acc += a * (gain * w.samples[k] - acc);
        filtered[k] = acc;
    }

    Waveform out;
    out.sample_period = w.sample_period;
    out.units = w.units;
    out.samples = Eigen::VectorXd::Zero(n);
    if (shift < n) out.samples.tail(n - shift) = filtered.head(n - shift);
    return out;
}

std::vector<double> sample_event_times(double rate_cps, double record_length_s,
                                       std::uint64_t rng_seed) {
    if (rate_cps < 0.0) throw Error("sample_event_times: rate must be >= 0");
    std::vector<double> times;
    if (rate_cps == 0.0) return times;
    std::mt19937_64 rng(rng_seed);
    std::exponential_distribution<double> gap(rate_cps);
    double t = gap(rng);
    while (t < record_length_s) {
        times.push_back(t);
        t += gap(rng);
    }
    return times;
}

} // namespace pulsemux
