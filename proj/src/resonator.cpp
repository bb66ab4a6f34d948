#include "pulsemux/resonator.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "pulsemux/signal_core.hpp"

namespace pulsemux {

double ResonatorSpec::damped_frequency() const {
    return f0 * std::sqrt(1.0 - 1.0 / (4.0 * q_factor * q_factor));
}

const ResonatorSpec& ResonatorBank::find(int channel_id) const {
    for (const auto& c : channels) {
        if (c.channel_id == channel_id) return c;
    }
    throw UnknownChannel("bank has no channel " + std::to_string(channel_id));
}

ResonatorSpec design_resonator(int channel_id, double f0, double decay_time_target,
                               double gain, double record_duration) {
    if (!(f0 >= kMinF0Hz))
        throw QTooLow("design_resonator: f0 below " + std::to_string(kMinF0Hz / 1e6) + " MHz");
    if (decay_time_target > record_duration)
        throw DecayExceedsRecord("design_resonator: decay time exceeds the record");
    ResonatorSpec spec;
    spec.channel_id = channel_id;
    spec.f0 = f0;
    spec.gain = gain;
    spec.envelope_tau = decay_time_target / std::log(500.0);
    spec.q_factor = M_PI * f0 * spec.envelope_tau;
    if (spec.q_factor <= kMinQ)
        throw QTooLow("design_resonator: implied Q " + std::to_string(spec.q_factor) +
                      " <= " + std::to_string(kMinQ));
    return spec;
}

Waveform impulse_response(const ResonatorSpec& spec, double sample_period, Index n) {
    if (!(sample_period > 0.0) || n < 1) throw Error("impulse_response: bad grid");
    if (spec.f0 >= 0.5 / sample_period)
        throw AliasedResonance("impulse_response: f0 at or above Nyquist");
    const double fd = spec.damped_frequency();
    Waveform h;
    h.sample_period = sample_period;
    h.samples.resize(n);
    for (Index k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) * sample_period;
        h.samples[k] = spec.gain * std::exp(-t / spec.envelope_tau) * std::sin(2.0 * M_PI * fd * t);
    }
    return h;
}

namespace {

using TfKey = std::tuple<int, double, double, double, double, double, Index>;

std::mutex tf_mutex;
std::map<TfKey, Spectrum>& tf_cache() {
    static std::map<TfKey, Spectrum> cache;
    return cache;
}

} // namespace

Spectrum transfer_function(const ResonatorSpec& spec, double sample_period, Index n) {
    const TfKey key{spec.channel_id, spec.f0, spec.q_factor, spec.gain,
                    spec.envelope_tau, sample_period, n};
    {
        std::lock_guard lock(tf_mutex);
        auto it = tf_cache().find(key);
        if (it != tf_cache().end()) return it->second;
    }
    Spectrum s = fft(impulse_response(spec, sample_period, n));
    std::lock_guard lock(tf_mutex);
    return tf_cache().emplace(key, std::move(s)).first->second;
}

std::vector<DesignViolation> validate_bank(const ResonatorBank& bank) {
    std::vector<DesignViolation> out;
    const auto& chs = bank.channels;

    for (std::size_t i = 0; i < chs.size(); ++i) {
        for (std::size_t j = i + 1; j < chs.size(); ++j) {
            if (chs[i].channel_id == chs[j].channel_id) {
                out.push_back({"unique-id",
                               {chs[i].channel_id},
                               "duplicate channel id " + std::to_string(chs[i].channel_id)});
            }
            if (std::abs(chs[i].f0 - chs[j].f0) < kMinSpacingHz) {
                out.push_back({"spacing",
                               {chs[i].channel_id, chs[j].channel_id},
                               "resonant frequencies closer than 2 MHz"});
            }
        }
    }
    for (const auto& c : chs) {
        if (!(c.q_factor > kMinQ)) {
            out.push_back({"q-factor", {c.channel_id}, "Q must exceed 10"});
        }
        if (c.decay_time() > kMaxDecayTime) {
            out.push_back({"decay", {c.channel_id}, "envelope does not reach 0.2% within 1.5 us"});
        }
        if (c.decay_time() > bank.duration()) {
            out.push_back({"decay", {c.channel_id}, "sinusoid does not die inside the record"});
        }
        if (c.f0 >= bank.nyquist()) {
            out.push_back({"nyquist", {c.channel_id}, "f0 at or above Nyquist"});
        }
    }
    return out;
}

} // namespace pulsemux
