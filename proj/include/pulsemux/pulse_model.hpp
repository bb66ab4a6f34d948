#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pulsemux/types.hpp"

namespace pulsemux {

enum class ParticleClass { gamma, neutron };

/// Scintillator anode pulse surrogate
///   p(t) = A (1 - exp(-t/rise_tau))^2
///            [ (1-slow_fraction) exp(-t/fall_tau_fast)
///              + slow_fraction   exp(-t/fall_tau_slow) ]   for t >= arrival,
/// normalized so the continuous-time peak equals `amplitude`. The squared
/// rise keeps the onset C1-smooth, like a bandwidth-limited PMT pulse.
/// Amplitudes are stored as positive magnitudes; anode polarity is applied
/// only at serialization.
struct PulseSpec {
    double amplitude = 1.0;          // volts (magnitude)
    double rise_tau = 5e-9;          // seconds
    double fall_tau_fast = 20e-9;    // seconds
    double fall_tau_slow = 46e-9;    // seconds; sets the PSD tail
    double slow_fraction = 0.05;     // gamma default; neutrons use ~0.20
    double arrival_time = 0.0;       // seconds within the record
    ParticleClass particle_class = ParticleClass::gamma;

    void validate() const;
};

/// Passive delay line: attenuation plus a one-pole low-pass, then a shift.
struct DelayLineSpec {
    double delay = 220e-9;             // seconds
    double attenuation_fraction = 0.35;
    double bandwidth_hz = 60e6;        // one-pole corner; calibrated so the
                                       // 10-90% rise time grows by ~20%

    void validate() const;
};

/// Value of the unnormalized shape at t seconds after arrival.
double pulse_shape(const PulseSpec& spec, double t);

/// Continuous-time peak value and location of the unnormalized shape.
std::pair<double, double> pulse_shape_peak(const PulseSpec& spec);

/// Pulse width per the leading-edge-to-0.1%-of-peak convention.
double pulse_width(const PulseSpec& spec);

/// Sample the pulse onto a grid of n samples. Samples before arrival are
/// exactly zero. Throws PulseExceedsRecord when arrival + width does not fit.
Waveform synth_pulse(const PulseSpec& spec, double sample_period, Index n_samples);

/// Signal copier: two identical copies, each with gain 2.
std::pair<Waveform, Waveform> copy_signal(const Waveform& w);

/// (1-attenuation) scaling, one-pole low-pass, then an integer-sample delay
/// (the delay is rounded to the nearest sample). Record length is preserved.
Waveform apply_delay_line(const Waveform& w, const DelayLineSpec& dl);

/// Homogeneous Poisson arrivals in [0, record_length_s), sorted.
/// Reproducible for a given seed.
std::vector<double> sample_event_times(double rate_cps, double record_length_s,
                                       std::uint64_t rng_seed);

} // namespace pulsemux
