#pragma once

#include <string>
#include <vector>

#include "pulsemux/types.hpp"

namespace pulsemux {

/// Behavioral model of one parallel-RLC multiplexing channel. The circuit is
/// represented only through its damped-sinusoid impulse response; R, L, C
/// never appear directly.
struct ResonatorSpec {
    int channel_id = 0;
    double f0 = 7e6;               // resonant frequency, hertz
    double q_factor = 12.0;        // sets the small damped-frequency shift
    double gain = 1.0;
    double envelope_tau = 241.36e-9; // seconds; decay-to-0.2% time = tau ln(500)

    /// Damped oscillation frequency f0 sqrt(1 - 1/(4 q^2)).
    double damped_frequency() const;
    /// Time for the envelope to fall to 0.2% of its peak.
    double decay_time() const { return envelope_tau * std::log(500.0); }
    /// -3 dB width of the spectral peak, ~ 1/(pi tau).
    double bandwidth() const { return 1.0 / (M_PI * envelope_tau); }
};

struct ResonatorBank {
    std::vector<ResonatorSpec> channels;
    double sample_period = 2e-9;
    Index record_length = 2000;

    double duration() const { return static_cast<double>(record_length) * sample_period; }
    double nyquist() const { return 0.5 / sample_period; }
    const ResonatorSpec& find(int channel_id) const;
};

/// One broken design rule; violations are data, not errors.
struct DesignViolation {
    std::string rule;
    std::vector<int> channel_ids;
    std::string message;
};

/// Design rules from the hardware constraints.
inline constexpr double kMinQ = 10.0;
inline constexpr double kMaxDecayTime = 1.5e-6;
inline constexpr double kMinSpacingHz = 2e6;
inline constexpr double kMinF0Hz = 7e6;

/// Derive a spec from a decay-time target: envelope_tau = target/ln(500),
/// q = pi f0 tau. Throws QTooLow when the implied Q is <= 10 (f0 too small
/// for the requested decay) and DecayExceedsRecord when the sinusoid cannot
/// die inside the record.
ResonatorSpec design_resonator(int channel_id, double f0, double decay_time_target,
                               double gain, double record_duration);

/// h[k] = gain exp(-k T / tau) sin(2 pi f_d k T); h[0] == 0.
Waveform impulse_response(const ResonatorSpec& spec, double sample_period, Index n);

/// fft(impulse_response(...)), cached per (spec, grid). Safe for concurrent
/// lookup; the first caller for a key computes the entry.
Spectrum transfer_function(const ResonatorSpec& spec, double sample_period, Index n);

/// Empty iff the spacing, Q, decay and uniqueness rules all hold.
std::vector<DesignViolation> validate_bank(const ResonatorBank& bank);

} // namespace pulsemux
