#pragma once

#include <Eigen/Dense>

#include "pulsemux/errors.hpp"

namespace pulsemux {

using Index = Eigen::Index;

enum class Units { volts, adc };

/// Uniformly sampled real-valued signal.
struct Waveform {
    Eigen::VectorXd samples;
    double sample_period = 0.0; // seconds
    Units units = Units::volts;

    Waveform() = default;
    Waveform(Eigen::VectorXd s, double period, Units u = Units::volts)
        : samples(std::move(s)), sample_period(period), units(u) {}

    Index size() const { return samples.size(); }
    double duration() const { return static_cast<double>(samples.size()) * sample_period; }
    double nyquist() const { return 0.5 / sample_period; }

    /// Throws Error unless sample_period > 0, length >= 1 and all samples finite.
    void validate() const {
        if (sample_period <= 0.0) throw Error("Waveform: sample_period must be > 0");
        if (samples.size() < 1) throw Error("Waveform: length must be >= 1");
        if (!samples.allFinite()) throw Error("Waveform: non-finite sample");
    }
};

/// Full two-sided DFT of a Waveform. bins.size() == origin_length.
struct Spectrum {
    Eigen::VectorXcd bins;
    double bin_spacing = 0.0; // hertz
    Index origin_length = 0;  // N of the source waveform

    Index size() const { return bins.size(); }

    /// Two-sided frequency of bin k in hertz (negative above N/2).
    double frequency(Index k) const {
        const Index n = bins.size();
        const Index folded = (k <= n / 2) ? k : k - n;
        return static_cast<double>(folded) * bin_spacing;
    }

    /// Index of the bin nearest a (positive) frequency.
    Index bin_nearest(double f_hz) const {
        Index k = static_cast<Index>(std::lround(f_hz / bin_spacing));
        if (k < 0) k = 0;
        if (k >= bins.size()) k = bins.size() - 1;
        return k;
    }

    /// Max relative deviation from conjugate symmetry bin[k] == conj(bin[N-k]).
    double conjugate_asymmetry() const;
};

/// Half-open sample index range [begin, end).
struct IndexWindow {
    Index begin = 0;
    Index end = 0;

    Index length() const { return end - begin; }
    bool contains(Index i) const { return i >= begin && i < end; }
    bool contains(const IndexWindow& w) const { return w.begin >= begin && w.end <= end; }
};

} // namespace pulsemux
