#include "pulsemux/signal_core.hpp"

#include <bit>
#include <cmath>
#include <complex>

#include <unsupported/Eigen/FFT>

namespace pulsemux {

namespace {

// One FFT engine per thread; Eigen's kissfft backend caches plans per length.
Eigen::FFT<double>& engine() {
    thread_local Eigen::FFT<double> fft_engine;
    return fft_engine;
}

} // namespace

Eigen::VectorXcd fft_complex(const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out;
    engine().fwd(out, v);
    return out;
}

Eigen::VectorXcd ifft_complex(const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out;
    engine().inv(out, v);
    return out;
}

double Spectrum::conjugate_asymmetry() const {
    const Index n = bins.size();
    const double scale = bins.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0.0;
    double worst = 0.0;
    for (Index k = 1; k < n - k; ++k) {
        worst = std::max(worst, std::abs(bins[k] - std::conj(bins[n - k])));
    }
    return worst / scale;
}

Spectrum fft(const Waveform& w) {
    w.validate();
    const Index n = w.size();
    Eigen::VectorXcd in = w.samples.cast<std::complex<double>>();
    Spectrum s;
    s.bins = fft_complex(in);
    s.bin_spacing = 1.0 / (static_cast<double>(n) * w.sample_period);
    s.origin_length = n;
    return s;
}

Waveform ifft(const Spectrum& s) {
    if (s.bins.size() < 1) throw Error("ifft: empty spectrum");
    if (s.bins.size() != s.origin_length)
        throw Error("ifft: bins length does not match origin_length");
    Eigen::VectorXcd out = ifft_complex(s.bins);
    const double scale = out.cwiseAbs().maxCoeff();
    const double residue = out.imag().cwiseAbs().maxCoeff();
    if (scale > 0.0 && residue > 1e-9 * scale)
        throw AsymmetricSpectrum("ifft: imaginary residue " + std::to_string(residue / scale) +
                                 " relative; input spectrum is not conjugate-symmetric");
    Waveform w;
    w.samples = out.real();
    w.sample_period = 1.0 / (s.bin_spacing * static_cast<double>(s.origin_length));
    return w;
}

Waveform convolve(const Waveform& x, const Waveform& h) {
    x.validate();
    h.validate();
    if (x.sample_period != h.sample_period)
        throw SamplePeriodMismatch("convolve: sample periods differ");
    const Index n = x.size();
    const std::size_t full = static_cast<std::size_t>(n + h.size() - 1);
    const Index padded = static_cast<Index>(std::bit_ceil(full));

    Eigen::VectorXcd xa = Eigen::VectorXcd::Zero(padded);
    Eigen::VectorXcd ha = Eigen::VectorXcd::Zero(padded);
    xa.head(n) = x.samples.cast<std::complex<double>>();
    ha.head(h.size()) = h.samples.cast<std::complex<double>>();
    Eigen::VectorXcd prod = fft_complex(xa).cwiseProduct(fft_complex(ha));
    Eigen::VectorXcd out = ifft_complex(prod);

    Waveform y;
    y.samples = out.head(n).real();
    y.sample_period = x.sample_period;
    y.units = x.units;
    return y;
}

Waveform cross_correlate(const Waveform& y, const Waveform& x) {
    y.validate();
    x.validate();
    if (y.sample_period != x.sample_period)
        throw SamplePeriodMismatch("cross_correlate: sample periods differ");
    if (y.size() != x.size())
        throw SamplePeriodMismatch("cross_correlate: lengths differ");
    const Index n = y.size();
    Eigen::VectorXcd prod =
        fft_complex(y.samples.cast<std::complex<double>>())
            .cwiseProduct(fft_complex(x.samples.cast<std::complex<double>>()).conjugate()) /
        static_cast<double>(n);
    Waveform r;
    r.samples = ifft_complex(prod).real();
    r.sample_period = y.sample_period;
    return r;
}

double butterworth_gain(double f_hz, double cutoff_hz, int order) {
    const double ratio = std::abs(f_hz) / cutoff_hz;
    return 1.0 / std::sqrt(1.0 + std::pow(ratio, 2.0 * order));
}

Eigen::VectorXcd butterworth_lowpass(const Eigen::VectorXcd& bins, double bin_spacing,
                                     double cutoff_hz, int order) {
    const Index n = bins.size();
    Eigen::VectorXcd out(n);
    for (Index k = 0; k < n; ++k) {
        const Index folded = (k <= n / 2) ? k : k - n;
        const double f = static_cast<double>(folded) * bin_spacing;
        out[k] = bins[k] * butterworth_gain(f, cutoff_hz, order);
    }
    return out;
}

Waveform butterworth_lowpass(const Waveform& w, double cutoff_hz, int order) {
    w.validate();
    if (order < 1) throw CutoffOutOfRange("butterworth_lowpass: order must be >= 1");
    if (!(cutoff_hz > 0.0) || cutoff_hz >= w.nyquist())
        throw CutoffOutOfRange("butterworth_lowpass: cutoff must be in (0, Nyquist)");
    Spectrum s = fft(w);
    s.bins = butterworth_lowpass(s.bins, s.bin_spacing, cutoff_hz, order);
    Waveform out = ifft(s);
    out.units = w.units;
    return out;
}

} // namespace pulsemux
