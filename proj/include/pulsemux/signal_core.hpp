#pragma once

#include "pulsemux/types.hpp"

namespace pulsemux {

/// Forward DFT: bins[k] = sum_n w[n] exp(-j 2 pi k n / N), all N bins.
Spectrum fft(const Waveform& w);

/// Exact inverse of fft(). The input must be conjugate-symmetric (the
/// spectrum of a real signal); throws AsymmetricSpectrum when the imaginary
/// residue of the inverse transform exceeds 1e-9 relative to the peak.
Waveform ifft(const Spectrum& s);

/// Raw complex transforms on plain vectors (no metadata). fft_complex is
/// unscaled; ifft_complex applies the 1/N factor.
Eigen::VectorXcd fft_complex(const Eigen::VectorXcd& v);
Eigen::VectorXcd ifft_complex(const Eigen::VectorXcd& v);

/// Linear convolution truncated to the length of x:
/// out[n] = sum_{m=0..n} x[m] h[n-m]. Computed by zero-padded FFT.
Waveform convolve(const Waveform& x, const Waveform& h);

/// Circular cross-correlation r_yx[m] = (1/N) sum_n y[n] x[(n-m) mod N],
/// so that fft(r_yx) = Y .* conj(X) / N.
Waveform cross_correlate(const Waveform& y, const Waveform& x);

/// Analytic low-pass magnitude |H(f)| = (1 + (f/fc)^(2*order))^(-1/2).
double butterworth_gain(double f_hz, double cutoff_hz, int order);

/// Zero-phase Butterworth low-pass: the magnitude response is applied
/// symmetrically in the frequency domain, so timing marks are preserved.
Waveform butterworth_lowpass(const Waveform& w, double cutoff_hz, int order);

/// Same filter acting on an already-transformed record.
Eigen::VectorXcd butterworth_lowpass(const Eigen::VectorXcd& bins, double bin_spacing,
                                     double cutoff_hz, int order);

} // namespace pulsemux
