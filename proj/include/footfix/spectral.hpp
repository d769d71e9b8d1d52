#pragma once

#include "footfix/motion.hpp"

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace footfix::spectral {

using ComplexMatrix = Eigen::MatrixXcd;

/// omega_i = i / (1 + 2 + ... + k) for i = 1..k. Throws EmptyInputError for k = 0.
std::vector<double> fusion_weights(std::size_t k);

/// Weighted sum of k equally shaped references, least relevant first.
Matrix fuse_references(std::span<const Matrix> references);

/// Column-wise real FFT: (N/2 + 1) x C half spectrum.
ComplexMatrix rfft(const Matrix& x);
/// Inverse of rfft for a length-n signal.
Matrix irfft(const ComplexMatrix& spectrum, int n);

struct BandRange {
  int first = 0;  // first frequency row
  int rows = 0;
};

/// Contiguous partition of the half-spectrum rows into `bands` ranges, lowest
/// frequency first; the lowest band takes the remainder rows. Throws
/// ConfigError unless 1 <= bands <= N/2 + 1.
std::vector<BandRange> band_layout(int n, int bands);

struct BandSpectrum {
  int n = 0;                          // signal length
  ComplexMatrix coefficients;         // full half spectrum
  std::vector<BandRange> bands;
  std::vector<ComplexMatrix> masked;  // one per band, zero outside its rows

  int half_rows() const noexcept { return static_cast<int>(coefficients.rows()); }
};

/// Throws ShapeError for N < 2 and ConfigError for a bad band count.
BandSpectrum band_split(const Matrix& x, int bands);

/// Energy per band with half-spectrum doubling (rows other than DC and, for
/// even N, Nyquist count twice) divided by N, so the sum equals the
/// time-domain sum of squares.
std::vector<double> band_energy(const BandSpectrum& spectrum);
/// band_energy normalized to sum to 1. Throws NumericError on a zero signal.
std::vector<double> band_energy_fractions(const BandSpectrum& spectrum);

/// Time-domain signal of each band.
std::vector<Matrix> band_signals(const BandSpectrum& spectrum);

/// Numerically safe softmax.
std::vector<double> gate(std::span<const double> logits);

/// Linear layer followed by a softmax over bands.
struct LinearGate {
  Matrix weight;  // bands x inputs
  Vector bias;    // bands

  std::vector<double> operator()(const Vector& features) const;
};

/// Per-band transform of an N x C time-domain band signal.
using Expert = std::function<Matrix(const Matrix&)>;

/// x + x W^T; W starts at zero so a fresh expert is the identity.
struct LinearExpert {
  Matrix weight;

  explicit LinearExpert(int channels) : weight(Matrix::Zero(channels, channels)) {}
  Matrix operator()(const Matrix& x) const;
};

/// Applies experts[i] to band i's time-domain signal.
std::vector<Matrix> apply_experts(const BandSpectrum& spectrum, std::span<const Expert> experts);

/// sum_i gamma_i * outputs[i]. Throws ShapeError on count or shape mismatch.
Matrix band_merge(std::span<const Matrix> outputs, std::span<const double> gamma);

}  // namespace footfix::spectral
