#include "footfix/spectral.hpp"

#include "footfix/error.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace footfix::spectral {

std::vector<double> fusion_weights(std::size_t k) {
  if (k == 0) throw EmptyInputError("need at least one reference");
  const double total = static_cast<double>(k * (k + 1) / 2);
  std::vector<double> w(k);
  for (std::size_t i = 0; i < k; ++i) w[i] = static_cast<double>(i + 1) / total;
  return w;
}

Matrix fuse_references(std::span<const Matrix> references) {
  const auto w = fusion_weights(references.size());
  const Matrix& first = references.front();
  Matrix out = Matrix::Zero(first.rows(), first.cols());
  for (std::size_t i = 0; i < references.size(); ++i) {
    if (references[i].rows() != first.rows() || references[i].cols() != first.cols()) {
      throw ShapeError("references differ in shape");
    }
    out += w[i] * references[i];
  }
  return out;
}

ComplexMatrix rfft(const Matrix& x) {
  if (x.rows() < 1) throw ShapeError("empty signal");
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);
  const auto n = x.rows();
  ComplexMatrix out(n / 2 + 1, x.cols());
  std::vector<double> column(static_cast<std::size_t>(n));
  std::vector<std::complex<double>> freq;
  for (Eigen::Index c = 0; c < x.cols(); ++c) {
    for (Eigen::Index t = 0; t < n; ++t) column[static_cast<std::size_t>(t)] = x(t, c);
    fft.fwd(freq, column);
    for (Eigen::Index k = 0; k < out.rows(); ++k) out(k, c) = freq[static_cast<std::size_t>(k)];
  }
  return out;
}

Matrix irfft(const ComplexMatrix& spectrum, int n) {
  if (n < 1 || spectrum.rows() != n / 2 + 1) throw ShapeError("spectrum rows do not match signal length");
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);
  Matrix out(n, spectrum.cols());
  std::vector<std::complex<double>> freq(static_cast<std::size_t>(spectrum.rows()));
  std::vector<double> column;
  for (Eigen::Index c = 0; c < spectrum.cols(); ++c) {
    for (Eigen::Index k = 0; k < spectrum.rows(); ++k) freq[static_cast<std::size_t>(k)] = spectrum(k, c);
    fft.inv(column, freq, n);
    for (int t = 0; t < n; ++t) out(t, c) = column[static_cast<std::size_t>(t)];
  }
  return out;
}

std::vector<BandRange> band_layout(int n, int bands) {
  const int rows = n / 2 + 1;
  if (bands < 1 || bands > rows) {
    throw ConfigError("b_bands", "must lie in 1.." + std::to_string(rows) + " for N = " + std::to_string(n));
  }
  const int base = rows / bands;
  std::vector<BandRange> out;
  int first = 0;
  for (int b = 0; b < bands; ++b) {
    const int size = base + (b == 0 ? rows % bands : 0);
    out.push_back({first, size});
    first += size;
  }
  return out;
}

BandSpectrum band_split(const Matrix& x, int bands) {
  if (x.rows() < 2) throw ShapeError("band split needs at least two frames");
  BandSpectrum s;
  s.n = static_cast<int>(x.rows());
  s.coefficients = rfft(x);
  s.bands = band_layout(s.n, bands);
  for (const BandRange& r : s.bands) {
    ComplexMatrix m = ComplexMatrix::Zero(s.coefficients.rows(), s.coefficients.cols());
    m.middleRows(r.first, r.rows) = s.coefficients.middleRows(r.first, r.rows);
    s.masked.push_back(std::move(m));
  }
  return s;
}

std::vector<double> band_energy(const BandSpectrum& s) {
  std::vector<double> out;
  for (const BandRange& r : s.bands) {
    double e = 0.0;
    for (int k = r.first; k < r.first + r.rows; ++k) {
      const bool single = k == 0 || (s.n % 2 == 0 && k == s.n / 2);
      e += (single ? 1.0 : 2.0) * s.coefficients.row(k).squaredNorm();
    }
    out.push_back(e / s.n);
  }
  return out;
}

std::vector<double> band_energy_fractions(const BandSpectrum& s) {
  auto e = band_energy(s);
  const double total = std::accumulate(e.begin(), e.end(), 0.0);
  if (!(total > 0.0)) throw NumericError("band fractions are undefined for a zero-energy signal");
  for (double& v : e) v /= total;
  return e;
}

std::vector<Matrix> band_signals(const BandSpectrum& s) {
  std::vector<Matrix> out;
  for (const auto& m : s.masked) out.push_back(irfft(m, s.n));
  return out;
}

std::vector<double> gate(std::span<const double> logits) {
  if (logits.empty()) return {};
  const double top = *std::max_element(logits.begin(), logits.end());
  std::vector<double> out(logits.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(std::max(logits[i] - top, -700.0));
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

std::vector<double> LinearGate::operator()(const Vector& features) const {
  if (features.size() != weight.cols() || bias.size() != weight.rows()) throw ShapeError("gate shape mismatch");
  const Vector logits = weight * features + bias;
  return gate(std::span<const double>(logits.data(), static_cast<std::size_t>(logits.size())));
}

Matrix LinearExpert::operator()(const Matrix& x) const {
  if (x.cols() != weight.cols()) throw ShapeError("expert channel mismatch");
  return x + x * weight.transpose();
}

std::vector<Matrix> apply_experts(const BandSpectrum& s, std::span<const Expert> experts) {
  if (experts.size() != s.bands.size()) throw ShapeError("need one expert per band");
  auto signals = band_signals(s);
  for (std::size_t i = 0; i < signals.size(); ++i) signals[i] = experts[i](signals[i]);
  return signals;
}

Matrix band_merge(std::span<const Matrix> outputs, std::span<const double> gamma) {
  if (outputs.empty() || outputs.size() != gamma.size()) throw ShapeError("need one gate weight per band output");
  Matrix out = Matrix::Zero(outputs.front().rows(), outputs.front().cols());
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (outputs[i].rows() != out.rows() || outputs[i].cols() != out.cols()) {
      throw ShapeError("band outputs differ in shape");
    }
    out += gamma[i] * outputs[i];
  }
  return out;
}

}  // namespace footfix::spectral
