// features.cpp

// Copyright 2026 Capforge Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "capforge/features.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>

#include "capforge/error.hpp"

namespace capforge {

int FeatureConfig::WindowLength() const {
  return static_cast<int>(std::llround(window_ms * sample_rate / 1000.0));
}

int FeatureConfig::HopLength() const {
  return static_cast<int>(
      std::llround(WindowLength() * (1.0 - overlap_fraction)));
}

int FeatureConfig::FftLength() const {
  int n = 1;
  while (n < WindowLength()) n <<= 1;
  return n;
}

void FeatureConfig::Validate() const {
  if (sample_rate <= 0) ThrowUsage("InvalidConfig", "sample_rate must be > 0");
  if (!(f_min > 0.0 && f_min < f_max)) {
    ThrowUsage("InvalidConfig", "need 0 < f_min < f_max");
  }
  if (f_max > sample_rate / 2.0) {
    ThrowUsage("InvalidBand", "f_max exceeds Nyquist frequency");
  }
  if (!(overlap_fraction > 0.0 && overlap_fraction < 1.0)) {
    ThrowUsage("InvalidConfig", "overlap_fraction must be in (0, 1)");
  }
  double exact_window = window_ms * sample_rate / 1000.0;
  if (std::abs(exact_window - std::llround(exact_window)) > 1e-9) {
    ThrowUsage("InvalidConfig",
               "window_ms * sample_rate / 1000 must be an integer");
  }
  if (n_mels < 1) ThrowUsage("InvalidConfig", "n_mels must be >= 1");
  if (HopLength() < 1) ThrowUsage("InvalidConfig", "hop length must be >= 1");
  if (log_floor <= 0.0) ThrowUsage("InvalidConfig", "log_floor must be > 0");
}

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

FilterBank MelFilterBank(const FeatureConfig& config, int n_fft) {
  config.Validate();
  if (n_fft < config.WindowLength() || (n_fft & (n_fft - 1)) != 0) {
    ThrowUsage("InvalidConfig",
               "n_fft must be a power of two >= window length");
  }

  int n_bins = n_fft / 2 + 1;
  FilterBank fb;
  fb.weights = MatX::Zero(config.n_mels, n_bins);
  fb.bin_frequencies.resize(n_bins);
  for (int k = 0; k < n_bins; ++k) {
    fb.bin_frequencies[k] =
        static_cast<double>(k) * config.sample_rate / n_fft;
  }

  // n_mels + 2 edge points, equally spaced in mel; filter i rises from
  // point i to i+1 and falls to i+2.
  int n_points = config.n_mels + 2;
  VecX hz_points(n_points);
  double mel_lo = HzToMel(config.f_min);
  double mel_hi = HzToMel(config.f_max);
  for (int i = 0; i < n_points; ++i) {
    double mel = mel_lo + (mel_hi - mel_lo) * i / (n_points - 1);
    hz_points[i] = MelToHz(mel);
  }
  fb.center_frequencies = hz_points.segment(1, config.n_mels);

  for (int m = 0; m < config.n_mels; ++m) {
    double left = hz_points[m];
    double center = hz_points[m + 1];
    double right = hz_points[m + 2];
    for (int k = 0; k < n_bins; ++k) {
      double f = fb.bin_frequencies[k];
      double w = 0.0;
      if (f > left && f < center) {
        w = (f - left) / (center - left);
      } else if (f == center) {
        w = 1.0;
      } else if (f > center && f < right) {
        w = (right - f) / (right - center);
      }
      fb.weights(m, k) = w;
    }
  }
  return fb;
}

void Fft(std::vector<std::complex<double>>& buf) {
  size_t n = buf.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    ThrowNumeric("InvalidFftLength", "FFT length must be a power of two");
  }
  // Bit-reversal permutation.
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(buf[i], buf[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    double angle = -2.0 * std::numbers::pi / static_cast<double>(len);
    std::complex<double> wlen(std::cos(angle), std::sin(angle));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = buf[i + k];
        std::complex<double> v = buf[i + k + len / 2] * w;
        buf[i + k] = u + v;
        buf[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

VecX PowerSpectrum(const Eigen::Ref<const VecX>& frame, int n_fft) {
  std::vector<std::complex<double>> buf(static_cast<size_t>(n_fft),
                                        {0.0, 0.0});
  for (Index i = 0; i < frame.size(); ++i) buf[static_cast<size_t>(i)] = frame[i];
  Fft(buf);
  VecX power(n_fft / 2 + 1);
  for (int k = 0; k <= n_fft / 2; ++k) {
    power[k] = std::norm(buf[static_cast<size_t>(k)]);
  }
  return power;
}

FeatureMatrix LogMelSpectrogram(const AudioClip& clip,
                                const FeatureConfig& config) {
  config.Validate();
  int window = config.WindowLength();
  int hop = config.HopLength();
  int n_fft = config.FftLength();
  auto length = static_cast<Index>(clip.samples.size());
  if (length < window) {
    ThrowData("ClipTooShort", "clip has fewer samples than one window");
  }

  Index frames = (length - window) / hop + 1;
  FilterBank fb = MelFilterBank(config, n_fft);

  // Periodic Hann window.
  VecX hann(window);
  for (int i = 0; i < window; ++i) {
    hann[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / window);
  }

  FeatureMatrix out;
  out.kind = FeatureKind::kLogMel;
  out.data.resize(frames, config.n_mels);
  VecX windowed(window);
  for (Index t = 0; t < frames; ++t) {
    const Real* start = clip.samples.data() + t * hop;
    for (int i = 0; i < window; ++i) windowed[i] = start[i] * hann[i];
    VecX power = PowerSpectrum(windowed, n_fft);
    VecX mel = fb.weights * power;
    out.data.row(t) =
        (mel.array() + config.log_floor).log().matrix().transpose();
  }
  if (!out.data.allFinite()) {
    ThrowNumeric("NonFiniteFeature", "log-mel produced non-finite values");
  }
  return out;
}

namespace {

constexpr char kFeatMagic[4] = {'F', 'E', 'A', 'T'};
constexpr uint32_t kFeatVersion = 1;

void WriteU32(std::ofstream& out, uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
               static_cast<char>((v >> 16) & 0xFF),
               static_cast<char>((v >> 24) & 0xFF)};
  out.write(b, 4);
}

uint32_t ReadU32(std::ifstream& in, const std::string& path) {
  uint8_t b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) {
    ThrowData("TruncatedPayload", "unexpected end of " + path);
  }
  return static_cast<uint32_t>(b[0]) | static_cast<uint32_t>(b[1]) << 8 |
         static_cast<uint32_t>(b[2]) << 16 | static_cast<uint32_t>(b[3]) << 24;
}

}  // namespace

void WriteFeatureFile(const std::string& path, const MatX& matrix) {
  std::ofstream out(path, std::ios::binary);
  if (!out) ThrowData("IoError", "cannot write " + path);
  out.write(kFeatMagic, 4);
  WriteU32(out, kFeatVersion);
  WriteU32(out, static_cast<uint32_t>(matrix.rows()));
  WriteU32(out, static_cast<uint32_t>(matrix.cols()));
  // Row-major float32 payload.
  std::vector<float> payload(static_cast<size_t>(matrix.size()));
  for (Index r = 0, i = 0; r < matrix.rows(); ++r) {
    for (Index c = 0; c < matrix.cols(); ++c, ++i) {
      payload[static_cast<size_t>(i)] = static_cast<float>(matrix(r, c));
    }
  }
  out.write(reinterpret_cast<const char*>(payload.data()),
            static_cast<std::streamsize>(payload.size() * sizeof(float)));
  if (!out) ThrowData("IoError", "short write to " + path);
}

MatX ReadFeatureFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ThrowData("IoError", "cannot open " + path);
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kFeatMagic, 4) != 0) {
    ThrowData("BadMagic", path + " is not a FEAT file");
  }
  uint32_t version = ReadU32(in, path);
  if (version != kFeatVersion) {
    ThrowData("BadMagic", "unsupported FEAT version in " + path);
  }
  uint32_t rows = ReadU32(in, path);
  uint32_t cols = ReadU32(in, path);
  std::vector<float> payload(static_cast<size_t>(rows) * cols);
  if (!payload.empty() &&
      !in.read(reinterpret_cast<char*>(payload.data()),
               static_cast<std::streamsize>(payload.size() * sizeof(float)))) {
    ThrowData("TruncatedPayload", path + " ends mid-payload");
  }
  MatX m(rows, cols);
  for (uint32_t r = 0, i = 0; r < rows; ++r) {
    for (uint32_t c = 0; c < cols; ++c, ++i) m(r, c) = payload[i];
  }
  if (!m.allFinite()) {
    ThrowData("NonFiniteFeature", path + " contains non-finite values");
  }
  return m;
}

FeatureMatrix LoadEmbeddingFile(const std::string& path) {
  MatX m = ReadFeatureFile(path);
  if (m.rows() == 0) ThrowData("EmptyFeature", path + " has zero rows");
  if (m.cols() != 128) {
    ThrowData("DimensionMismatch",
              path + " has " + std::to_string(m.cols()) +
                  " columns, embeddings require 128");
  }
  FeatureMatrix out;
  out.kind = FeatureKind::kEmbedding;
  out.data = std::move(m);
  return out;
}

}  // namespace capforge
