// capforge/features.hpp

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

#ifndef CAPFORGE_FEATURES_HPP_
#define CAPFORGE_FEATURES_HPP_

#include <complex>
#include <string>
#include <vector>

#include "capforge/types.hpp"
#include "capforge/wav.hpp"

namespace capforge {

struct FeatureConfig {
  int sample_rate = 16000;
  double window_ms = 96.0;
  double overlap_fraction = 0.5;
  int n_mels = 64;
  double f_min = 125.0;
  double f_max = 7500.0;
  double target_duration_s = 30.0;
  double log_floor = 1e-10;

  int WindowLength() const;  // samples per analysis window
  int HopLength() const;     // samples between frame starts
  int FftLength() const;     // next power of two >= window length

  // Enforces the band/overlap/window invariants; throws on violation.
  void Validate() const;
};

enum class FeatureKind { kLogMel, kEmbedding };

// T x D matrix of per-frame features, either native log-mel energies
// (D = n_mels) or externally computed 128-d frame embeddings.
struct FeatureMatrix {
  MatX data;  // rows = frames, cols = feature dim
  FeatureKind kind = FeatureKind::kLogMel;

  Index Frames() const { return data.rows(); }
  Index Dim() const { return data.cols(); }
};

// Triangular mel filters as an n_mels x (n_fft/2 + 1) weight matrix.
struct FilterBank {
  MatX weights;
  VecX bin_frequencies;       // Hz per FFT bin
  VecX center_frequencies;    // Hz per filter peak
};

// mel(f) = 2595 * log10(1 + f / 700)
double HzToMel(double hz);
double MelToHz(double mel);

// Peaks are equally spaced on the mel scale between f_min and f_max;
// every filter is zero outside that band.
FilterBank MelFilterBank(const FeatureConfig& config, int n_fft);

// Iterative radix-2 FFT; input length must be a power of two.
void Fft(std::vector<std::complex<double>>& buf);

// Power spectrum (n_fft/2 + 1 bins) of one zero-padded, Hann-windowed
// frame.
VecX PowerSpectrum(const Eigen::Ref<const VecX>& frame, int n_fft);

// Full log-mel pipeline over a clip already resampled to
// config.sample_rate. Frames are Hann-windowed, FFT'd, mel-filtered
// and log-compressed as log(x + log_floor). T = floor((L - W)/H) + 1.
FeatureMatrix LogMelSpectrogram(const AudioClip& clip,
                                const FeatureConfig& config);

// FEAT container: "FEAT" magic, u32 version=1, u32 rows, u32 cols,
// then rows*cols little-endian float32 values row-major.
void WriteFeatureFile(const std::string& path, const MatX& matrix);
MatX ReadFeatureFile(const std::string& path);

// Reads a FEAT file holding precomputed frame embeddings; enforces the
// 128-column contract and a nonzero row count.
FeatureMatrix LoadEmbeddingFile(const std::string& path);

}  // namespace capforge

#endif  // CAPFORGE_FEATURES_HPP_
