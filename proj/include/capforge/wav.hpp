// capforge/wav.hpp

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

#ifndef CAPFORGE_WAV_HPP_
#define CAPFORGE_WAV_HPP_

#include <string>
#include <vector>

#include "capforge/types.hpp"

namespace capforge {

// Decoded mono waveform. Samples are finite and within [-1, 1].
struct AudioClip {
  std::vector<Real> samples;
  int sample_rate = 0;

  double DurationSeconds() const {
    return sample_rate > 0
               ? static_cast<double>(samples.size()) / sample_rate
               : 0.0;
  }
};

// Reads a RIFF/WAVE file. Supported encodings: PCM 16-bit and IEEE
// float 32-bit, mono or stereo. Stereo is averaged down to mono and
// 16-bit samples are scaled by 1/32768.
// Throws MalformedWav for structural damage and UnsupportedEncoding for
// compressed or exotic formats.
AudioClip LoadWav(const std::string& path);

// Writes a mono PCM 16-bit WAV. Samples are clamped to [-1, 1] before
// quantization.
void WriteWav(const std::string& path, const AudioClip& clip);

// Linear-interpolation resampling. Duration is preserved within one
// output sample. Throws EmptyClip for zero-length input.
AudioClip Resample(const AudioClip& clip, int target_rate);

// Forces the clip to exactly target_duration_s * sample_rate samples:
// shorter clips are right-padded with zeros, longer ones truncated at
// the end.
AudioClip PadOrTrim(const AudioClip& clip, double target_duration_s);

}  // namespace capforge

#endif  // CAPFORGE_WAV_HPP_
