// wav.cpp

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

#include "capforge/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "capforge/error.hpp"

namespace capforge {
namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatIeeeFloat = 3;

uint32_t ReadU32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
         static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

uint16_t ReadU16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | p[1] << 8);
}

void PutU32(std::string& out, uint32_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
  out.push_back(static_cast<char>((v >> 16) & 0xFF));
  out.push_back(static_cast<char>((v >> 24) & 0xFF));
}

void PutU16(std::string& out, uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

}  // namespace

AudioClip LoadWav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ThrowData("MalformedWav", "cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    ThrowData("MalformedWav", path + " is not a RIFF/WAVE file");
  }

  uint16_t format = 0;
  uint16_t channels = 0;
  uint16_t bits = 0;
  uint32_t rate = 0;
  bool have_fmt = false;
  const uint8_t* data = nullptr;
  size_t data_len = 0;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const uint8_t* hdr = bytes.data() + pos;
    uint32_t chunk_len = ReadU32(hdr + 4);
    pos += 8;
    if (pos + chunk_len > bytes.size()) {
      ThrowData("MalformedWav", "truncated chunk in " + path);
    }
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_len < 16) ThrowData("MalformedWav", "short fmt chunk");
      const uint8_t* f = bytes.data() + pos;
      format = ReadU16(f);
      channels = ReadU16(f + 2);
      rate = ReadU32(f + 4);
      bits = ReadU16(f + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data = bytes.data() + pos;
      data_len = chunk_len;
    }
    pos += chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data == nullptr) {
    ThrowData("MalformedWav", "missing fmt or data chunk in " + path);
  }
  if (channels < 1 || channels > 2) {
    ThrowData("UnsupportedEncoding",
              std::to_string(channels) + " channels in " + path);
  }
  if (rate == 0) ThrowData("MalformedWav", "zero sample rate in " + path);

  bool pcm16 = format == kFormatPcm && bits == 16;
  bool f32 = format == kFormatIeeeFloat && bits == 32;
  if (!pcm16 && !f32) {
    ThrowData("UnsupportedEncoding", "format " + std::to_string(format) + "/" +
                                         std::to_string(bits) + " bits in " +
                                         path);
  }

  size_t bytes_per_sample = pcm16 ? 2 : 4;
  size_t frame_size = bytes_per_sample * channels;
  if (data_len % frame_size != 0) {
    ThrowData("MalformedWav", "data chunk not a whole number of frames");
  }
  size_t frames = data_len / frame_size;

  AudioClip clip;
  clip.sample_rate = static_cast<int>(rate);
  clip.samples.resize(frames);
  for (size_t i = 0; i < frames; ++i) {
    double acc = 0.0;
    for (uint16_t c = 0; c < channels; ++c) {
      const uint8_t* s = data + i * frame_size + c * bytes_per_sample;
      if (pcm16) {
        int16_t v = static_cast<int16_t>(s[0] | s[1] << 8);
        acc += static_cast<double>(v) / 32768.0;
      } else {
        uint32_t u = ReadU32(s);
        float v;
        std::memcpy(&v, &u, sizeof v);
        if (!std::isfinite(v)) ThrowData("MalformedWav", "non-finite sample");
        acc += static_cast<double>(v);
      }
    }
    clip.samples[i] = std::clamp(acc / channels, -1.0, 1.0);
  }
  return clip;
}

void WriteWav(const std::string& path, const AudioClip& clip) {
  std::string payload;
  payload.reserve(clip.samples.size() * 2);
  for (Real s : clip.samples) {
    double v = std::clamp(s, -1.0, 1.0) * 32767.0;
    auto q = static_cast<int16_t>(std::lrint(v));
    PutU16(payload, static_cast<uint16_t>(q));
  }

  std::string out;
  out.reserve(44 + payload.size());
  out += "RIFF";
  PutU32(out, static_cast<uint32_t>(36 + payload.size()));
  out += "WAVEfmt ";
  PutU32(out, 16);
  PutU16(out, kFormatPcm);
  PutU16(out, 1);  // mono
  PutU32(out, static_cast<uint32_t>(clip.sample_rate));
  PutU32(out, static_cast<uint32_t>(clip.sample_rate) * 2);  // byte rate
  PutU16(out, 2);                                            // block align
  PutU16(out, 16);                                           // bits
  out += "data";
  PutU32(out, static_cast<uint32_t>(payload.size()));
  out += payload;

  std::ofstream f(path, std::ios::binary);
  if (!f) ThrowData("MalformedWav", "cannot write " + path);
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
}

AudioClip Resample(const AudioClip& clip, int target_rate) {
  if (target_rate <= 0) ThrowUsage("InvalidRate", "target rate must be > 0");
  if (clip.samples.empty()) ThrowData("EmptyClip", "cannot resample 0 samples");
  if (clip.sample_rate == target_rate) return clip;

  size_t n_in = clip.samples.size();
  auto n_out = static_cast<size_t>(std::llround(
      static_cast<double>(n_in) * target_rate / clip.sample_rate));
  if (n_out == 0) n_out = 1;

  AudioClip out;
  out.sample_rate = target_rate;
  out.samples.resize(n_out);
  double step = static_cast<double>(clip.sample_rate) / target_rate;
  for (size_t i = 0; i < n_out; ++i) {
    double pos = static_cast<double>(i) * step;
    auto k = static_cast<size_t>(pos);
    if (k >= n_in - 1) {
      out.samples[i] = clip.samples[n_in - 1];
    } else {
      double frac = pos - static_cast<double>(k);
      out.samples[i] =
          (1.0 - frac) * clip.samples[k] + frac * clip.samples[k + 1];
    }
  }
  return out;
}

AudioClip PadOrTrim(const AudioClip& clip, double target_duration_s) {
  auto target = static_cast<size_t>(
      std::llround(target_duration_s * clip.sample_rate));
  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.samples.assign(target, 0.0);
  size_t keep = std::min(target, clip.samples.size());
  std::copy_n(clip.samples.begin(), keep, out.samples.begin());
  return out;
}

}  // namespace capforge
