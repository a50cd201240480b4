// src/wav.cc

// Copyright 2026  TseNet-CPP Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstring>

#include "audio.h"
#include "common.h"
#include "io_util.h"

namespace tsenet {
namespace audio {

namespace {

constexpr uint16_t kFormatPcm = 1;

uint32_t ReadU32At(const std::string& b, size_t pos) {
  Require(pos + 4 <= b.size(), "WAV: truncated file");
  uint32_t v;
  std::memcpy(&v, b.data() + pos, 4);
  return v;
}

uint16_t ReadU16At(const std::string& b, size_t pos) {
  Require(pos + 2 <= b.size(), "WAV: truncated file");
  uint16_t v;
  std::memcpy(&v, b.data() + pos, 2);
  return v;
}

}  // namespace

AudioSignal ReadWav(const std::string& path, int expected_rate_hz) {
  Require(FileExists(path), "WAV file not found: " + path);
  const std::string bytes = ReadFileBytes(path);
  Require(bytes.size() >= 12 && bytes.compare(0, 4, "RIFF") == 0 &&
              bytes.compare(8, 4, "WAVE") == 0,
          "not a RIFF/WAVE file: " + path);

  bool have_fmt = false;
  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  size_t data_pos = 0, data_len = 0;
  bool have_data = false;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    std::string chunk_id = bytes.substr(pos, 4);
    uint32_t chunk_len = ReadU32At(bytes, pos + 4);
    size_t body = pos + 8;
    if (chunk_id == "fmt ") {
      Require(chunk_len >= 16, "WAV: malformed fmt chunk: " + path);
      format = ReadU16At(bytes, body);
      channels = ReadU16At(bytes, body + 2);
      rate = ReadU32At(bytes, body + 4);
      bits = ReadU16At(bytes, body + 14);
      have_fmt = true;
    } else if (chunk_id == "data") {
      data_pos = body;
      data_len = chunk_len;
      have_data = true;
    }
    pos = body + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }

  Require(have_fmt && have_data, "WAV: missing fmt or data chunk: " + path);
  Require(format == kFormatPcm, "unsupported WAV encoding (want 16-bit PCM): " + path);
  Require(channels == 1, "non-mono input: " + path);
  Require(bits == 16, "unsupported WAV bit depth (want 16): " + path);
  Require(data_pos + data_len <= bytes.size(), "WAV: truncated data chunk: " + path);
  if (expected_rate_hz > 0) {
    Require(static_cast<int>(rate) == expected_rate_hz,
            Format("unexpected sample rate %u (want %d): %s", rate,
                   expected_rate_hz, path.c_str()));
  }
  Require(rate > 0, "WAV: zero sample rate: " + path);

  AudioSignal out;
  out.sample_rate_hz = static_cast<int>(rate);
  size_t n = data_len / 2;
  out.samples.resize(n);
  for (size_t i = 0; i < n; ++i) {
    int16_t s;
    std::memcpy(&s, bytes.data() + data_pos + 2 * i, 2);
    out.samples[i] = static_cast<double>(s) / 32768.0;
  }
  return out;
}

int64_t WriteWav(const std::string& path, const AudioSignal& signal) {
  Require(signal.sample_rate_hz > 0, "WriteWav: sample rate must be positive");
  for (double s : signal.samples) {
    Require(std::isfinite(s), "WriteWav: non-finite sample");
  }

  int64_t clipped = 0;
  const uint32_t n = static_cast<uint32_t>(signal.samples.size());
  BinaryWriter w;
  w.PutBytes("RIFF", 4);
  w.PutU32(36 + 2 * n);
  w.PutBytes("WAVE", 4);
  w.PutBytes("fmt ", 4);
  w.PutU32(16);
  // format, channels, rate, byte rate, block align, bits
  uint16_t fmt16[2] = {kFormatPcm, 1};
  w.PutBytes(fmt16, 4);
  w.PutU32(static_cast<uint32_t>(signal.sample_rate_hz));
  w.PutU32(static_cast<uint32_t>(signal.sample_rate_hz) * 2);
  uint16_t tail16[2] = {2, 16};
  w.PutBytes(tail16, 4);
  w.PutBytes("data", 4);
  w.PutU32(2 * n);
  for (double s : signal.samples) {
    double scaled = std::lround(s * 32768.0);
    if (scaled > 32767.0) {
      scaled = 32767.0;
      ++clipped;
    } else if (scaled < -32768.0) {
      scaled = -32768.0;
      ++clipped;
    }
    int16_t q = static_cast<int16_t>(scaled);
    w.PutBytes(&q, 2);
  }
  if (clipped > 0) {
    LogWarn(Format("WriteWav: clipped %lld of %u samples to int16 range in %s",
                   static_cast<long long>(clipped), n, path.c_str()));
  }
  WriteFileBytes(path, w.bytes());
  return clipped;
}

}  // namespace audio
}  // namespace tsenet
