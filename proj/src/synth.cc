// src/synth.cc

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

#include "synth.h"

#include <cmath>
#include <vector>

#include "common.h"
#include "io_util.h"
#include "rng.h"

namespace tsenet {
namespace synth {

audio::AudioSignal SynthesizeUtterance(const SynthConfig& cfg, int speaker,
                                       int utterance) {
  Require(speaker >= 0 && utterance >= 0, "SynthesizeUtterance: bad indices");
  const int fs = cfg.sample_rate_hz;
  const bool male = (speaker % 2) == 0;

  // Speaker identity: base F0 and harmonic envelope come from a
  // speaker-only stream so they are shared across the speaker's utterances.
  Rng spk_rng(cfg.seed, 0x5350u + static_cast<uint64_t>(speaker));
  double f0_base = male ? spk_rng.Uniform(95.0, 135.0) : spk_rng.Uniform(185.0, 240.0);
  const int n_harm = static_cast<int>(std::floor(3600.0 / f0_base));
  std::vector<double> harm_amp(static_cast<size_t>(n_harm));
  double rolloff = spk_rng.Uniform(0.55, 0.85);
  for (int h = 0; h < n_harm; ++h) {
    harm_amp[static_cast<size_t>(h)] =
        std::pow(rolloff, h) * spk_rng.Uniform(0.4, 1.0);
  }

  Rng rng(cfg.seed, 0x5554u + 1000 * static_cast<uint64_t>(speaker) +
                        static_cast<uint64_t>(utterance));
  double seconds = rng.Uniform(cfg.min_seconds, cfg.max_seconds);
  const int64_t n = static_cast<int64_t>(std::llround(seconds * fs));

  // F0 contour: slow vibrato plus a linear drift, distinct per utterance.
  double vib_rate = rng.Uniform(2.0, 5.0);
  double vib_depth = rng.Uniform(0.02, 0.06);
  double drift = rng.Uniform(-0.08, 0.08);
  double vib_phase = rng.Uniform(0.0, 2.0 * M_PI);

  // Syllable gating: voiced bursts separated by pauses.
  std::vector<double> envelope(static_cast<size_t>(n), 0.0);
  int64_t t = static_cast<int64_t>(0.08 * fs);  // leading silence
  while (t < n) {
    int64_t voiced = static_cast<int64_t>(rng.Uniform(0.12, 0.30) * fs);
    int64_t pause = static_cast<int64_t>(rng.Uniform(0.04, 0.14) * fs);
    double level = rng.Uniform(0.5, 1.0);
    int64_t end = std::min<int64_t>(n, t + voiced);
    int64_t ramp = std::min<int64_t>(static_cast<int64_t>(0.015 * fs), (end - t) / 2);
    for (int64_t i = t; i < end; ++i) {
      double g = 1.0;
      if (i - t < ramp) g = 0.5 - 0.5 * std::cos(M_PI * (i - t) / static_cast<double>(ramp));
      if (end - 1 - i < ramp) g = std::min(g, 0.5 - 0.5 * std::cos(M_PI * (end - 1 - i) / static_cast<double>(ramp)));
      envelope[static_cast<size_t>(i)] = level * g;
    }
    t = end + pause;
  }

  std::vector<double> phase(static_cast<size_t>(n_harm), 0.0);
  for (int h = 0; h < n_harm; ++h) phase[static_cast<size_t>(h)] = rng.Uniform(0.0, 2.0 * M_PI);

  audio::AudioSignal sig;
  sig.sample_rate_hz = fs;
  sig.samples.resize(static_cast<size_t>(n));
  double peak = 0.0;
  for (int64_t i = 0; i < n; ++i) {
    double time = static_cast<double>(i) / fs;
    double f0 = f0_base * (1.0 + vib_depth * std::sin(2.0 * M_PI * vib_rate * time + vib_phase) +
                           drift * time / std::max(0.5, seconds));
    double x = 0.0;
    for (int h = 0; h < n_harm; ++h) {
      double freq = f0 * (h + 1);
      if (freq > 0.48 * fs) break;
      size_t hh = static_cast<size_t>(h);
      phase[hh] += 2.0 * M_PI * freq / fs;
      x += harm_amp[hh] * std::sin(phase[hh]);
    }
    x *= envelope[static_cast<size_t>(i)];
    x += 1e-4 * rng.Gaussian();  // faint noise floor
    sig.samples[static_cast<size_t>(i)] = x;
    peak = std::max(peak, std::abs(x));
  }
  // Headroom so mixing two sources stays inside [-1, 1].
  double scale = peak > 0.0 ? 0.30 / peak : 1.0;
  for (double& s : sig.samples) s *= scale;
  return sig;
}

audio::UtteranceManifest GenerateSyntheticCorpus(const std::string& dir,
                                                 const SynthConfig& cfg) {
  Require(cfg.n_speakers >= 2, "GenerateSyntheticCorpus: need >= 2 speakers");
  Require(cfg.utterances_per_speaker >= 2,
          "GenerateSyntheticCorpus: need >= 2 utterances per speaker");
  MakeDirs(dir);
  audio::UtteranceManifest manifest;
  for (int s = 0; s < cfg.n_speakers; ++s) {
    audio::SpeakerEntry entry;
    entry.speaker_id = Format("spk%02d", s);
    entry.gender = (s % 2) == 0 ? "m" : "f";
    for (int u = 0; u < cfg.utterances_per_speaker; ++u) {
      audio::AudioSignal sig = SynthesizeUtterance(cfg, s, u);
      std::string name = Format("spk%02d_utt%02d.wav", s, u);
      std::string path = JoinPath(dir, name);
      audio::WriteWav(path, sig);
      entry.utterances.push_back(audio::UtteranceInfo{PathStem(path), path});
    }
    manifest.speakers.push_back(std::move(entry));
  }
  audio::SaveUtteranceManifest(JoinPath(dir, "manifest.csv"), manifest);
  return manifest;
}

}  // namespace synth
}  // namespace tsenet
