// src/synth.h

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

#ifndef TSENET_SYNTH_H_
#define TSENET_SYNTH_H_

#include <cstdint>
#include <string>

#include "audio.h"

namespace tsenet {
namespace synth {

// Bundled stand-in for licensed speech: summed-harmonic "speakers" with
// distinct F0 contours and per-speaker spectral envelopes, gated into
// syllable-like bursts so energy VAD has real work to do.
struct SynthConfig {
  int n_speakers = 6;  // genders alternate m/f
  int utterances_per_speaker = 4;
  double min_seconds = 1.6;
  double max_seconds = 2.6;
  int sample_rate_hz = 8000;
  uint64_t seed = 1;
};

// Generates one utterance waveform (no file I/O).
audio::AudioSignal SynthesizeUtterance(const SynthConfig& cfg, int speaker,
                                       int utterance);

// Writes WAVs into dir and returns the matching utterance manifest
// (also saved as dir/manifest.csv).
audio::UtteranceManifest GenerateSyntheticCorpus(const std::string& dir,
                                                 const SynthConfig& cfg);

}  // namespace synth
}  // namespace tsenet

#endif  // TSENET_SYNTH_H_
