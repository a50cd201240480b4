// src/audio.h

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

#ifndef TSENET_AUDIO_H_
#define TSENET_AUDIO_H_

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace tsenet {
namespace audio {

// Mono waveform, amplitudes nominally in [-1, 1]. The pipeline runs at
// 8 kHz throughout.
struct AudioSignal {
  std::vector<double> samples;
  int sample_rate_hz = 8000;

  int64_t length() const { return static_cast<int64_t>(samples.size()); }
};

// Reads a 16-bit PCM mono WAV. Samples are scaled by 1/32768.
// expected_rate_hz > 0 rejects files with any other sample rate.
AudioSignal ReadWav(const std::string& path, int expected_rate_hz = 0);

// Writes 16-bit PCM mono. Samples outside [-1, 1] are hard-clipped to the
// int16 range with a logged warning; returns the number of clipped samples.
int64_t WriteWav(const std::string& path, const AudioSignal& signal);

// Mean squared amplitude. Errors on empty input.
double SignalPower(const AudioSignal& signal);

// Returns g * interference with g = sqrt(P_target / P_interf) *
// 10^(-snr_db/20). Powers are taken over each signal's full unpadded extent.
AudioSignal ScaleToSnr(const AudioSignal& target, const AudioSignal& interference,
                       double snr_db);

// 10*log10(P_target / P_interference); helper for verifying requested SNRs.
double MeasureSnrDb(const AudioSignal& target, const AudioSignal& interference);

struct MixResult {
  AudioSignal mixture;
  AudioSignal target_padded;
  std::vector<AudioSignal> interferences_padded;
};

// Samplewise sum; the mixture spans the longest input and shorter signals
// are zero-padded at the tail first. Interferences must already be
// SNR-scaled.
MixResult Mix(const AudioSignal& target, const std::vector<AudioSignal>& interferences);

enum class GenderPair { kDiff, kSame };

std::string GenderPairName(GenderPair g);
GenderPair GenderPairFromName(const std::string& name);

// Utterance manifest: CSV with header speaker_id,gender,path. Rows are
// grouped by speaker, keeping first-appearance order.
struct UtteranceInfo {
  std::string id;  // path stem
  std::string path;
};

struct SpeakerEntry {
  std::string speaker_id;
  std::string gender;  // "m" or "f"
  std::vector<UtteranceInfo> utterances;
};

struct UtteranceManifest {
  std::vector<SpeakerEntry> speakers;
};

UtteranceManifest LoadUtteranceManifest(const std::string& csv_path);
void SaveUtteranceManifest(const std::string& csv_path, const UtteranceManifest& m);

// One draw of the simulation protocol.
struct MixtureSpec {
  std::string target_utterance;
  std::vector<std::string> interference_utterances;
  double snr_db = 0.0;
  uint64_t seed = 0;
};

struct MixtureRecord {
  AudioSignal mixture;
  AudioSignal target_source;  // padded to mixture length
  std::vector<AudioSignal> interference_sources;
  std::string reference_utterance;  // distinct utterance of the target speaker
  double snr_db = 0.0;
  GenderPair gender_pair = GenderPair::kDiff;
};

struct SimulatedRecord {
  std::string id;
  MixtureSpec spec;
  MixtureRecord record;
  std::string target_speaker;
  std::string interference_speaker;
  std::string reference_path;
};

// Draws `count` two-speaker mixtures from the manifest. Each record derives
// its own RNG stream from (seed, index), so the corpus is reproducible
// bit-exactly and records may be generated in parallel.
std::vector<SimulatedRecord> SimulateCorpus(const UtteranceManifest& manifest,
                                            int count, double snr_low,
                                            double snr_high, uint64_t seed,
                                            int jobs = 1);

// JSON-lines mixture manifest entry (paths relative to the manifest or
// absolute; stored verbatim).
struct MixtureManifestEntry {
  std::string mixture_path;
  std::string target_path;
  std::vector<std::string> interf_paths;
  std::string reference_path;
  double snr_db = 0.0;
  GenderPair gender_pair = GenderPair::kDiff;

  // Derived, not serialized: stem of mixture_path.
  std::string id;
};

std::vector<MixtureManifestEntry> LoadMixtureManifest(const std::string& jsonl_path);
void SaveMixtureManifest(const std::string& jsonl_path,
                         const std::vector<MixtureManifestEntry>& entries);

// Hamming-windowed DFT log-magnitude spectrogram, frames x bins with
// bins = nfft/2+1, nfft the next power of two >= win_samples.
Eigen::MatrixXd LogSpectrogram(const AudioSignal& signal, int win_samples,
                               int hop_samples);

void WriteMatrixCsv(const std::string& path, const Eigen::MatrixXd& m);
// 8-bit binary PGM, min-max normalized.
void WriteMatrixPgm(const std::string& path, const Eigen::MatrixXd& m);

}  // namespace audio
}  // namespace tsenet

#endif  // TSENET_AUDIO_H_
