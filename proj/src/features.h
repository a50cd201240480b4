// src/features.h

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

#ifndef TSENET_FEATURES_H_
#define TSENET_FEATURES_H_

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "audio.h"

namespace tsenet {
namespace features {

// 25 ms / 10 ms framing at 8 kHz; 19 MFCCs + log energy, deltas appended
// downstream for the 60-dimensional front end.
struct FrameConfig {
  int win_samples = 200;
  int hop_samples = 80;
  int n_mels = 23;
  int n_ceps = 19;
  double preemph = 0.97;
  double energy_floor = 1e-10;   // floor inside the log for energy and mel banks
  double vad_threshold_db = 30;  // speech iff within this of the utterance max
  int cmn_window_frames = 301;   // 3 s at a 10 ms hop

  int StaticDim() const { return n_ceps + 1; }
};

int64_t NumFrames(int64_t num_samples, int win_samples, int hop_samples);

// frames x (n_ceps+1): coefficients c1..c19 then log frame energy.
// Per frame: pre-emphasis, Hamming window, power spectrum, mel filter bank,
// log, DCT-II (orthonormal, c0 discarded). Energy is the log of the sum of
// squared windowed samples, floored at log(energy_floor).
Eigen::MatrixXd ExtractMfccEnergy(const audio::AudioSignal& signal,
                                  const FrameConfig& cfg);

// Regression deltas with window +-2 (coefficients [-2,-1,0,1,2]/10) and
// replicated edges; delta-deltas by the same rule. frames x 3*dim.
Eigen::MatrixXd AppendDeltas(const Eigen::MatrixXd& feats);

// Energy VAD over the log-energy column (last column of the static block).
// A frame is speech iff its log energy is within threshold_db of the
// utterance maximum. A fully silent utterance keeps only the argmax frame.
std::vector<bool> EnergyVad(const Eigen::MatrixXd& static_feats, double threshold_db,
                            double energy_floor_log);

// Sliding-window cepstral mean subtraction over all columns; window
// clipped to the utterance bounds.
Eigen::MatrixXd SlidingCmn(const Eigen::MatrixXd& feats, int window_frames);

// MFCC+energy -> deltas -> CMN -> VAD-filtered rows. Always 60 columns.
Eigen::MatrixXd FeaturePipeline(const audio::AudioSignal& signal,
                                const FrameConfig& cfg);

// Feature archive: little-endian records {id, frames, dim, f32 row-major},
// plus a JSON-lines index {id, offset, frames, dim}.
struct ArchiveEntry {
  std::string id;
  Eigen::MatrixXd feats;
};

void WriteFeatureArchive(const std::string& archive_path,
                         const std::string& index_path,
                         const std::vector<ArchiveEntry>& entries);
std::vector<ArchiveEntry> ReadFeatureArchive(const std::string& archive_path);
// Random access through the index.
Eigen::MatrixXd ReadArchiveEntry(const std::string& archive_path,
                                 const std::string& index_path,
                                 const std::string& id);

}  // namespace features
}  // namespace tsenet

#endif  // TSENET_FEATURES_H_
