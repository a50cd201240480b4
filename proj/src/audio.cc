// src/audio.cc

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

#include "audio.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "common.h"
#include "fft.h"
#include "io_util.h"
#include "rng.h"

#include <nlohmann/json.hpp>

namespace tsenet {
namespace audio {

using json = nlohmann::ordered_json;

double SignalPower(const AudioSignal& signal) {
  Require(!signal.samples.empty(), "SignalPower: empty signal");
  double acc = 0.0;
  for (double s : signal.samples) acc += s * s;
  return acc / static_cast<double>(signal.samples.size());
}

AudioSignal ScaleToSnr(const AudioSignal& target, const AudioSignal& interference,
                       double snr_db) {
  Require(std::isfinite(snr_db), "ScaleToSnr: snr_db must be finite");
  double p_target = SignalPower(target);
  double p_interf = SignalPower(interference);
  Require(p_target > 0.0, "ScaleToSnr: zero-power target");
  Require(p_interf > 0.0, "ScaleToSnr: zero-power interference");
  double gain = std::sqrt(p_target / p_interf) * std::pow(10.0, -snr_db / 20.0);
  AudioSignal out = interference;
  for (double& s : out.samples) s *= gain;
  return out;
}

double MeasureSnrDb(const AudioSignal& target, const AudioSignal& interference) {
  return 10.0 * std::log10(SignalPower(target) / SignalPower(interference));
}

MixResult Mix(const AudioSignal& target, const std::vector<AudioSignal>& interferences) {
  Require(!interferences.empty(), "Mix: need at least one interference");
  int64_t max_len = target.length();
  for (const auto& s : interferences) {
    Require(s.sample_rate_hz == target.sample_rate_hz, "Mix: sample-rate mismatch");
    max_len = std::max(max_len, s.length());
  }
  auto padded = [max_len](const AudioSignal& s) {
    AudioSignal p = s;
    p.samples.resize(static_cast<size_t>(max_len), 0.0);  // tail padding
    return p;
  };
  MixResult out;
  out.target_padded = padded(target);
  out.mixture = out.target_padded;
  for (const auto& s : interferences) {
    AudioSignal p = padded(s);
    for (int64_t i = 0; i < max_len; ++i) {
      out.mixture.samples[static_cast<size_t>(i)] += p.samples[static_cast<size_t>(i)];
    }
    out.interferences_padded.push_back(std::move(p));
  }
  return out;
}

std::string GenderPairName(GenderPair g) {
  return g == GenderPair::kDiff ? "diff" : "same";
}

GenderPair GenderPairFromName(const std::string& name) {
  if (name == "diff") return GenderPair::kDiff;
  if (name == "same") return GenderPair::kSame;
  Fail("unknown gender_pair value: " + name);
}

namespace {

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

UtteranceManifest LoadUtteranceManifest(const std::string& csv_path) {
  std::ifstream in(csv_path);
  Require(in.good(), "cannot open utterance manifest: " + csv_path);
  std::string line;
  Require(static_cast<bool>(std::getline(in, line)), "empty manifest: " + csv_path);
  auto header = SplitCsvLine(line);
  Require(header.size() == 3 && header[0] == "speaker_id" && header[1] == "gender" &&
              header[2] == "path",
          "utterance manifest must have header speaker_id,gender,path: " + csv_path);

  UtteranceManifest m;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = SplitCsvLine(line);
    Require(f.size() == 3, "malformed manifest row: " + line);
    const std::string& spk = f[0];
    const std::string& gender = f[1];
    Require(gender == "m" || gender == "f", "gender must be 'm' or 'f': " + line);
    SpeakerEntry* entry = nullptr;
    for (auto& s : m.speakers) {
      if (s.speaker_id == spk) {
        entry = &s;
        break;
      }
    }
    if (entry == nullptr) {
      m.speakers.push_back(SpeakerEntry{spk, gender, {}});
      entry = &m.speakers.back();
    } else {
      Require(entry->gender == gender, "inconsistent gender for speaker " + spk);
    }
    entry->utterances.push_back(UtteranceInfo{PathStem(f[2]), f[2]});
  }
  Require(!m.speakers.empty(), "manifest lists no utterances: " + csv_path);
  return m;
}

void SaveUtteranceManifest(const std::string& csv_path, const UtteranceManifest& m) {
  std::ostringstream out;
  out << "speaker_id,gender,path\n";
  for (const auto& s : m.speakers) {
    for (const auto& u : s.utterances) {
      out << s.speaker_id << ',' << s.gender << ',' << u.path << '\n';
    }
  }
  WriteFileBytes(csv_path, out.str());
}

std::vector<SimulatedRecord> SimulateCorpus(const UtteranceManifest& manifest,
                                            int count, double snr_low,
                                            double snr_high, uint64_t seed,
                                            int jobs) {
  Require(count >= 0, "SimulateCorpus: negative count");
  Require(snr_low <= snr_high, "SimulateCorpus: snr_low > snr_high");
  Require(manifest.speakers.size() >= 2, "SimulateCorpus: need at least two speakers");
  bool any_target = false;
  for (const auto& s : manifest.speakers) {
    if (s.utterances.size() >= 2) any_target = true;
  }
  Require(any_target,
          "SimulateCorpus: no speaker has >= 2 utterances (one spare is needed "
          "for the reference)");

  const int n_speakers = static_cast<int>(manifest.speakers.size());
  std::vector<SimulatedRecord> records(static_cast<size_t>(count));

  ParallelFor(count, jobs, [&](int64_t index) {
    Rng rng(seed, static_cast<uint64_t>(index));

    // Target speaker needs a spare utterance for the reference; re-draw
    // otherwise.
    int target_spk = -1;
    for (int attempt = 0; attempt < 10000; ++attempt) {
      int cand = static_cast<int>(rng.UniformInt(n_speakers));
      if (manifest.speakers[static_cast<size_t>(cand)].utterances.size() >= 2) {
        target_spk = cand;
        break;
      }
    }
    Require(target_spk >= 0, "SimulateCorpus: failed to draw a target speaker");
    const auto& tgt = manifest.speakers[static_cast<size_t>(target_spk)];

    int target_utt = static_cast<int>(rng.UniformInt(static_cast<int64_t>(tgt.utterances.size())));

    int interf_spk = static_cast<int>(rng.UniformInt(n_speakers - 1));
    if (interf_spk >= target_spk) ++interf_spk;
    const auto& itf = manifest.speakers[static_cast<size_t>(interf_spk)];
    int interf_utt = static_cast<int>(rng.UniformInt(static_cast<int64_t>(itf.utterances.size())));

    double snr_db = rng.Uniform(snr_low, snr_high);

    int ref_utt = static_cast<int>(rng.UniformInt(static_cast<int64_t>(tgt.utterances.size()) - 1));
    if (ref_utt >= target_utt) ++ref_utt;

    AudioSignal target = ReadWav(tgt.utterances[static_cast<size_t>(target_utt)].path, 0);
    AudioSignal interf = ReadWav(itf.utterances[static_cast<size_t>(interf_utt)].path, 0);
    Require(target.sample_rate_hz == interf.sample_rate_hz,
            "SimulateCorpus: sample-rate mismatch between utterances");

    AudioSignal scaled = ScaleToSnr(target, interf, snr_db);
    MixResult mixed = Mix(target, {scaled});

    SimulatedRecord rec;
    rec.id = Format("mix_%06lld", static_cast<long long>(index));
    rec.spec.target_utterance = tgt.utterances[static_cast<size_t>(target_utt)].id;
    rec.spec.interference_utterances = {itf.utterances[static_cast<size_t>(interf_utt)].id};
    rec.spec.snr_db = snr_db;
    rec.spec.seed = seed;
    rec.record.mixture = std::move(mixed.mixture);
    rec.record.target_source = std::move(mixed.target_padded);
    rec.record.interference_sources = std::move(mixed.interferences_padded);
    rec.record.reference_utterance = tgt.utterances[static_cast<size_t>(ref_utt)].id;
    rec.record.snr_db = snr_db;
    rec.record.gender_pair =
        tgt.gender == itf.gender ? GenderPair::kSame : GenderPair::kDiff;
    rec.target_speaker = tgt.speaker_id;
    rec.interference_speaker = itf.speaker_id;
    rec.reference_path = tgt.utterances[static_cast<size_t>(ref_utt)].path;
    records[static_cast<size_t>(index)] = std::move(rec);
  });

  return records;
}

std::vector<MixtureManifestEntry> LoadMixtureManifest(const std::string& jsonl_path) {
  std::ifstream in(jsonl_path);
  Require(in.good(), "cannot open mixture manifest: " + jsonl_path);
  std::vector<MixtureManifestEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    MixtureManifestEntry e;
    e.mixture_path = j.at("mixture_path").get<std::string>();
    e.target_path = j.at("target_path").get<std::string>();
    e.interf_paths = j.at("interf_paths").get<std::vector<std::string>>();
    e.reference_path = j.at("reference_path").get<std::string>();
    e.snr_db = j.at("snr_db").get<double>();
    e.gender_pair = GenderPairFromName(j.at("gender_pair").get<std::string>());
    e.id = PathStem(e.mixture_path);
    entries.push_back(std::move(e));
  }
  return entries;
}

void SaveMixtureManifest(const std::string& jsonl_path,
                         const std::vector<MixtureManifestEntry>& entries) {
  std::ostringstream out;
  for (const auto& e : entries) {
    json j;
    j["mixture_path"] = e.mixture_path;
    j["target_path"] = e.target_path;
    j["interf_paths"] = e.interf_paths;
    j["reference_path"] = e.reference_path;
    j["snr_db"] = e.snr_db;
    j["gender_pair"] = GenderPairName(e.gender_pair);
    out << j.dump() << '\n';
  }
  WriteFileBytes(jsonl_path, out.str());
}

Eigen::MatrixXd LogSpectrogram(const AudioSignal& signal, int win_samples,
                               int hop_samples) {
  Require(hop_samples > 0 && win_samples >= hop_samples,
          "LogSpectrogram: need win_samples >= hop_samples > 0");
  const int64_t t = signal.length();
  Require(t >= win_samples, "LogSpectrogram: signal shorter than one window");
  const int64_t frames = (t - win_samples) / hop_samples + 1;
  const int nfft = NextPow2(win_samples);
  const int bins = nfft / 2 + 1;
  constexpr double kEps = 1e-12;

  std::vector<double> window(static_cast<size_t>(win_samples));
  for (int i = 0; i < win_samples; ++i) {
    window[static_cast<size_t>(i)] =
        0.54 - 0.46 * std::cos(2.0 * M_PI * i / (win_samples - 1));
  }

  Eigen::MatrixXd out(frames, bins);
  std::vector<double> frame(static_cast<size_t>(win_samples));
  for (int64_t f = 0; f < frames; ++f) {
    for (int i = 0; i < win_samples; ++i) {
      frame[static_cast<size_t>(i)] =
          signal.samples[static_cast<size_t>(f * hop_samples + i)] *
          window[static_cast<size_t>(i)];
    }
    std::vector<double> power = PowerSpectrum(frame.data(), win_samples, nfft);
    for (int k = 0; k < bins; ++k) {
      out(f, k) = std::log(std::sqrt(power[static_cast<size_t>(k)]) + kEps);
    }
  }
  return out;
}

void WriteMatrixCsv(const std::string& path, const Eigen::MatrixXd& m) {
  std::ostringstream out;
  out.precision(12);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ',';
      out << m(r, c);
    }
    out << '\n';
  }
  WriteFileBytes(path, out.str());
}

void WriteMatrixPgm(const std::string& path, const Eigen::MatrixXd& m) {
  Require(m.size() > 0, "WriteMatrixPgm: empty matrix");
  const double lo = m.minCoeff();
  const double hi = m.maxCoeff();
  const double scale = hi > lo ? 255.0 / (hi - lo) : 0.0;
  std::string body;
  body.reserve(static_cast<size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      int v = static_cast<int>(std::lround((m(r, c) - lo) * scale));
      body.push_back(static_cast<char>(std::clamp(v, 0, 255)));
    }
  }
  std::string header = Format("P5\n%lld %lld\n255\n",
                              static_cast<long long>(m.cols()),
                              static_cast<long long>(m.rows()));
  WriteFileBytes(path, header + body);
}

}  // namespace audio
}  // namespace tsenet
