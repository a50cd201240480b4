// src/io_util.h

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

#ifndef TSENET_IO_UTIL_H_
#define TSENET_IO_UTIL_H_

#include <cstdint>
#include <string>
#include <vector>

namespace tsenet {

// CRC-32 (IEEE 802.3, reflected 0xEDB88320), used to checksum model files.
uint32_t Crc32(const void* data, size_t len, uint32_t seed = 0);

// FNV-1a 64-bit, used for config hashes in run manifests.
uint64_t Fnv1a64(const std::string& data);

std::string ReadFileBytes(const std::string& path);
void WriteFileBytes(const std::string& path, const std::string& bytes);

bool FileExists(const std::string& path);
void MakeDirs(const std::string& path);
std::string JoinPath(const std::string& a, const std::string& b);
// Base name without directory or extension: "/x/y/mix_003.wav" -> "mix_003".
std::string PathStem(const std::string& path);

// Little-endian serializer over an in-memory buffer. All binary artifacts
// (checkpoints, UBM/TV models, feature archives) go through these, so the
// byte layout is identical on every host.
class BinaryWriter {
 public:
  void PutBytes(const void* p, size_t n);
  void PutU32(uint32_t v);
  void PutU64(uint64_t v);
  void PutI64(int64_t v);
  void PutF64(double v);
  void PutF32(float v);
  void PutString(const std::string& s);  // u32 length + raw bytes

  const std::string& bytes() const { return buf_; }
  std::string TakeBytes() { return std::move(buf_); }

 private:
  std::string buf_;
};

class BinaryReader {
 public:
  explicit BinaryReader(std::string bytes) : buf_(std::move(bytes)) {}

  void GetBytes(void* p, size_t n);
  uint32_t GetU32();
  uint64_t GetU64();
  int64_t GetI64();
  double GetF64();
  float GetF32();
  std::string GetString();

  size_t pos() const { return pos_; }
  size_t size() const { return buf_.size(); }
  bool AtEnd() const { return pos_ == buf_.size(); }
  const std::string& bytes() const { return buf_; }

 private:
  std::string buf_;
  size_t pos_ = 0;
};

}  // namespace tsenet

#endif  // TSENET_IO_UTIL_H_
