// src/io_util.cc

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

#include "io_util.h"

#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "common.h"

static_assert(std::endian::native == std::endian::little,
              "binary formats assume a little-endian host");

namespace tsenet {

namespace fs = std::filesystem;

namespace {

const uint32_t* Crc32Table() {
  static const auto table = [] {
    static uint32_t t[256];
    for (uint32_t i = 0; i < 256; ++i) {
      uint32_t c = i;
      for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
      t[i] = c;
    }
    return t;
  }();
  return table;
}

}  // namespace

uint32_t Crc32(const void* data, size_t len, uint32_t seed) {
  const uint32_t* table = Crc32Table();
  const auto* p = static_cast<const unsigned char*>(data);
  uint32_t c = seed ^ 0xFFFFFFFFu;
  for (size_t i = 0; i < len; ++i) c = table[(c ^ p[i]) & 0xFF] ^ (c >> 8);
  return c ^ 0xFFFFFFFFu;
}

uint64_t Fnv1a64(const std::string& data) {
  uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::string ReadFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  Require(in.good(), "cannot open file for reading: " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  Require(!in.bad(), "read error: " + path);
  return bytes;
}

void WriteFileBytes(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  Require(out.good(), "cannot open file for writing: " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  Require(out.good(), "write error: " + path);
}

bool FileExists(const std::string& path) {
  std::error_code ec;
  return fs::exists(path, ec);
}

void MakeDirs(const std::string& path) {
  if (path.empty()) return;
  std::error_code ec;
  fs::create_directories(path, ec);
  Require(!ec, "cannot create directory: " + path + " (" + ec.message() + ")");
}

std::string JoinPath(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  return (fs::path(a) / b).string();
}

std::string PathStem(const std::string& path) {
  return fs::path(path).stem().string();
}

void BinaryWriter::PutBytes(const void* p, size_t n) {
  buf_.append(static_cast<const char*>(p), n);
}
void BinaryWriter::PutU32(uint32_t v) { PutBytes(&v, sizeof v); }
void BinaryWriter::PutU64(uint64_t v) { PutBytes(&v, sizeof v); }
void BinaryWriter::PutI64(int64_t v) { PutBytes(&v, sizeof v); }
void BinaryWriter::PutF64(double v) { PutBytes(&v, sizeof v); }
void BinaryWriter::PutF32(float v) { PutBytes(&v, sizeof v); }
void BinaryWriter::PutString(const std::string& s) {
  PutU32(static_cast<uint32_t>(s.size()));
  PutBytes(s.data(), s.size());
}

void BinaryReader::GetBytes(void* p, size_t n) {
  Require(pos_ + n <= buf_.size(), "binary read past end of buffer");
  std::memcpy(p, buf_.data() + pos_, n);
  pos_ += n;
}
uint32_t BinaryReader::GetU32() {
  uint32_t v;
  GetBytes(&v, sizeof v);
  return v;
}
uint64_t BinaryReader::GetU64() {
  uint64_t v;
  GetBytes(&v, sizeof v);
  return v;
}
int64_t BinaryReader::GetI64() {
  int64_t v;
  GetBytes(&v, sizeof v);
  return v;
}
double BinaryReader::GetF64() {
  double v;
  GetBytes(&v, sizeof v);
  return v;
}
float BinaryReader::GetF32() {
  float v;
  GetBytes(&v, sizeof v);
  return v;
}
std::string BinaryReader::GetString() {
  uint32_t n = GetU32();
  Require(pos_ + n <= buf_.size(), "binary read past end of buffer");
  std::string s(buf_.data() + pos_, n);
  pos_ += n;
  return s;
}

}  // namespace tsenet
