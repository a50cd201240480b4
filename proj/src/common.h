// src/common.h

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

#ifndef TSENET_COMMON_H_
#define TSENET_COMMON_H_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace tsenet {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] void Fail(const std::string& msg);

inline void Require(bool cond, const std::string& msg) {
  if (!cond) Fail(msg);
}

// printf-style formatting into a std::string.
std::string Format(const char* fmt, ...) __attribute__((format(printf, 1, 2)));

// Structured log lines on stderr ("level=I key=value ..." style payloads are
// up to the caller).
void LogInfo(const std::string& msg);
void LogWarn(const std::string& msg);

// Runs fn(i) for every i in [0, n). jobs <= 1 runs inline on the calling
// thread. Workers take indices in fixed strides; each index must write only
// to its own output slot so reductions stay with the caller and results do
// not depend on the thread count.
void ParallelFor(int64_t n, int jobs, const std::function<void(int64_t)>& fn);

}  // namespace tsenet

#endif  // TSENET_COMMON_H_
