// src/fft.h

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

#ifndef TSENET_FFT_H_
#define TSENET_FFT_H_

#include <complex>
#include <cstdint>
#include <vector>

namespace tsenet {

int NextPow2(int n);

// In-place iterative radix-2 FFT. a.size() must be a power of two.
// The inverse transform includes the 1/N factor.
void Fft(std::vector<std::complex<double>>& a, bool inverse);

// Magnitude-squared spectrum of a real frame, zero-padded to nfft
// (power of two, >= n). Returns nfft/2 + 1 bins.
std::vector<double> PowerSpectrum(const double* frame, int n, int nfft);

}  // namespace tsenet

#endif  // TSENET_FFT_H_
