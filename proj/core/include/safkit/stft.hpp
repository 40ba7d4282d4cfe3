// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 The safkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace safkit {

enum class Window { kHann, kSqrtHann };

// Defaults: 25 ms window, 10 ms hop at 16 kHz, 512-point FFT.
struct StftConfig {
  double sample_rate_hz = 16000.0;
  int win_length = 400;
  int hop = 160;
  int fft_size = 512;
  Window window = Window::kSqrtHann;

  // Throws std::invalid_argument unless hop <= win_length <= fft_size,
  // fft_size is a power of two and sample_rate_hz > 0.
  void validate() const;

  int num_bins() const { return fft_size / 2 + 1; }

  // Physical frequency of one-sided bin k; the Nyquist sits at bin F-1,
  // so f_hz(k) = k * f_s / (2 (F-1)).
  double bin_hz(int k) const {
    return static_cast<double>(k) * sample_rate_hz / fft_size;
  }
};

using MultiChannelSamples = std::vector<std::vector<double>>;

// One-sided complex T-F representation, [channel, bin, frame], frame fastest.
struct ComplexSpectrogram {
  StftConfig config;
  int channels = 0;
  int bins = 0;
  int frames = 0;
  std::vector<std::complex<double>> data;

  static ComplexSpectrogram zeros(const StftConfig& cfg, int channels,
                                  int frames);

  std::complex<double>& at(int m, int f, int t) {
    return data[(static_cast<std::size_t>(m) * bins + f) * frames + t];
  }
  const std::complex<double>& at(int m, int f, int t) const {
    return data[(static_cast<std::size_t>(m) * bins + f) * frames + t];
  }
  double power(int m, int f, int t) const { return std::norm(at(m, f, t)); }
};

// Number of analysis frames for a signal of n samples: frame t covers
// samples [t*hop, t*hop + win_length); the final partial frame is
// zero-padded.
int num_frames(std::size_t n_samples, const StftConfig& cfg);

std::vector<double> make_window(const StftConfig& cfg);

// Throws std::invalid_argument on empty input, mismatched channel lengths or
// channels shorter than one window.
ComplexSpectrogram forward_stft(const MultiChannelSamples& wave,
                                const StftConfig& cfg);

// Weighted overlap-add synthesis with the analysis window; exact wherever the
// window-product normalization is nonzero, i.e. everywhere except up to half
// a window at each edge.
MultiChannelSamples inverse_stft(const ComplexSpectrogram& spec);

}  // namespace safkit
