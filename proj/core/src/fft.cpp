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

#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <stdexcept>

namespace safkit::detail {

RealFft::RealFft(int n) : n_(n) {
  if (n < 2 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("RealFft: size must be a power of two >= 2");
  }
  real_buf_ = fftw_alloc_real(static_cast<std::size_t>(n));
  auto* cbuf = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
  complex_buf_ = cbuf;
  fwd_plan_ = fftw_plan_dft_r2c_1d(n, real_buf_, cbuf, FFTW_ESTIMATE);
  inv_plan_ = fftw_plan_dft_c2r_1d(n, cbuf, real_buf_, FFTW_ESTIMATE);
  if (fwd_plan_ == nullptr || inv_plan_ == nullptr) {
    throw std::runtime_error("RealFft: fftw plan creation failed");
  }
}

RealFft::~RealFft() {
  fftw_destroy_plan(static_cast<fftw_plan>(fwd_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(inv_plan_));
  fftw_free(real_buf_);
  fftw_free(complex_buf_);
}

void RealFft::forward(const double* in, std::complex<double>* out) {
  std::memcpy(real_buf_, in, sizeof(double) * static_cast<std::size_t>(n_));
  fftw_execute(static_cast<fftw_plan>(fwd_plan_));
  std::memcpy(out, complex_buf_,
              sizeof(std::complex<double>) * static_cast<std::size_t>(bins()));
}

void RealFft::inverse(const std::complex<double>* in, double* out) {
  std::memcpy(complex_buf_, in,
              sizeof(std::complex<double>) * static_cast<std::size_t>(bins()));
  fftw_execute(static_cast<fftw_plan>(inv_plan_));
  const double scale = 1.0 / n_;
  for (int i = 0; i < n_; ++i) out[i] = real_buf_[i] * scale;
}

}  // namespace safkit::detail
