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

namespace safkit::detail {

// Real-to-complex FFT pair backed by FFTW3 (double precision, one-sided
// spectrum with n/2 + 1 bins). Instances are not thread safe; create one per
// thread. FFTW_ESTIMATE keeps plan selection deterministic.
class RealFft {
 public:
  explicit RealFft(int n);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  int size() const { return n_; }
  int bins() const { return n_ / 2 + 1; }

  // out[k] = sum_n in[n] e^{-j 2 pi k n / N}, k = 0..N/2.
  void forward(const double* in, std::complex<double>* out);
  // Inverse of forward, scaled by 1/N.
  void inverse(const std::complex<double>* in, double* out);

 private:
  int n_;
  void* fwd_plan_;
  void* inv_plan_;
  double* real_buf_;
  void* complex_buf_;  // fftw_complex[n/2+1]
};

}  // namespace safkit::detail
