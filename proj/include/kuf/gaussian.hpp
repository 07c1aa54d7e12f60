// Copyright 2026 The kuniform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KUF_GAUSSIAN_HPP_
#define KUF_GAUSSIAN_HPP_

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace kuf {

/// Gaussian integer re + im·i. Arithmetic throws Error on int64 overflow.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr GaussInt() = default;
  constexpr GaussInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussInt conj() const { return {re, -im}; }
  /// |z|^2.
  std::int64_t norm() const;
  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
  std::string to_string() const;

  friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

GaussInt operator+(const GaussInt& a, const GaussInt& b);
GaussInt operator-(const GaussInt& a, const GaussInt& b);
GaussInt operator-(const GaussInt& a);
GaussInt operator*(const GaussInt& a, const GaussInt& b);
GaussInt operator*(const GaussInt& a, std::int64_t s);
inline GaussInt& operator+=(GaussInt& a, const GaussInt& b) {
  return a = a + b;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

/// i^e for e taken mod 4: the exact phases available to Gaussian integers.
GaussInt i_power(std::int64_t e);

/// floor(sqrt(n)) if n is a perfect square.
std::optional<std::int64_t> exact_sqrt(std::int64_t n);

}  // namespace kuf

#endif  // KUF_GAUSSIAN_HPP_
