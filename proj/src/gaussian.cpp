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

#include "kuf/gaussian.hpp"

#include <cmath>

#include "kuf/error.hpp"

namespace kuf {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error("exact amplitude arithmetic overflowed int64");
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error("exact amplitude arithmetic overflowed int64");
  }
  return r;
}

std::int64_t GaussInt::norm() const {
  return checked_add(checked_mul(re, re), checked_mul(im, im));
}

std::string GaussInt::to_string() const {
  if (im == 0) return std::to_string(re);
  if (re == 0) return std::to_string(im) + "i";
  return std::to_string(re) + (im < 0 ? "" : "+") + std::to_string(im) + "i";
}

GaussInt operator+(const GaussInt& a, const GaussInt& b) {
  return {checked_add(a.re, b.re), checked_add(a.im, b.im)};
}

GaussInt operator-(const GaussInt& a) {
  return {checked_mul(a.re, -1), checked_mul(a.im, -1)};
}

GaussInt operator-(const GaussInt& a, const GaussInt& b) { return a + (-b); }

GaussInt operator*(const GaussInt& a, const GaussInt& b) {
  return {checked_add(checked_mul(a.re, b.re), -checked_mul(a.im, b.im)),
          checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
}

GaussInt operator*(const GaussInt& a, std::int64_t s) {
  return {checked_mul(a.re, s), checked_mul(a.im, s)};
}

GaussInt i_power(std::int64_t e) {
  switch (((e % 4) + 4) % 4) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

std::optional<std::int64_t> exact_sqrt(std::int64_t n) {
  if (n < 0) return std::nullopt;
  auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (s > 0 && s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  if (s * s != n) return std::nullopt;
  return s;
}

}  // namespace kuf
