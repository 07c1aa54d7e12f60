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

#include "kuf/gf.hpp"

#include <string>

#include "kuf/caps.hpp"
#include "kuf/combinatorics.hpp"
#include "kuf/error.hpp"

namespace kuf {
namespace {

using Poly = std::vector<unsigned>;  // c_0 first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial g over Z_p.
Poly poly_mod(Poly a, const Poly& g, unsigned p) {
  trim(a);
  const std::size_t dg = g.size() - 1;
  while (a.size() > dg) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * g[i]) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  return r;
}

Poly digits_of(std::uint32_t x, unsigned p, unsigned m) {
  Poly d(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = x % p;
    x /= p;
  }
  trim(d);
  return d;
}

std::uint32_t value_of(const Poly& d, unsigned p) {
  std::uint32_t x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

}  // namespace

bool is_irreducible(const std::vector<unsigned>& coeffs, unsigned p) {
  Poly f = coeffs;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 1) return true;
  for (unsigned deg = 1; deg <= n / 2; ++deg) {
    const std::uint64_t count = *checked_pow(p, deg);
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g(deg + 1, 0);
      std::uint64_t x = low;
      for (unsigned i = 0; i < deg; ++i) {
        g[i] = static_cast<unsigned>(x % p);
        x /= p;
      }
      g[deg] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<unsigned> canonical_modulus(unsigned p, unsigned m) {
  // Candidates ordered by (c_0, c_1, ..., c_{m-1}) with c_0 most significant.
  const std::uint64_t count = *checked_pow(p, m);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f(m + 1, 0);
    std::uint64_t x = idx;
    for (unsigned i = m; i-- > 0;) {
      f[i] = static_cast<unsigned>(x % p);
      x /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable for prime p
}

std::shared_ptr<const FiniteField> FiniteField::make(unsigned p, unsigned m) {
  if (!is_prime(p)) {
    throw DomainError("field characteristic " + std::to_string(p) +
                      " is not prime");
  }
  if (m < 1) throw DomainError("field extension degree must be >= 1");
  const auto q = checked_pow(p, m);
  if (!q || *q > caps().field_order) {
    throw DomainError("field order " + std::to_string(p) + "^" +
                      std::to_string(m) + " exceeds the cap of " +
                      std::to_string(caps().field_order));
  }
  return std::shared_ptr<const FiniteField>(new FiniteField(p, m));
}

FiniteField::FiniteField(unsigned p, unsigned m)
    : p_(p), m_(m), q_(static_cast<unsigned>(*checked_pow(p, m))),
      modulus_(canonical_modulus(p, m)) {
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    return value_of(
        poly_mod(poly_mul(digits_of(a, p_, m_), digits_of(b, p_, m_), p_),
                 modulus_, p_),
        p_);
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  const std::uint64_t group = q_ - 1;
  const auto factors = factorize(group);
  primitive_ = 1;
  for (std::uint32_t g = 1; g < q_; ++g) {
    bool generates = true;
    for (const auto& [r, e] : factors) {
      if (slow_pow(g, group / r) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) {
      primitive_ = g;
      break;
    }
  }

  exp_.assign(2 * group, 0);
  log_.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = x;
    exp_[i + group] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, primitive_);
  }

  if (q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Element a = 0; a < q_; ++a) {
      for (Element b = 0; b < q_; ++b) {
        add_table_[a * q_ + b] = add_digits(a, b);
      }
    }
  }
  neg_table_.resize(q_);
  for (Element a = 0; a < q_; ++a) neg_table_[a] = neg_digits(a);
}

FiniteField::Element FiniteField::add_digits(Element a, Element b) const {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) return (a + b) % p_;
  Element r = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Element FiniteField::neg_digits(Element a) const {
  if (p_ == 2) return a;
  Element r = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

void FiniteField::check(Element a) const {
  if (a >= q_) {
    throw DomainError("element " + std::to_string(a) + " outside " + name());
  }
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  check(a);
  check(b);
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  return add_digits(a, b);
}

FiniteField::Element FiniteField::neg(Element a) const {
  check(a);
  return neg_table_[a];
}

FiniteField::Element FiniteField::sub(Element a, Element b) const {
  return add(a, neg(b));
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  check(a);
  check(b);
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

FiniteField::Element FiniteField::inv(Element a) const {
  check(a);
  if (a == 0) throw DomainError("inverse of zero in " + name());
  const std::uint32_t group = q_ - 1;
  return exp_[(group - log_[a]) % group];
}

FiniteField::Element FiniteField::div(Element a, Element b) const {
  return mul(a, inv(b));
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  check(a);
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = q_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % group)) % group];
}

std::string FiniteField::name() const {
  return "GF(" + std::to_string(q_) + ")";
}

}  // namespace kuf
