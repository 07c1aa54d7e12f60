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

#ifndef KUF_GF_HPP_
#define KUF_GF_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace kuf {

/// Exact arithmetic in GF(p^m).
///
/// Elements are integers in [0, p^m) whose base-p digits are the polynomial
/// coefficients, constant term least significant. The modulus is the
/// lexicographically smallest monic irreducible polynomial of degree m,
/// comparing coefficients from the constant term upward; for m = 1 that is
/// the polynomial x, so GF(p) is plain arithmetic mod p.
///
/// Multiplication and inversion use log/antilog tables built at construction.
/// Instances are immutable and are shared through FieldPtr.
class FiniteField {
 public:
  using Element = std::uint32_t;

  /// Throws DomainError for non-prime p, m < 1, or p^m above caps().field_order.
  static std::shared_ptr<const FiniteField> make(unsigned p, unsigned m);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  unsigned order() const { return q_; }

  /// Monic modulus coefficients c_0, ..., c_m (c_m = 1).
  const std::vector<unsigned>& modulus() const { return modulus_; }

  /// Generator of the multiplicative group used for the log tables.
  Element primitive_element() const { return primitive_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  /// Throws DomainError on zero.
  Element inv(Element a) const;
  Element div(Element a, Element b) const;
  Element pow(Element a, std::uint64_t e) const;

  bool contains(Element a) const { return a < q_; }

  /// "GF(9)" style display name.
  std::string name() const;

  bool operator==(const FiniteField& other) const {
    return p_ == other.p_ && m_ == other.m_;
  }

 private:
  FiniteField(unsigned p, unsigned m);
  void check(Element a) const;
  Element add_digits(Element a, Element b) const;
  Element neg_digits(Element a) const;

  unsigned p_;
  unsigned m_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  Element primitive_ = 1;
  std::vector<std::uint32_t> log_;     // log_[0] unused
  std::vector<Element> exp_;           // length 2(q-1), avoids a modulo
  std::vector<Element> add_table_;     // q*q when q <= 256, else empty
  std::vector<Element> neg_table_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// Same as FiniteField::make.
inline FieldPtr field_new(unsigned p, unsigned m) {
  return FiniteField::make(p, m);
}

/// True iff the polynomial with coefficients c_0..c_n over Z_p is
/// irreducible, by trial division against every monic polynomial of degree
/// at most n/2.
bool is_irreducible(const std::vector<unsigned>& coeffs, unsigned p);

/// Canonical modulus of GF(p^m) as chosen by FiniteField::make.
std::vector<unsigned> canonical_modulus(unsigned p, unsigned m);

}  // namespace kuf

#endif  // KUF_GF_HPP_
