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

#include <gtest/gtest.h>

#include <vector>

#include "kuf/combinatorics.hpp"
#include "kuf/error.hpp"
#include "oracle.hpp"

namespace kuf {
namespace {

struct Order {
  unsigned p;
  unsigned m;
};

const std::vector<Order> kSmallFields = {{2, 1}, {3, 1}, {2, 2}, {5, 1},
                                         {7, 1}, {2, 3}, {3, 2}, {11, 1},
                                         {13, 1}, {2, 4}};

TEST(FiniteFieldTest, CanonicalModuli) {
  EXPECT_EQ(field_new(2, 1)->modulus(), (std::vector<unsigned>{0, 1}));
  EXPECT_EQ(field_new(2, 2)->modulus(), (std::vector<unsigned>{1, 1, 1}));
  EXPECT_EQ(field_new(3, 1)->order(), 3u);
  // Compared from the constant term up, 1 + x^2 + x^3 precedes 1 + x + x^3.
  EXPECT_EQ(field_new(2, 3)->modulus(), (std::vector<unsigned>{1, 0, 1, 1}));
  EXPECT_EQ(canonical_modulus(3, 2), (std::vector<unsigned>{1, 0, 1}));
}

TEST(FiniteFieldTest, SmallProducts) {
  EXPECT_EQ(field_new(3, 1)->mul(2, 2), 1u);
  // x * x = x + 1 modulo x^2 + x + 1.
  EXPECT_EQ(field_new(2, 2)->mul(2, 2), 3u);
  for (const auto& o : kSmallFields) {
    const auto f = field_new(o.p, o.m);
    for (unsigned a = 0; a < f->order(); ++a) EXPECT_EQ(f->mul(a, 1), a);
  }
}

TEST(FiniteFieldTest, RejectsBadParameters) {
  EXPECT_THROW(field_new(4, 1), DomainError);
  EXPECT_THROW(field_new(2, 0), DomainError);
  EXPECT_THROW(field_new(2, 17), DomainError);
  const auto f = field_new(5, 1);
  EXPECT_THROW(f->inv(0), DomainError);
  EXPECT_THROW(f->mul(5, 1), DomainError);
}

TEST(FiniteFieldTest, MultiplicationMatchesPolynomialOracle) {
  for (const auto& o : kSmallFields) {
    const auto f = field_new(o.p, o.m);
    for (unsigned a = 0; a < f->order(); ++a) {
      for (unsigned b = 0; b < f->order(); ++b) {
        ASSERT_EQ(f->mul(a, b), oracle::poly_mul(a, b, o.p, f->modulus()))
            << f->name() << " " << a << "*" << b;
      }
    }
  }
}

TEST(FiniteFieldTest, InversesUpToOrder64) {
  for (unsigned q = 2; q <= 64; ++q) {
    const auto pp = prime_power(q);
    if (!pp) continue;
    const auto f = field_new(pp->first, pp->second);
    for (unsigned a = 1; a < q; ++a) {
      ASSERT_EQ(f->mul(a, f->inv(a)), 1u) << f->name() << " a=" << a;
      ASSERT_EQ(f->div(a, a), 1u);
    }
  }
}

TEST(FiniteFieldTest, AxiomsExhaustiveUpTo16) {
  for (const auto& o : kSmallFields) {
    const auto f = field_new(o.p, o.m);
    const unsigned q = f->order();
    for (unsigned a = 0; a < q; ++a) {
      ASSERT_EQ(f->add(a, f->neg(a)), 0u);
      ASSERT_EQ(f->sub(a, a), 0u);
      for (unsigned b = 0; b < q; ++b) {
        ASSERT_EQ(f->add(a, b), f->add(b, a));
        ASSERT_EQ(f->mul(a, b), f->mul(b, a));
        for (unsigned c = 0; c < q; ++c) {
          ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
          ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
          ASSERT_EQ(f->mul(a, f->add(b, c)),
                    f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST(FiniteFieldTest, ConstructionIsDeterministic) {
  const auto a = field_new(3, 2);
  const auto b = FiniteField::make(3, 2);
  EXPECT_EQ(a->modulus(), b->modulus());
  for (unsigned x = 0; x < 9; ++x) {
    for (unsigned y = 0; y < 9; ++y) ASSERT_EQ(a->mul(x, y), b->mul(x, y));
  }
}

TEST(FiniteFieldTest, PrimitiveElementGeneratesGroup) {
  const auto f = field_new(2, 4);
  const auto g = f->primitive_element();
  std::vector<bool> seen(16, false);
  for (unsigned e = 0; e < 15; ++e) seen[f->pow(g, e)] = true;
  for (unsigned a = 1; a < 16; ++a) EXPECT_TRUE(seen[a]) << a;
}

TEST(FiniteFieldTest, Irreducibility) {
  EXPECT_TRUE(is_irreducible({1, 1, 1}, 2));
  EXPECT_FALSE(is_irreducible({1, 0, 1}, 2));  // (x+1)^2
  EXPECT_TRUE(is_irreducible({1, 0, 1}, 3));   // x^2 + 1 over Z_3
}

}  // namespace
}  // namespace kuf
