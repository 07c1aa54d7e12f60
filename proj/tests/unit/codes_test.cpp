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

#include "kuf/codes.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "corpus.hpp"
#include "kuf/caps.hpp"
#include "kuf/combinatorics.hpp"
#include "kuf/error.hpp"
#include "oracle.hpp"

namespace kuf {
namespace {

using corpus::mds;

// G * G^T over the field vanishes.
bool self_orthogonal(const LinearCode& c) {
  const FiniteField& f = c.field();
  for (std::size_t a = 0; a < c.dimension(); ++a) {
    for (std::size_t b = 0; b < c.dimension(); ++b) {
      unsigned acc = 0;
      for (std::size_t j = 0; j < c.length(); ++j) {
        acc = f.add(acc, f.mul(c.generator().at(a, j), c.generator().at(b, j)));
      }
      if (acc != 0) return false;
    }
  }
  return true;
}

TEST(LinearCodeTest, TernaryMds) {
  const LinearCode c = mds(3, 1, 2);
  EXPECT_EQ(c.length(), 4u);
  EXPECT_EQ(c.dimension(), 2u);
  EXPECT_EQ(c.min_distance(), 3);
  EXPECT_EQ(c.dual_distance(), 3);
  EXPECT_EQ(dual(c).min_distance(), 3);
  EXPECT_EQ(describe(c), "[4,2,3]_3");
}

TEST(LinearCodeTest, RepetitionAndFullSpace) {
  const LinearCode rep = mds(5, 1, 1);
  EXPECT_EQ(rep.length(), 6u);
  EXPECT_EQ(rep.min_distance(), 6);
  EXPECT_EQ(oracle::min_distance(rep), 6);

  const LinearCode full = mds(2, 1, 3);
  EXPECT_EQ(full.min_distance(), 1);
  EXPECT_EQ(full.dual_distance(), kInfiniteDistance);
  const LinearCode zero = dual(full);
  EXPECT_EQ(zero.dimension(), 0u);
  EXPECT_EQ(zero.min_distance(), kInfiniteDistance);
}

TEST(LinearCodeTest, MdsParametersUpToOrder9) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto pp = prime_power(q);
    const auto f = field_new(pp->first, pp->second);
    for (std::size_t t = 1; t <= q; ++t) {
      const LinearCode c = mds_code(f, t);
      const int w = static_cast<int>(q - t + 2);
      if (*checked_pow(q, static_cast<unsigned>(t)) <= (1u << 20)) {
        ASSERT_EQ(c.min_distance(), w) << q << " " << t;
      } else {
        // Too many codewords; the parity check's columns give w instead.
        ASSERT_EQ(smallest_dependent_columns(dual(c)), w) << q << " " << t;
      }
      ASSERT_EQ(c.dual_distance(), static_cast<int>(t + 1)) << q << " " << t;
    }
    EXPECT_EQ(mds_code(f, q + 1).dual_distance(), kInfiniteDistance);
    EXPECT_THROW(mds_code(f, 0), DomainError);
    EXPECT_THROW(mds_code(f, q + 2), DomainError);
  }
}

TEST(LinearCodeTest, DistancesMatchEnumerationOracle) {
  for (const auto& nc : corpus::codes()) {
    SCOPED_TRACE(nc.name);
    EXPECT_EQ(nc.code.min_distance(), oracle::min_distance(nc.code));
    if (nc.code.length() <= 8) {
      EXPECT_EQ(nc.code.dual_distance(),
                oracle::smallest_dependent_columns(nc.code));
    }
    EXPECT_EQ(nc.code.dual_distance(), smallest_dependent_columns(nc.code));
  }
}

TEST(LinearCodeTest, RandomBinaryCodeAgainstPairwiseDistance) {
  std::mt19937_64 rng(11);
  const LinearCode c = corpus::random_code(field_new(2, 1), 6, 3, rng);
  const auto words = oracle::all_codewords(c);
  ASSERT_EQ(words.size(), 8u);
  int best = kInfiniteDistance;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i == j) continue;
      int diff = 0;
      for (std::size_t s = 0; s < 6; ++s) diff += words[i][s] != words[j][s];
      best = std::min(best, diff);
    }
  }
  EXPECT_EQ(c.min_distance(), best);
}

TEST(LinearCodeTest, DualIsAnInvolution) {
  for (const auto& nc : corpus::codes()) {
    SCOPED_TRACE(nc.name);
    const LinearCode dd = dual(dual(nc.code));
    EXPECT_TRUE(dd.same_codewords(nc.code));
    EXPECT_EQ(dual(nc.code).dimension(),
              nc.code.length() - nc.code.dimension());
  }
}

TEST(LinearCodeTest, ParityCheckAnnihilatesCode) {
  for (const auto& nc : corpus::codes()) {
    SCOPED_TRACE(nc.name);
    const GfMatrix& h = nc.code.parity_check().h;
    const FiniteField& f = nc.code.field();
    ASSERT_EQ(h.rows(), nc.code.length() - nc.code.dimension());
    if (h.rows() > 0) EXPECT_EQ(rank(f, h), h.rows());
    for (std::size_t i = 0; i < nc.code.dimension(); ++i) {
      for (std::size_t r = 0; r < h.rows(); ++r) {
        unsigned acc = 0;
        for (std::size_t j = 0; j < h.cols(); ++j) {
          acc = f.add(acc, f.mul(h.at(r, j), nc.code.generator().at(i, j)));
        }
        ASSERT_EQ(acc, 0u);
      }
    }
  }
}

TEST(LinearCodeTest, DirectSumExamples) {
  const LinearCode s = direct_sum(mds(3, 1, 2), mds(3, 1, 2));
  EXPECT_EQ(describe(s), "[8,4,3]_3");
  EXPECT_EQ(s.dual_distance(), 3);

  const LinearCode a = mds(5, 1, 2);
  const LinearCode b = puncture(mds(5, 1, 2), 4);
  EXPECT_EQ(describe(a), "[6,2,5]_5");
  EXPECT_EQ(describe(b), "[4,2,3]_5");
  const LinearCode ab = direct_sum(a, b);
  EXPECT_EQ(ab.min_distance(), 3);
  EXPECT_EQ(oracle::min_distance(ab), 3);
  EXPECT_EQ(ab.dual_distance(), std::min(a.dual_distance(), b.dual_distance()));

  EXPECT_THROW(direct_sum(mds(3, 1, 2), mds(5, 1, 2)), FieldMismatch);
}

TEST(LinearCodeTest, SelfDuality) {
  const LinearCode golay = corpus::bundled_code("golay12_3");
  EXPECT_TRUE(is_self_dual(golay));
  EXPECT_TRUE(self_orthogonal(golay));
  EXPECT_EQ(golay.min_distance(), 6);
  EXPECT_TRUE(dual(golay).same_codewords(golay));

  const LinearCode q4 = corpus::bundled_code("selfdual12_4");
  EXPECT_TRUE(is_self_dual(q4));
  EXPECT_EQ(q4.min_distance(), 6);

  // The ternary [4,2,3] code is the tetracode, which is self-dual.
  const LinearCode tetra = mds(3, 1, 2);
  EXPECT_TRUE(self_orthogonal(tetra));
  EXPECT_TRUE(is_self_dual(tetra));

  EXPECT_FALSE(is_self_dual(mds(5, 1, 2)));
  EXPECT_FALSE(is_self_dual(mds(2, 1, 3)));
}

TEST(LinearCodeTest, RejectsRankDeficientGenerator) {
  const auto f = field_new(3, 1);
  EXPECT_THROW(LinearCode(f, GfMatrix::from_rows({{1, 2, 0}, {2, 1, 0}}, 3)),
               RankError);
  EXPECT_THROW(LinearCode(f, GfMatrix::from_rows({{1, 3, 0}}, 3)), DomainError);
}

TEST(LinearCodeTest, EnumerationCapRefuses) {
  const Caps saved = caps();
  Caps tight = saved;
  tight.codewords = 100;
  set_caps(tight);
  EXPECT_THROW(mds(5, 1, 3).min_distance(), CapExceeded);
  set_caps(saved);
}

TEST(LinearCodeTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "kuf_codes_test.code";
  const LinearCode c = mds(3, 1, 2);
  save_code(c, path);
  const LinearCode back = load_code(path);
  EXPECT_EQ(back.generator(), c.generator());
  std::filesystem::remove(path);
}

TEST(LinearCodeTest, ParseErrors) {
  try {
    parse_code("code 3 1 4 2\n1 1 1 0\n0 1 2\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_code("code 3 1 3 2\n1 1 0\n2 2 0\n"), RankError);
  const auto f5 = field_new(5, 1);
  EXPECT_THROW(parse_code("code 3 1 3 1\n1 1 1\n", f5.get()), FieldMismatch);
  EXPECT_THROW(parse_code("code 3 1 3\n"), ParseError);
}

}  // namespace
}  // namespace kuf
