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

#include "kuf/catalog.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "kuf/combinatorics.hpp"
#include "kuf/error.hpp"
#include "kuf/states.hpp"

namespace kuf {
namespace {

std::vector<std::string> symbols_of_row(const ExistenceTable& t, std::size_t row) {
  std::vector<std::string> out;
  for (const auto& cell : t.cells[row]) out.emplace_back(status_symbol(cell.status));
  return out;
}

// Symbols transcribed row by row from the published grids; "v" is a
// check mark, "x" a cross.
std::vector<std::string> expand(const std::string& row) {
  std::vector<std::string> out;
  for (char c : row) {
    if (c == 'v') out.emplace_back("√");
    if (c == 'x') out.emplace_back("×");
    if (c == '?') out.emplace_back("?");
  }
  return out;
}

TEST(ExistenceTest, PublishedExamples) {
  const ExistenceVerdict rains = exists_k_uniform(4, 2, 10);
  EXPECT_EQ(rains.status, Status::kNotExists);
  EXPECT_NE(rains.citation.find("Rains"), std::string::npos);
  EXPECT_TRUE(exists_k_uniform(4, 5, 8).exists());
  EXPECT_EQ(exists_k_uniform(4, 6, 9).status, Status::kUnknown);
  EXPECT_EQ(exists_k_uniform(2, 2, 4).status, Status::kNotExists);
  EXPECT_EQ(exists_k_uniform(2, 6, 4).status, Status::kUnknown);
}

TEST(ExistenceTest, SchmidtBound) {
  for (int n = 2; n <= 12; ++n) {
    for (int k = n / 2 + 1; k <= n; ++k) {
      for (unsigned d : {2u, 5u, 6u, 64u}) {
        EXPECT_EQ(exists_k_uniform(k, d, n).status, Status::kNotExists)
            << k << " " << d << " " << n;
      }
    }
  }
}

TEST(ExistenceTest, RejectsBadArguments) {
  EXPECT_THROW(exists_k_uniform(0, 2, 4), DomainError);
  EXPECT_THROW(exists_k_uniform(1, 1, 4), DomainError);
  EXPECT_THROW(exists_k_uniform(1, 2, 1), DomainError);
}

TEST(ExistenceTest, OneUniformEverywhere) {
  const ExistenceTable t = emit_table(1, 2, 12, 2, 12);
  for (const auto& row : t.cells) {
    for (const auto& cell : row) EXPECT_EQ(status_symbol(cell.status), "√");
  }
}

TEST(ConstructTest, RoutesAndRecipes) {
  const ExistenceVerdict mds = exists_k_uniform(2, 3, 4);
  ASSERT_TRUE(mds.recipe.has_value());
  EXPECT_EQ(mds.recipe->kind, Recipe::Kind::kMdsTrim);

  const ExistenceVerdict sum = exists_k_uniform(2, 7, 9);
  ASSERT_TRUE(sum.recipe.has_value());
  EXPECT_EQ(sum.recipe->kind, Recipe::Kind::kDirectSum);
  int total = 0;
  for (int p : sum.recipe->parts) {
    EXPECT_GE(p, 4);
    EXPECT_LE(p, 7);
    total += p;
  }
  EXPECT_EQ(total, 9);

  const ExistenceVerdict tensor = exists_k_uniform(1, 6, 3);
  ASSERT_TRUE(tensor.recipe.has_value());
  EXPECT_EQ(tensor.recipe->kind, Recipe::Kind::kTensor);

  const ExistenceVerdict bundled = exists_k_uniform(4, 4, 11);
  ASSERT_TRUE(bundled.recipe.has_value());
  EXPECT_EQ(bundled.recipe->kind, Recipe::Kind::kBundledCode);
  EXPECT_EQ(bundled.recipe->code_name, "selfdual12_4");

  for (const auto& [k, d, n] : std::vector<std::tuple<int, unsigned, int>>{
           {2, 3, 4}, {2, 7, 9}, {1, 6, 3}, {2, 4, 5}, {3, 5, 6}}) {
    const PureState s = construct_k_uniform(k, d, n);
    EXPECT_EQ(s.parties(), static_cast<unsigned>(n));
    EXPECT_EQ(s.local_dim(), d);
    EXPECT_TRUE(verify_k_uniform(s, k).pass) << k << " " << d << " " << n;
    EXPECT_FALSE(s.provenance().empty());
  }
}

TEST(ConstructTest, RefusesWithoutRecipe) {
  EXPECT_THROW(construct_k_uniform(2, 2, 4), DomainError);
  EXPECT_THROW(construct_k_uniform(4, 6, 9), DomainError);
  // Exists by citation only.
  EXPECT_EQ(exists_k_uniform(3, 2, 6).status, Status::kExistsCited);
  EXPECT_THROW(construct_k_uniform(3, 2, 6), DomainError);
}

TEST(TableTest, PublishedFourUniform) {
  const ExistenceTable t = published_table(4);
  ASSERT_EQ(t.rows.size(), 6u);
  ASSERT_EQ(t.cols.size(), 9u);
  const std::vector<std::string> expected = {
      "xxx?vvvvv", "xvvvvvvvv", "?vvvvvvvv",
      "????vvvvv", "vvvvvvvvv", "????vvvvv"};
  for (std::size_t r = 0; r < expected.size(); ++r) {
    EXPECT_EQ(symbols_of_row(t, r), expand(expected[r])) << t.rows[r].label;
  }
  for (const auto& row : t.cells) {
    for (const auto& cell : row) EXPECT_FALSE(cell.provenance.empty());
  }
}

TEST(TableTest, PublishedFiveUniform) {
  const ExistenceTable t = published_table(5);
  ASSERT_EQ(t.rows.size(), 7u);
  const std::vector<std::string> expected = {
      "xx????v?v", "v?v?vvvvv", "v?v?v?vvv", "v?vvvvvvv",
      "??????v?v", "vvvvvvvvv", "??????v?v"};
  for (std::size_t r = 0; r < expected.size(); ++r) {
    EXPECT_EQ(symbols_of_row(t, r), expand(expected[r])) << t.rows[r].label;
  }
  EXPECT_THROW(published_table(3), DomainError);
}

TEST(TableTest, RowOfBinaryFourUniform) {
  const ExistenceTable t = emit_table(4, 2, 2, 8, 11);
  EXPECT_EQ(symbols_of_row(t, 0), expand("xxx?"));
  const std::string text = format_table_text(t);
  EXPECT_NE(text.find("d \\ N"), std::string::npos);
}

TEST(CatalogPropertyTest, ConstructiveVerdictsAreSound) {
  int executed = 0;
  for (int k = 1; k <= 5; ++k) {
    for (unsigned d = 2; d <= 16; ++d) {
      for (int n = 2 * k; n <= 12; ++n) {
        if (std::pow(static_cast<double>(d), n) > 1e7) continue;
        const ExistenceVerdict v = exists_k_uniform(k, d, n);
        if (v.status != Status::kExistsConstructive) continue;
        const PureState s = execute_recipe(*v.recipe);
        const UniformityReport r = verify_k_uniform(s, k);
        ASSERT_TRUE(r.pass) << v.recipe->describe();
        ASSERT_TRUE(r.exact);
        ++executed;
      }
    }
  }
  EXPECT_GT(executed, 50);
}

TEST(CatalogPropertyTest, RulesNeverContradictFacts) {
  const FactTable& facts = bundled_facts();
  for (int k = 1; k <= 5; ++k) {
    for (unsigned d = 2; d <= 64; ++d) {
      for (int n = 2 * k; n <= 26; ++n) {
        const Fact* f = facts.find(k, d, n);
        if (f == nullptr || f->exists) continue;
        EXPECT_FALSE(plan_prime_power(k, d, n).has_value())
            << k << " " << d << " " << n;
        EXPECT_EQ(exists_k_uniform(k, d, n).status, Status::kNotExists);
      }
    }
  }
}

TEST(CatalogPropertyTest, TensorClosure) {
  for (int k = 1; k <= 5; ++k) {
    for (int n = 2 * k; n <= 20; ++n) {
      for (unsigned a = 2; a <= 8; ++a) {
        for (unsigned b = a; a * b <= 64; ++b) {
          if (exists_k_uniform(k, a, n).exists() &&
              exists_k_uniform(k, b, n).exists()) {
            EXPECT_TRUE(exists_k_uniform(k, a * b, n).exists())
                << k << " " << a << "*" << b << " " << n;
          }
        }
      }
    }
  }
}

TEST(FactTableTest, ParseAndFind) {
  const FactTable t = parse_facts(
      "# comment\n"
      "version 1\n"
      "4 2 8..10 absent any bound A\n"
      "4 2.. 12.. exists prime B\n"
      "2 3..9 4 exists except:6 C\n");
  EXPECT_EQ(t.version, "1");
  ASSERT_NE(t.find(4, 2, 9), nullptr);
  EXPECT_FALSE(t.find(4, 2, 9)->exists);
  EXPECT_EQ(t.find(4, 4, 12), nullptr);
  ASSERT_NE(t.find(4, 7, 30), nullptr);
  EXPECT_EQ(t.find(2, 6, 4), nullptr);
  ASSERT_NE(t.find(2, 5, 4), nullptr);
  EXPECT_EQ(t.find(2, 5, 4)->citation, "C");
  EXPECT_THROW(parse_facts("version 1\n4 2 8 maybe any X\n"), ParseError);
  EXPECT_THROW(parse_facts("4 2 8 absent any X\n"), ParseError);
  EXPECT_FALSE(bundled_facts().version.empty());
}

TEST(StatusTest, Names) {
  EXPECT_EQ(status_name(Status::kExistsConstructive), "exists_constructive");
  EXPECT_EQ(status_name(Status::kUnknown), "unknown");
  EXPECT_EQ(status_symbol(Status::kExistsCited), "√");
  EXPECT_EQ(status_symbol(Status::kNotExists), "×");
}

}  // namespace
}  // namespace kuf
