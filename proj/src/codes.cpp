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

#include <atomic>
#include <numeric>
#include <sstream>

#include "kuf/caps.hpp"
#include "kuf/combinatorics.hpp"
#include "kuf/error.hpp"
#include "text.hpp"

namespace kuf {

struct LinearCode::DistanceCache {
  // -1 means not yet computed. Racing writers store the same value.
  std::atomic<int> min_distance{-1};
  std::atomic<int> dual_distance{-1};
};

namespace {

// Minimum nonzero weight of the row space of g. Only codewords whose first
// nonzero coefficient is 1 are visited; weight is invariant under scaling.
int enumerate_min_weight(const FiniteField& f, const GfMatrix& g) {
  const std::size_t t = g.rows();
  const std::size_t n = g.cols();
  if (t == 0) return kInfiniteDistance;
  const unsigned q = f.order();
  int best = kInfiniteDistance;
  std::vector<FiniteField::Element> cur(n);
  std::vector<FiniteField::Element> coeff;
  for (std::size_t lead = 0; lead < t; ++lead) {
    const auto base = g.row(lead);
    std::copy(base.begin(), base.end(), cur.begin());
    const std::size_t free = t - 1 - lead;
    coeff.assign(free, 0);
    while (true) {
      int w = 0;
      for (std::size_t i = 0; i < n && w < best; ++i) w += cur[i] != 0;
      if (w < best) {
        best = w;
        if (best <= 1) return best;
      }
      std::size_t j = free;
      bool advanced = false;
      while (j-- > 0) {
        const auto old = coeff[j];
        const FiniteField::Element next = old + 1 == q ? 0 : old + 1;
        const auto delta = f.sub(next, old);
        const auto row = g.row(lead + 1 + j);
        for (std::size_t i = 0; i < n; ++i) {
          if (row[i] != 0) cur[i] = f.add(cur[i], f.mul(delta, row[i]));
        }
        coeff[j] = next;
        if (next != 0) {
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  return best;
}

void require_enumerable(const FiniteField& f, std::size_t t,
                        std::uint64_t cap, const char* what) {
  const auto count = checked_pow(f.order(), static_cast<unsigned>(t));
  if (!count || *count > cap) {
    throw CapExceeded(std::string(what) + ": " + f.name() + "^" +
                      std::to_string(t) + " codewords exceed the cap of " +
                      std::to_string(cap));
  }
}

}  // namespace

LinearCode::LinearCode(FieldPtr field, GfMatrix generator)
    : field_(std::move(field)),
      generator_(std::move(generator)),
      cache_(std::make_shared<DistanceCache>()) {
  if (!field_) throw DomainError("linear code needs a field");
  if (generator_.cols() == 0) throw DomainError("code length must be >= 1");
  for (std::size_t r = 0; r < generator_.rows(); ++r) {
    for (auto x : generator_.row(r)) {
      if (!field_->contains(x)) {
        throw DomainError("generator entry " + std::to_string(x) +
                          " outside " + field_->name());
      }
    }
  }
  const std::size_t rk = rank(*field_, generator_);
  if (rk != generator_.rows()) {
    throw RankError("generator has rank " + std::to_string(rk) + " but " +
                    std::to_string(generator_.rows()) + " rows");
  }
}

LinearCode LinearCode::zero_code(FieldPtr field, std::size_t length) {
  return LinearCode(std::move(field), GfMatrix(0, length));
}

std::optional<std::uint64_t> LinearCode::size() const {
  return checked_pow(field_->order(), static_cast<unsigned>(dimension()));
}

int LinearCode::min_distance() const {
  if (const int w = cache_->min_distance.load(); w >= 0) return w;
  if (dimension() == 0) {
    cache_->min_distance.store(kInfiniteDistance);
    return kInfiniteDistance;
  }
  require_enumerable(*field_, dimension(), caps().codewords, "min_distance");
  const int w = enumerate_min_weight(*field_, generator_);
  cache_->min_distance.store(w);
  return w;
}

int LinearCode::dual_distance() const {
  if (const int w = cache_->dual_distance.load(); w >= 0) return w;
  const LinearCode d = dual(*this);
  int w = 0;
  try {
    w = d.min_distance();
  } catch (const CapExceeded&) {
    // The column route can still be affordable when the dual is large.
    w = smallest_dependent_columns(*this);
  }
  cache_->dual_distance.store(w);
  return w;
}

ParityCheck LinearCode::parity_check() const {
  return {null_space(*field_, generator_)};
}

void LinearCode::for_each_codeword(
    const std::function<void(std::span<const Element>)>& fn,
    std::uint64_t cap) const {
  require_enumerable(*field_, dimension(), cap, "codeword enumeration");
  const std::size_t t = dimension();
  const std::size_t n = length();
  const unsigned q = field_->order();
  std::vector<Element> cur(n, 0);
  std::vector<Element> coeff(t, 0);
  while (true) {
    fn(cur);
    std::size_t j = t;
    bool advanced = false;
    while (j-- > 0) {
      const auto old = coeff[j];
      const Element next = old + 1 == q ? 0 : old + 1;
      const auto delta = field_->sub(next, old);
      const auto row = generator_.row(j);
      for (std::size_t i = 0; i < n; ++i) {
        if (row[i] != 0) cur[i] = field_->add(cur[i], field_->mul(delta, row[i]));
      }
      coeff[j] = next;
      if (next != 0) {
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
}

bool LinearCode::same_codewords(const LinearCode& other) const {
  if (!(field() == other.field()) || length() != other.length() ||
      dimension() != other.dimension()) {
    return false;
  }
  GfMatrix stacked(dimension() * 2, length());
  for (std::size_t r = 0; r < dimension(); ++r) {
    for (std::size_t c = 0; c < length(); ++c) {
      stacked.at(r, c) = generator_.at(r, c);
      stacked.at(r + dimension(), c) = other.generator_.at(r, c);
    }
  }
  return rank(*field_, stacked) == dimension();
}

LinearCode mds_code(FieldPtr field, std::size_t t) {
  const std::size_t q = field->order();
  if (t < 1 || t > q + 1) {
    throw DomainError("MDS dimension " + std::to_string(t) +
                      " outside [1, " + std::to_string(q + 1) + "]");
  }
  GfMatrix g(t, q + 1);
  for (std::size_t x = 0; x < q; ++x) {
    FiniteField::Element power = 1;
    for (std::size_t i = 0; i < t; ++i) {
      g.at(i, x) = power;
      power = field->mul(power, static_cast<FiniteField::Element>(x));
    }
  }
  g.at(t - 1, q) = 1;
  return LinearCode(std::move(field), std::move(g));
}

LinearCode dual(const LinearCode& code) {
  const ParityCheck pc = code.parity_check();
  return LinearCode(code.field_ptr(), pc.h);
}

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch("direct sum of codes over " + a.field().name() +
                        " and " + b.field().name());
  }
  GfMatrix g(a.dimension() + b.dimension(), a.length() + b.length());
  for (std::size_t r = 0; r < a.dimension(); ++r) {
    for (std::size_t c = 0; c < a.length(); ++c) {
      g.at(r, c) = a.generator().at(r, c);
    }
  }
  for (std::size_t r = 0; r < b.dimension(); ++r) {
    for (std::size_t c = 0; c < b.length(); ++c) {
      g.at(a.dimension() + r, a.length() + c) = b.generator().at(r, c);
    }
  }
  return LinearCode(a.field_ptr(), std::move(g));
}

bool is_self_dual(const LinearCode& code) {
  if (code.dimension() == 0 || code.length() != 2 * code.dimension()) {
    return false;
  }
  const GfMatrix gram =
      multiply_transpose(code.field(), code.generator(), code.generator());
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      if (gram.at(i, j) != 0) return false;
    }
  }
  return true;
}

LinearCode puncture(const LinearCode& code, std::size_t length) {
  if (length < 1 || length > code.length()) {
    throw DomainError("puncture length " + std::to_string(length) +
                      " outside [1, " + std::to_string(code.length()) + "]");
  }
  std::vector<std::size_t> keep(length);
  std::iota(keep.begin(), keep.end(), 0);
  return LinearCode(code.field_ptr(), code.generator().select_columns(keep));
}

int smallest_dependent_columns(const LinearCode& code) {
  const std::size_t n = code.length();
  const std::size_t t = code.dimension();
  const std::uint64_t budget = caps().codewords;
  std::uint64_t visited = 0;
  std::vector<std::size_t> cols;
  for (std::size_t s = 1; s <= n; ++s) {
    if (s > t) return static_cast<int>(s);  // any t+1 vectors in F^t
    std::vector<int> subset(s);
    std::iota(subset.begin(), subset.end(), 0);
    do {
      if (++visited > budget) {
        throw CapExceeded("column dependency search exceeds the cap of " +
                          std::to_string(budget) + " subsets");
      }
      cols.assign(subset.begin(), subset.end());
      if (rank(code.field(), code.generator().select_columns(cols)) < s) {
        return static_cast<int>(s);
      }
    } while (next_subset(subset, static_cast<int>(n)));
  }
  return kInfiniteDistance;
}

std::string format_code(const LinearCode& code) {
  std::ostringstream out;
  out << "code " << code.field().characteristic() << ' '
      << code.field().degree() << ' ' << code.length() << ' '
      << code.dimension() << '\n';
  for (std::size_t r = 0; r < code.dimension(); ++r) {
    const auto row = code.generator().row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      out << row[c];
    }
    out << '\n';
  }
  return out.str();
}

LinearCode parse_code(std::string_view text, const FiniteField* expected) {
  const auto lines = text::tokenize(text);
  if (lines.empty()) throw ParseError("empty code file", 0);
  const auto& head = lines[0];
  if (head.tokens.size() != 5 || head.tokens[0] != "code") {
    throw ParseError("expected header 'code p m N t'", head.number);
  }
  const auto p = text::parse_uint(head.tokens[1], head.number, "p");
  const auto m = text::parse_uint(head.tokens[2], head.number, "m");
  const auto n = text::parse_uint(head.tokens[3], head.number, "N");
  const auto t = text::parse_uint(head.tokens[4], head.number, "t");
  FieldPtr field;
  try {
    field = FiniteField::make(static_cast<unsigned>(p),
                              static_cast<unsigned>(m));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), head.number);
  }
  if (expected && !(*expected == *field)) {
    throw FieldMismatch("code file is over " + field->name() +
                        ", expected " + expected->name());
  }
  if (n == 0) throw ParseError("code length must be >= 1", head.number);
  if (t > n) throw ParseError("dimension exceeds length", head.number);
  if (lines.size() - 1 != t) {
    const std::size_t at =
        lines.size() - 1 > t ? lines[t + 1].number : lines.back().number;
    throw ParseError("expected " + std::to_string(t) + " generator rows, got " +
                         std::to_string(lines.size() - 1),
                     at);
  }
  GfMatrix g(t, n);
  for (std::size_t r = 0; r < t; ++r) {
    const auto& line = lines[r + 1];
    if (line.tokens.size() != n) {
      throw ParseError("generator row has " +
                           std::to_string(line.tokens.size()) +
                           " entries, expected " + std::to_string(n),
                       line.number);
    }
    for (std::size_t c = 0; c < n; ++c) {
      const auto v = text::parse_uint(line.tokens[c], line.number, "element");
      if (v >= field->order()) {
        throw ParseError("element " + line.tokens[c] + " outside " +
                             field->name(),
                         line.number);
      }
      g.at(r, c) = static_cast<FiniteField::Element>(v);
    }
  }
  return LinearCode(field, std::move(g));
}

LinearCode load_code(const std::filesystem::path& path,
                     const FiniteField* expected) {
  return parse_code(text::read_file(path), expected);
}

void save_code(const LinearCode& code, const std::filesystem::path& path) {
  text::write_file(path, format_code(code));
}

std::string describe(const LinearCode& code) {
  const int w = code.min_distance();
  return "[" + std::to_string(code.length()) + "," +
         std::to_string(code.dimension()) + "," +
         (w == kInfiniteDistance ? std::string("inf") : std::to_string(w)) +
         "]_" + std::to_string(code.field().order());
}

}  // namespace kuf
