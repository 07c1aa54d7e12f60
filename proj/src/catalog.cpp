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

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "kuf/bundled.hpp"
#include "kuf/combinatorics.hpp"
#include "kuf/error.hpp"
#include "text.hpp"

namespace kuf {
namespace {

struct ShippedCode {
  std::string name;
  LinearCode code;
  int w;
};

// Self-dual codes under data/codes, checked on first use.
const std::vector<ShippedCode>& shipped_codes() {
  static const std::vector<ShippedCode> codes = [] {
    std::vector<ShippedCode> out;
    for (const char* name : {"golay12_3", "selfdual12_4"}) {
      LinearCode code =
          parse_code(bundled_text(std::string("codes/") + name + ".code"));
      if (!is_self_dual(code)) {
        throw Error(std::string("bundled code ") + name + " is not self-dual");
      }
      const int w = code.min_distance();
      out.push_back({name, std::move(code), w});
    }
    return out;
  }();
  return codes;
}

const ShippedCode& shipped_code(const std::string& name) {
  for (const auto& c : shipped_codes()) {
    if (c.name == name) return c;
  }
  throw DomainError("no bundled code named " + name);
}

std::string triple(int k, unsigned d, int n) {
  return "(k=" + std::to_string(k) + ", d=" + std::to_string(d) +
         ", N=" + std::to_string(n) + ")";
}

// Parts in [2k, 4k-1], largest admissible first, remainder kept >= 2k.
std::vector<int> greedy_parts(int k, int n) {
  std::vector<int> parts;
  int rest = n;
  while (rest > 4 * k - 1) {
    const int part = std::min(4 * k - 1, rest - 2 * k);
    parts.push_back(part);
    rest -= part;
  }
  parts.push_back(rest);
  return parts;
}

void parse_range(const std::string& tok, std::size_t line, unsigned& lo,
                 unsigned& hi) {
  const auto dots = tok.find("..");
  if (dots == std::string::npos) {
    lo = hi = static_cast<unsigned>(text::parse_uint(tok, line, "range"));
    return;
  }
  lo = static_cast<unsigned>(text::parse_uint(tok.substr(0, dots), line, "range"));
  const std::string rest = tok.substr(dots + 2);
  hi = rest.empty() ? 0
                    : static_cast<unsigned>(text::parse_uint(rest, line, "range"));
  if (hi != 0 && hi < lo) throw ParseError("empty range " + tok, line);
}

bool filter_valid(const std::string& f) {
  return f == "any" || f == "prime" || f == "prime_power" ||
         f.rfind("except:", 0) == 0;
}

class Memo {
 public:
  std::optional<ExistenceVerdict> get(int k, unsigned d, int n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find({k, d, n});
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void put(int k, unsigned d, int n, const ExistenceVerdict& v) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(std::make_tuple(k, d, n), v);
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, unsigned, int>, ExistenceVerdict> map_;
};

Memo& memo() {
  static Memo m;
  return m;
}

ExistenceVerdict decide(int k, unsigned d, int n);

}  // namespace

std::string Recipe::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kMdsTrim:
      out << "extended Reed-Solomon [" << d + 1 << "," << k << "]_" << d
          << " -> OA(" << d << "^" << k << ", " << d + 1 << ", " << d << ", "
          << k << ") -> keep first " << n << " columns -> uniform superposition";
      break;
    case Kind::kBundledCode:
      out << "bundled self-dual code " << code_name
          << " -> OA -> keep first " << n << " columns -> uniform superposition";
      break;
    case Kind::kDirectSum: {
      out << "direct sum of extended Reed-Solomon [" << d + 1 << "," << k
          << "]_" << d << " codes cut to lengths ";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        out << (i ? "+" : "") << parts[i];
      }
      out << " -> OA -> uniform superposition";
      break;
    }
    case Kind::kTensor:
      out << "tensor_parties(" << factors.at(0).describe() << " ; "
          << factors.at(1).describe() << ")";
      break;
  }
  return out.str();
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kExistsConstructive:
      return "exists_constructive";
    case Status::kExistsCited:
      return "exists_cited";
    case Status::kNotExists:
      return "not_exists";
    case Status::kUnknown:
      break;
  }
  return "unknown";
}

std::string_view status_symbol(Status s) {
  switch (s) {
    case Status::kExistsConstructive:
    case Status::kExistsCited:
      return "√";
    case Status::kNotExists:
      return "×";
    case Status::kUnknown:
      break;
  }
  return "?";
}

std::string ExistenceVerdict::provenance() const {
  if (recipe) return recipe->describe();
  return citation;
}

bool Fact::matches(int k_, unsigned d, int n) const {
  if (k_ != k) return false;
  if (d < d_lo || (d_hi != 0 && d > d_hi)) return false;
  if (n < n_lo || (n_hi != 0 && n > n_hi)) return false;
  if (filter == "any") return true;
  if (filter == "prime") return is_prime(d);
  if (filter == "prime_power") return prime_power(d).has_value();
  if (filter.rfind("except:", 0) == 0) {
    std::stringstream list(filter.substr(7));
    std::string item;
    while (std::getline(list, item, ',')) {
      if (!item.empty() && std::stoul(item) == d) return false;
    }
    return true;
  }
  return false;
}

const Fact* FactTable::find(int k, unsigned d, int n) const {
  for (const auto& f : facts) {
    if (f.matches(k, d, n)) return &f;
  }
  return nullptr;
}

FactTable parse_facts(std::string_view text) {
  FactTable table;
  for (const auto& line : text::tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "version") {
      if (t.size() != 2) throw ParseError("expected 'version V'", line.number);
      table.version = t[1];
      continue;
    }
    if (t.size() < 6) {
      throw ParseError("expected 'k d-range N-range exists|absent filter "
                       "citation'",
                       line.number);
    }
    Fact f;
    f.k = static_cast<int>(text::parse_uint(t[0], line.number, "k"));
    parse_range(t[1], line.number, f.d_lo, f.d_hi);
    unsigned lo = 0;
    unsigned hi = 0;
    parse_range(t[2], line.number, lo, hi);
    f.n_lo = static_cast<int>(lo);
    f.n_hi = static_cast<int>(hi);
    if (t[3] != "exists" && t[3] != "absent") {
      throw ParseError("status must be 'exists' or 'absent'", line.number);
    }
    f.exists = t[3] == "exists";
    f.filter = t[4];
    if (!filter_valid(f.filter)) {
      throw ParseError("unknown filter " + f.filter, line.number);
    }
    for (std::size_t i = 5; i < t.size(); ++i) {
      f.citation += (i > 5 ? " " : "") + t[i];
    }
    table.facts.push_back(std::move(f));
  }
  if (table.version.empty()) throw ParseError("fact table has no version", 0);
  return table;
}

const FactTable& bundled_facts() {
  static const FactTable table =
      parse_facts(bundled_text("facts/existence_facts.txt"));
  return table;
}

std::optional<Recipe> plan_prime_power(int k, unsigned d, int n) {
  if (k < 1 || n < 2 * k || !prime_power(d)) return std::nullopt;
  Recipe r;
  r.k = k;
  r.d = d;
  r.n = n;
  if (d >= static_cast<unsigned>(2 * k - 1) && n <= static_cast<int>(d) + 1) {
    r.kind = Recipe::Kind::kMdsTrim;
    return r;
  }
  for (const auto& c : shipped_codes()) {
    const int len = static_cast<int>(c.code.length());
    if (c.code.field().order() != d || c.w < k + 1) continue;
    // Self-dual, so the dual distance is w and the strength is w - 1.
    if (c.w - 1 < k) continue;
    if (n >= len - c.w + k + 1 && n <= len) {
      r.kind = Recipe::Kind::kBundledCode;
      r.code_name = c.name;
      return r;
    }
  }
  if (d >= static_cast<unsigned>(4 * k - 2)) {
    r.kind = Recipe::Kind::kDirectSum;
    r.parts = greedy_parts(k, n);
    return r;
  }
  return std::nullopt;
}

namespace {

ExistenceVerdict decide(int k, unsigned d, int n) {
  ExistenceVerdict v;
  if (2 * k > n) {
    v.status = Status::kNotExists;
    v.citation = "bound k <= floor(N/2) for k-uniform states";
    return v;
  }
  if (auto plan = plan_prime_power(k, d, n)) {
    v.status = Status::kExistsConstructive;
    v.recipe = std::move(plan);
    return v;
  }
  std::vector<std::tuple<unsigned, ExistenceVerdict, ExistenceVerdict>> pairs;
  for (unsigned a = 2; a * a <= d; ++a) {
    if (d % a != 0) continue;
    pairs.emplace_back(a, exists_k_uniform(k, a, n),
                       exists_k_uniform(k, d / a, n));
  }
  for (const auto& [a, va, vb] : pairs) {
    if (va.recipe && vb.recipe) {
      Recipe r;
      r.kind = Recipe::Kind::kTensor;
      r.k = k;
      r.d = d;
      r.n = n;
      r.factors = {*va.recipe, *vb.recipe};
      v.status = Status::kExistsConstructive;
      v.recipe = std::move(r);
      return v;
    }
  }
  if (const Fact* f = bundled_facts().find(k, d, n)) {
    v.status = f->exists ? Status::kExistsCited : Status::kNotExists;
    v.citation = f->citation;
    return v;
  }
  for (const auto& [a, va, vb] : pairs) {
    if (va.exists() && vb.exists()) {
      v.status = Status::kExistsCited;
      v.citation = "tensor product of d=" + std::to_string(a) + " [" +
                   va.provenance() + "] and d=" + std::to_string(d / a) +
                   " [" + vb.provenance() + "]";
      return v;
    }
  }
  v.status = Status::kUnknown;
  v.citation = "no implemented construction or cited result";
  return v;
}

}  // namespace

ExistenceVerdict exists_k_uniform(int k, unsigned d, int n) {
  if (k < 1 || d < 2 || n < 2) {
    throw DomainError("exists_k_uniform needs k >= 1, d >= 2, N >= 2; got " +
                      triple(k, d, n));
  }
  if (auto hit = memo().get(k, d, n)) return *hit;
  ExistenceVerdict v = decide(k, d, n);
  memo().put(k, d, n, v);
  return v;
}

PureState execute_recipe(const Recipe& recipe) {
  if (recipe.kind == Recipe::Kind::kTensor) {
    PureState s = tensor_parties(execute_recipe(recipe.factors.at(0)),
                                 execute_recipe(recipe.factors.at(1)));
    s.set_provenance(recipe.describe());
    return s;
  }
  std::optional<OrthogonalArray> array;
  if (recipe.kind == Recipe::Kind::kBundledCode) {
    const OrthogonalArray full = oa_from_code(shipped_code(recipe.code_name).code);
    array = trim_to_iroa(full, recipe.k, static_cast<std::size_t>(recipe.n));
  } else {
    const auto pp = prime_power(recipe.d);
    if (!pp) throw DomainError("recipe needs a prime-power dimension");
    const FieldPtr f = FiniteField::make(pp->first, pp->second);
    const LinearCode mds = mds_code(f, static_cast<std::size_t>(recipe.k));
    if (recipe.kind == Recipe::Kind::kMdsTrim) {
      array = trim_to_iroa(oa_from_code(mds), recipe.k,
                           static_cast<std::size_t>(recipe.n));
    } else {
      std::optional<LinearCode> sum;
      for (int part : recipe.parts) {
        LinearCode piece = puncture(mds, static_cast<std::size_t>(part));
        sum = sum ? direct_sum(*sum, piece) : piece;
      }
      array = oa_from_code(*sum);
    }
  }
  PureState s = state_from_iroa(*array, recipe.k);
  s.set_provenance(recipe.describe());
  return s;
}

PureState construct_k_uniform(int k, unsigned d, int n) {
  const ExistenceVerdict v = exists_k_uniform(k, d, n);
  if (!v.recipe) {
    throw DomainError("no implemented construction for " + triple(k, d, n) +
                      ": " + std::string(status_name(v.status)) + " (" +
                      v.provenance() + "); rules need a prime-power d >= 2k-1 "
                      "with N <= d+1, d >= 4k-2, a bundled self-dual code, or "
                      "a factorization into such d");
  }
  return execute_recipe(*v.recipe);
}

ExistenceTable emit_table(int k, const std::vector<Axis>& rows,
                          const std::vector<Axis>& cols) {
  ExistenceTable t;
  t.k = k;
  t.rows = rows;
  t.cols = cols;
  for (const auto& row : rows) {
    std::vector<TableCell> line;
    for (const auto& col : cols) {
      TableCell cell;
      int yes = 0;
      int no = 0;
      int constructive = 0;
      for (int d : row.values) {
        for (int n : col.values) {
          ExistenceVerdict v = exists_k_uniform(k, static_cast<unsigned>(d), n);
          yes += v.exists();
          no += v.status == Status::kNotExists;
          constructive += v.status == Status::kExistsConstructive;
          cell.members.push_back({static_cast<unsigned>(d), n, std::move(v)});
        }
      }
      const int total = static_cast<int>(cell.members.size());
      if (total > 0 && yes == total) {
        cell.status = constructive == total ? Status::kExistsConstructive
                                            : Status::kExistsCited;
      } else if (total > 0 && no == total) {
        cell.status = Status::kNotExists;
      } else {
        cell.status = Status::kUnknown;
      }
      if (total == 1) {
        cell.provenance = cell.members.front().verdict.provenance();
      } else {
        std::ostringstream out;
        out << total << " sampled (d, N): " << yes << " exist ("
            << constructive << " constructive), " << no << " excluded, "
            << total - yes - no << " unknown";
        int listed = 0;
        for (const auto& m : cell.members) {
          if (cell.status != Status::kUnknown && total > 4) break;
          if (listed == 8) {
            out << "; ...";
            break;
          }
          out << "; d=" << m.d << " N=" << m.n << ": "
              << status_symbol(m.verdict.status);
          ++listed;
        }
        cell.provenance = out.str();
      }
      line.push_back(std::move(cell));
    }
    t.cells.push_back(std::move(line));
  }
  return t;
}

ExistenceTable emit_table(int k, int d_lo, int d_hi, int n_lo, int n_hi) {
  std::vector<Axis> rows;
  std::vector<Axis> cols;
  for (int d = d_lo; d <= d_hi; ++d) rows.push_back({std::to_string(d), {d}});
  for (int n = n_lo; n <= n_hi; ++n) cols.push_back({std::to_string(n), {n}});
  return emit_table(k, rows, cols);
}

ExistenceTable published_table(int k) {
  constexpr int kMaxSampledD = 64;
  auto prime_powers_from = [](int lo) {
    std::vector<int> out;
    for (int d = lo; d <= kMaxSampledD; ++d) {
      if (prime_power(d)) out.push_back(d);
    }
    return out;
  };
  auto non_prime_powers_from = [](int lo) {
    std::vector<int> out;
    for (int d = lo; d <= kMaxSampledD; ++d) {
      if (!prime_power(d)) out.push_back(d);
    }
    return out;
  };
  std::vector<Axis> rows;
  std::vector<Axis> cols;
  int first = 0;
  if (k == 4) {
    rows = {{"2", {2}},
            {"3", {3}},
            {"4,12", {4, 12}},
            {"6,10", {6, 10}},
            {"d>=5 prime power", prime_powers_from(5)},
            {"d>=14 not prime power", non_prime_powers_from(14)}};
    first = 8;
  } else if (k == 5) {
    rows = {{"2", {2}},
            {"3,15", {3, 15}},
            {"4,12", {4, 12}},
            {"5", {5}},
            {"6,10,14", {6, 10, 14}},
            {"d>=7 prime power", prime_powers_from(7)},
            {"d>=18 not prime power", non_prime_powers_from(18)}};
    first = 10;
  } else {
    throw DomainError("published layouts exist for k = 4 and k = 5 only");
  }
  for (int n = first; n < first + 8; ++n) cols.push_back({std::to_string(n), {n}});
  Axis tail{"N>=" + std::to_string(first + 8), {}};
  for (int n = first + 8; n <= first + 16; ++n) tail.values.push_back(n);
  cols.push_back(std::move(tail));
  return emit_table(k, rows, cols);
}

std::string format_table_text(const ExistenceTable& table) {
  // Symbols are single code points; pad by code points, not bytes.
  auto width = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(
        s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  };
  std::size_t label_w = width("d \\ N");
  for (const auto& r : table.rows) label_w = std::max(label_w, width(r.label));
  std::vector<std::size_t> col_w;
  for (const auto& c : table.cols) col_w.push_back(std::max<std::size_t>(1, width(c.label)));
  auto pad = [&](const std::string& s, std::size_t w) {
    return s + std::string(w > width(s) ? w - width(s) : 0, ' ');
  };
  std::ostringstream out;
  out << "k = " << table.k << "\n" << pad("d \\ N", label_w);
  for (std::size_t j = 0; j < table.cols.size(); ++j) {
    out << "  " << pad(table.cols[j].label, col_w[j]);
  }
  out << '\n';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    out << pad(table.rows[i].label, label_w);
    for (std::size_t j = 0; j < table.cols.size(); ++j) {
      out << "  "
          << pad(std::string(status_symbol(table.cells[i][j].status)), col_w[j]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace kuf
