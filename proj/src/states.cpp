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

#include "kuf/states.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "kuf/caps.hpp"
#include "kuf/combinatorics.hpp"
#include "kuf/error.hpp"
#include "kuf/parallel.hpp"
#include "text.hpp"

namespace kuf {
namespace {

using Index = PureState::Index;

std::complex<double> conj_mul(std::complex<double> a, std::complex<double> b) {
  return a * std::conj(b);
}

GaussInt conj_mul(const GaussInt& a, const GaussInt& b) { return a * b.conj(); }

void check_same_shape(const PureState& a, const PureState& b) {
  if (a.parties() != b.parties() || a.local_dim() != b.local_dim()) {
    throw DomainError("states have different shapes: (N=" +
                      std::to_string(a.parties()) +
                      ", d=" + std::to_string(a.local_dim()) + ") vs (N=" +
                      std::to_string(b.parties()) +
                      ", d=" + std::to_string(b.local_dim()) + ")");
  }
}

// Splits a basis index into the subset part (digits of `parties` in the given
// order) and the complement part (remaining digits in increasing party order).
class Splitter {
 public:
  Splitter(const PureState& s, std::span<const int> parties)
      : d_(s.local_dim()), weights_(s.parties()), in_subset_(s.parties(), false) {
    Index w = 1;
    for (int p = static_cast<int>(s.parties()) - 1; p >= 0; --p) {
      weights_[p] = w;
      w *= d_;
    }
    for (int p : parties) {
      if (p < 0 || p >= static_cast<int>(s.parties()) || in_subset_[p]) {
        throw DomainError("party subset must hold distinct indices in [0, " +
                          std::to_string(s.parties()) + ")");
      }
      in_subset_[p] = true;
      subset_.push_back(p);
    }
    for (int p = 0; p < static_cast<int>(s.parties()); ++p) {
      if (!in_subset_[p]) complement_.push_back(p);
    }
  }

  std::pair<Index, Index> split(Index index) const {
    Index b = 0;
    Index c = 0;
    for (int p : subset_) b = b * d_ + (index / weights_[p]) % d_;
    for (int p : complement_) c = c * d_ + (index / weights_[p]) % d_;
    return {b, c};
  }

 private:
  Index d_;
  std::vector<Index> weights_;
  std::vector<bool> in_subset_;
  std::vector<int> subset_;
  std::vector<int> complement_;
};

struct Keyed {
  Index complement;
  Index subset;
  std::size_t term;
  bool operator<(const Keyed& o) const {
    return complement < o.complement ||
           (complement == o.complement && subset < o.subset);
  }
};

template <typename Term>
std::vector<Keyed> keyed_terms(const std::vector<Term>& terms,
                               const Splitter& sp) {
  std::vector<Keyed> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto [b, c] = sp.split(terms[i].index);
    out.push_back({c, b, i});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Sums amp_s(u, y) * conj(amp_t(v, y)) over complement keys y into acc[(u,v)].
template <typename Value, typename AmpS, typename AmpT>
std::unordered_map<std::uint64_t, Value> accumulate_pairs(
    const std::vector<Keyed>& ks, const std::vector<Keyed>& kt, AmpS amp_s,
    AmpT amp_t, std::uint64_t dim) {
  std::unordered_map<std::uint64_t, Value> acc;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ks.size() && j < kt.size()) {
    if (ks[i].complement < kt[j].complement) {
      ++i;
    } else if (kt[j].complement < ks[i].complement) {
      ++j;
    } else {
      const Index key = ks[i].complement;
      std::size_t i_end = i;
      std::size_t j_end = j;
      while (i_end < ks.size() && ks[i_end].complement == key) ++i_end;
      while (j_end < kt.size() && kt[j_end].complement == key) ++j_end;
      for (std::size_t a = i; a < i_end; ++a) {
        for (std::size_t b = j; b < j_end; ++b) {
          acc[ks[a].subset * dim + kt[b].subset] +=
              conj_mul(amp_s(ks[a].term), amp_t(kt[b].term));
        }
      }
      i = i_end;
      j = j_end;
    }
  }
  return acc;
}

bool entry_less(const DensityOperator::Entry& a,
                const DensityOperator::Entry& b) {
  return a.row < b.row || (a.row == b.row && a.col < b.col);
}

const DensityOperator::Entry* find_entry(
    const std::vector<DensityOperator::Entry>& entries, std::uint64_t row,
    std::uint64_t col) {
  DensityOperator::Entry probe{row, col, {}, {}};
  auto it = std::lower_bound(entries.begin(), entries.end(), probe, entry_less);
  if (it == entries.end() || it->row != row || it->col != col) return nullptr;
  return &*it;
}

constexpr double kOverlapTolerance = 1e-10;

}  // namespace

void PureState::init_shape(unsigned n, unsigned d) {
  if (n < 1) throw DomainError("a state needs at least one party");
  if (d < 1) throw DomainError("local dimension must be at least 1");
  const auto dim = checked_pow(d, n);
  if (!dim) {
    throw DomainError("d^N = " + std::to_string(d) + "^" + std::to_string(n) +
                      " does not fit in 63 bits");
  }
  n_ = n;
  d_ = d;
  dim_ = *dim;
}

PureState PureState::exact(unsigned n, unsigned d, std::int64_t norm_sq,
                           std::vector<ExactTerm> terms,
                           std::string provenance) {
  PureState s;
  s.init_shape(n, d);
  if (norm_sq < 1) throw DomainError("norm_sq must be positive");
  std::erase_if(terms, [](const ExactTerm& t) { return t.amp.is_zero(); });
  std::sort(terms.begin(), terms.end(),
            [](const ExactTerm& a, const ExactTerm& b) { return a.index < b.index; });
  std::int64_t total = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].index >= s.dim_) throw DomainError("basis index out of range");
    if (i > 0 && terms[i].index == terms[i - 1].index) {
      throw DomainError("repeated basis index " + std::to_string(terms[i].index));
    }
    total = checked_add(total, terms[i].amp.norm());
  }
  if (total != norm_sq) {
    throw DomainError("sum of |numerator|^2 is " + std::to_string(total) +
                      ", expected r = " + std::to_string(norm_sq));
  }
  s.exact_ = true;
  s.r_ = norm_sq;
  s.exact_terms_ = std::move(terms);
  s.provenance_ = std::move(provenance);
  return s;
}

PureState PureState::floating(unsigned n, unsigned d,
                              std::vector<FloatTerm> terms,
                              std::string provenance) {
  PureState s;
  s.init_shape(n, d);
  std::erase_if(terms, [](const FloatTerm& t) { return t.amp == 0.0; });
  std::sort(terms.begin(), terms.end(),
            [](const FloatTerm& a, const FloatTerm& b) { return a.index < b.index; });
  double total = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].index >= s.dim_) throw DomainError("basis index out of range");
    if (i > 0 && terms[i].index == terms[i - 1].index) {
      throw DomainError("repeated basis index " + std::to_string(terms[i].index));
    }
    total += std::norm(terms[i].amp);
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw DomainError("state norm^2 is " + std::to_string(total) +
                      ", not 1 within tolerance");
  }
  s.exact_ = false;
  s.r_ = 1;
  s.float_terms_ = std::move(terms);
  s.provenance_ = std::move(provenance);
  return s;
}

std::vector<unsigned> PureState::digits(Index index) const {
  std::vector<unsigned> out(n_);
  for (int p = static_cast<int>(n_) - 1; p >= 0; --p) {
    out[p] = static_cast<unsigned>(index % d_);
    index /= d_;
  }
  return out;
}

PureState::Index PureState::encode(std::span<const unsigned> digits) const {
  if (digits.size() != n_) throw DomainError("wrong number of digits");
  Index out = 0;
  for (unsigned x : digits) {
    if (x >= d_) throw DomainError("digit outside [0, d)");
    out = out * d_ + x;
  }
  return out;
}

std::complex<double> PureState::amplitude(Index index) const {
  if (exact_) {
    auto it = std::lower_bound(
        exact_terms_.begin(), exact_terms_.end(), index,
        [](const ExactTerm& t, Index i) { return t.index < i; });
    if (it == exact_terms_.end() || it->index != index) return 0.0;
    return it->amp.to_complex() / std::sqrt(static_cast<double>(r_));
  }
  auto it = std::lower_bound(
      float_terms_.begin(), float_terms_.end(), index,
      [](const FloatTerm& t, Index i) { return t.index < i; });
  if (it == float_terms_.end() || it->index != index) return 0.0;
  return it->amp;
}

PureState PureState::to_float() const {
  if (!exact_) return *this;
  PureState s = *this;
  s.exact_ = false;
  s.exact_terms_.clear();
  const double scale = 1.0 / std::sqrt(static_cast<double>(r_));
  for (const auto& t : exact_terms_) {
    s.float_terms_.push_back({t.index, t.amp.to_complex() * scale});
  }
  s.r_ = 1;
  return s;
}

DensityOperator::DensityOperator(std::vector<int> parties, std::uint64_t dim,
                                 bool exact, std::int64_t denominator,
                                 std::vector<Entry> entries)
    : parties_(std::move(parties)),
      dim_(dim),
      exact_(exact),
      denominator_(denominator),
      entries_(std::move(entries)) {
  if (denominator_ < 1) throw DomainError("denominator must be positive");
  std::sort(entries_.begin(), entries_.end(), entry_less);
}

std::complex<double> DensityOperator::entry(std::uint64_t row,
                                            std::uint64_t col) const {
  const Entry* e = find_entry(entries_, row, col);
  return e ? e->value : 0.0;
}

bool DensityOperator::is_maximally_mixed() const {
  if (!exact_) return deviation_from_maximally_mixed() <= kEntryTolerance;
  if (entries_.size() != dim_) return false;
  for (const auto& e : entries_) {
    if (e.row != e.col || e.num.im != 0) return false;
    if (checked_mul(e.num.re, static_cast<std::int64_t>(dim_)) != denominator_) {
      return false;
    }
  }
  return true;
}

double DensityOperator::deviation_from_maximally_mixed() const {
  if (exact_ && is_maximally_mixed()) return 0.0;
  const double diag = 1.0 / static_cast<double>(dim_);
  double worst = 0.0;
  std::uint64_t diagonals = 0;
  for (const auto& e : entries_) {
    if (e.row == e.col) {
      ++diagonals;
      worst = std::max(worst, std::abs(e.value - diag));
    } else {
      worst = std::max(worst, std::abs(e.value));
    }
  }
  if (diagonals < dim_) worst = std::max(worst, diag);
  return worst;
}

bool DensityOperator::is_hermitian() const {
  for (const auto& e : entries_) {
    const Entry* t = find_entry(entries_, e.col, e.row);
    if (exact_) {
      if (!t || !(t->num == e.num.conj())) return false;
    } else {
      const std::complex<double> other = t ? t->value : 0.0;
      if (std::abs(other - std::conj(e.value)) > kEntryTolerance) return false;
    }
  }
  return true;
}

bool DensityOperator::has_unit_trace() const {
  if (exact_) {
    GaussInt tr;
    for (const auto& e : entries_) {
      if (e.row == e.col) tr += e.num;
    }
    return tr == GaussInt(denominator_, 0);
  }
  std::complex<double> tr = 0.0;
  for (const auto& e : entries_) {
    if (e.row == e.col) tr += e.value;
  }
  return std::abs(tr - 1.0) <= kEntryTolerance;
}

double DensityOperator::min_eigenvalue() const {
  if (dim_ > 1024) {
    throw CapExceeded("dense eigensolver limited to dimension 1024");
  }
  const auto n = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& e : entries_) {
    m(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) =
        e.value;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool DensityOperator::is_diagonal() const {
  if (entries_.size() != dim_) return false;
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.row == e.col; });
}

double max_abs_difference(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim() != b.dim()) throw DomainError("operators differ in dimension");
  double worst = 0.0;
  for (const auto& e : a.entries()) {
    worst = std::max(worst, std::abs(e.value - b.entry(e.row, e.col)));
  }
  for (const auto& e : b.entries()) {
    worst = std::max(worst, std::abs(e.value - a.entry(e.row, e.col)));
  }
  return worst;
}

bool same_operator(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim() != b.dim()) return false;
  if (!a.is_exact() || !b.is_exact()) {
    return max_abs_difference(a, b) <= kEntryTolerance;
  }
  if (a.entries().size() != b.entries().size()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    const auto& x = a.entries()[i];
    const auto& y = b.entries()[i];
    if (x.row != y.row || x.col != y.col) return false;
    if (!(x.num * b.denominator() == y.num * a.denominator())) return false;
  }
  return true;
}

DensityOperator cross_reduction(const PureState& s, const PureState& t,
                                std::span<const int> parties) {
  check_same_shape(s, t);
  const Splitter sp(s, parties);
  const auto dim = checked_pow(s.local_dim(), static_cast<unsigned>(parties.size()));
  if (!dim || *dim > caps().matrix_dim) {
    throw CapExceeded("reduction dimension d^k exceeds cap " +
                      std::to_string(caps().matrix_dim));
  }
  std::vector<int> subset(parties.begin(), parties.end());
  std::optional<std::int64_t> root;
  if (s.is_exact() && t.is_exact()) {
    root = exact_sqrt(checked_mul(s.norm_sq(), t.norm_sq()));
  }
  std::vector<DensityOperator::Entry> entries;
  if (root) {
    const auto ks = keyed_terms(s.exact_terms(), sp);
    const auto kt = keyed_terms(t.exact_terms(), sp);
    const auto acc = accumulate_pairs<GaussInt>(
        ks, kt, [&](std::size_t i) { return s.exact_terms()[i].amp; },
        [&](std::size_t i) { return t.exact_terms()[i].amp; }, *dim);
    const double den = static_cast<double>(*root);
    for (const auto& [key, num] : acc) {
      if (num.is_zero()) continue;
      entries.push_back({key / *dim, key % *dim, num, num.to_complex() / den});
    }
    return DensityOperator(std::move(subset), *dim, true, *root,
                           std::move(entries));
  }
  const PureState fs = s.to_float();
  const PureState ft = t.to_float();
  const auto ks = keyed_terms(fs.float_terms(), sp);
  const auto kt = keyed_terms(ft.float_terms(), sp);
  const auto acc = accumulate_pairs<std::complex<double>>(
      ks, kt, [&](std::size_t i) { return fs.float_terms()[i].amp; },
      [&](std::size_t i) { return ft.float_terms()[i].amp; }, *dim);
  for (const auto& [key, value] : acc) {
    if (value == 0.0) continue;
    entries.push_back({key / *dim, key % *dim, GaussInt{}, value});
  }
  return DensityOperator(std::move(subset), *dim, false, 1, std::move(entries));
}

DensityOperator reduction(const PureState& s, std::span<const int> parties) {
  return cross_reduction(s, s, parties);
}

UniformityReport verify_k_uniform(const PureState& s, int k) {
  UniformityReport rep;
  rep.n = s.parties();
  rep.d = s.local_dim();
  rep.k = k;
  rep.exact = s.is_exact();
  if (k < 0) throw DomainError("k must be non-negative");
  if (2 * k > static_cast<int>(s.parties())) {
    rep.possible = false;
    rep.pass = false;
    return rep;
  }
  const auto subsets = k_subsets(static_cast<int>(s.parties()), k);
  std::vector<double> dev(subsets.size(), 0.0);
  std::vector<char> ok(subsets.size(), 0);
  parallel_for(subsets.size(), [&](std::size_t i) {
    const DensityOperator rho = reduction(s, subsets[i]);
    ok[i] = rho.is_maximally_mixed();
    dev[i] = rho.deviation_from_maximally_mixed();
  });
  rep.subsets_checked = subsets.size();
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    rep.worst_deviation = std::max(rep.worst_deviation, dev[i]);
    if (!ok[i]) rep.failures.push_back({subsets[i], dev[i]});
  }
  rep.pass = rep.failures.empty();
  return rep;
}

bool Overlap::is_zero() const {
  if (exact) return numerator.is_zero();
  return std::abs(value) <= kOverlapTolerance;
}

bool Overlap::is_one() const {
  if (exact) {
    return numerator.im == 0 && numerator.re > 0 &&
           checked_mul(numerator.re, numerator.re) == checked_mul(r1, r2);
  }
  return std::abs(value - 1.0) <= kOverlapTolerance;
}

Overlap inner_product(const PureState& s1, const PureState& s2) {
  check_same_shape(s1, s2);
  Overlap out;
  if (s1.is_exact() && s2.is_exact()) {
    const auto& a = s1.exact_terms();
    const auto& b = s2.exact_terms();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].index < b[j].index) {
        ++i;
      } else if (b[j].index < a[i].index) {
        ++j;
      } else {
        out.numerator += conj_mul(b[j].amp, a[i].amp);
        ++i;
        ++j;
      }
    }
    out.r1 = s1.norm_sq();
    out.r2 = s2.norm_sq();
    out.value = out.numerator.to_complex() /
                std::sqrt(static_cast<double>(out.r1) *
                          static_cast<double>(out.r2));
    return out;
  }
  out.exact = false;
  const PureState f1 = s1.to_float();
  const PureState f2 = s2.to_float();
  const auto& a = f1.float_terms();
  const auto& b = f2.float_terms();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].index < b[j].index) {
      ++i;
    } else if (b[j].index < a[i].index) {
      ++j;
    } else {
      out.value += std::conj(a[i].amp) * b[j].amp;
      ++i;
      ++j;
    }
  }
  return out;
}

PureState ghz(unsigned d, unsigned n) {
  if (d < 1 || n < 1) throw DomainError("ghz needs d >= 1 and N >= 1");
  std::vector<PureState::ExactTerm> terms;
  for (unsigned j = 0; j < d; ++j) {
    Index idx = 0;
    for (unsigned p = 0; p < n; ++p) idx = idx * d + j;
    terms.push_back({idx, GaussInt(1)});
  }
  return PureState::exact(n, d, d, std::move(terms),
                          "GHZ d=" + std::to_string(d) + " N=" + std::to_string(n));
}

PureState basis_state(unsigned d, std::span<const unsigned> digits) {
  Index idx = 0;
  for (unsigned x : digits) {
    if (x >= d) throw DomainError("digit outside [0, d)");
    idx = idx * d + x;
  }
  return PureState::exact(static_cast<unsigned>(digits.size()), d, 1,
                          {{idx, GaussInt(1)}}, "basis state");
}

PureState state_from_iroa(const OrthogonalArray& a, int k) {
  if (!verify_strength(a, k)) {
    throw DomainError("array is not irredundant: strength " + std::to_string(k) +
                      " fails");
  }
  const int w = oa_min_distance(a);
  if (w != kInfiniteDistance && w < k + 1) {
    throw DomainError("array is not irredundant: minimum distance " +
                      std::to_string(w) + " < k + 1 = " + std::to_string(k + 1));
  }
  if (a.runs() > caps().state_terms) {
    throw CapExceeded("state would have more than " +
                      std::to_string(caps().state_terms) + " terms");
  }
  std::vector<PureState::ExactTerm> terms;
  terms.reserve(a.runs());
  for (std::size_t r = 0; r < a.runs(); ++r) {
    Index idx = 0;
    for (auto x : a.row(r)) {
      const auto next = idx * a.levels() + x;
      idx = next;
    }
    terms.push_back({idx, GaussInt(1)});
  }
  std::string provenance = "uniform superposition of rows";
  if (!a.provenance().empty()) provenance += " (" + a.provenance() + ")";
  return PureState::exact(static_cast<unsigned>(a.factors()), a.levels(),
                          static_cast<std::int64_t>(a.runs()), std::move(terms),
                          std::move(provenance));
}

PureState tensor_parties(const PureState& s1, const PureState& s2) {
  if (s1.parties() != s2.parties()) {
    throw DomainError("tensor_parties needs equal party counts, got " +
                      std::to_string(s1.parties()) + " and " +
                      std::to_string(s2.parties()));
  }
  const unsigned n = s1.parties();
  const std::uint64_t d64 =
      static_cast<std::uint64_t>(s1.local_dim()) * s2.local_dim();
  if (d64 > 0xffffffffull) throw DomainError("product dimension too large");
  const auto d = static_cast<unsigned>(d64);
  const std::uint64_t count =
      static_cast<std::uint64_t>(s1.term_count()) * s2.term_count();
  if (count > caps().state_terms) {
    throw CapExceeded("product state would have " + std::to_string(count) +
                      " terms, cap " + std::to_string(caps().state_terms));
  }
  const auto dim = checked_pow(d, n);
  if (!dim) throw DomainError("product dimension does not fit in 63 bits");
  auto combine = [&](Index i1, Index i2) {
    const auto x = s1.digits(i1);
    const auto y = s2.digits(i2);
    Index idx = 0;
    for (unsigned p = 0; p < n; ++p) {
      idx = idx * d + (static_cast<Index>(x[p]) * s2.local_dim() + y[p]);
    }
    return idx;
  };
  const std::string provenance =
      "tensor of [" + s1.provenance() + "] and [" + s2.provenance() + "]";
  if (s1.is_exact() && s2.is_exact()) {
    std::vector<PureState::ExactTerm> terms;
    terms.reserve(count);
    for (const auto& a : s1.exact_terms()) {
      for (const auto& b : s2.exact_terms()) {
        terms.push_back({combine(a.index, b.index), a.amp * b.amp});
      }
    }
    return PureState::exact(n, d, checked_mul(s1.norm_sq(), s2.norm_sq()),
                            std::move(terms), provenance);
  }
  const PureState f1 = s1.to_float();
  const PureState f2 = s2.to_float();
  std::vector<PureState::FloatTerm> terms;
  terms.reserve(count);
  for (const auto& a : f1.float_terms()) {
    for (const auto& b : f2.float_terms()) {
      terms.push_back({combine(a.index, b.index), a.amp * b.amp});
    }
  }
  return PureState::floating(n, d, std::move(terms), provenance);
}

std::string format_state(const PureState& s) {
  std::ostringstream out;
  if (!s.provenance().empty()) out << "# " << s.provenance() << '\n';
  out << "state " << s.parties() << ' ' << s.local_dim() << ' '
      << s.norm_sq() << ' ' << (s.is_exact() ? "exact" : "float") << '\n';
  auto write_digits = [&](Index idx) {
    for (unsigned x : s.digits(idx)) out << x << ' ';
  };
  if (s.is_exact()) {
    for (const auto& t : s.exact_terms()) {
      write_digits(t.index);
      out << t.amp.re << ' ' << t.amp.im << '\n';
    }
  } else {
    char buf[64];
    for (const auto& t : s.float_terms()) {
      write_digits(t.index);
      std::snprintf(buf, sizeof buf, "%.17g %.17g", t.amp.real(), t.amp.imag());
      out << buf << '\n';
    }
  }
  return out.str();
}

PureState parse_state(std::string_view text) {
  const auto lines = text::tokenize(text);
  if (lines.empty()) throw ParseError("empty state file", 0);
  const auto& head = lines.front();
  if (head.tokens.size() != 5 || head.tokens[0] != "state") {
    throw ParseError("expected header 'state N d r mode'", head.number);
  }
  const auto n = text::parse_uint(head.tokens[1], head.number, "N");
  const auto d = text::parse_uint(head.tokens[2], head.number, "d");
  const auto r = text::parse_uint(head.tokens[3], head.number, "r");
  const std::string& mode = head.tokens[4];
  if (mode != "exact" && mode != "float") {
    throw ParseError("mode must be 'exact' or 'float'", head.number);
  }
  if (n < 1 || n > 64 || d < 1 || d > 0xffffffffull || r < 1) {
    throw ParseError("need 1 <= N <= 64, d >= 1, r >= 1", head.number);
  }
  const auto dim = checked_pow(d, static_cast<unsigned>(n));
  if (!dim) throw ParseError("d^N does not fit in 63 bits", head.number);
  std::set<Index> seen;
  std::vector<PureState::ExactTerm> exact_terms;
  std::vector<PureState::FloatTerm> float_terms;
  const double scale = 1.0 / std::sqrt(static_cast<double>(r));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != n + 2) {
      throw ParseError("expected " + std::to_string(n) +
                           " digits and a real and imaginary part",
                       line.number);
    }
    Index idx = 0;
    for (std::size_t p = 0; p < n; ++p) {
      const auto x = text::parse_uint(line.tokens[p], line.number, "digit");
      if (x >= d) throw ParseError("digit outside [0, d)", line.number);
      idx = idx * d + x;
    }
    if (!seen.insert(idx).second) {
      throw ParseError("repeated basis tuple", line.number);
    }
    if (mode == "exact") {
      exact_terms.push_back(
          {idx, GaussInt(text::parse_int(line.tokens[n], line.number, "re"),
                         text::parse_int(line.tokens[n + 1], line.number, "im"))});
    } else {
      float_terms.push_back(
          {idx, std::complex<double>(
                    text::parse_double(line.tokens[n], line.number, "re"),
                    text::parse_double(line.tokens[n + 1], line.number, "im")) *
                    scale});
    }
  }
  if (mode == "exact") {
    return PureState::exact(static_cast<unsigned>(n), static_cast<unsigned>(d),
                            static_cast<std::int64_t>(r), std::move(exact_terms),
                            "loaded");
  }
  return PureState::floating(static_cast<unsigned>(n), static_cast<unsigned>(d),
                             std::move(float_terms), "loaded");
}

PureState load_state(const std::filesystem::path& path) {
  return parse_state(text::read_file(path));
}

void save_state(const PureState& s, const std::filesystem::path& path) {
  text::write_file(path, format_state(s));
}

}  // namespace kuf
