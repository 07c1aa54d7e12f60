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

#include "kuf/masking.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <unordered_map>

#include "json.hpp"
#include "kuf/bundled.hpp"
#include "kuf/caps.hpp"
#include "kuf/catalog.hpp"
#include "kuf/combinatorics.hpp"
#include "kuf/error.hpp"
#include "kuf/parallel.hpp"
#include "text.hpp"

namespace kuf {
namespace {

constexpr double kQeccTolerance = 1e-9;
constexpr double kSamplingTolerance = 1e-9;

void check_orthonormal(const std::vector<PureState>& basis) {
  if (basis.empty()) throw DomainError("basis is empty");
  for (const auto& s : basis) {
    if (s.parties() != basis[0].parties() ||
        s.local_dim() != basis[0].local_dim()) {
      throw DomainError("basis states have different shapes");
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const Overlap o = inner_product(basis[i], basis[j]);
      if (i == j ? !o.is_one() : !o.is_zero()) {
        throw DomainError("basis is not orthonormal: <psi_" + std::to_string(i) +
                          "|psi_" + std::to_string(j) + "> = " +
                          std::to_string(o.value.real()) + "+" +
                          std::to_string(o.value.imag()) + "i");
      }
    }
  }
}

// Largest |entry| of an operator that should vanish.
double max_abs_entry(const DensityOperator& op) {
  double worst = 0.0;
  for (const auto& e : op.entries()) worst = std::max(worst, std::abs(e.value));
  return worst;
}

bool vanishes(const DensityOperator& op) {
  return op.is_exact() ? op.is_zero() : max_abs_entry(op) <= kEntryTolerance;
}

// sum_j c_j psi_j in floating mode.
PureState superpose(const std::vector<PureState>& images,
                    const std::vector<std::complex<double>>& coeffs) {
  std::unordered_map<PureState::Index, std::complex<double>> acc;
  for (std::size_t j = 0; j < images.size(); ++j) {
    const PureState f = images[j].to_float();
    for (const auto& t : f.float_terms()) acc[t.index] += coeffs[j] * t.amp;
  }
  std::vector<PureState::FloatTerm> terms;
  double norm = 0.0;
  for (const auto& [idx, amp] : acc) {
    terms.push_back({idx, amp});
    norm += std::norm(amp);
  }
  // Orthonormal images keep the norm at 1 up to rounding; fix the rounding.
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& t : terms) t.amp *= scale;
  return PureState::floating(images[0].parties(), images[0].local_dim(),
                             std::move(terms));
}

std::string describe_error(const std::vector<int>& positions,
                           const std::vector<unsigned>& a,
                           const std::vector<unsigned>& b) {
  std::string out;
  for (std::size_t p = 0; p < positions.size(); ++p) {
    if (p) out += ", ";
    out += "X^" + std::to_string(a[p]) + " Z^" + std::to_string(b[p]) + " @" +
           std::to_string(positions[p]);
  }
  return out;
}

}  // namespace

Masker make_masker(std::vector<PureState> images, std::string provenance) {
  check_orthonormal(images);
  const unsigned d = images[0].local_dim();
  if (images.size() != d) {
    throw DomainError("a masker of C^" + std::to_string(d) + " needs " +
                      std::to_string(d) + " images, got " +
                      std::to_string(images.size()));
  }
  Masker m;
  m.d = d;
  m.n = images[0].parties();
  m.images = std::move(images);
  m.provenance = std::move(provenance);
  return m;
}

Masker build_masker(const PureState& psi, int split_party, int k) {
  const unsigned total = psi.parties();
  const unsigned d = psi.local_dim();
  if (total < 2) throw DomainError("need at least two parties to split");
  if (split_party < 0 || split_party >= static_cast<int>(total)) {
    throw DomainError("split party " + std::to_string(split_party) +
                      " outside [0, " + std::to_string(total) + ")");
  }
  if (k < 0) throw DomainError("k must be non-negative");
  const UniformityReport uni = verify_k_uniform(psi, k + 1);
  if (!uni.pass) {
    throw DomainError("input state is not " + std::to_string(k + 1) +
                      "-uniform, so it does not yield a " + std::to_string(k) +
                      "-uniform masker");
  }
  std::vector<PureState> images;
  auto strip = [&](PureState::Index idx, unsigned& digit) {
    auto digits = psi.digits(idx);
    digit = digits[split_party];
    digits.erase(digits.begin() + split_party);
    PureState::Index out = 0;
    for (unsigned x : digits) out = out * d + x;
    return out;
  };
  if (psi.is_exact()) {
    if (psi.norm_sq() % d != 0) {
      throw DomainError("split-party marginal is not maximally mixed");
    }
    const std::int64_t part = psi.norm_sq() / d;
    std::vector<std::vector<PureState::ExactTerm>> slices(d);
    for (const auto& t : psi.exact_terms()) {
      unsigned digit = 0;
      const auto idx = strip(t.index, digit);
      slices[digit].push_back({idx, t.amp});
    }
    for (unsigned j = 0; j < d; ++j) {
      images.push_back(PureState::exact(total - 1, d, part, std::move(slices[j]),
                                        "slice " + std::to_string(j)));
    }
  } else {
    std::vector<std::vector<PureState::FloatTerm>> slices(d);
    const double scale = std::sqrt(static_cast<double>(d));
    for (const auto& t : psi.float_terms()) {
      unsigned digit = 0;
      const auto idx = strip(t.index, digit);
      slices[digit].push_back({idx, t.amp * scale});
    }
    for (unsigned j = 0; j < d; ++j) {
      images.push_back(PureState::floating(total - 1, d, std::move(slices[j]),
                                           "slice " + std::to_string(j)));
    }
  }
  Masker m = make_masker(std::move(images),
                         "split of party " + std::to_string(split_party) +
                             " of a " + std::to_string(k + 1) + "-uniform state" +
                             (psi.provenance().empty()
                                  ? std::string()
                                  : " (" + psi.provenance() + ")"));
  const MaskingReport rep = verify_masker(m, k);
  if (!rep.pass) {
    throw DomainError("masker fails the " + std::to_string(k) +
                      "-party cross-reduction check");
  }
  m.verified_k = k;
  return m;
}

MaskingReport verify_masker(const Masker& m, int k) {
  if (k < 0 || k > static_cast<int>(m.n)) {
    throw DomainError("k must lie in [0, N]");
  }
  MaskingReport rep;
  rep.d = m.d;
  rep.n = m.n;
  rep.k = k;
  const auto subsets = k_subsets(static_cast<int>(m.n), k);
  const std::size_t count = m.images.size();
  std::vector<std::optional<DensityOperator>> common(subsets.size());
  std::vector<std::vector<MaskingViolation>> found(subsets.size());
  std::vector<char> exact(subsets.size(), 1);
  parallel_for(subsets.size(), [&](std::size_t i) {
    const auto& a = subsets[i];
    const DensityOperator rho = reduction(m.images[0], a);
    exact[i] = rho.is_exact();
    for (std::size_t s = 0; s < count; ++s) {
      for (std::size_t t = 0; t < count; ++t) {
        const DensityOperator c = cross_reduction(m.images[s], m.images[t], a);
        exact[i] &= c.is_exact();
        bool ok = false;
        double dev = 0.0;
        if (s == t) {
          ok = same_operator(c, rho);
          if (!ok) dev = max_abs_difference(c, rho);
        } else {
          ok = vanishes(c);
          if (!ok) dev = max_abs_entry(c);
        }
        if (!ok) {
          found[i].push_back({a, static_cast<unsigned>(s),
                              static_cast<unsigned>(t), dev});
        }
      }
    }
    common[i] = rho;
  });
  rep.subsets_checked = subsets.size();
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    rep.exact = rep.exact && exact[i];
    rep.common.push_back(std::move(*common[i]));
    for (auto& v : found[i]) rep.violations.push_back(std::move(v));
  }
  rep.pass = rep.violations.empty();
  return rep;
}

SamplingReport sample_masking(const Masker& m, int k, int samples,
                              std::uint64_t seed) {
  if (samples < 1) throw DomainError("need at least one sample");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const auto subsets = k_subsets(static_cast<int>(m.n), k);
  std::vector<DensityOperator> reference;
  SamplingReport rep;
  rep.samples = samples;
  for (int s = 0; s < samples; ++s) {
    std::vector<std::complex<double>> coeffs(m.images.size());
    double norm = 0.0;
    for (auto& c : coeffs) {
      c = {normal(rng), normal(rng)};
      norm += std::norm(c);
    }
    for (auto& c : coeffs) c /= std::sqrt(norm);
    const PureState encoded = superpose(m.images, coeffs);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      DensityOperator rho = reduction(encoded, subsets[i]);
      if (s == 0) {
        reference.push_back(std::move(rho));
      } else {
        rep.max_deviation =
            std::max(rep.max_deviation, max_abs_difference(rho, reference[i]));
      }
    }
  }
  rep.pass = rep.max_deviation <= kSamplingTolerance;
  return rep;
}

Feasibility strong_masking_feasible(int n, unsigned d) {
  if (n < 2) throw DomainError("strong masking needs N >= 2");
  if (d < 2) throw DomainError("strong masking needs d >= 2");
  Feasibility out;
  if (n % 2 == 0) {
    out.feasible = false;
    out.settled = true;
    out.reason =
        "no strong masking for even N: a " + std::to_string(n / 2) +
        "-uniform masker of C^d into N parties would be a pure ((N, d, N/2+1))_d "
        "code, which violates the quantum Singleton bound K <= d^(N-2k)";
    return out;
  }
  const int k = (n + 1) / 2;
  const ExistenceVerdict v = exists_k_uniform(k, d, n + 1);
  const std::string what = "AME state of " + std::to_string(n + 1) +
                           " parties with d=" + std::to_string(d);
  if (v.exists()) {
    out.feasible = true;
    out.settled = true;
    out.reason = what + " exists: " + v.provenance();
  } else if (v.status == Status::kNotExists) {
    out.feasible = false;
    out.settled = true;
    out.reason = "no " + what + ": " + v.provenance();
  } else {
    out.feasible = false;
    out.settled = false;
    out.reason = "existence of an " + what + " is unknown";
  }
  return out;
}

QeccReport verify_pure_qecc(const std::vector<PureState>& basis, int delta) {
  check_orthonormal(basis);
  if (delta < 1) throw DomainError("delta must be at least 1");
  const unsigned n = basis[0].parties();
  const unsigned d = basis[0].local_dim();
  QeccReport rep;
  rep.n = n;
  rep.d = d;
  rep.dimension = basis.size();
  rep.delta = delta;
  const bool all_exact = std::all_of(basis.begin(), basis.end(),
                                     [](const PureState& s) { return s.is_exact(); });
  rep.exact = all_exact && (d == 2 || d == 4);

  const std::uint64_t local = static_cast<std::uint64_t>(d) * d - 1;
  std::uint64_t total = 0;
  std::vector<std::vector<int>> supports;
  for (int w = 1; w < delta && w <= static_cast<int>(n); ++w) {
    const auto per = checked_pow(local, static_cast<unsigned>(w));
    const std::uint64_t subsets = binomial(n, static_cast<unsigned>(w));
    if (!per || subsets > caps().qecc_errors ||
        *per > caps().qecc_errors / std::max<std::uint64_t>(subsets, 1) ||
        total + subsets * *per > caps().qecc_errors) {
      throw CapExceeded("error operators up to weight " +
                        std::to_string(delta - 1) + " exceed cap " +
                        std::to_string(caps().qecc_errors));
    }
    total += subsets * *per;
    for (auto& s : k_subsets(static_cast<int>(n), w)) supports.push_back(std::move(s));
  }
  rep.errors_checked = total;

  // Per state: sorted terms as (index, amplitude) in the mode used.
  const std::size_t count = basis.size();
  std::vector<PureState> floats;
  if (!rep.exact) {
    for (const auto& s : basis) floats.push_back(s.to_float());
  }
  std::vector<PureState::Index> weight(n);
  {
    PureState::Index w = 1;
    for (int p = static_cast<int>(n) - 1; p >= 0; --p) {
      weight[p] = w;
      w *= d;
    }
  }
  std::vector<std::complex<double>> omega(d);
  for (unsigned e = 0; e < d; ++e) {
    omega[e] = std::polar(1.0, 2.0 * std::numbers::pi * e / d);
  }

  std::vector<double> worst(supports.size(), 0.0);
  std::vector<std::optional<QeccViolation>> first(supports.size());
  parallel_for(supports.size(), [&](std::size_t si) {
    const auto& pos = supports[si];
    const std::size_t w = pos.size();
    std::vector<unsigned> code(w, 1);  // per position, a*d + b in [1, d^2)
    std::vector<unsigned> a(w);
    std::vector<unsigned> b(w);
    while (true) {
      for (std::size_t p = 0; p < w; ++p) {
        a[p] = code[p] / d;
        b[p] = code[p] % d;
      }
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
          double magnitude = 0.0;
          if (rep.exact) {
            GaussInt acc;
            const auto& ti = basis[i].exact_terms();
            for (const auto& t : basis[j].exact_terms()) {
              PureState::Index y = t.index;
              unsigned e = 0;
              for (std::size_t p = 0; p < w; ++p) {
                const unsigned x = (t.index / weight[pos[p]]) % d;
                e += b[p] * x;
                y = y - x * weight[pos[p]] + ((x + a[p]) % d) * weight[pos[p]];
              }
              auto it = std::lower_bound(
                  ti.begin(), ti.end(), y,
                  [](const PureState::ExactTerm& u, PureState::Index v) {
                    return u.index < v;
                  });
              if (it == ti.end() || it->index != y) continue;
              const GaussInt phase =
                  d == 2 ? GaussInt(e % 2 ? -1 : 1) : i_power(e % 4);
              acc += it->amp.conj() * t.amp * phase;
            }
            if (!acc.is_zero()) {
              magnitude = std::abs(acc.to_complex()) /
                          std::sqrt(static_cast<double>(basis[i].norm_sq()) *
                                    static_cast<double>(basis[j].norm_sq()));
            }
          } else {
            std::complex<double> acc = 0.0;
            const auto& ti = floats[i].float_terms();
            for (const auto& t : floats[j].float_terms()) {
              PureState::Index y = t.index;
              unsigned e = 0;
              for (std::size_t p = 0; p < w; ++p) {
                const unsigned x = (t.index / weight[pos[p]]) % d;
                e = (e + b[p] * x) % d;
                y = y - x * weight[pos[p]] + ((x + a[p]) % d) * weight[pos[p]];
              }
              auto it = std::lower_bound(
                  ti.begin(), ti.end(), y,
                  [](const PureState::FloatTerm& u, PureState::Index v) {
                    return u.index < v;
                  });
              if (it == ti.end() || it->index != y) continue;
              acc += std::conj(it->amp) * t.amp * omega[e];
            }
            magnitude = std::abs(acc);
            if (magnitude <= kQeccTolerance) magnitude = 0.0;
          }
          if (magnitude > 0.0) {
            worst[si] = std::max(worst[si], magnitude);
            if (!first[si]) {
              first[si] = QeccViolation{describe_error(pos, a, b), i, j, magnitude};
            }
          }
        }
      }
      // Odometer over (a, b) != (0, 0) at every position.
      std::size_t p = 0;
      while (p < w && ++code[p] == d * d) code[p++] = 1;
      if (p == w) break;
    }
  });
  for (std::size_t si = 0; si < supports.size(); ++si) {
    rep.worst_violation = std::max(rep.worst_violation, worst[si]);
    if (first[si]) rep.violations.push_back(*first[si]);
  }
  rep.pass = rep.violations.empty();
  return rep;
}

bool kuniform_subspace_check(const std::vector<PureState>& basis, int k) {
  check_orthonormal(basis);
  const int n = static_cast<int>(basis[0].parties());
  if (k < 0 || k > n) return false;
  const auto subsets = k_subsets(n, k);
  std::atomic<bool> ok{true};
  parallel_for(subsets.size(), [&](std::size_t i) {
    for (std::size_t s = 0; s < basis.size() && ok.load(); ++s) {
      for (std::size_t t = 0; t < basis.size(); ++t) {
        const DensityOperator c = cross_reduction(basis[s], basis[t], subsets[i]);
        const bool good = s == t ? c.is_maximally_mixed() : vanishes(c);
        if (!good) {
          ok.store(false);
          return;
        }
      }
    }
  });
  return ok.load();
}

bool singleton_check(int n, std::uint64_t dimension, int k, unsigned d) {
  if (n < 2 * k) return false;
  const auto bound = checked_pow(d, static_cast<unsigned>(n - 2 * k));
  return !bound || dimension <= *bound;
}

void save_masker(const Masker& m, const std::filesystem::path& dir,
                 const MaskingReport* report) {
  std::filesystem::create_directories(dir);
  nlohmann::json manifest;
  manifest["d"] = m.d;
  manifest["N"] = m.n;
  manifest["verified_k"] = m.verified_k;
  manifest["provenance"] = m.provenance;
  nlohmann::json images = nlohmann::json::array();
  for (std::size_t j = 0; j < m.images.size(); ++j) {
    const std::string name = "psi_" + std::to_string(j) + ".state";
    save_state(m.images[j], dir / name);
    images.push_back(name);
  }
  manifest["images"] = images;
  nlohmann::json checks;
  checks["orthonormal"] = true;
  if (report) {
    checks["masking"] = {{"k", report->k},
                         {"pass", report->pass},
                         {"exact", report->exact},
                         {"subsets_checked", report->subsets_checked}};
  }
  manifest["checks"] = checks;
  text::write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

Masker load_masker(const std::filesystem::path& dir) {
  const auto path = dir / "manifest.json";
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(text::read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
  if (!manifest.contains("images") || !manifest["images"].is_array()) {
    throw ParseError(path.string() + ": manifest has no image list", 0);
  }
  std::vector<PureState> images;
  for (const auto& name : manifest["images"]) {
    images.push_back(load_state(dir / name.get<std::string>()));
  }
  return make_masker(std::move(images),
                     manifest.value("provenance", std::string("loaded")));
}

Masker bundled_masker(const std::string& name) {
  std::vector<PureState> images;
  const auto names = bundled_names();
  for (unsigned j = 0;; ++j) {
    const std::string file =
        "maskers/" + name + "/psi_" + std::to_string(j) + ".state";
    if (std::find(names.begin(), names.end(), file) == names.end()) break;
    images.push_back(parse_state(bundled_text(file)));
  }
  if (images.empty()) throw DomainError("no bundled masker named " + name);
  return make_masker(std::move(images), "bundled masker " + name);
}

}  // namespace kuf
