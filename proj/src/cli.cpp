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

#include "kuf/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "kuf/caps.hpp"
#include "kuf/catalog.hpp"
#include "kuf/codes.hpp"
#include "kuf/combinatorics.hpp"
#include "kuf/error.hpp"
#include "kuf/masking.hpp"
#include "kuf/oa.hpp"
#include "kuf/parallel.hpp"
#include "kuf/states.hpp"
#include "text.hpp"

namespace kuf::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Thrown for bad arguments that CLI11 cannot catch on its own.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& s, const char* what) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    Range r{std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    if (r.hi < r.lo) throw UsageError(std::string("empty range for ") + what);
    return r;
  } catch (const std::logic_error&) {
    throw UsageError(std::string("expected a or a..b for ") + what + ", got '" +
                     s + "'");
  }
}

// Bytes of every input, in order, for the report digest.
class Inputs {
 public:
  void add_file(const fs::path& p) {
    buffer_ += p.filename().string();
    buffer_ += '\0';
    buffer_ += text::read_file(p);
    buffer_ += '\0';
  }
  void add_bundle(const fs::path& dir) {
    add_file(dir / "manifest.json");
    const json manifest = json::parse(text::read_file(dir / "manifest.json"),
                                      nullptr, false);
    if (manifest.is_object() && manifest.contains("images")) {
      for (const auto& name : manifest["images"]) {
        if (name.is_string()) add_file(dir / name.get<std::string>());
      }
    }
  }
  void add_text(const std::string& s) {
    buffer_ += s;
    buffer_ += '\0';
  }
  std::string digest() const { return fnv1a64(buffer_); }

 private:
  std::string buffer_;
};

json subset_json(const std::vector<int>& s) { return json(s); }

json uniformity_json(const UniformityReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"subset", subset_json(f.subset)},
                        {"max_abs_dev", f.max_abs_dev}});
  }
  return {{"N", r.n},
          {"d", r.d},
          {"k", r.k},
          {"exact", r.exact},
          {"possible", r.possible},
          {"subsets_checked", r.subsets_checked},
          {"failures", failures},
          {"worst_deviation", r.worst_deviation},
          {"verdict", r.pass ? "pass" : (r.possible ? "fail" : "impossible")}};
}

json verdict_json(const ExistenceVerdict& v) {
  json j{{"status", status_name(v.status)}};
  if (v.recipe) {
    j["recipe"] = v.recipe->describe();
  } else {
    j["citation"] = v.citation;
  }
  return j;
}

std::string format_operator(const DensityOperator& op) {
  std::ostringstream out;
  if (op.is_exact() && op.is_diagonal()) {
    out << "diag(";
    for (std::size_t i = 0; i < op.entries().size(); ++i) {
      const auto& e = op.entries()[i];
      out << (i ? ", " : "") << e.num.to_string() << "/" << op.denominator();
    }
    out << ")";
    return out.str();
  }
  out << op.entries().size() << " nonzero entries";
  return out.str();
}

struct Report {
  explicit Report(std::string c) : command(std::move(c)) {}

  std::string command;
  Inputs inputs;
  bool pass = true;
  std::string verdict;  // defaults to pass/fail
  json details = json::object();
};

int emit(const Report& r, std::ostream& out) {
  json j;
  j["command"] = r.command;
  j["inputs_digest"] = r.inputs.digest();
  j["verdict"] = r.verdict.empty() ? (r.pass ? "pass" : "fail") : r.verdict;
  j["details"] = r.details;
  j["versions"] = {{"tool", KUF_VERSION}, {"facts", bundled_facts().version}};
  out << j.dump(2) << '\n';
  return r.pass ? kExitPass : kExitFail;
}

json table_json(const ExistenceTable& t) {
  json rows = json::array();
  json cols = json::array();
  for (const auto& r : t.rows) rows.push_back(r.label);
  for (const auto& c : t.cols) cols.push_back(c.label);
  json cells = json::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t j = 0; j < t.cols.size(); ++j) {
      const TableCell& cell = t.cells[i][j];
      json c{{"row", t.rows[i].label},
             {"col", t.cols[j].label},
             {"status", status_name(cell.status)},
             {"symbol", status_symbol(cell.status)}};
      if (cell.members.size() == 1) {
        const auto& m = cell.members.front();
        c["d"] = m.d;
        c["N"] = m.n;
        if (m.verdict.recipe) {
          c["recipe"] = m.verdict.recipe->describe();
        } else {
          c["citation"] = m.verdict.citation;
        }
      } else {
        c["members"] = cell.members.size();
        c["provenance"] = cell.provenance;
      }
      cells.push_back(std::move(c));
    }
  }
  return {{"k", t.k}, {"rows", rows}, {"cols", cols}, {"cells", cells}};
}

}  // namespace

std::string fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Construct and verify k-uniform states, orthogonal arrays, "
               "codes and maskers.",
               "kuf"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 1;
  std::uint64_t seed = 0;
  app.add_option("--threads", threads, "Worker threads for verification")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--seed", seed, "Seed for sampling checks");

  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::function<int()> fn) {
    sub->callback([&action, fn] { action = fn; });
  };

  int k = 0;
  int d = 0;
  int n = 0;
  int t = 0;
  int split = 0;
  int delta = 0;
  int trim = 0;
  int samples = 0;
  bool expect_self_dual = false;
  std::string output;
  std::string input;
  std::string code_path;
  std::string state_path;
  std::string bundle;
  std::string format = "json";
  std::string layout;
  std::string d_range;
  std::string n_range;
  std::vector<std::string> files;

  // construct
  auto* construct = app.add_subcommand("construct", "Build an object");
  construct->require_subcommand(1);
  auto* c_kuni = construct->add_subcommand("kuniform", "k-uniform state");
  c_kuni->add_option("--k", k)->required();
  c_kuni->add_option("--d", d)->required();
  c_kuni->add_option("--N", n)->required();
  c_kuni->add_option("-o,--output", output)->required();
  on(c_kuni, [&] {
    Report r("construct kuniform");
    r.inputs.add_text("kuniform " + std::to_string(k) + " " + std::to_string(d) +
                      " " + std::to_string(n));
    const ExistenceVerdict v = exists_k_uniform(k, static_cast<unsigned>(d), n);
    r.details = {{"k", k}, {"d", d}, {"N", n}, {"existence", verdict_json(v)}};
    if (!v.recipe) {
      r.pass = false;
      r.verdict = "refused";
      err << "no implemented construction for k=" << k << " d=" << d
          << " N=" << n << " (" << status_name(v.status) << ")\n";
      return emit(r, out);
    }
    const PureState s = execute_recipe(*v.recipe);
    const UniformityReport u = verify_k_uniform(s, k);
    save_state(s, output);
    r.pass = u.pass;
    r.details["terms"] = s.term_count();
    r.details["output"] = output;
    r.details["uniformity"] = uniformity_json(u);
    return emit(r, out);
  });
  auto* c_ghz = construct->add_subcommand("ghz", "GHZ state");
  c_ghz->add_option("--d", d)->required();
  c_ghz->add_option("--N", n)->required();
  c_ghz->add_option("-o,--output", output)->required();
  on(c_ghz, [&] {
    Report r("construct ghz");
    r.inputs.add_text("ghz " + std::to_string(d) + " " + std::to_string(n));
    if (d < 1 || n < 1) throw UsageError("ghz needs d >= 1 and N >= 1");
    const PureState s = ghz(static_cast<unsigned>(d), static_cast<unsigned>(n));
    save_state(s, output);
    r.details = {{"d", d}, {"N", n}, {"terms", s.term_count()}, {"output", output}};
    return emit(r, out);
  });
  auto* c_mds = construct->add_subcommand("mds", "Extended Reed-Solomon code");
  c_mds->add_option("--d", d, "Field order (prime power)")->required();
  c_mds->add_option("--t", t, "Dimension")->required();
  c_mds->add_option("-o,--output", output)->required();
  on(c_mds, [&] {
    Report r("construct mds");
    r.inputs.add_text("mds " + std::to_string(d) + " " + std::to_string(t));
    const auto pp = d > 0 ? prime_power(static_cast<unsigned>(d)) : std::nullopt;
    if (!pp) throw UsageError("--d must be a prime power");
    if (t < 1) throw UsageError("--t must be positive");
    const LinearCode code =
        mds_code(field_new(pp->first, pp->second), static_cast<std::size_t>(t));
    save_code(code, output);
    r.details = {{"code", describe(code)},
                 {"dual_distance", code.dual_distance()},
                 {"output", output}};
    return emit(r, out);
  });
  auto* c_oa = construct->add_subcommand("oa", "Orthogonal array of a code");
  c_oa->add_option("--code", code_path)->required()->check(CLI::ExistingFile);
  c_oa->add_option("--trim", trim, "Keep the first N columns");
  c_oa->add_option("--k", k, "Strength for --trim");
  c_oa->add_option("-o,--output", output)->required();
  on(c_oa, [&] {
    Report r("construct oa");
    r.inputs.add_file(code_path);
    const LinearCode code = load_code(code_path);
    OrthogonalArray a = oa_from_code(code);
    if (trim > 0) {
      a = trim_to_iroa(a, k > 0 ? k : a.strength(), static_cast<std::size_t>(trim));
    }
    save_oa(a, output);
    r.details = {{"runs", a.runs()},
                 {"factors", a.factors()},
                 {"levels", a.levels()},
                 {"strength", a.strength()},
                 {"output", output}};
    return emit(r, out);
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check an object from a file");
  verify->require_subcommand(1);
  auto* v_state = verify->add_subcommand("state", "k-uniformity of a state");
  v_state->add_option("--k", k)->required();
  v_state->add_option("file", input)->required()->check(CLI::ExistingFile);
  on(v_state, [&] {
    Report r("verify state");
    r.inputs.add_file(input);
    const PureState s = load_state(input);
    const UniformityReport u = verify_k_uniform(s, k);
    r.pass = u.pass;
    r.details = uniformity_json(u);
    if (!u.possible) r.verdict = "impossible";
    return emit(r, out);
  });
  auto* v_oa = verify->add_subcommand("oa", "Strength and irredundancy");
  v_oa->add_option("--k", k)->required();
  v_oa->add_option("file", input)->required()->check(CLI::ExistingFile);
  on(v_oa, [&] {
    Report r("verify oa");
    r.inputs.add_file(input);
    const OrthogonalArray a = load_oa(input);
    const bool strength_ok = verify_strength(a, k);
    const int w = oa_min_distance(a);
    const bool irredundant =
        strength_ok && (w == kInfiniteDistance || w >= k + 1);
    r.pass = strength_ok;
    r.details = {{"runs", a.runs()},
                 {"factors", a.factors()},
                 {"levels", a.levels()},
                 {"k", k},
                 {"strength_ok", strength_ok},
                 {"min_distance", w == kInfiniteDistance ? json("inf") : json(w)},
                 {"irredundant_for_k", irredundant}};
    return emit(r, out);
  });
  auto* v_code = verify->add_subcommand("code", "Parameters of a linear code");
  v_code->add_option("file", input)->required()->check(CLI::ExistingFile);
  v_code->add_flag("--expect-self-dual", expect_self_dual);
  on(v_code, [&] {
    Report r("verify code");
    r.inputs.add_file(input);
    const LinearCode code = load_code(input);
    const bool self_dual = is_self_dual(code);
    const int dw = code.dual_distance();
    r.pass = !expect_self_dual || self_dual;
    r.details = {{"code", describe(code)},
                 {"N", code.length()},
                 {"t", code.dimension()},
                 {"dual_distance", dw == kInfiniteDistance ? json("inf") : json(dw)},
                 {"self_dual", self_dual}};
    return emit(r, out);
  });

  // compose
  auto* compose = app.add_subcommand("compose", "Tensor two states party-wise");
  compose->add_option("files", files)->required()->expected(2)->check(CLI::ExistingFile);
  compose->add_option("--k", k, "Verify k-uniformity of the result");
  compose->add_option("-o,--output", output)->required();
  on(compose, [&] {
    Report r("compose");
    for (const auto& f : files) r.inputs.add_file(f);
    const PureState s = tensor_parties(load_state(files[0]), load_state(files[1]));
    save_state(s, output);
    r.details = {{"N", s.parties()}, {"d", s.local_dim()},
                 {"terms", s.term_count()}, {"output", output}};
    if (k > 0) {
      const UniformityReport u = verify_k_uniform(s, k);
      r.pass = u.pass;
      r.details["uniformity"] = uniformity_json(u);
    }
    return emit(r, out);
  });

  // mask
  auto* mask = app.add_subcommand("mask", "Build or verify maskers");
  mask->require_subcommand(1);
  auto* m_build = mask->add_subcommand("build", "Split a (k+1)-uniform state");
  m_build->add_option("--state", state_path)->required()->check(CLI::ExistingFile);
  m_build->add_option("--split", split, "Party to split off (0-based)");
  m_build->add_option("--k", k)->required();
  m_build->add_option("-o,--output", output, "Bundle directory")->required();
  on(m_build, [&] {
    Report r("mask build");
    r.inputs.add_file(state_path);
    const Masker m = build_masker(load_state(state_path), split, k);
    const MaskingReport rep = verify_masker(m, k);
    save_masker(m, output, &rep);
    r.pass = rep.pass;
    r.details = {{"d", m.d}, {"N", m.n}, {"verified_k", m.verified_k},
                 {"split", split}, {"output", output},
                 {"subsets_checked", rep.subsets_checked}, {"exact", rep.exact}};
    return emit(r, out);
  });
  auto* m_verify = mask->add_subcommand("verify", "Cross-reduction check");
  m_verify->add_option("--k", k)->required();
  m_verify->add_option("--samples", samples, "Random superpositions to sample");
  m_verify->add_option("bundle", bundle)->required()->check(CLI::ExistingDirectory);
  on(m_verify, [&] {
    Report r("mask verify");
    r.inputs.add_bundle(bundle);
    const Masker m = load_masker(bundle);
    const MaskingReport rep = verify_masker(m, k);
    json violations = json::array();
    for (const auto& v : rep.violations) {
      violations.push_back({{"subset", subset_json(v.subset)},
                            {"s", v.s},
                            {"t", v.t},
                            {"max_abs_dev", v.max_abs_dev}});
    }
    json reductions = json::array();
    for (const auto& rho : rep.common) {
      reductions.push_back({{"subset", subset_json(rho.parties())},
                            {"rho", format_operator(rho)}});
    }
    r.pass = rep.pass;
    r.details = {{"d", rep.d}, {"N", rep.n}, {"k", rep.k}, {"exact", rep.exact},
                 {"subsets_checked", rep.subsets_checked},
                 {"violations", violations}, {"common", reductions}};
    if (samples > 0) {
      const SamplingReport s = sample_masking(m, k, samples, seed);
      r.details["sampling"] = {{"samples", s.samples}, {"seed", seed},
                               {"max_deviation", s.max_deviation},
                               {"pass", s.pass}};
    }
    return emit(r, out);
  });
  auto* m_feasible = mask->add_subcommand("feasible", "Strong masking gate");
  m_feasible->add_option("--N", n)->required();
  m_feasible->add_option("--d", d)->required();
  on(m_feasible, [&] {
    Report r("mask feasible");
    r.inputs.add_text("feasible " + std::to_string(n) + " " + std::to_string(d));
    if (n < 2 || d < 2) throw UsageError("need N >= 2 and d >= 2");
    const Feasibility f = strong_masking_feasible(n, static_cast<unsigned>(d));
    r.pass = f.feasible;
    r.verdict = f.feasible ? "feasible" : (f.settled ? "infeasible" : "unknown");
    r.details = {{"N", n}, {"d", d}, {"settled", f.settled}, {"reason", f.reason}};
    return emit(r, out);
  });

  // qecc
  auto* qecc = app.add_subcommand("qecc", "Pure quantum code checks");
  qecc->require_subcommand(1);
  auto* q_verify = qecc->add_subcommand("verify", "Pure-code condition");
  q_verify->add_option("--delta", delta)->required();
  q_verify->add_option("--bundle", bundle)->check(CLI::ExistingDirectory);
  q_verify->add_option("files", files)->check(CLI::ExistingFile);
  on(q_verify, [&] {
    Report r("qecc verify");
    std::vector<PureState> basis;
    if (!bundle.empty()) {
      r.inputs.add_bundle(bundle);
      basis = load_masker(bundle).images;
    }
    for (const auto& f : files) {
      r.inputs.add_file(f);
      basis.push_back(load_state(f));
    }
    if (basis.empty()) throw UsageError("give state files or --bundle");
    const QeccReport q = verify_pure_qecc(basis, delta);
    json violations = json::array();
    for (const auto& v : q.violations) {
      violations.push_back({{"error", v.error}, {"i", v.i}, {"j", v.j},
                            {"magnitude", v.magnitude}});
    }
    r.pass = q.pass;
    r.details = {{"N", q.n}, {"d", q.d}, {"K", q.dimension}, {"delta", q.delta},
                 {"exact", q.exact}, {"errors_checked", q.errors_checked},
                 {"worst_violation", q.worst_violation},
                 {"violations", violations},
                 {"singleton_ok",
                  singleton_check(static_cast<int>(q.n), q.dimension,
                                  std::max(0, q.delta - 1), q.d)}};
    return emit(r, out);
  });

  // table
  auto* table = app.add_subcommand("table", "Existence grid");
  table->add_option("--k", k)->required();
  table->add_option("--d", d_range, "a or a..b");
  table->add_option("--N", n_range, "a or a..b");
  table->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  table->add_option("--layout", layout)->check(CLI::IsMember({"published"}));
  on(table, [&] {
    if (k < 1) throw UsageError("--k must be positive");
    ExistenceTable grid;
    if (layout == "published") {
      if (k != 4 && k != 5) throw UsageError("published layout needs k = 4 or 5");
      grid = published_table(k);
    } else {
      if (d_range.empty() || n_range.empty()) {
        throw UsageError("--d and --N are required without --layout");
      }
      const Range dr = parse_range(d_range, "--d");
      const Range nr = parse_range(n_range, "--N");
      if (dr.lo < 2 || nr.lo < 2) throw UsageError("need d >= 2 and N >= 2");
      grid = emit_table(k, dr.lo, dr.hi, nr.lo, nr.hi);
    }
    if (format == "text") {
      out << format_table_text(grid);
      return kExitPass;
    }
    Report r("table");
    r.inputs.add_text("table " + std::to_string(k) + " " + d_range + " " +
                      n_range + " " + layout);
    r.verdict = "ok";
    r.details = table_json(grid);
    return emit(r, out);
  });

  std::vector<std::string> argv_store{"kuf"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    load_caps_from_env();
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  set_thread_count(threads);
  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RankError& e) {
    err << "rank error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FieldMismatch& e) {
    err << "field mismatch: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const json::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace kuf::cli
