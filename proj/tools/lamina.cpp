// Copyright 2026 The Authors.
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

// Command-line front end. Exit codes: 0 success / true / all checks pass,
// 1 false / some check failed, 2 usage, parse or validation error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lamina/checks.hpp"
#include "lamina/constructions.hpp"
#include "lamina/corpus.hpp"
#include "lamina/io.hpp"
#include "lamina/laminar.hpp"
#include "lamina/minors.hpp"

namespace {

using nlohmann::json;
using namespace lamina;

constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

Matroid load(const std::string& path) { return parse_matroid(read_text_file(path)); }

json set_json(const Matroid& m, Subset s) {
  json out = json::array();
  for (int e : s) out.push_back(m.label(e));
  return out;
}

int cmd_construct(const std::string& family, std::optional<int> n, std::optional<int> k, const std::string& out) {
  const auto f = named_family_from_string(family);
  if (!f) throw std::invalid_argument("unknown family '" + family + "'");
  const std::string text = serialize_matroid(named_matroid(*f, {n, k}));
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out);
    if (!file) throw std::runtime_error("cannot write '" + out + "'");
    file << text;
  }
  return 0;
}

int cmd_analyze(const std::string& path, bool as_json) {
  const Matroid m = load(path);
  const SetFamily cs = circuits(m);
  const auto cfs = cyclic_flats(m);
  const SetFamily hams = hamiltonian_flats(m);
  const bool nested = is_nested(m).holds, laminar = is_laminar(m).holds, paving = is_paving(m);
  const int min_lam = min_laminar_k(m), min_cl = min_closure_laminar_k(m);
  if (as_json) {
    json j;
    j["elements"] = m.size();
    j["labels"] = m.labels();
    j["rank"] = m.rank();
    j["circuits"] = json::array();
    for (Subset c : cs) j["circuits"].push_back(set_json(m, c));
    j["cyclic_flats"] = json::array();
    for (const auto& z : cfs) j["cyclic_flats"].push_back({{"set", set_json(m, z.set)}, {"rank", z.rank}});
    j["hamiltonian_flats"] = json::array();
    for (Subset h : hams) j["hamiltonian_flats"].push_back(set_json(m, h));
    j["nested"] = nested;
    j["laminar"] = laminar;
    j["paving"] = paving;
    j["min_laminar_k"] = min_lam;
    j["min_closure_laminar_k"] = min_cl;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "elements: " << m.size() << "\nrank: " << m.rank() << "\n";
  std::cout << "circuits (" << cs.size() << "):";
  for (Subset c : cs) std::cout << " " << format_subset(m, c);
  std::cout << "\ncyclic flats (" << cfs.size() << "):";
  for (const auto& z : cfs) std::cout << " " << format_subset(m, z.set) << ":" << z.rank;
  std::cout << "\nhamiltonian flats (" << hams.size() << "):";
  for (Subset h : hams) std::cout << " " << format_subset(m, h);
  std::cout << "\nnested: " << (nested ? "true" : "false") << "\nlaminar: " << (laminar ? "true" : "false")
            << "\npaving: " << (paving ? "true" : "false") << "\nmin_laminar_k: " << min_lam
            << "\nmin_closure_laminar_k: " << min_cl << "\n";
  return 0;
}

int cmd_minor(const std::string& host_path, const std::string& target_path) {
  const Matroid host = load(host_path), target = load(target_path);
  if (auto spec = find_minor(host, target)) {
    std::cout << "minor: yes\ndelete: " << format_subset(host, spec->delete_set)
              << "\ncontract: " << format_subset(host, spec->contract_set) << "\n";
    return 0;
  }
  std::cout << "minor: no\n";
  return kExitFalse;
}

int cmd_iso(const std::string& a_path, const std::string& b_path) {
  const Matroid a = load(a_path), b = load(b_path);
  if (auto map = find_isomorphism(a, b)) {
    std::cout << "isomorphic: yes\n";
    for (int e = 0; e < a.size(); ++e) std::cout << a.label(e) << " -> " << b.label((*map)[e]) << "\n";
    return 0;
  }
  std::cout << "isomorphic: no\n";
  return kExitFalse;
}

int cmd_verify(std::vector<std::string> ids, std::uint64_t seed, bool as_json, int jobs, int corpus_count) {
  if (ids.empty() || std::find(ids.begin(), ids.end(), "all") != ids.end()) ids = check_ids();
  for (const auto& id : ids) {
    if (!is_check_registered(id)) throw std::invalid_argument("unknown check id '" + id + "'");
  }
  CheckOptions options;
  options.seed = seed;
  options.corpus_count = corpus_count;
  const std::vector<CheckResult> results = run_checks(ids, options, jobs);
  int failures = 0;
  for (const CheckResult& r : results) {
    failures += r.status == CheckStatus::kFail;
    if (as_json) {
      json j{{"check_id", r.check_id}, {"status", to_string(r.status)}, {"elapsed_ms", r.elapsed_ms}};
      if (!r.summary.empty()) j["summary"] = r.summary;
      if (r.witness) j["witness"] = {{"files", r.witness->files}, {"detail", r.witness->detail}};
      std::cout << j.dump() << "\n";
      continue;
    }
    std::printf("%-5s %-22s %6lld ms  %s\n", r.status == CheckStatus::kPass ? "PASS" : "FAIL", r.check_id.c_str(),
                static_cast<long long>(r.elapsed_ms), r.witness ? r.witness->detail.c_str() : r.summary.c_str());
    if (r.witness) {
      for (const auto& file : r.witness->files) {
        std::istringstream lines(file);
        for (std::string line; std::getline(lines, line);) std::printf("        | %s\n", line.c_str());
      }
    }
  }
  if (!as_json) std::printf("%zu checks, %d failed\n", results.size(), failures);
  return failures ? kExitFalse : 0;
}

int cmd_corpus(std::uint64_t seed, int count, int max_elements, const std::string& dir) {
  CorpusSpec spec;
  spec.seed = seed;
  spec.count = count;
  spec.max_elements = max_elements;
  const auto corpus = generate_corpus(spec);
  std::filesystem::create_directories(dir);
  char name[32];
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::snprintf(name, sizeof name, "%05zu.matroid", i);
    std::ofstream file(std::filesystem::path(dir) / name);
    if (!file) throw std::runtime_error("cannot write into '" + dir + "'");
    file << "# " << corpus[i].origin << " (" << to_string(corpus[i].source) << ")\n" << serialize_matroid(corpus[i].matroid);
  }
  std::cout << corpus.size() << " matroids written to " << dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lamina: k-laminar and k-closure-laminar matroids"};
  app.require_subcommand(1);

  std::string family, out_path;
  std::optional<int> n, k;
  auto* construct = app.add_subcommand("construct", "Write a named matroid in the text format");
  construct->add_option("--family", family, "Family id (Mn, Nn, Pn, MK23, MK23minus, MK4, F7, F7star, ...)")->required();
  construct->add_option("--n", n, "Parameter n");
  construct->add_option("--k", k, "Parameter k");
  construct->add_option("-o,--output", out_path, "Output file (default stdout)");

  std::string file;
  bool as_json = false;
  auto* analyze = app.add_subcommand("analyze", "Print structure and class verdicts");
  analyze->add_option("FILE", file)->required();
  analyze->add_flag("--json", as_json);

  std::string host, target;
  auto* minor = app.add_subcommand("minor", "Search for a minor isomorphic to the target");
  minor->add_option("--host", host)->required();
  minor->add_option("--target", target)->required();

  std::string file_a, file_b;
  auto* iso = app.add_subcommand("iso", "Test two matroids for isomorphism");
  iso->add_option("FILE1", file_a)->required();
  iso->add_option("FILE2", file_b)->required();

  std::vector<std::string> ids;
  std::uint64_t seed = 1;
  int jobs = 1, corpus_count = 1200;
  auto* verify = app.add_subcommand("verify", "Run registered checks");
  verify->add_option("--check", ids, "Check id, repeatable; 'all' or none runs everything");
  verify->add_option("--seed", seed);
  verify->add_flag("--json", as_json);
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--corpus-count", corpus_count, "Random corpus samples")->check(CLI::NonNegativeNumber);

  int count = 0, max_elements = 8;
  std::string dir;
  auto* corpus = app.add_subcommand("corpus", "Write a generated corpus, one file per matroid");
  corpus->add_option("--seed", seed)->required();
  corpus->add_option("--count", count)->required()->check(CLI::NonNegativeNumber);
  corpus->add_option("--max-elements", max_elements)->required()->check(CLI::Range(0, kMaxElements));
  corpus->add_option("-o,--output", dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*construct) return cmd_construct(family, n, k, out_path);
    if (*analyze) return cmd_analyze(file, as_json);
    if (*minor) return cmd_minor(host, target);
    if (*iso) return cmd_iso(file_a, file_b);
    if (*verify) return cmd_verify(ids, seed, as_json, jobs, corpus_count);
    if (*corpus) return cmd_corpus(seed, count, max_elements, dir);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
