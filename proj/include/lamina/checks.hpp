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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lamina {

enum class CheckStatus { kPass, kFail, kSkipped };
std::string_view to_string(CheckStatus s);

/// Matroid files (text format of io.hpp) plus a description of the sets
/// that exhibit the violation.
struct CheckWitness {
  std::vector<std::string> files;
  std::string detail;
};

struct CheckResult {
  std::string check_id;
  CheckStatus status = CheckStatus::kSkipped;
  std::int64_t elapsed_ms = 0;
  std::string summary;  // one line: what was covered
  std::optional<CheckWitness> witness;  // always set on kFail
};

struct CheckOptions {
  std::uint64_t seed = 1;
  int corpus_count = 1200;  // random corpus samples on top of the catalog slice
  int max_elements = 8;
};

/// Registered ids in report order.
const std::vector<std::string>& check_ids();
bool is_check_registered(std::string_view id);

/// Sub-seed for one check; independent of which other checks run.
std::uint64_t check_seed(std::uint64_t seed, std::string_view id);

/// Runs one check. Throws std::invalid_argument for an unknown id.
CheckResult run_check(std::string_view id, const CheckOptions& options = {});

/// Runs checks on up to `jobs` threads; results keep the order of `ids`.
std::vector<CheckResult> run_checks(const std::vector<std::string>& ids, const CheckOptions& options = {},
                                    int jobs = 1);

}  // namespace lamina
