// Copyright 2026 The qrelent Authors
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
#include <functional>
#include <string>
#include <vector>

namespace qrelent {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriteriaCount = 12;

/// One seeded criterion, 1..11.
CriterionResult run_criterion(int id, std::uint64_t seed);

/// Criteria 1..11 at `seed`, then 12: the same verdicts at every seed in `replay`.
/// `report` is called as each result completes.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0, const std::vector<std::uint64_t>& replay = {1, 2},
                                            const std::function<void(const CriterionResult&)>& report = {});

std::string format_line(const CriterionResult& r);

}  // namespace qrelent
