// Copyright 2026 The qscd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/**
 * @file
 * The acceptance suite shared by `qscd selftest` and the qscd_acceptance
 * binary. Reports contain no timing, so two runs with one seed are
 * byte-identical; timings are returned separately.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qscd {

inline constexpr int kCriterionCount = 10;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double time_limit_seconds = 0.0;  // 0 means none
};

struct AcceptanceOptions {
    std::uint64_t seed = 1;
    /// Criteria to run; empty runs all. Criterion 10 reruns 1-9.
    std::vector<int> only;
};

/// Chi-square upper critical value at significance alpha.
double chi_square_critical(int degrees_of_freedom, double alpha);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);
/// Runs one of criteria 1-9.
CriterionResult run_criterion(int id, std::uint64_t seed);

/// `PASS|FAIL <id> <name> <detail>` per criterion, then a totals line.
std::string format_acceptance_report(const std::vector<CriterionResult>& results);
/// `time <id> <seconds>` per criterion.
std::string format_acceptance_timing(const std::vector<CriterionResult>& results);
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace qscd
