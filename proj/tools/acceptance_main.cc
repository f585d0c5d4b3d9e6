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


// Runs the acceptance suite and prints one PASS/FAIL line per criterion.
// Exit status is 0 only if every selected criterion passes.

#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <iostream>

#include "qscd/acceptance.h"
#include "qscd/parallel.h"

int main(int argc, char** argv) {
    CLI::App app{"qscd acceptance suite"};
    qscd::AcceptanceOptions options;
    int jobs = 0;
    bool timing = true;
    app.add_option("--seed", options.seed, "Root seed")->capture_default_str();
    app.add_option("--only", options.only, "Criterion ids to run (default: all)")->check(CLI::Range(1, 10));
    app.add_option("--jobs", jobs, "Worker threads for trial loops (0: default)")->check(CLI::NonNegativeNumber);
    app.add_flag("!--no-timing", timing, "Omit the timing lines");
    CLI11_PARSE(app, argc, argv);
    qscd::kernels::set_jobs(jobs);

    try {
        const auto results = qscd::run_acceptance(options);
        std::cout << qscd::format_acceptance_report(results);
        if (timing) std::cout << qscd::format_acceptance_timing(results);
        return qscd::all_passed(results) ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
