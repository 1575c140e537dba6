/*
   Copyright 2026 The fockcheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Property suites run by `fockcheck verify-all` and the acceptance test.

#ifndef FOCKCHECK_ACCEPTANCE_HPP
#define FOCKCHECK_ACCEPTANCE_HPP

#include <optional>
#include <string>
#include <vector>

namespace fockcheck {

struct SuiteResult {
    std::string name;
    std::string description;
    bool pass = false;
    /// Counts, worst ratios and the first failure, one line.
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    /// Replaces every suite's pinned precision; tolerances are loosened to
    /// 10^(-P/2) where needed.
    std::optional<unsigned> precision;
    unsigned jobs = 1;
};

const std::vector<std::string>& acceptance_suite_names();
SuiteResult run_acceptance_suite(const std::string& name, const AcceptanceOptions& options);
std::vector<SuiteResult> run_acceptance(const AcceptanceOptions& options);

}  // namespace fockcheck

#endif  // FOCKCHECK_ACCEPTANCE_HPP
