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

// One line per acceptance property; exits non-zero when any fails.

#include "fockcheck/acceptance.hpp"

#include <cstdio>
#include <thread>

int main() {
    fockcheck::AcceptanceOptions options;
    options.jobs = std::max(1u, std::thread::hardware_concurrency());
    int failed = 0;
    for (const auto& name : fockcheck::acceptance_suite_names()) {
        const auto r = fockcheck::run_acceptance_suite(name, options);
        std::printf("%s  %-16s %s (%.1fs)\n      %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.description.c_str(), r.seconds, r.detail.c_str());
        std::fflush(stdout);
        failed += r.pass ? 0 : 1;
    }
    std::printf("%d/%zu acceptance properties hold\n", static_cast<int>(fockcheck::acceptance_suite_names().size()) - failed,
                fockcheck::acceptance_suite_names().size());
    return failed == 0 ? 0 : 1;
}
