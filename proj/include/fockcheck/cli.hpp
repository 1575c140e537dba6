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

#ifndef FOCKCHECK_CLI_HPP
#define FOCKCHECK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fockcheck {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumeric = 2;
inline constexpr int kExitInconsistent = 3;

/// Runs one command line (without the program name). The report goes to
/// `out` or the --out file, diagnostics to `err`; stdin is read for --input -.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fockcheck

#endif  // FOCKCHECK_CLI_HPP
