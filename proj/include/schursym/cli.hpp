/*
   Copyright 2026 The schursym Authors

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

#ifndef SCHURSYM_CLI_HPP
#define SCHURSYM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace schursym::cli {

enum ExitCode : int { Ok = 0, Violations = 1, Usage = 2 };

// Runs one command line (without the program name). The JSON report goes to
// `out` (or to the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace schursym::cli

#endif // SCHURSYM_CLI_HPP
