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

#ifndef SCHURSYM_VERIFY_HPP
#define SCHURSYM_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schursym/combinatorics.hpp"

namespace schursym {

// Scale of an exhaustive verification run. Without a shape every partition
// of r is visited; characteristic 0 makes modular-rank check both 3 and 5.
struct SuiteConfig {
    Alphabet alphabet{1, 1};
    int r = 2;
    std::optional<Partition> shape;
    std::uint32_t characteristic = 0;
};

struct SuiteReport {
    std::string suite;
    std::size_t checks = 0;
    std::vector<std::string> violations;

    bool passed() const noexcept { return violations.empty(); }
};

// The suite names in their canonical order. "garnir" is accepted by
// run_suite as shorthand for lemma-l2 followed by lemma-l4.
const std::vector<std::string>& suite_names();

// Runs one suite exhaustively at the configured scale. Throws
// std::invalid_argument for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteConfig& config);

} // namespace schursym

#endif // SCHURSYM_VERIFY_HPP
