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

#include "doctest.h"

#include "schursym/straightening.hpp"
#include "schursym/verify.hpp"

using namespace schursym;

TEST_CASE("every suite passes at small scale") {
    for (const auto& [m, n, r] : std::vector<std::tuple<int, int, int>>{{1, 1, 2}, {1, 1, 3}, {2, 1, 2}}) {
        SuiteConfig config;
        config.alphabet = Alphabet{m, n};
        config.r = r;
        config.characteristic = 5;
        for (const auto& name : suite_names()) {
            CAPTURE(name);
            CAPTURE(r);
            const auto report = run_suite(name, config);
            CHECK(report.suite == name);
            CHECK(report.checks > 0);
            CHECK(report.passed());
        }
    }
}

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 18);
    SuiteConfig config;
    CHECK_THROWS_AS(run_suite("no-such-suite", config), std::invalid_argument);
    config.shape = Partition({3});
    CHECK_THROWS_AS(run_suite("lemma-l1", config), std::invalid_argument);
    config.shape.reset();
    const auto garnir = run_suite("garnir", config);
    CHECK(garnir.suite == "garnir");
    CHECK(garnir.checks == run_suite("lemma-l2", config).checks + run_suite("lemma-l4", config).checks);
}

TEST_CASE("modular rank fails at 3 for the one-row shape of degree 3") {
    SuiteConfig config;
    config.alphabet = Alphabet{1, 1};
    config.r = 3;
    config.shape = Partition({3});
    config.characteristic = 3;
    const auto report = run_suite("modular-rank", config);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations.front().find("F_3 is 3, expected 4") != std::string::npos);
}

// Straightening T[121:111] of the one-row shape only sorts the row, so
// T[121:111] = T[112:111]. The column statistics of T_k = 112 exceed those of
// T_i = 121, so the support is dominated in the row preorder (T_i <=_r T_k),
// not in the column preorder.
TEST_CASE("orientation of the straightening triangularity") {
    const Alphabet a{1, 1};
    const Partition lambda({3});
    const BasicTableau tableau{lambda};
    const MultiIndex i = word({1, 2, 1});
    const MultiIndex j = word({1, 1, 1});
    const auto result = straighten_pair(tableau, i, j, a);
    REQUIRE(result == StraighteningResult<Rational>{{{word({1, 1, 2}), j}, Rational(1)}});
    const MultiIndex k = word({1, 1, 2});
    CHECK_FALSE(dominance_leq(dominance_stats(tableau, k, Axis::Column, a), dominance_stats(tableau, i, Axis::Column, a)));
    CHECK(dominance_leq(dominance_stats(tableau, i, Axis::Row, a), dominance_stats(tableau, k, Axis::Row, a)));
}
