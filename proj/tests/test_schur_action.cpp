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

#include "oracles.hpp"
#include "schursym/schur_action.hpp"
#include "schursym/symmetrizer.hpp"

using namespace schursym;

namespace {

// Brute-force pairing: search all permutations for u.pi = k, v.pi = l. Pairs
// whose chi repeats an odd generator pair to zero.
int xi_oracle(const oracle::Word& u, const oracle::Word& v, const oracle::Word& k, const oracle::Word& l,
              const oracle::Grading& g) {
    if (oracle::chi(u, v, g).first == 0) return 0;
    for (const auto& pi : oracle::permutations(static_cast<int>(u.size()))) {
        if (oracle::apply(u, pi) == k && oracle::apply(v, pi) == l) {
            return oracle::star_sign(u, pi, g) * oracle::star_sign(v, pi, g);
        }
    }
    return 0;
}

} // namespace

TEST_CASE("pairing values") {
    const Alphabet a{1, 1};
    CHECK(xi_evaluate(word({1, 2}), word({1, 2}), word({1, 2}), word({1, 2}), a) == 1);
    CHECK(xi_evaluate(word({2, 2}), word({1, 2}), word({2, 2}), word({2, 1}), a) == -1);
    CHECK(xi_evaluate(word({1, 1}), word({1, 1}), word({1, 2}), word({1, 2}), a) == 0);
    // chi_{11,22} = c12^2 = 0 with c12 odd
    CHECK(xi_evaluate(word({1, 1}), word({2, 2}), word({1, 1}), word({2, 2}), a) == 0);
}

TEST_CASE("pairing agrees with permutation search") {
    const Alphabet a{1, 1};
    const oracle::Grading g{1, 1};
    const auto all = oracle::words(2, 3);
    for (const auto& u : all)
        for (const auto& v : all)
            for (const auto& k : all)
                for (const auto& l : all) {
                    CHECK(xi_evaluate(oracle::to_word(u), oracle::to_word(v), oracle::to_word(k), oracle::to_word(l), a) ==
                          xi_oracle(u, v, k, l, g));
                }
}

TEST_CASE("action on symmetrizers follows the index formulas") {
    const Alphabet a{1, 1};
    const auto words = all_multi_indices(a, 2);
    for (const auto& lambda : {Partition({2}), Partition({1, 1})}) {
        const BasicTableau tableau{lambda};
        for (const auto& u : words)
            for (const auto& v : words)
                for (const auto& i : words)
                    for (const auto& j : words) {
                        const auto s = symmetrizer(tableau, i, j, a);
                        FormalSum<Integer> left, right;
                        for (const auto& b : words) {
                            const int x = xi_evaluate(u, v, b, j, a);
                            if (x) left += symmetrizer(tableau, i, b, a) * Integer(x);
                            const int y = xi_evaluate(u, v, i, b, a);
                            if (y) right += symmetrizer(tableau, b, j, a) * Integer(y);
                        }
                        CHECK(act_left(u, v, s, a) == left);
                        CHECK(act_right(u, v, s, a) == right);
                    }
    }
}

TEST_CASE("weight idempotents and content mismatch") {
    const Alphabet a{1, 1};
    const BasicTableau tableau{Partition({2})};
    const auto s = symmetrizer(tableau, word({1, 2}), word({1, 2}), a);
    // xi_{u,u} with u of the same content as j fixes the symmetrizer
    CHECK(act_left(word({1, 2}), word({1, 2}), s, a) == s);
    CHECK(act_right(word({1, 2}), word({1, 2}), s, a) == s);
    CHECK(act_left(word({1, 1}), word({1, 1}), s, a).is_zero());
    CHECK(act_right(word({2, 2}), word({2, 2}), s, a).is_zero());
    CHECK(rearrangements(word({1, 2, 1})).size() == 3);
}
