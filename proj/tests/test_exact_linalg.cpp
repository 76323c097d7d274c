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

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "schursym/exact_linalg.hpp"
#include "schursym/straightening.hpp"

using namespace schursym;

namespace {

Generator gen(int row, int col) { return Generator{Symbol::plain(row), Symbol::plain(col)}; }

std::vector<FormalSum<Integer>> all_symmetrizers(const Partition& lambda, const Alphabet& a) {
    const BasicTableau tableau{lambda};
    std::vector<FormalSum<Integer>> rows;
    for (const auto& i : all_multi_indices(a, lambda.size()))
        for (const auto& j : all_multi_indices(a, lambda.size())) rows.push_back(symmetrizer(tableau, i, j, a));
    return rows;
}

std::vector<FormalSum<Integer>> semistandard_modified(const Partition& lambda, const Alphabet& a) {
    const BasicTableau tableau{lambda};
    std::vector<FormalSum<Integer>> rows;
    for (const auto& u : enumerate_semistandard(lambda, a))
        for (const auto& v : enumerate_semistandard(lambda, a)) rows.push_back(modified_symmetrizer(tableau, u, v, a));
    return rows;
}

std::size_t rank_of(const std::vector<FormalSum<Integer>>& rows) {
    return rank_exact(std::span<const FormalSum<Integer>>(rows));
}

} // namespace

TEST_CASE("rank basics") {
    const auto s = FormalSum<Integer>::single(Monomial({{gen(1, 1), 2}}), 1) +
                   FormalSum<Integer>::single(Monomial({{gen(1, 2), 1}}), 3);
    CHECK(rank_of({s, s * Integer(2)}) == 1);
    CHECK(rank_of({}) == 0);

    const Alphabet a{1, 1};
    const auto row = all_symmetrizers(Partition({2}), a);
    CHECK(rank_of(row) == 4);
    std::vector<oracle::Poly> dense;
    for (const auto& r : row) dense.push_back(oracle::from_library(r));
    CHECK(oracle::rank(dense) == 4);
    CHECK(rank_of(all_symmetrizers(Partition({2, 2}), a)) == 0);
}

TEST_CASE("rank is invariant under row order and scaling") {
    const Alphabet a{1, 1};
    auto rows = all_symmetrizers(Partition({2, 1}), a);
    const std::size_t base = rank_of(rows);
    std::mt19937 rng(7);
    std::shuffle(rows.begin(), rows.end(), rng);
    for (std::size_t k = 0; k < rows.size(); k += 3) rows[k] *= Integer(-5);
    CHECK(rank_of(rows) == base);
    const auto rational = [&] {
        std::vector<FormalSum<Rational>> out;
        for (const auto& r : rows) out.push_back(convert<Rational>(r) * Rational(1, 7));
        return out;
    }();
    CHECK(rank_exact(std::span<const FormalSum<Rational>>(rational)) == base);
}

TEST_CASE("ranks agree with dense elimination") {
    for (const auto& [m, n, r] : std::vector<std::tuple<int, int, int>>{{1, 1, 3}, {2, 1, 2}}) {
        const Alphabet a{m, n};
        for (const auto& lambda : partitions_of(r)) {
            const auto rows = all_symmetrizers(lambda, a);
            std::vector<oracle::Poly> dense;
            for (const auto& row : rows) dense.push_back(oracle::from_library(row));
            CHECK(rank_of(rows) == oracle::rank(dense));
            const auto modified = semistandard_modified(lambda, a);
            std::vector<oracle::Poly> dense_modified;
            for (const auto& row : modified) dense_modified.push_back(oracle::from_library(row));
            for (const std::uint32_t p : {3U, 5U}) {
                std::vector<FormalSum<ModP>> reduced;
                for (const auto& row : modified) reduced.push_back(reduce_mod_p(row, p));
                CHECK(rank_exact(std::span<const FormalSum<ModP>>(reduced)) == oracle::rank(dense_modified, p));
            }
        }
    }
}

TEST_CASE("coordinates in a basis") {
    const Alphabet a{1, 1};
    const Partition lambda({2, 1});
    const BasicTableau tableau{lambda};
    const auto ssyt = enumerate_semistandard(lambda, a);
    std::vector<FormalSum<Rational>> basis;
    std::vector<std::pair<MultiIndex, MultiIndex>> keys;
    for (const auto& u : ssyt)
        for (const auto& v : ssyt) {
            basis.push_back(convert<Rational>(symmetrizer(tableau, u, v, a)));
            keys.emplace_back(u, v);
        }
    const auto unit = express_in_basis(basis[3], basis);
    REQUIRE(unit);
    for (std::size_t b = 0; b < basis.size(); ++b) CHECK((*unit)[b] == (b == 3 ? 1 : 0));

    // the straightening coefficients are the coordinates
    const Straightener straightener(lambda, a);
    for (const auto& i : all_multi_indices(a, 3))
        for (const auto& j : all_multi_indices(a, 3)) {
            const auto coords = express_in_basis(convert<Rational>(symmetrizer(tableau, i, j, a)), basis);
            REQUIRE(coords);
            const auto result = straightener.straighten_pair(i, j);
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const auto it = result.find(keys[b]);
                CHECK((*coords)[b] == (it == result.end() ? Rational(0) : it->second));
            }
        }

    const auto outside = FormalSum<Rational>::single(Monomial({{gen(1, 1), 3}}), Rational(1));
    CHECK_FALSE(express_in_basis(outside, basis).has_value());
    std::vector<FormalSum<Rational>> dependent{basis[0], basis[0] * Rational(2)};
    CHECK_THROWS_AS(express_in_basis(basis[0], dependent), std::invalid_argument);
}

TEST_CASE("reduction modulo p") {
    const Monomial square({{gen(1, 1), 2}});
    const auto two = reduce_mod_p(FormalSum<Integer>::single(square, 2), 3);
    CHECK(two.coefficient(square).value() == 2);
    CHECK(reduce_mod_p(FormalSum<Integer>::single(square, 3), 3).is_zero());
    CHECK(reduce_mod_p(FormalSum<Integer>::single(square, -1), 5).coefficient(square).value() == 4);
    CHECK_THROWS_AS(reduce_mod_p(FormalSum<Integer>::single(square, 1), 2), std::invalid_argument);
    CHECK_THROWS_AS(reduce_mod_p(FormalSum<Integer>::single(square, 1), 9), std::invalid_argument);
}

TEST_CASE("proportionality") {
    const auto base = FormalSum<Integer>::single(Monomial({{gen(1, 1), 1}}), 2);
    CHECK(proportionality(base * Integer(-3), base) == Rational(-3));
    CHECK(proportionality(FormalSum<Integer>{}, base) == Rational(0));
    CHECK_FALSE(proportionality(FormalSum<Integer>::single(Monomial({{gen(1, 2), 1}}), 1), base).has_value());
}

TEST_CASE("normal monomial count") {
    CHECK(count_normal_monomials(Alphabet{1, 1}, 2) == 8);
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            if (m + n == 0) continue;
            for (int r = 1; r <= 4; ++r) CHECK(count_normal_monomials(Alphabet{m, n}, r) == oracle::monomial_count(m, n, r));
        }
}

// The modified symmetrizer T{112:111} of the one-row shape is 3 c11^2 c21,
// already in the classical case, and no other semistandard T{u:v} involves
// c11^2 c21. Over F_3 the semistandard family therefore loses rank.
TEST_CASE("semistandard modified symmetrizers are dependent over F_3") {
    const Monomial target({{gen(1, 1), 2}, {gen(2, 1), 1}});
    for (const Alphabet a : {Alphabet{1, 1}, Alphabet{3, 0}}) {
        const Partition lambda({3});
        const BasicTableau tableau{lambda};
        const auto special = modified_symmetrizer(tableau, word({1, 1, 2}), word({1, 1, 1}), a);
        CHECK(special == FormalSum<Integer>::single(target, 3));
        for (const auto& u : enumerate_semistandard(lambda, a))
            for (const auto& v : enumerate_semistandard(lambda, a)) {
                if (u == word({1, 1, 2}) && v == word({1, 1, 1})) continue;
                CHECK(modified_symmetrizer(tableau, u, v, a).coefficient(target) == 0);
            }
    }
    const auto rows = semistandard_modified(Partition({3}), Alphabet{1, 1});
    std::vector<FormalSum<ModP>> mod3, mod5;
    for (const auto& row : rows) {
        mod3.push_back(reduce_mod_p(row, 3));
        mod5.push_back(reduce_mod_p(row, 5));
    }
    CHECK(rank_exact(std::span<const FormalSum<ModP>>(mod3)) == 3);
    CHECK(rank_exact(std::span<const FormalSum<ModP>>(mod5)) == 4);
}
