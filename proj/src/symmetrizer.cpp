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

#include "schursym/symmetrizer.hpp"

#include <map>

namespace schursym {

std::string to_string(Variant v) {
    switch (v) {
    case Variant::RowThenColumn: return "row-then-column";
    case Variant::RightComposed: return "right-composed";
    case Variant::LeftComposed: return "left-composed";
    }
    return "row-then-column";
}

Variant parse_variant(std::string_view text) {
    if (text == "row-then-column") return Variant::RowThenColumn;
    if (text == "right-composed") return Variant::RightComposed;
    if (text == "left-composed") return Variant::LeftComposed;
    throw std::invalid_argument("unknown symmetrizer variant '" + std::string(text) + "'");
}

namespace {

void accumulate(FormalSum<Integer>& out, const MultiIndex& left, const MultiIndex& right, int sign,
                const Alphabet& alphabet) {
    if (auto term = normalize_monomial(left, right, alphabet)) {
        out.add_term(term->monomial, Integer(term->sign * sign));
    }
}

void check_lengths(const BasicTableau& tableau, const MultiIndex& i, const MultiIndex& j) {
    if (static_cast<int>(i.size()) != tableau.size() || static_cast<int>(j.size()) != tableau.size()) {
        throw std::invalid_argument("symmetrizer: word lengths must equal the size of the shape");
    }
}

} // namespace

FormalSum<Integer> symmetrizer(const BasicTableau& tableau, const MultiIndex& i, const MultiIndex& j,
                               const Alphabet& alphabet, Variant variant) {
    check_lengths(tableau, i, j);
    FormalSum<Integer> out;
    switch (variant) {
    case Variant::RowThenColumn:
        for_each_group_element(tableau, Axis::Row, [&](const Permutation& rho, int) {
            const auto left = star_action(i, rho, alphabet);
            for_each_group_element(tableau, Axis::Column, [&](const Permutation& kappa, int sgn_kappa) {
                const auto right = star_action(j, kappa, alphabet);
                accumulate(out, left.word, right.word, sgn_kappa * left.sign * right.sign, alphabet);
            });
        });
        break;
    case Variant::RightComposed:
        for_each_group_element(tableau, Axis::Row, [&](const Permutation& rho, int) {
            for_each_group_element(tableau, Axis::Column, [&](const Permutation& kappa, int sgn_kappa) {
                const auto first = star_action(j, kappa, alphabet);
                const auto second = star_action(first.word, rho, alphabet);
                accumulate(out, i, second.word, sgn_kappa * first.sign * second.sign, alphabet);
            });
        });
        break;
    case Variant::LeftComposed:
        for_each_group_element(tableau, Axis::Column, [&](const Permutation& kappa, int sgn_kappa) {
            for_each_group_element(tableau, Axis::Row, [&](const Permutation& rho, int) {
                const auto first = star_action(i, rho, alphabet);
                const auto second = star_action(first.word, kappa, alphabet);
                accumulate(out, second.word, j, sgn_kappa * first.sign * second.sign, alphabet);
            });
        });
        break;
    }
    return out;
}

FormalSum<Integer> symmetrizer(const SymmetrizerKey& key, const Alphabet& alphabet) {
    return symmetrizer(BasicTableau(key.shape), key.left, key.right, alphabet, key.variant);
}

MultiIndex canonical_ell(const Partition& lambda, const Alphabet& alphabet) {
    if (!is_hook(lambda, alphabet.m, alphabet.n)) {
        throw std::invalid_argument("canonical tableau requires an (m|n)-hook partition, got " + lambda.to_string());
    }
    const BasicTableau tableau{lambda};
    MultiIndex out(static_cast<std::size_t>(lambda.size()));
    for (int label = 0; label < lambda.size(); ++label) {
        const int row = tableau.row_of(label);
        const int col = tableau.col_of(label);
        out[static_cast<std::size_t>(label)] = Symbol::plain(row < alphabet.m ? row + 1 : alphabet.m + col + 1);
    }
    return out;
}

namespace {

// prod over blocks and selected symbols of (multiplicity in block)!
Integer multiplicity_factor(const std::vector<std::vector<int>>& blocks, const MultiIndex& w, const Alphabet& alphabet,
                            int wanted_parity) {
    Integer out = 1;
    for (const auto& block : blocks) {
        std::map<Symbol, unsigned> counts;
        for (int label : block) {
            const Symbol s = w.at(static_cast<std::size_t>(label));
            if (!s.is_plain()) throw std::invalid_argument("symmetry factors are defined for plain symbols only");
            if (alphabet.parity(s) == wanted_parity) ++counts[s];
        }
        for (const auto& entry : counts) out *= factorial(entry.second);
    }
    return out;
}

} // namespace

Integer row_factor(const BasicTableau& tableau, const MultiIndex& i, const Alphabet& alphabet) {
    return multiplicity_factor(tableau.rows(), i, alphabet, 0);
}

Integer column_factor(const BasicTableau& tableau, const MultiIndex& j, const Alphabet& alphabet) {
    return multiplicity_factor(tableau.columns(), j, alphabet, 1);
}

SymmetryFactors symmetry_factors(const BasicTableau& tableau, const MultiIndex& i, const MultiIndex& j,
                                 const Alphabet& alphabet) {
    return {row_factor(tableau, i, alphabet), column_factor(tableau, j, alphabet)};
}

FormalSum<Integer> modified_symmetrizer(const BasicTableau& tableau, const MultiIndex& i, const MultiIndex& j,
                                        const Alphabet& alphabet) {
    const auto factors = symmetry_factors(tableau, i, j, alphabet);
    return symmetrizer(tableau, i, j, alphabet).exact_divide(Integer(factors.row_factor * factors.column_factor));
}

} // namespace schursym
