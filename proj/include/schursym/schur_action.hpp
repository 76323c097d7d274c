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

#ifndef SCHURSYM_SCHUR_ACTION_HPP
#define SCHURSYM_SCHUR_ACTION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "schursym/superalgebra.hpp"

namespace schursym {

/// xi_{u,v}(chi_{k,l}): zero unless some pi has u.pi = k and v.pi = l, in
/// which case (-1)^{s(u,pi) + s(v,pi)}. The value does not depend on pi. It
/// is zero as well when chi_{u,v} repeats an odd generator.
int xi_evaluate(const MultiIndex& u, const MultiIndex& v, const MultiIndex& k, const MultiIndex& l,
                const Alphabet& alphabet);

/// Some pi with u.pi = k and v.pi = l, if one exists.
std::optional<Permutation> find_equivalence(const MultiIndex& u, const MultiIndex& v, const MultiIndex& k,
                                            const MultiIndex& l);

/// All distinct rearrangements of a word, ascending.
std::vector<MultiIndex> rearrangements(const MultiIndex& w);

/// Terms of xi_{u,v} chi where m = eps chi_{i,j} is the lifted monomial:
/// sum over a ~ u of xi_{u,v}(chi_{a,j}) chi_{i,a}.
std::vector<SignedMonomial> left_action_terms(const MultiIndex& u, const MultiIndex& v, const Monomial& m,
                                              const Alphabet& alphabet);
/// Terms of chi xi_{u,v}: sum over b ~ v of xi_{u,v}(chi_{i,b}) chi_{b,j}.
std::vector<SignedMonomial> right_action_terms(const MultiIndex& u, const MultiIndex& v, const Monomial& m,
                                               const Alphabet& alphabet);

template <class R>
FormalSum<R> act_left(const MultiIndex& u, const MultiIndex& v, const FormalSum<R>& s, const Alphabet& alphabet) {
    FormalSum<R> out;
    for (const auto& [m, c] : s.terms()) {
        if (m.degree() != static_cast<int>(u.size())) continue;
        for (const auto& term : left_action_terms(u, v, m, alphabet)) out.add_signed(term, c);
    }
    return out;
}

template <class R>
FormalSum<R> act_right(const MultiIndex& u, const MultiIndex& v, const FormalSum<R>& s, const Alphabet& alphabet) {
    FormalSum<R> out;
    for (const auto& [m, c] : s.terms()) {
        if (m.degree() != static_cast<int>(u.size())) continue;
        for (const auto& term : right_action_terms(u, v, m, alphabet)) out.add_signed(term, c);
    }
    return out;
}

} // namespace schursym

#endif // SCHURSYM_SCHUR_ACTION_HPP
