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

#include "schursym/schur_action.hpp"

#include <algorithm>

namespace schursym {

std::optional<Permutation> find_equivalence(const MultiIndex& u, const MultiIndex& v, const MultiIndex& k,
                                            const MultiIndex& l) {
    const std::size_t r = u.size();
    if (v.size() != r || k.size() != r || l.size() != r) return std::nullopt;
    std::vector<int> images(r);
    std::vector<bool> used(r, false);
    for (std::size_t t = 0; t < r; ++t) {
        std::size_t s = 0;
        while (s < r && (used[s] || u[s] != k[t] || v[s] != l[t])) ++s;
        if (s == r) return std::nullopt;
        used[s] = true;
        images[t] = static_cast<int>(s);
    }
    return Permutation(std::move(images));
}

int xi_evaluate(const MultiIndex& u, const MultiIndex& v, const MultiIndex& k, const MultiIndex& l,
                const Alphabet& alphabet) {
    const auto pi = find_equivalence(u, v, k, l);
    if (!pi) return 0;
    // a repeated odd generator makes chi_{u,v} vanish; so does xi_{u,v}
    if (!normalize_monomial(u, v, alphabet)) return 0;
    return (star_exponent(u, *pi, alphabet) + star_exponent(v, *pi, alphabet)) % 2 ? -1 : 1;
}

std::vector<MultiIndex> rearrangements(const MultiIndex& w) {
    MultiIndex current = w;
    std::sort(current.begin(), current.end());
    std::vector<MultiIndex> out;
    do {
        out.push_back(current);
    } while (std::next_permutation(current.begin(), current.end()));
    return out;
}

namespace {

int lift_sign(const MultiIndex& i, const MultiIndex& j, const Alphabet& alphabet) {
    // the flattened monomial is already sorted, so only the prefactor remains
    return chi_prefactor_exponent(i, j, alphabet) ? -1 : 1;
}

} // namespace

std::vector<SignedMonomial> left_action_terms(const MultiIndex& u, const MultiIndex& v, const Monomial& m,
                                              const Alphabet& alphabet) {
    const auto [i, j] = m.words();
    const int eps = lift_sign(i, j, alphabet);
    std::vector<SignedMonomial> out;
    for (const auto& a : rearrangements(u)) {
        const int pairing = xi_evaluate(u, v, a, j, alphabet);
        if (pairing == 0) continue;
        if (auto term = normalize_monomial(i, a, alphabet)) {
            term->sign *= eps * pairing;
            out.push_back(std::move(*term));
        }
    }
    return out;
}

std::vector<SignedMonomial> right_action_terms(const MultiIndex& u, const MultiIndex& v, const Monomial& m,
                                               const Alphabet& alphabet) {
    const auto [i, j] = m.words();
    const int eps = lift_sign(i, j, alphabet);
    std::vector<SignedMonomial> out;
    for (const auto& b : rearrangements(v)) {
        const int pairing = xi_evaluate(u, v, i, b, alphabet);
        if (pairing == 0) continue;
        if (auto term = normalize_monomial(b, j, alphabet)) {
            term->sign *= eps * pairing;
            out.push_back(std::move(*term));
        }
    }
    return out;
}

} // namespace schursym
