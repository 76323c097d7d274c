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

#include "schursym/capelli.hpp"

#include "schursym/derivations.hpp"

#include <stdexcept>

namespace schursym {

std::vector<MultiIndex> polarize(const PolarizationSpec& spec, const MultiIndex& k) {
    if (spec.multiplicity < 0) throw std::invalid_argument("polarization multiplicity must be non-negative");
    std::vector<std::size_t> positions;
    for (std::size_t t = 0; t < k.size(); ++t) {
        if (k[t] == spec.source) positions.push_back(t);
    }
    const auto t = static_cast<std::size_t>(spec.multiplicity);
    std::vector<MultiIndex> out;
    if (positions.size() < t) return out;
    // t-subsets of the occurrence positions in lexicographic order
    std::vector<std::size_t> pick(t);
    for (std::size_t a = 0; a < t; ++a) pick[a] = a;
    while (true) {
        MultiIndex replaced = k;
        for (std::size_t a : pick) replaced[positions[a]] = spec.target;
        out.push_back(std::move(replaced));
        std::size_t a = t;
        while (a > 0 && pick[a - 1] == positions.size() - t + a - 1) --a;
        if (a == 0) break;
        ++pick[a - 1];
        for (std::size_t b = a; b < t; ++b) pick[b] = pick[b - 1] + 1;
    }
    return out;
}

std::vector<MultiIndex> polarize_all(const std::vector<PolarizationSpec>& specs, const MultiIndex& k) {
    std::vector<MultiIndex> current{k};
    for (const auto& spec : specs) {
        std::vector<MultiIndex> next;
        for (const auto& w : current) {
            auto produced = polarize(spec, w);
            next.insert(next.end(), std::make_move_iterator(produced.begin()), std::make_move_iterator(produced.end()));
        }
        current = std::move(next);
        if (current.empty()) break;
    }
    return current;
}

namespace {

std::vector<PolarizationSpec> line_specs(const std::vector<std::vector<int>>& lines, const MultiIndex& w,
                                         const Alphabet& alphabet, Side side) {
    std::vector<PolarizationSpec> specs;
    for (std::size_t d = 0; d < lines.size(); ++d) {
        const int color = static_cast<int>(d) + 1;
        for (int u = 1; u <= alphabet.size(); ++u) {
            int count = 0;
            for (int label : lines[d]) count += w.at(static_cast<std::size_t>(label)) == Symbol::plain(u) ? 1 : 0;
            if (count == 0) continue;
            const Symbol target = side == Side::Left ? Symbol::odd(color) : Symbol::even(color);
            specs.push_back({target, Symbol::plain(u), count, side});
        }
    }
    return specs;
}

} // namespace

std::vector<PolarizationSpec> capelli_left_specs(const BasicTableau& tableau, const MultiIndex& k,
                                                 const Alphabet& alphabet) {
    return line_specs(tableau.columns(), k, alphabet, Side::Left);
}

std::vector<PolarizationSpec> capelli_right_specs(const BasicTableau& tableau, const MultiIndex& l,
                                                  const Alphabet& alphabet) {
    return line_specs(tableau.rows(), l, alphabet, Side::Right);
}

MultiIndex colored_ell_odd(const Partition& lambda) {
    const BasicTableau tableau{lambda};
    MultiIndex out(static_cast<std::size_t>(lambda.size()));
    for (int label = 0; label < lambda.size(); ++label) {
        out[static_cast<std::size_t>(label)] = Symbol::odd(tableau.col_of(label) + 1);
    }
    return out;
}

MultiIndex colored_ell_even(const Partition& lambda) {
    const BasicTableau tableau{lambda};
    MultiIndex out(static_cast<std::size_t>(lambda.size()));
    for (int label = 0; label < lambda.size(); ++label) {
        out[static_cast<std::size_t>(label)] = Symbol::even(tableau.row_of(label) + 1);
    }
    return out;
}

FormalSum<Integer> apply_polarization(const PolarizationSpec& spec, const FormalSum<Integer>& s,
                                      const Alphabet& alphabet) {
    if (spec.multiplicity < 0) throw std::invalid_argument("polarization multiplicity must be non-negative");
    // left: row index source -> target; right: column index source -> target
    const Symbol p = spec.side == Side::Left ? spec.target : spec.source;
    const Symbol q = spec.side == Side::Left ? spec.source : spec.target;
    FormalSum<Integer> out = s;
    for (int step = 0; step < spec.multiplicity && !out.is_zero(); ++step) {
        FormalSum<Integer> next;
        for (const auto& [m, c] : out.terms()) {
            for (const auto& term : derive_terms(spec.side, p, q, m, alphabet)) next.add_signed(term, c);
        }
        out = std::move(next);
    }
    return out.exact_divide(factorial(static_cast<unsigned>(spec.multiplicity)));
}

FormalSum<Integer> apply_polarizations(const std::vector<PolarizationSpec>& specs, FormalSum<Integer> s,
                                       const Alphabet& alphabet) {
    // operator products act right to left
    for (auto it = specs.rbegin(); it != specs.rend() && !s.is_zero(); ++it) s = apply_polarization(*it, s, alphabet);
    return s;
}

FormalSum<Integer> capelli_left(const BasicTableau& tableau, const MultiIndex& k, const MultiIndex& i,
                                const MultiIndex& j, const Alphabet& alphabet) {
    return apply_polarizations(capelli_left_specs(tableau, k, alphabet), symmetrizer(tableau, i, j, alphabet),
                               alphabet);
}

FormalSum<Integer> capelli_right(const BasicTableau& tableau, const MultiIndex& l, const MultiIndex& i,
                                 const MultiIndex& j, const Alphabet& alphabet) {
    return apply_polarizations(capelli_right_specs(tableau, l, alphabet), symmetrizer(tableau, i, j, alphabet),
                               alphabet);
}

FormalSum<Integer> capelli_apply(const BasicTableau& tableau, const MultiIndex& k, const MultiIndex& l,
                                 const MultiIndex& i, const MultiIndex& j, const Alphabet& alphabet) {
    auto s = apply_polarizations(capelli_right_specs(tableau, l, alphabet), symmetrizer(tableau, i, j, alphabet),
                                 alphabet);
    return apply_polarizations(capelli_left_specs(tableau, k, alphabet), std::move(s), alphabet);
}

} // namespace schursym
