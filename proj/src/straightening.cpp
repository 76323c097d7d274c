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

#include "schursym/straightening.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schursym {

namespace {

constexpr std::size_t slot(Side side) { return side == Side::Left ? 0 : 1; }

// The lines a side sorts, and the lines it compares across.
const std::vector<std::vector<int>>& sorted_lines(const BasicTableau& t, Side side) {
    return side == Side::Right ? t.columns() : t.rows();
}

} // namespace

Straightener::Straightener(Partition shape, Alphabet alphabet) : tableau_(std::move(shape)), alphabet_(alphabet) {}

std::optional<CanonicalWord> Straightener::canonicalize(Side side, const MultiIndex& w) const {
    if (static_cast<int>(w.size()) != tableau_.size()) throw std::invalid_argument("word length does not match shape");
    std::vector<int> images(w.size());
    std::iota(images.begin(), images.end(), 0);
    for (const auto& line : sorted_lines(tableau_, side)) {
        std::vector<int> order = line;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return w[static_cast<std::size_t>(a)] < w[static_cast<std::size_t>(b)];
        });
        for (std::size_t k = 0; k < line.size(); ++k) images[static_cast<std::size_t>(line[k])] = order[k];
    }
    const Permutation sorter{std::move(images)};
    const auto acted = star_action(w, sorter, alphabet_);
    // a repeated even entry in a column (right) or odd entry in a row (left) kills the symmetrizer
    const int forbidden_parity = side == Side::Right ? 0 : 1;
    for (const auto& line : sorted_lines(tableau_, side)) {
        for (std::size_t k = 1; k < line.size(); ++k) {
            const Symbol a = acted.word[static_cast<std::size_t>(line[k - 1])];
            if (a == acted.word[static_cast<std::size_t>(line[k])] && alphabet_.parity(a) == forbidden_parity) {
                return std::nullopt;
            }
        }
    }
    const int sign = side == Side::Right ? acted.sign * sorter.sign() : acted.sign;
    return CanonicalWord{sign, acted.word};
}

std::optional<GarnirSets> Straightener::find_violation(Side side, const MultiIndex& w) const {
    const auto& lines = sorted_lines(tableau_, side);
    // right: equal odd entries may not share a row; left: equal even entries may not share a column
    const int forbidden_parity = side == Side::Right ? 1 : 0;
    for (std::size_t d = 0; d + 1 < lines.size(); ++d) {
        const auto& a = lines[d];
        const auto& b = lines[d + 1];
        for (std::size_t q = 0; q < b.size(); ++q) {
            const Symbol x = w[static_cast<std::size_t>(a[q])];
            const Symbol y = w[static_cast<std::size_t>(b[q])];
            std::size_t last = q;
            if (y < x) {
                // strict descent: Y runs from the top of the next line down to q
            } else if (x == y && alphabet_.parity(x) == forbidden_parity) {
                // repeated entry: extend Y over the maximal run of x in the next line
                while (last + 1 < b.size() && w[static_cast<std::size_t>(b[last + 1])] == x) ++last;
            } else {
                continue;
            }
            GarnirSets sets;
            sets.x.assign(a.begin() + static_cast<std::ptrdiff_t>(q), a.end());
            sets.y.assign(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(last + 1));
            return sets;
        }
    }
    return std::nullopt;
}

std::map<MultiIndex, Integer> Straightener::garnir_relation(Side side, const MultiIndex& w,
                                                            const GarnirSets& sets) const {
    std::map<MultiIndex, Integer> relation;
    for (const auto& sigma : garnir_transversal(sets.x, sets.y, tableau_.size())) {
        const auto acted = star_action(w, sigma, alphabet_);
        const int coefficient = side == Side::Right ? acted.sign * sigma.sign() : acted.sign;
        const auto canonical = canonicalize(side, acted.word);
        if (!canonical) continue;
        relation[canonical->word] += coefficient * canonical->sign;
    }
    std::erase_if(relation, [](const auto& entry) { return sgn(entry.second) == 0; });
    return relation;
}

std::vector<Symbol> Straightener::reading(Side side, const MultiIndex& w) const {
    if (side == Side::Left) return w;
    std::vector<Symbol> out;
    out.reserve(w.size());
    for (const auto& col : tableau_.columns()) {
        for (int label : col) out.push_back(w[static_cast<std::size_t>(label)]);
    }
    return out;
}

bool Straightener::precedes(Side side, const MultiIndex& a, const MultiIndex& b) const {
    return reading(side, a) < reading(side, b);
}

Integer Straightener::side_factor(Side side, const MultiIndex& w) const {
    return side == Side::Right ? column_factor(tableau_, w, alphabet_) : row_factor(tableau_, w, alphabet_);
}

const WordExpansion<Rational>& Straightener::expand_rational(Side side, const MultiIndex& w) const {
    auto& memo = rational_memo_[slot(side)];
    {
        std::lock_guard lock(memo_mutex_);
        if (const auto it = memo.find(w); it != memo.end()) return it->second;
    }
    WordExpansion<Rational> result;
    if (is_semistandard(tableau_, w, alphabet_)) {
        result.emplace(w, Rational(1));
    } else {
        const auto sets = find_violation(side, w);
        if (!sets) throw std::logic_error("canonical non-semistandard word without a violation: " + format_word(w));
        const auto relation = garnir_relation(side, w, *sets);
        const auto self = relation.find(w);
        // an empty relation cannot happen: the identity coset always contributes
        if (self == relation.end()) throw std::logic_error("Garnir relation lost its leading term: " + format_word(w));
        const Rational leading(self->second);
        for (const auto& [other, c] : relation) {
            if (other == w) continue;
            if (!precedes(side, other, w)) {
                throw std::logic_error("straightening failed to descend: " + format_word(other) + " from " +
                                       format_word(w));
            }
            const Rational scale = -Rational(c) / leading;
            for (const auto& [target, coeff] : expand_rational(side, other)) result[target] += scale * coeff;
        }
        std::erase_if(result, [](const auto& entry) { return sgn(entry.second) == 0; });
    }
    std::lock_guard lock(memo_mutex_);
    return memo.try_emplace(w, std::move(result)).first->second;
}

const WordExpansion<Integer>& Straightener::expand_integral(Side side, const MultiIndex& w) const {
    auto& memo = integral_memo_[slot(side)];
    {
        std::lock_guard lock(memo_mutex_);
        if (const auto it = memo.find(w); it != memo.end()) return it->second;
    }
    WordExpansion<Integer> result;
    if (is_semistandard(tableau_, w, alphabet_)) {
        result.emplace(w, Integer(1));
    } else {
        const auto sets = find_violation(side, w);
        if (!sets) throw std::logic_error("canonical non-semistandard word without a violation: " + format_word(w));
        const auto relation = garnir_relation(side, w, *sets);
        const auto self = relation.find(w);
        if (self == relation.end()) throw std::logic_error("Garnir relation lost its leading term: " + format_word(w));
        // T[.:w] = factor(w) T{.:w}, so the relation holds for modified symmetrizers
        // with coefficients c_w' factor(w'), and we divide by c_w factor(w)
        const Integer leading = self->second * side_factor(side, w);
        for (const auto& [other, c] : relation) {
            if (other == w) continue;
            if (!precedes(side, other, w)) {
                throw std::logic_error("straightening failed to descend: " + format_word(other) + " from " +
                                       format_word(w));
            }
            const Integer scale = -exact_quotient(Integer(c * side_factor(side, other)), leading);
            for (const auto& [target, coeff] : expand_integral(side, other)) result[target] += scale * coeff;
        }
        std::erase_if(result, [](const auto& entry) { return sgn(entry.second) == 0; });
    }
    std::lock_guard lock(memo_mutex_);
    return integral_memo_[slot(side)].try_emplace(w, std::move(result)).first->second;
}

namespace {

template <class R, class Expand>
WordExpansion<R> signed_expansion(const std::optional<CanonicalWord>& canonical, Expand&& expand) {
    WordExpansion<R> out;
    if (!canonical) return out;
    for (const auto& [w, c] : expand(canonical->word)) out.emplace(w, canonical->sign < 0 ? R(-c) : c);
    return out;
}

template <class R>
StraighteningResult<R> combine(const WordExpansion<R>& left, const WordExpansion<R>& right) {
    StraighteningResult<R> out;
    for (const auto& [k, a] : left) {
        for (const auto& [l, b] : right) out.emplace(std::make_pair(k, l), R(a * b));
    }
    return out;
}

} // namespace

WordExpansion<Rational> Straightener::straighten_right(const MultiIndex& j) const {
    return signed_expansion<Rational>(canonicalize(Side::Right, j),
                                      [&](const MultiIndex& w) -> const auto& { return expand_rational(Side::Right, w); });
}

WordExpansion<Rational> Straightener::straighten_left(const MultiIndex& i) const {
    return signed_expansion<Rational>(canonicalize(Side::Left, i),
                                      [&](const MultiIndex& w) -> const auto& { return expand_rational(Side::Left, w); });
}

StraighteningResult<Rational> Straightener::straighten_pair(const MultiIndex& i, const MultiIndex& j) const {
    return combine(straighten_left(i), straighten_right(j));
}

WordExpansion<Integer> Straightener::straighten_modified_right(const MultiIndex& j) const {
    return signed_expansion<Integer>(canonicalize(Side::Right, j),
                                     [&](const MultiIndex& w) -> const auto& { return expand_integral(Side::Right, w); });
}

WordExpansion<Integer> Straightener::straighten_modified_left(const MultiIndex& i) const {
    return signed_expansion<Integer>(canonicalize(Side::Left, i),
                                     [&](const MultiIndex& w) -> const auto& { return expand_integral(Side::Left, w); });
}

StraighteningResult<Integer> Straightener::straighten_modified(const MultiIndex& i, const MultiIndex& j) const {
    return combine(straighten_modified_left(i), straighten_modified_right(j));
}

WordExpansion<Rational> straighten_right(const BasicTableau& tableau, const MultiIndex&, const MultiIndex& j,
                                         const Alphabet& alphabet) {
    return Straightener(tableau.shape(), alphabet).straighten_right(j);
}

WordExpansion<Rational> straighten_left(const BasicTableau& tableau, const MultiIndex& i, const MultiIndex&,
                                        const Alphabet& alphabet) {
    return Straightener(tableau.shape(), alphabet).straighten_left(i);
}

StraighteningResult<Rational> straighten_pair(const BasicTableau& tableau, const MultiIndex& i, const MultiIndex& j,
                                              const Alphabet& alphabet) {
    return Straightener(tableau.shape(), alphabet).straighten_pair(i, j);
}

StraighteningResult<Integer> straighten_modified(const BasicTableau& tableau, const MultiIndex& i,
                                                 const MultiIndex& j, const Alphabet& alphabet) {
    return Straightener(tableau.shape(), alphabet).straighten_modified(i, j);
}

} // namespace schursym
