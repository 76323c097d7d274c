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

#ifndef SCHURSYM_STRAIGHTENING_HPP
#define SCHURSYM_STRAIGHTENING_HPP

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "schursym/symmetrizer.hpp"

namespace schursym {

template <class R>
using WordExpansion = std::map<MultiIndex, R>;

/// Coefficients keyed by (left word, right word), both semistandard.
template <class R>
using StraighteningResult = std::map<std::pair<MultiIndex, MultiIndex>, R>;

/// A word with its lines sorted: T[.:w] = sign * T[.:word] on the right
/// side, T[w:.] = sign * T[word:.] on the left side.
struct CanonicalWord {
    int sign = 1;
    MultiIndex word;
};

/// Garnir sets X (in the earlier column/row) and Y (in the next one).
struct GarnirSets {
    std::vector<int> x;
    std::vector<int> y;
};

/// Rewrites symmetrizers of one shape in the semistandard basis. The right
/// side works on columns of T_j via the signed Garnir relations, the left
/// side on rows of T_i via the unsigned ones. Results are memoized; a
/// Straightener may be shared between threads.
class Straightener {
public:
    Straightener(Partition shape, Alphabet alphabet);

    const BasicTableau& tableau() const noexcept { return tableau_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }

    /// T[i:j] = sum_l c_l T[i:l] with T_l semistandard (independent of i).
    WordExpansion<Rational> straighten_right(const MultiIndex& j) const;
    /// T[i:j] = sum_k c_k T[k:j] with T_k semistandard (independent of j).
    WordExpansion<Rational> straighten_left(const MultiIndex& i) const;
    StraighteningResult<Rational> straighten_pair(const MultiIndex& i, const MultiIndex& j) const;

    /// Same for modified symmetrizers, with every recursion step an exact
    /// integer division (IntegralityError otherwise).
    WordExpansion<Integer> straighten_modified_right(const MultiIndex& j) const;
    WordExpansion<Integer> straighten_modified_left(const MultiIndex& i) const;
    StraighteningResult<Integer> straighten_modified(const MultiIndex& i, const MultiIndex& j) const;

    /// Sorts the columns (right) or rows (left) of a tableau; std::nullopt when
    /// the symmetrizer vanishes by a repeated even entry in a column (right)
    /// or a repeated odd entry in a row (left).
    std::optional<CanonicalWord> canonicalize(Side side, const MultiIndex& w) const;

    /// First violation of semistandardness across adjacent columns (right) or
    /// rows (left) of a canonical word, and the Garnir sets it selects.
    std::optional<GarnirSets> find_violation(Side side, const MultiIndex& w) const;

    /// The vanishing Garnir sum as coefficients on canonical words:
    /// sum_w' c_w' T[.:w'] = 0 (right) or sum_w' c_w' T[w':.] = 0 (left).
    std::map<MultiIndex, Integer> garnir_relation(Side side, const MultiIndex& w, const GarnirSets& sets) const;

    /// Column-lexicographic (right) or row-lexicographic (left) strict order.
    bool precedes(Side side, const MultiIndex& a, const MultiIndex& b) const;

private:
    const WordExpansion<Rational>& expand_rational(Side side, const MultiIndex& canonical) const;
    const WordExpansion<Integer>& expand_integral(Side side, const MultiIndex& canonical) const;
    Integer side_factor(Side side, const MultiIndex& w) const;
    std::vector<Symbol> reading(Side side, const MultiIndex& w) const;

    BasicTableau tableau_;
    Alphabet alphabet_;

    mutable std::mutex memo_mutex_;
    mutable std::map<MultiIndex, WordExpansion<Rational>> rational_memo_[2];
    mutable std::map<MultiIndex, WordExpansion<Integer>> integral_memo_[2];
};

WordExpansion<Rational> straighten_right(const BasicTableau& tableau, const MultiIndex& i, const MultiIndex& j,
                                         const Alphabet& alphabet);
WordExpansion<Rational> straighten_left(const BasicTableau& tableau, const MultiIndex& i, const MultiIndex& j,
                                        const Alphabet& alphabet);
StraighteningResult<Rational> straighten_pair(const BasicTableau& tableau, const MultiIndex& i, const MultiIndex& j,
                                              const Alphabet& alphabet);
StraighteningResult<Integer> straighten_modified(const BasicTableau& tableau, const MultiIndex& i,
                                                 const MultiIndex& j, const Alphabet& alphabet);

} // namespace schursym

#endif // SCHURSYM_STRAIGHTENING_HPP
