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

#ifndef SCHURSYM_COMBINATORICS_HPP
#define SCHURSYM_COMBINATORICS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schursym/symbol.hpp"

namespace schursym {

/// Integer partition, parts weakly decreasing and positive.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses "3,2,1".
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// Zero-based part access; zero beyond the last part.
    int part(int k) const noexcept {
        return k >= 0 && k < length() ? parts_[static_cast<std::size_t>(k)] : 0;
    }

    Partition conjugate() const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// True iff lambda has at most m parts or its (m+1)-st part is at most n.
bool is_hook(const Partition& lambda, int m, int n);

/// All partitions of r, in reverse lexicographic order ((r) first).
std::vector<Partition> partitions_of(int r);

/// I(m|n, r): all plain words of length r, in lexicographic order.
std::vector<MultiIndex> all_multi_indices(const Alphabet& alphabet, int r);

/// A permutation of {0..r-1}. Acting on words on the right,
/// (w.sigma)_t = w_{sigma(t)}, so w.(pi*sigma) = (w.pi).sigma with
/// (pi*sigma)(t) = pi(sigma(t)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int r);
    static Permutation transposition(int r, int a, int b);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int t) const { return images_[static_cast<std::size_t>(t)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    int sign() const;
    bool is_identity() const;
    Permutation inverse() const;

    friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

template <class T>
std::vector<T> permute(const std::vector<T>& w, const Permutation& sigma) {
    std::vector<T> out(w.size());
    for (std::size_t t = 0; t < w.size(); ++t) out[t] = w[static_cast<std::size_t>(sigma(static_cast<int>(t)))];
    return out;
}

/// All permutations of {0..r-1}, in lexicographic order of images.
std::vector<Permutation> all_permutations(int r);

enum class Axis { Row, Column };

/// Row-major labelling of the Young diagram: row 1 carries 0..lambda_1-1, and
/// so on. Labels are zero-based positions into words.
class BasicTableau {
public:
    explicit BasicTableau(Partition shape);

    const Partition& shape() const noexcept { return shape_; }
    int size() const noexcept { return shape_.size(); }

    int label(int row, int col) const { return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]; }
    int row_of(int label) const { return row_of_[static_cast<std::size_t>(label)]; }
    int col_of(int label) const { return col_of_[static_cast<std::size_t>(label)]; }

    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    const std::vector<std::vector<int>>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<int>>& blocks(Axis axis) const noexcept {
        return axis == Axis::Row ? rows_ : columns_;
    }

    /// Order of R(T) (axis = Row) or C(T) (axis = Column).
    std::size_t group_order(Axis axis) const;

    /// Renders a word as a tableau, one row per line.
    std::string render(const MultiIndex& w) const;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<std::vector<int>> columns_;
    std::vector<int> row_of_;
    std::vector<int> col_of_;
};

/// Streams every element of R(T) or C(T) exactly once together with its sign.
/// Nothing is materialized beyond one permutation.
template <class Visitor>
void for_each_group_element(const BasicTableau& tableau, Axis axis, Visitor&& visit) {
    const auto& blocks = tableau.blocks(axis);
    std::vector<std::vector<int>> current = blocks;
    std::vector<int> images(static_cast<std::size_t>(tableau.size()));
    for (std::size_t t = 0; t < images.size(); ++t) images[t] = static_cast<int>(t);
    while (true) {
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            for (std::size_t k = 0; k < blocks[b].size(); ++k) {
                images[static_cast<std::size_t>(blocks[b][k])] = current[b][k];
            }
        }
        const Permutation element{images};
        visit(element, element.sign());
        // odometer over the blocks, each block cycling through next_permutation
        std::size_t b = 0;
        for (; b < current.size(); ++b) {
            if (std::next_permutation(current[b].begin(), current[b].end())) break;
        }
        if (b == current.size()) return;
    }
}

std::vector<std::pair<Permutation, int>> group_elements(const BasicTableau& tableau, Axis axis);

/// Rows and columns weakly increase, no even symbol repeats in a column and
/// no odd symbol repeats in a row.
bool is_semistandard(const BasicTableau& tableau, const MultiIndex& w, const Alphabet& alphabet);

/// All semistandard fillings of lambda with plain symbols, ordered
/// lexicographically by row-major reading word.
std::vector<MultiIndex> enumerate_semistandard(const Partition& lambda, const Alphabet& alphabet);

/// Prefix-occurrence statistics c_qp (column) or r_qp (row) of a tableau,
/// listed q-major.
struct DominanceStats {
    Partition shape;
    Axis axis = Axis::Column;
    std::vector<int> values;
};

/// Statistics with thresholds p running over `thresholds` (ascending).
DominanceStats dominance_stats(const BasicTableau& tableau, const MultiIndex& w, Axis axis,
                               const std::vector<Symbol>& thresholds);
/// Thresholds 1..m+n.
DominanceStats dominance_stats(const BasicTableau& tableau, const MultiIndex& w, Axis axis,
                               const Alphabet& alphabet);

/// Lexicographic comparison; throws std::invalid_argument on shape or axis mismatch.
bool dominance_leq(const DominanceStats& a, const DominanceStats& b);

/// Coset representatives of S_X x S_Y in S_{X u Y} (cosets sigma (S_X x S_Y)),
/// as permutations of {0..r-1}. The identity comes first; the t-th
/// representative swaps t-element subsets of X and Y pairwise.
std::vector<Permutation> garnir_transversal(const std::vector<int>& x, const std::vector<int>& y, int r);

std::size_t binomial(std::size_t n, std::size_t k);

} // namespace schursym

#endif // SCHURSYM_COMBINATORICS_HPP
