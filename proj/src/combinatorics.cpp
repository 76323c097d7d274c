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

#include "schursym/combinatorics.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schursym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1) throw std::invalid_argument("partition parts must be positive");
        if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view piece = text.substr(start, comma - start);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        }
        parts.push_back(value);
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (parts_.empty()) return Partition{};
    for (int j = 1; j <= parts_.front(); ++j) {
        int count = 0;
        for (int p : parts_) count += p >= j ? 1 : 0;
        conj.push_back(count);
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(parts_[k]);
    }
    return out;
}

bool is_hook(const Partition& lambda, int m, int n) {
    return lambda.length() <= m || lambda.part(m) <= n;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int r) {
    std::vector<Partition> out;
    std::vector<int> prefix;
    if (r >= 1) partitions_rec(r, r, prefix, out);
    return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int r) {
    std::vector<int> images(static_cast<std::size_t>(r));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int r, int a, int b) {
    auto images = identity(r).images_;
    std::swap(images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)]);
    return Permutation(std::move(images));
}

int Permutation::sign() const {
    // parity via cycle decomposition
    std::vector<bool> seen(images_.size(), false);
    int transpositions = 0;
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start]) continue;
        std::size_t t = start;
        int length = 0;
        while (!seen[t]) {
            seen[t] = true;
            t = static_cast<std::size_t>(images_[t]);
            ++length;
        }
        transpositions += length - 1;
    }
    return transpositions % 2 ? -1 : 1;
}

bool Permutation::is_identity() const {
    for (std::size_t t = 0; t < images_.size(); ++t) {
        if (images_[t] != static_cast<int>(t)) return false;
    }
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t t = 0; t < images_.size(); ++t) inv[static_cast<std::size_t>(images_[t])] = static_cast<int>(t);
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
    if (lhs.size() != rhs.size()) throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> images(rhs.images_.size());
    for (std::size_t t = 0; t < images.size(); ++t) images[t] = lhs(rhs(static_cast<int>(t)));
    return Permutation(std::move(images));
}

BasicTableau::BasicTableau(Partition shape) : shape_(std::move(shape)) {
    const auto r = static_cast<std::size_t>(shape_.size());
    row_of_.resize(r);
    col_of_.resize(r);
    int next = 0;
    for (int row = 0; row < shape_.length(); ++row) {
        std::vector<int> labels;
        for (int col = 0; col < shape_.part(row); ++col) {
            labels.push_back(next);
            row_of_[static_cast<std::size_t>(next)] = row;
            col_of_[static_cast<std::size_t>(next)] = col;
            ++next;
        }
        rows_.push_back(std::move(labels));
    }
    for (int col = 0; col < shape_.part(0); ++col) {
        std::vector<int> labels;
        for (int row = 0; row < shape_.length() && shape_.part(row) > col; ++row) labels.push_back(label(row, col));
        columns_.push_back(std::move(labels));
    }
}

std::size_t BasicTableau::group_order(Axis axis) const {
    std::size_t order = 1;
    for (const auto& block : blocks(axis)) {
        for (std::size_t k = 2; k <= block.size(); ++k) order *= k;
    }
    return order;
}

std::string BasicTableau::render(const MultiIndex& w) const {
    std::ostringstream out;
    for (std::size_t row = 0; row < rows_.size(); ++row) {
        for (std::size_t k = 0; k < rows_[row].size(); ++k) {
            if (k) out << ' ';
            out << schursym::to_string(w.at(static_cast<std::size_t>(rows_[row][k])));
        }
        out << '\n';
    }
    return out.str();
}

std::vector<std::pair<Permutation, int>> group_elements(const BasicTableau& tableau, Axis axis) {
    std::vector<std::pair<Permutation, int>> out;
    out.reserve(tableau.group_order(axis));
    for_each_group_element(tableau, axis, [&](const Permutation& p, int sign) { out.emplace_back(p, sign); });
    return out;
}

namespace {

// Adjacent-pair test; with weak increase, repeats within a line are adjacent.
bool admissible_after(Symbol before, Symbol after, bool forbid_repeat) {
    if (after < before) return false;
    return !(after == before && forbid_repeat);
}

} // namespace

bool is_semistandard(const BasicTableau& tableau, const MultiIndex& w, const Alphabet& alphabet) {
    if (static_cast<int>(w.size()) != tableau.size()) return false;
    for (const auto& row : tableau.rows()) {
        for (std::size_t k = 1; k < row.size(); ++k) {
            const Symbol a = w[static_cast<std::size_t>(row[k - 1])];
            const Symbol b = w[static_cast<std::size_t>(row[k])];
            if (!admissible_after(a, b, alphabet.is_odd(a))) return false;
        }
    }
    for (const auto& col : tableau.columns()) {
        for (std::size_t k = 1; k < col.size(); ++k) {
            const Symbol a = w[static_cast<std::size_t>(col[k - 1])];
            const Symbol b = w[static_cast<std::size_t>(col[k])];
            if (!admissible_after(a, b, !alphabet.is_odd(a))) return false;
        }
    }
    return true;
}

namespace {

void fill_semistandard(const BasicTableau& tableau, const Alphabet& alphabet, std::size_t cell, MultiIndex& current,
                       std::vector<MultiIndex>& out) {
    if (cell == current.size()) {
        out.push_back(current);
        return;
    }
    const int label = static_cast<int>(cell);
    const int row = tableau.row_of(label);
    const int col = tableau.col_of(label);
    for (int u = 1; u <= alphabet.size(); ++u) {
        const Symbol s = Symbol::plain(u);
        if (col > 0) {
            const Symbol left = current[static_cast<std::size_t>(tableau.label(row, col - 1))];
            if (!admissible_after(left, s, alphabet.is_odd(left))) continue;
        }
        if (row > 0) {
            const Symbol up = current[static_cast<std::size_t>(tableau.label(row - 1, col))];
            if (!admissible_after(up, s, !alphabet.is_odd(up))) continue;
        }
        current[cell] = s;
        fill_semistandard(tableau, alphabet, cell + 1, current, out);
    }
}

} // namespace

std::vector<MultiIndex> enumerate_semistandard(const Partition& lambda, const Alphabet& alphabet) {
    const BasicTableau tableau{lambda};
    std::vector<MultiIndex> out;
    MultiIndex current(static_cast<std::size_t>(lambda.size()));
    fill_semistandard(tableau, alphabet, 0, current, out);
    return out;
}

DominanceStats dominance_stats(const BasicTableau& tableau, const MultiIndex& w, Axis axis,
                               const std::vector<Symbol>& thresholds) {
    if (static_cast<int>(w.size()) != tableau.size()) throw std::invalid_argument("word length does not match shape");
    DominanceStats stats{tableau.shape(), axis, {}};
    const auto& blocks = tableau.blocks(axis);
    std::vector<int> counts(thresholds.size(), 0);
    for (const auto& block : blocks) {
        for (int label : block) {
            const Symbol s = w[static_cast<std::size_t>(label)];
            for (std::size_t p = 0; p < thresholds.size(); ++p) {
                if (!(thresholds[p] < s)) ++counts[p];
            }
        }
        stats.values.insert(stats.values.end(), counts.begin(), counts.end());
    }
    return stats;
}

DominanceStats dominance_stats(const BasicTableau& tableau, const MultiIndex& w, Axis axis,
                               const Alphabet& alphabet) {
    std::vector<Symbol> thresholds;
    for (int u = 1; u <= alphabet.size(); ++u) thresholds.push_back(Symbol::plain(u));
    return dominance_stats(tableau, w, axis, thresholds);
}

bool dominance_leq(const DominanceStats& a, const DominanceStats& b) {
    if (!(a.shape == b.shape) || a.axis != b.axis || a.values.size() != b.values.size()) {
        throw std::invalid_argument("dominance statistics of different shapes are not comparable");
    }
    return a.values <= b.values;
}

std::vector<MultiIndex> all_multi_indices(const Alphabet& alphabet, int r) {
    if (r < 0) throw std::invalid_argument("word length must be non-negative");
    std::vector<MultiIndex> out;
    if (alphabet.size() == 0) {
        if (r == 0) out.emplace_back();
        return out;
    }
    MultiIndex w(static_cast<std::size_t>(r), Symbol::plain(1));
    while (true) {
        out.push_back(w);
        int t = r - 1;
        while (t >= 0 && w[static_cast<std::size_t>(t)].index == alphabet.size()) {
            w[static_cast<std::size_t>(t)] = Symbol::plain(1);
            --t;
        }
        if (t < 0) return out;
        ++w[static_cast<std::size_t>(t)].index;
    }
}

std::vector<Permutation> all_permutations(int r) {
    std::vector<int> images(static_cast<std::size_t>(r));
    for (int t = 0; t < r; ++t) images[static_cast<std::size_t>(t)] = t;
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t out = 1;
    for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

namespace {

template <class F>
void for_each_subset(const std::vector<int>& set, std::size_t k, F&& visit) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > set.size()) return;
    while (true) {
        std::vector<int> subset;
        subset.reserve(k);
        for (std::size_t i : idx) subset.push_back(set[i]);
        visit(subset);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == set.size() - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::vector<Permutation> garnir_transversal(const std::vector<int>& x, const std::vector<int>& y, int r) {
    std::vector<bool> used(static_cast<std::size_t>(r), false);
    for (const auto* set : {&x, &y}) {
        for (int label : *set) {
            if (label < 0 || label >= r) throw std::invalid_argument("garnir set label out of range");
            if (used[static_cast<std::size_t>(label)]) throw std::invalid_argument("garnir sets must be disjoint");
            used[static_cast<std::size_t>(label)] = true;
        }
    }
    std::vector<int> xs = x;
    std::vector<int> ys = y;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    std::vector<Permutation> out;
    out.reserve(binomial(xs.size() + ys.size(), xs.size()));
    for (std::size_t k = 0; k <= std::min(xs.size(), ys.size()); ++k) {
        for_each_subset(xs, k, [&](const std::vector<int>& from_x) {
            for_each_subset(ys, k, [&](const std::vector<int>& from_y) {
                auto images = Permutation::identity(r).images();
                for (std::size_t i = 0; i < k; ++i) {
                    std::swap(images[static_cast<std::size_t>(from_x[i])], images[static_cast<std::size_t>(from_y[i])]);
                }
                out.emplace_back(std::move(images));
            });
        });
    }
    return out;
}

} // namespace schursym
