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

#include "schursym/superalgebra.hpp"

#include <algorithm>

namespace schursym {

int Monomial::degree() const noexcept {
    int d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

int Monomial::exponent(const Generator& g) const noexcept {
    const auto it = std::lower_bound(factors_.begin(), factors_.end(), g,
                                     [](const Factor& f, const Generator& key) { return f.first < key; });
    return it != factors_.end() && it->first == g ? it->second : 0;
}

std::vector<Generator> Monomial::flatten() const {
    std::vector<Generator> out;
    for (const auto& [g, e] : factors_) out.insert(out.end(), static_cast<std::size_t>(e), g);
    return out;
}

std::pair<MultiIndex, MultiIndex> Monomial::words() const {
    std::pair<MultiIndex, MultiIndex> out;
    for (const auto& g : flatten()) {
        out.first.push_back(g.row);
        out.second.push_back(g.col);
    }
    return out;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [g, e] : factors_) {
        if (!out.empty()) out += '*';
        out += "c[" + schursym::to_string(g.row) + "," + schursym::to_string(g.col) + "]";
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::optional<SignedMonomial> normalize_product(std::span<const Generator> product, const Alphabet& alphabet) {
    int odd_inversions = 0;
    for (std::size_t a = 0; a < product.size(); ++a) {
        if (!parity(product[a], alphabet)) continue;
        for (std::size_t b = a + 1; b < product.size(); ++b) {
            if (parity(product[b], alphabet) && product[b] < product[a]) ++odd_inversions;
        }
    }
    std::vector<Generator> sorted(product.begin(), product.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Monomial::Factor> factors;
    for (const Generator& g : sorted) {
        if (!factors.empty() && factors.back().first == g) {
            if (parity(g, alphabet)) return std::nullopt;
            ++factors.back().second;
        } else {
            factors.emplace_back(g, 1);
        }
    }
    return SignedMonomial{odd_inversions % 2 ? -1 : 1, Monomial(std::move(factors))};
}

int chi_prefactor_exponent(const MultiIndex& i, const MultiIndex& j, const Alphabet& alphabet) {
    // suffix parity sums, scanned right to left
    int suffix = 0;
    int exponent = 0;
    for (std::size_t t = i.size(); t-- > 0;) {
        exponent += alphabet.parity(i[t]) * suffix;
        suffix += alphabet.parity(i[t]) + alphabet.parity(j[t]);
    }
    return exponent % 2;
}

std::optional<SignedMonomial> normalize_monomial(const MultiIndex& i, const MultiIndex& j, const Alphabet& alphabet) {
    if (i.size() != j.size()) throw std::invalid_argument("normalize_monomial: multi-index length mismatch");
    std::vector<Generator> product;
    product.reserve(i.size());
    for (std::size_t t = 0; t < i.size(); ++t) product.push_back({i[t], j[t]});
    auto result = normalize_product(product, alphabet);
    if (result && chi_prefactor_exponent(i, j, alphabet)) result->sign = -result->sign;
    return result;
}

int star_exponent(const MultiIndex& j, const Permutation& sigma, const Alphabet& alphabet) {
    if (static_cast<int>(j.size()) != sigma.size()) throw std::invalid_argument("star action: length mismatch");
    const int r = sigma.size();
    int count = 0;
    for (int a = 0; a < r; ++a) {
        if (!alphabet.is_odd(j[static_cast<std::size_t>(sigma(a))])) continue;
        for (int b = a + 1; b < r; ++b) {
            if (sigma(a) > sigma(b) && alphabet.is_odd(j[static_cast<std::size_t>(sigma(b))])) ++count;
        }
    }
    return count;
}

SignedMultiIndex star_action(const MultiIndex& j, const Permutation& sigma, const Alphabet& alphabet) {
    const int s = star_exponent(j, sigma, alphabet);
    return {s % 2 ? -1 : 1, permute(j, sigma)};
}

FormalSum<Integer> to_integer_sum(const FormalSum<Rational>& s) {
    FormalSum<Integer> out;
    for (const auto& [m, c] : s.terms()) out.add_term(m, to_integer(c));
    return out;
}

} // namespace schursym
