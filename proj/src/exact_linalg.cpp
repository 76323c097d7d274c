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

#include "schursym/exact_linalg.hpp"

#include <stdexcept>

namespace schursym {

template <class R>
MonomialMatrix<R>::MonomialMatrix(std::span<const FormalSum<R>> sums) {
    for (const auto& s : sums) {
        for (const auto& entry : s.terms()) index_.emplace(entry.first, 0);
    }
    columns_.reserve(index_.size());
    for (auto& [m, idx] : index_) {
        idx = columns_.size();
        columns_.push_back(m);
    }
    rows_.reserve(sums.size());
    for (const auto& s : sums) {
        Row row;
        for (const auto& [m, c] : s.terms()) row.emplace(index_.at(m), c);
        rows_.push_back(std::move(row));
    }
}

template class MonomialMatrix<Integer>;
template class MonomialMatrix<Rational>;
template class MonomialMatrix<ModP>;

namespace {

using IntegerRow = std::map<std::size_t, Integer>;

void make_primitive(IntegerRow& row) {
    Integer g = 0;
    for (const auto& entry : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), entry.second.get_mpz_t());
    if (g == 0) return;
    if (sgn(row.begin()->second) < 0) g = -g;
    for (auto& entry : row) mpz_divexact(entry.second.get_mpz_t(), entry.second.get_mpz_t(), g.get_mpz_t());
}

std::size_t integer_rank(std::vector<IntegerRow> rows) {
    // echelon rows keyed by leading column; each kept primitive
    std::map<std::size_t, IntegerRow> pivots;
    for (auto& row : rows) {
        std::erase_if(row, [](const auto& e) { return sgn(e.second) == 0; });
        if (row.empty()) continue;
        make_primitive(row);
        while (!row.empty()) {
            const std::size_t lead = row.begin()->first;
            const auto it = pivots.find(lead);
            if (it == pivots.end()) {
                pivots.emplace(lead, std::move(row));
                break;
            }
            const IntegerRow& pivot = it->second;
            const Integer a = pivot.at(lead);
            const Integer b = row.at(lead);
            IntegerRow next;
            for (const auto& [c, v] : row) next[c] = a * v;
            for (const auto& [c, v] : pivot) next[c] -= b * v;
            std::erase_if(next, [](const auto& e) { return sgn(e.second) == 0; });
            if (!next.empty()) make_primitive(next);
            row = std::move(next);
        }
    }
    return pivots.size();
}

} // namespace

std::size_t rank_exact(std::span<const FormalSum<Integer>> rows) {
    const MonomialMatrix<Integer> matrix(rows);
    return integer_rank(matrix.rows());
}

std::size_t rank_exact(std::span<const FormalSum<Rational>> rows) {
    const MonomialMatrix<Rational> matrix(rows);
    std::vector<IntegerRow> scaled;
    scaled.reserve(matrix.rows().size());
    for (const auto& row : matrix.rows()) {
        Integer denominator_lcm = 1;
        for (const auto& entry : row) {
            mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), entry.second.get_den_mpz_t());
        }
        IntegerRow out;
        for (const auto& [c, v] : row) out.emplace(c, to_integer(Rational(v * denominator_lcm)));
        scaled.push_back(std::move(out));
    }
    return integer_rank(std::move(scaled));
}

std::size_t rank_exact(std::span<const FormalSum<ModP>> rows) {
    const MonomialMatrix<ModP> matrix(rows);
    std::map<std::size_t, std::map<std::size_t, ModP>> pivots;
    for (auto row : matrix.rows()) {
        std::erase_if(row, [](const auto& e) { return is_zero(e.second); });
        while (!row.empty()) {
            const std::size_t lead = row.begin()->first;
            const ModP inv = row.begin()->second.inverse();
            for (auto& entry : row) entry.second *= inv;
            const auto it = pivots.find(lead);
            if (it == pivots.end()) {
                pivots.emplace(lead, std::move(row));
                break;
            }
            for (const auto& [c, v] : it->second) row[c] -= v;
            std::erase_if(row, [](const auto& e) { return is_zero(e.second); });
        }
    }
    return pivots.size();
}

std::optional<std::vector<Rational>> express_in_basis(const FormalSum<Rational>& target,
                                                      std::span<const FormalSum<Rational>> basis) {
    std::vector<FormalSum<Rational>> all(basis.begin(), basis.end());
    all.push_back(target);
    const MonomialMatrix<Rational> matrix(all);
    const std::size_t unknowns = basis.size();
    const std::size_t equations = matrix.columns().size();
    // dense augmented system, one equation per monomial
    std::vector<std::vector<Rational>> system(equations, std::vector<Rational>(unknowns + 1));
    for (std::size_t b = 0; b <= unknowns; ++b) {
        for (const auto& [c, v] : matrix.rows()[b]) system[c][b] = v;
    }
    std::vector<std::size_t> pivot_rows(unknowns);
    std::size_t row = 0;
    for (std::size_t col = 0; col < unknowns; ++col) {
        std::size_t found = row;
        while (found < equations && sgn(system[found][col]) == 0) ++found;
        if (found == equations) throw std::invalid_argument("express_in_basis: basis is linearly dependent");
        std::swap(system[row], system[found]);
        const Rational inv = 1 / system[row][col];
        for (auto& v : system[row]) v *= inv;
        for (std::size_t other = 0; other < equations; ++other) {
            if (other == row || sgn(system[other][col]) == 0) continue;
            const Rational factor = system[other][col];
            for (std::size_t k = col; k <= unknowns; ++k) system[other][k] -= factor * system[row][k];
        }
        pivot_rows[col] = row++;
    }
    for (std::size_t r = row; r < equations; ++r) {
        if (sgn(system[r][unknowns]) != 0) return std::nullopt;
    }
    std::vector<Rational> coordinates(unknowns);
    for (std::size_t col = 0; col < unknowns; ++col) coordinates[col] = system[pivot_rows[col]][unknowns];
    return coordinates;
}

FormalSum<ModP> reduce_mod_p(const FormalSum<Integer>& s, std::uint32_t p) {
    if (p <= 2 || !is_prime(p)) throw std::invalid_argument("modular reduction requires an odd prime, got " + std::to_string(p));
    FormalSum<ModP> out;
    for (const auto& [m, c] : s.terms()) {
        const unsigned long residue = mpz_fdiv_ui(c.get_mpz_t(), p);
        out.add_term(m, ModP(static_cast<std::int64_t>(residue), p));
    }
    return out;
}

std::optional<Rational> proportionality(const FormalSum<Integer>& s, const FormalSum<Integer>& base) {
    if (base.is_zero()) throw std::invalid_argument("proportionality: zero base");
    const auto& [pivot, pivot_coeff] = *base.terms().begin();
    const Rational ratio(s.coefficient(pivot), pivot_coeff);
    Rational canonical = ratio;
    canonical.canonicalize();
    for (const auto& [m, c] : s.terms()) {
        if (base.coefficient(m) == 0) return std::nullopt;
    }
    for (const auto& [m, c] : base.terms()) {
        if (Rational(s.coefficient(m)) != canonical * c) return std::nullopt;
    }
    return canonical;
}

namespace {

std::size_t count_rec(const std::vector<int>& odd, std::size_t g, int remaining) {
    if (g == odd.size()) return remaining == 0 ? 1 : 0;
    if (odd[g]) return count_rec(odd, g + 1, remaining) + (remaining > 0 ? count_rec(odd, g + 1, remaining - 1) : 0);
    std::size_t total = 0;
    for (int e = 0; e <= remaining; ++e) total += count_rec(odd, g + 1, remaining - e);
    return total;
}

} // namespace

std::size_t count_normal_monomials(const Alphabet& alphabet, int r) {
    std::vector<int> odd;
    for (int u = 1; u <= alphabet.size(); ++u) {
        for (int v = 1; v <= alphabet.size(); ++v) odd.push_back(parity(Generator{Symbol::plain(u), Symbol::plain(v)}, alphabet));
    }
    return count_rec(odd, 0, r);
}

} // namespace schursym
