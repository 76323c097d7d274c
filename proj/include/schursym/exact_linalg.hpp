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

#ifndef SCHURSYM_EXACT_LINALG_HPP
#define SCHURSYM_EXACT_LINALG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "schursym/superalgebra.hpp"

namespace schursym {

/// Sparse matrix whose rows are formal sums and whose columns are the union
/// of their supports, in canonical monomial order.
template <class R>
class MonomialMatrix {
public:
    using Row = std::map<std::size_t, R>;

    explicit MonomialMatrix(std::span<const FormalSum<R>> sums);

    const std::vector<Monomial>& columns() const noexcept { return columns_; }
    const std::vector<Row>& rows() const noexcept { return rows_; }
    std::size_t column_index(const Monomial& m) const { return index_.at(m); }

private:
    std::vector<Monomial> columns_;
    std::map<Monomial, std::size_t> index_;
    std::vector<Row> rows_;
};

/// Rank over Q; integer-preserving elimination.
std::size_t rank_exact(std::span<const FormalSum<Rational>> rows);
std::size_t rank_exact(std::span<const FormalSum<Integer>> rows);
/// Rank over F_p.
std::size_t rank_exact(std::span<const FormalSum<ModP>> rows);

/// Coordinates x with sum_b x_b basis_b = target, or std::nullopt when the
/// target lies outside the span. Throws std::invalid_argument when the basis
/// is linearly dependent.
std::optional<std::vector<Rational>> express_in_basis(const FormalSum<Rational>& target,
                                                      std::span<const FormalSum<Rational>> basis);

/// Coefficient-wise reduction modulo an odd prime; zero terms vanish. Throws
/// std::invalid_argument for p <= 2 or composite p.
FormalSum<ModP> reduce_mod_p(const FormalSum<Integer>& s, std::uint32_t p);

/// c with s = c * base, if any. base must be nonzero.
std::optional<Rational> proportionality(const FormalSum<Integer>& s, const FormalSum<Integer>& base);

/// Number of normal-form monomials of degree r in A(m|n), i.e. dim A(m|n,r).
std::size_t count_normal_monomials(const Alphabet& alphabet, int r);

} // namespace schursym

#endif // SCHURSYM_EXACT_LINALG_HPP
