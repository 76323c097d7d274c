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

#ifndef SCHURSYM_SYMMETRIZER_HPP
#define SCHURSYM_SYMMETRIZER_HPP

#include <string>
#include <string_view>

#include "schursym/superalgebra.hpp"

namespace schursym {

/// The three equivalent double sums defining T[i:j]:
///  RowThenColumn: sum_{rho,kappa} sgn(kappa) chi_{i*rho, j*kappa}
///  RightComposed: sum_{rho,kappa} sgn(kappa) chi_{i, j*kappa*rho}
///  LeftComposed:  sum_{kappa,rho} sgn(kappa) chi_{i*rho*kappa, j}
enum class Variant { RowThenColumn, RightComposed, LeftComposed };

std::string to_string(Variant v);
/// Accepts "row-then-column", "right-composed", "left-composed".
Variant parse_variant(std::string_view text);

struct SymmetrizerKey {
    Partition shape;
    MultiIndex left;
    MultiIndex right;
    Variant variant = Variant::RowThenColumn;
};

/// Fully expanded normal form of T[i:j]. Entries may be colored symbols.
FormalSum<Integer> symmetrizer(const BasicTableau& tableau, const MultiIndex& i, const MultiIndex& j,
                               const Alphabet& alphabet, Variant variant = Variant::RowThenColumn);
FormalSum<Integer> symmetrizer(const SymmetrizerKey& key, const Alphabet& alphabet);

/// The tableau T_l: row q <= m filled with q, the remaining cells of column
/// d filled with m + d. Throws std::invalid_argument for non-hook shapes.
MultiIndex canonical_ell(const Partition& lambda, const Alphabet& alphabet);

struct SymmetryFactors {
    Integer row_factor = 1;    // r(T_i): prod over rows and even symbols of multiplicity!
    Integer column_factor = 1; // c(T_j): prod over columns and odd symbols of multiplicity!
};

Integer row_factor(const BasicTableau& tableau, const MultiIndex& i, const Alphabet& alphabet);
Integer column_factor(const BasicTableau& tableau, const MultiIndex& j, const Alphabet& alphabet);
SymmetryFactors symmetry_factors(const BasicTableau& tableau, const MultiIndex& i, const MultiIndex& j,
                                 const Alphabet& alphabet);

/// T{i:j} = T[i:j] / (r(T_i) c(T_j)); IntegralityError if the division is inexact.
FormalSum<Integer> modified_symmetrizer(const BasicTableau& tableau, const MultiIndex& i, const MultiIndex& j,
                                        const Alphabet& alphabet);

} // namespace schursym

#endif // SCHURSYM_SYMMETRIZER_HPP
