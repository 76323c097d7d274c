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

#ifndef SCHURSYM_CAPELLI_HPP
#define SCHURSYM_CAPELLI_HPP

#include <vector>

#include "schursym/symmetrizer.hpp"

namespace schursym {

/// Replace `multiplicity` occurrences of the plain `source` by the colored
/// `target`. Left polarizations use odd colors, right (place) polarizations
/// even colors.
struct PolarizationSpec {
    Symbol target;
    Symbol source;
    int multiplicity = 0;
    Side side = Side::Left;
};

/// All binom(s, t) words obtained by replacing t of the s occurrences of the
/// source symbol; {k} for t = 0 and empty when s < t.
std::vector<MultiIndex> polarize(const PolarizationSpec& spec, const MultiIndex& k);

/// Applies a sequence of polarizations to one word, collecting every
/// composite replacement.
std::vector<MultiIndex> polarize_all(const std::vector<PolarizationSpec>& specs, const MultiIndex& k);

/// Factors of C_L(T_k): for column d and plain symbol u, replace
/// c_u(T_k, d) occurrences of u by the odd color d.
std::vector<PolarizationSpec> capelli_left_specs(const BasicTableau& tableau, const MultiIndex& k,
                                                 const Alphabet& alphabet);
/// Factors of C_P(T_l): for row d and plain symbol u, replace r_u(T_l, d)
/// occurrences of u by the even color d.
std::vector<PolarizationSpec> capelli_right_specs(const BasicTableau& tableau, const MultiIndex& l,
                                                  const Alphabet& alphabet);

/// Column d of the tableau filled with the odd color d.
MultiIndex colored_ell_odd(const Partition& lambda);
/// Row d of the tableau filled with the even color d.
MultiIndex colored_ell_even(const Partition& lambda);

/// The divided power D^(t) of the polarization superderivation, applied to the
/// expansion s. Odd polarizations square to zero, so t >= 2 annihilates.
FormalSum<Integer> apply_polarization(const PolarizationSpec& spec, const FormalSum<Integer>& s,
                                      const Alphabet& alphabet);

/// The operator product specs[0] * specs[1] * ... applied to s (the last
/// factor acts first).
FormalSum<Integer> apply_polarizations(const std::vector<PolarizationSpec>& specs, FormalSum<Integer> s,
                                       const Alphabet& alphabet);

/// C_L(T_k) applied to the expansion of T[i:j].
FormalSum<Integer> capelli_left(const BasicTableau& tableau, const MultiIndex& k, const MultiIndex& i,
                                const MultiIndex& j, const Alphabet& alphabet);
/// C_P(T_l) applied to the expansion of T[i:j].
FormalSum<Integer> capelli_right(const BasicTableau& tableau, const MultiIndex& l, const MultiIndex& i,
                                 const MultiIndex& j, const Alphabet& alphabet);
/// C(T_k, T_l) T[i:j] = C_L(T_k) C_P(T_l) T[i:j], evaluated by superderivations.
FormalSum<Integer> capelli_apply(const BasicTableau& tableau, const MultiIndex& k, const MultiIndex& l,
                                 const MultiIndex& i, const MultiIndex& j, const Alphabet& alphabet);

} // namespace schursym

#endif // SCHURSYM_CAPELLI_HPP
