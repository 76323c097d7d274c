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

#ifndef SCHURSYM_JSON_IO_HPP
#define SCHURSYM_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "schursym/straightening.hpp"

namespace schursym {

using Json = nlohmann::json;

// Plain symbols serialize as integers, colored ones as "k_" / "k^".
Json to_json(Symbol s);
Json to_json(const MultiIndex& w);
// [[row, col, exponent], ...] in normal-form order.
Json to_json(const Monomial& m);
Json to_json(const Partition& lambda);

Json tableau_json(const BasicTableau& tableau, const MultiIndex& w);

template <class R>
Json to_json(const FormalSum<R>& s) {
    Json terms = Json::array();
    for (const auto& [m, c] : s.terms()) terms.push_back(Json::array({to_json(m), to_string(c)}));
    return terms;
}

// {"left|right": "coefficient"} with words written as "1,2^".
template <class R>
Json to_json(const StraighteningResult<R>& result) {
    Json out = Json::object();
    for (const auto& [key, c] : result) out[format_word(key.first) + "|" + format_word(key.second)] = to_string(c);
    return out;
}

Symbol symbol_from_json(const Json& j);
Monomial monomial_from_json(const Json& j);
FormalSum<Rational> formal_sum_from_json(const Json& j);

} // namespace schursym

#endif // SCHURSYM_JSON_IO_HPP
