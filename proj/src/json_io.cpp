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

#include "schursym/json_io.hpp"

#include <stdexcept>

namespace schursym {

Json to_json(Symbol s) {
    if (s.is_plain()) return s.index;
    return to_string(s);
}

Json to_json(const MultiIndex& w) {
    Json out = Json::array();
    for (Symbol s : w) out.push_back(to_json(s));
    return out;
}

Json to_json(const Monomial& m) {
    Json out = Json::array();
    for (const auto& [g, e] : m.factors()) out.push_back(Json::array({to_json(g.row), to_json(g.col), e}));
    return out;
}

Json to_json(const Partition& lambda) { return lambda.parts(); }

Json tableau_json(const BasicTableau& tableau, const MultiIndex& w) {
    Json rows = Json::array();
    for (const auto& row : tableau.rows()) {
        Json entries = Json::array();
        for (int label : row) entries.push_back(to_json(w.at(static_cast<std::size_t>(label))));
        rows.push_back(std::move(entries));
    }
    return rows;
}

Symbol symbol_from_json(const Json& j) {
    if (j.is_number_integer()) return Symbol::plain(j.get<int>());
    if (j.is_string()) return parse_symbol(j.get<std::string>());
    throw std::invalid_argument("symbol must be an integer or a string, got " + j.dump());
}

Monomial monomial_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("monomial must be an array of [row, col, exponent]");
    std::vector<Generator> product;
    for (const auto& factor : j) {
        if (!factor.is_array() || factor.size() != 3) throw std::invalid_argument("bad monomial factor " + factor.dump());
        const Generator g{symbol_from_json(factor[0]), symbol_from_json(factor[1])};
        const int e = factor[2].get<int>();
        if (e <= 0) throw std::invalid_argument("exponents must be positive");
        product.insert(product.end(), static_cast<std::size_t>(e), g);
    }
    // the caller supplies normal-form input; rebuild the factor list as given
    std::vector<Monomial::Factor> factors;
    for (const auto& g : product) {
        if (!factors.empty() && factors.back().first == g) ++factors.back().second;
        else factors.emplace_back(g, 1);
    }
    return Monomial{std::move(factors)};
}

FormalSum<Rational> formal_sum_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("formal sum must be an array of [monomial, coefficient]");
    FormalSum<Rational> out;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2) throw std::invalid_argument("bad term " + term.dump());
        Rational c(term[1].get<std::string>());
        c.canonicalize();
        out.add_term(monomial_from_json(term[0]), c);
    }
    return out;
}

} // namespace schursym
