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

#include "schursym/symbol.hpp"

#include <charconv>
#include <stdexcept>

namespace schursym {

void validate(const Alphabet& alphabet) {
    if (alphabet.m < 0 || alphabet.n < 0 || alphabet.m + alphabet.n < 1) {
        throw std::invalid_argument("alphabet requires m >= 0, n >= 0 and m + n >= 1");
    }
}

MultiIndex word(std::initializer_list<int> plain_entries) {
    MultiIndex w;
    w.reserve(plain_entries.size());
    for (int u : plain_entries) w.push_back(Symbol::plain(u));
    return w;
}

std::string to_string(Symbol s) {
    std::string out = std::to_string(s.index);
    if (s.kind == SymbolKind::ColoredEven) out += '_';
    if (s.kind == SymbolKind::ColoredOdd) out += '^';
    return out;
}

Symbol parse_symbol(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    SymbolKind kind = SymbolKind::Plain;
    if (!text.empty() && text.back() == '_') {
        kind = SymbolKind::ColoredEven;
        text.remove_suffix(1);
    } else if (!text.empty() && text.back() == '^') {
        kind = SymbolKind::ColoredOdd;
        text.remove_suffix(1);
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || value < 1) {
        throw std::invalid_argument("malformed symbol '" + std::string(text) + "'");
    }
    return {kind, value};
}

MultiIndex parse_word(std::string_view text) {
    MultiIndex w;
    if (text.empty()) return w;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        w.push_back(parse_symbol(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return w;
}

std::string format_word(const MultiIndex& w) {
    std::string out;
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (t) out += ',';
        out += to_string(w[t]);
    }
    return out;
}

} // namespace schursym
