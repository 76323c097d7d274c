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

#ifndef SCHURSYM_SYMBOL_HPP
#define SCHURSYM_SYMBOL_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace schursym {

// Plain symbols 1..m+n come first, then the even colored symbols, then the
// odd colored ones. The defaulted comparison relies on this enumerator order.
enum class SymbolKind : std::uint8_t { Plain = 0, ColoredEven = 1, ColoredOdd = 2 };

struct Symbol {
    SymbolKind kind = SymbolKind::Plain;
    int index = 1;

    static constexpr Symbol plain(int u) noexcept { return {SymbolKind::Plain, u}; }
    static constexpr Symbol even(int k) noexcept { return {SymbolKind::ColoredEven, k}; }
    static constexpr Symbol odd(int l) noexcept { return {SymbolKind::ColoredOdd, l}; }

    constexpr bool is_plain() const noexcept { return kind == SymbolKind::Plain; }

    friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Which index of chi_{i,j} an operation acts on.
enum class Side { Left, Right };

/// A word over the (possibly colored) alphabet. Position t of the word is the
/// entry of the tableau cell carrying label t in the basic tableau.
using MultiIndex = std::vector<Symbol>;

/// The graded alphabet {1..m} (even) and {m+1..m+n} (odd).
struct Alphabet {
    int m = 0;
    int n = 0;

    constexpr int size() const noexcept { return m + n; }

    constexpr int parity(Symbol s) const noexcept {
        switch (s.kind) {
        case SymbolKind::Plain: return s.index > m ? 1 : 0;
        case SymbolKind::ColoredEven: return 0;
        case SymbolKind::ColoredOdd: return 1;
        }
        return 0;
    }
    constexpr bool is_odd(Symbol s) const noexcept { return parity(s) == 1; }
    constexpr bool contains(Symbol s) const noexcept {
        return !s.is_plain() || (s.index >= 1 && s.index <= m + n);
    }

    friend constexpr bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// Throws std::invalid_argument unless m, n >= 0 and m + n >= 1.
void validate(const Alphabet& alphabet);

MultiIndex word(std::initializer_list<int> plain_entries);

/// "3" for plain symbols, "2_" for even colored, "2^" for odd colored.
std::string to_string(Symbol s);
Symbol parse_symbol(std::string_view text);

/// Comma-separated symbols, e.g. "1,2,1" or "1^,2_".
MultiIndex parse_word(std::string_view text);
std::string format_word(const MultiIndex& w);

} // namespace schursym

#endif // SCHURSYM_SYMBOL_HPP
