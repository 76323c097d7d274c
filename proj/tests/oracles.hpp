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

#ifndef SCHURSYM_TESTS_ORACLES_HPP
#define SCHURSYM_TESTS_ORACLES_HPP

// Brute-force reference implementations used to check the library. They are
// written straight from the definitions, share no code with src/ beyond the
// plain data types, and favour obviousness over speed.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "schursym/superalgebra.hpp"

namespace oracle {

using Gen = std::pair<int, int>;      // (row, column) of c_{row,col}, plain symbols only
using Mono = std::vector<Gen>;        // sorted product
using Poly = std::map<Mono, long long>;
using Word = std::vector<int>;
using Perm = std::vector<int>;        // images of 0..r-1

struct Grading {
    int m = 0;
    int n = 0;
    int odd(int u) const { return u > m ? 1 : 0; }
    int odd(const Gen& g) const { return (odd(g.first) + odd(g.second)) % 2; }
};

inline std::vector<Perm> permutations(int r) {
    Perm p(static_cast<std::size_t>(r));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline int inversions(const Perm& p) {
    int count = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b) count += p[a] > p[b];
    return count;
}

// Row-major cell coordinates of the Young diagram.
inline std::vector<std::pair<int, int>> cells(const std::vector<int>& shape) {
    std::vector<std::pair<int, int>> out;
    for (int row = 0; row < static_cast<int>(shape.size()); ++row)
        for (int col = 0; col < shape[static_cast<std::size_t>(row)]; ++col) out.emplace_back(row, col);
    return out;
}

// Permutations of the cells that keep every cell in its row (columns = false)
// or in its column (columns = true).
inline std::vector<Perm> line_group(const std::vector<int>& shape, bool columns) {
    const auto c = cells(shape);
    std::vector<Perm> out;
    for (const auto& p : permutations(static_cast<int>(c.size()))) {
        bool keeps = true;
        for (std::size_t t = 0; t < c.size() && keeps; ++t) {
            const auto& from = c[t];
            const auto& to = c[static_cast<std::size_t>(p[t])];
            keeps = columns ? from.second == to.second : from.first == to.first;
        }
        if (keeps) out.push_back(p);
    }
    return out;
}

inline Word apply(const Word& w, const Perm& p) {
    Word out(w.size());
    for (std::size_t t = 0; t < w.size(); ++t) out[t] = w[static_cast<std::size_t>(p[t])];
    return out;
}

// Sign of w*p: odd-odd inversions of the permuted word.
inline int star_sign(const Word& w, const Perm& p, const Grading& g) {
    const Word v = apply(w, p);
    int count = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b) count += p[a] > p[b] && g.odd(v[a]) && g.odd(v[b]);
    return count % 2 ? -1 : 1;
}

// Bubble sort with a sign flip for every exchange of two odd generators.
// Returns 0 when an odd generator repeats.
inline int normalize(Mono& product, const Grading& g) {
    int sign = 1;
    for (std::size_t pass = 0; pass < product.size(); ++pass) {
        for (std::size_t a = 0; a + 1 < product.size(); ++a) {
            if (product[a + 1] < product[a]) {
                if (g.odd(product[a]) && g.odd(product[a + 1])) sign = -sign;
                std::swap(product[a], product[a + 1]);
            }
        }
    }
    for (std::size_t a = 0; a + 1 < product.size(); ++a)
        if (product[a] == product[a + 1] && g.odd(product[a])) return 0;
    return sign;
}

// chi_{i,j} with its parity prefactor, as (sign, sorted monomial).
inline std::pair<int, Mono> chi(const Word& i, const Word& j, const Grading& g) {
    int exponent = 0;
    for (std::size_t t = 0; t < i.size(); ++t)
        for (std::size_t u = t + 1; u < i.size(); ++u) exponent += g.odd(i[t]) * (g.odd(i[u]) + g.odd(j[u]));
    Mono product;
    for (std::size_t t = 0; t < i.size(); ++t) product.emplace_back(i[t], j[t]);
    const int sign = normalize(product, g);
    return {exponent % 2 ? -sign : sign, product};
}

inline void add(Poly& p, const Mono& m, long long c) {
    if (c == 0) return;
    auto& slot = p[m];
    slot += c;
    if (slot == 0) p.erase(m);
}

// T[i:j] = sum over rho in R(T), kappa in C(T) of sgn(kappa) chi_{i*rho, j*kappa}.
inline Poly symmetrizer(const std::vector<int>& shape, const Word& i, const Word& j, const Grading& g) {
    Poly out;
    const auto rows = line_group(shape, false);
    const auto cols = line_group(shape, true);
    for (const auto& rho : rows) {
        const int si = star_sign(i, rho, g);
        const Word ir = apply(i, rho);
        for (const auto& kappa : cols) {
            const int sj = star_sign(j, kappa, g) * (inversions(kappa) % 2 ? -1 : 1);
            const auto [sign, mono] = chi(ir, apply(j, kappa), g);
            add(out, mono, static_cast<long long>(si) * sj * sign);
        }
    }
    return out;
}

inline std::vector<Word> words(int size, int r) {
    std::vector<Word> out{Word{}};
    for (int t = 0; t < r; ++t) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (int u = 1; u <= size; ++u) {
                Word v = w;
                v.push_back(u);
                next.push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

inline bool semistandard(const std::vector<int>& shape, const Word& w, const Grading& g) {
    const auto c = cells(shape);
    for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = 0; b < c.size(); ++b) {
            if (c[a].first == c[b].first && c[b].second == c[a].second + 1) {
                if (w[a] > w[b] || (w[a] == w[b] && g.odd(w[a]))) return false;
            }
            if (c[a].second == c[b].second && c[b].first == c[a].first + 1) {
                if (w[a] > w[b] || (w[a] == w[b] && !g.odd(w[a]))) return false;
            }
        }
    }
    return true;
}

inline std::vector<Word> semistandard_words(const std::vector<int>& shape, const Grading& g) {
    int r = 0;
    for (int part : shape) r += part;
    std::vector<Word> out;
    for (const auto& w : words(g.m + g.n, r))
        if (semistandard(shape, w, g)) out.push_back(w);
    return out;
}

// Number of degree-r monomials in m^2 + n^2 even and 2mn odd generators.
inline std::size_t monomial_count(int m, int n, int r) {
    const long even = static_cast<long>(m) * m + static_cast<long>(n) * n;
    const long odd = 2L * m * n;
    mpz_class total = 0;
    for (long k = 0; k <= r && k <= odd; ++k) {
        mpz_class choose_odd, multiset;
        mpz_bin_uiui(choose_odd.get_mpz_t(), static_cast<unsigned long>(odd), static_cast<unsigned long>(k));
        const long rest = r - k;
        if (rest == 0) multiset = 1;
        else if (even == 0) multiset = 0;
        else mpz_bin_uiui(multiset.get_mpz_t(), static_cast<unsigned long>(even + rest - 1), static_cast<unsigned long>(rest));
        total += choose_odd * multiset;
    }
    return total.get_ui();
}

// Dense Gaussian elimination over Q (modulus 0) or F_p.
inline std::size_t rank(const std::vector<Poly>& rows, long modulus = 0) {
    std::map<Mono, std::size_t> column;
    for (const auto& row : rows)
        for (const auto& entry : row) column.emplace(entry.first, 0);
    std::size_t next = 0;
    for (auto& entry : column) entry.second = next++;
    std::vector<std::vector<mpq_class>> a(rows.size(), std::vector<mpq_class>(column.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [mono, c] : rows[r]) {
            long value = static_cast<long>(c);
            if (modulus) value = ((value % modulus) + modulus) % modulus;
            a[r][column[mono]] = value;
        }
    auto reduce = [&](mpq_class& x) {
        if (!modulus) return;
        // x is integral here: all operations below stay in Z/p representatives
        mpz_class v = x.get_num() % modulus;
        if (v < 0) v += modulus;
        x = v;
    };
    auto inverse = [&](const mpq_class& x) -> mpq_class {
        if (!modulus) return 1 / x;
        mpz_class inv;
        mpz_class mod = modulus;
        mpz_invert(inv.get_mpz_t(), x.get_num().get_mpz_t(), mod.get_mpz_t());
        return mpq_class(inv);
    };
    std::size_t rk = 0;
    for (std::size_t col = 0; col < column.size() && rk < a.size(); ++col) {
        std::size_t pivot = rk;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[rk]);
        const mpq_class inv = inverse(a[rk][col]);
        for (std::size_t r = rk + 1; r < a.size(); ++r) {
            if (a[r][col] == 0) continue;
            const mpq_class factor = a[r][col] * inv;
            for (std::size_t c = col; c < column.size(); ++c) {
                a[r][c] -= factor * a[rk][c];
                reduce(a[r][c]);
            }
        }
        ++rk;
    }
    return rk;
}

// Library sum -> oracle polynomial (plain symbols only).
template <class R>
Poly from_library(const schursym::FormalSum<R>& s) {
    Poly out;
    for (const auto& [m, c] : s.terms()) {
        Mono mono;
        for (const auto& gen : m.flatten()) mono.emplace_back(gen.row.index, gen.col.index);
        const mpz_class value(c);
        add(out, mono, value.get_si());
    }
    return out;
}

inline schursym::MultiIndex to_word(const Word& w) {
    schursym::MultiIndex out;
    for (int u : w) out.push_back(schursym::Symbol::plain(u));
    return out;
}

} // namespace oracle

#endif // SCHURSYM_TESTS_ORACLES_HPP
