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

#ifndef SCHURSYM_SUPERALGEBRA_HPP
#define SCHURSYM_SUPERALGEBRA_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schursym/coefficients.hpp"
#include "schursym/combinatorics.hpp"
#include "schursym/symbol.hpp"

namespace schursym {

/// The matrix coordinate c_{row,col}; its parity is parity(row) + parity(col).
struct Generator {
    Symbol row;
    Symbol col;

    friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
};

inline int parity(const Generator& g, const Alphabet& alphabet) {
    return (alphabet.parity(g.row) + alphabet.parity(g.col)) % 2;
}

/// Normal-form supercommutative monomial: generators in increasing (row, col)
/// order with positive exponents, odd generators with exponent 1.
class Monomial {
public:
    using Factor = std::pair<Generator, int>;

    Monomial() = default;
    /// Caller guarantees the factors are sorted, distinct and positive.
    explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {}

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    int degree() const noexcept;
    int exponent(const Generator& g) const noexcept;

    /// Expands exponents into a flat generator list in canonical order.
    std::vector<Generator> flatten() const;
    /// Row and column words (i, j) of the flattened generator list.
    std::pair<MultiIndex, MultiIndex> words() const;

    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.factors_ <=> b.factors_; }

private:
    std::vector<Factor> factors_;
};

struct SignedMonomial {
    int sign = 1;
    Monomial monomial;
};

/// Reorders a product of generators into normal form. Each transposition of
/// two odd generators contributes -1; a repeated odd generator gives zero
/// (std::nullopt).
std::optional<SignedMonomial> normalize_product(std::span<const Generator> product, const Alphabet& alphabet);

/// chi_{i,j} = eps(i,j) c_{i_1 j_1} ... c_{i_r j_r} in normal form, where
/// eps(i,j) = (-1)^{sum_t |i_t| (|i_{t+1}| + |j_{t+1}| + ... + |i_r| + |j_r|)}.
/// Throws std::invalid_argument on a length mismatch.
std::optional<SignedMonomial> normalize_monomial(const MultiIndex& i, const MultiIndex& j, const Alphabet& alphabet);

/// The exponent of the parity-prefactor eps(i,j).
int chi_prefactor_exponent(const MultiIndex& i, const MultiIndex& j, const Alphabet& alphabet);

struct SignedMultiIndex {
    int sign = 1;
    MultiIndex word;

    friend bool operator==(const SignedMultiIndex&, const SignedMultiIndex&) = default;
};

/// s(j, sigma): inversions (a < b, sigma(a) > sigma(b)) whose entries in the
/// permuted word j.sigma are both odd.
int star_exponent(const MultiIndex& j, const Permutation& sigma, const Alphabet& alphabet);

/// j * sigma = (-1)^{s(j,sigma)} j.sigma. Throws on a length mismatch.
SignedMultiIndex star_action(const MultiIndex& j, const Permutation& sigma, const Alphabet& alphabet);

/// Finitely supported map Monomial -> R with no stored zeros.
template <class R>
class FormalSum {
public:
    using Terms = std::map<Monomial, R>;

    FormalSum() = default;

    static FormalSum single(const Monomial& m, const R& coeff) {
        FormalSum s;
        s.add_term(m, coeff);
        return s;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    R coefficient(const Monomial& m) const {
        const auto it = terms_.find(m);
        return it == terms_.end() ? R{} : it->second;
    }

    void add_term(const Monomial& m, const R& coeff) {
        if (schursym::is_zero(coeff)) return;
        auto [it, inserted] = terms_.try_emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (schursym::is_zero(it->second)) terms_.erase(it);
        }
    }

    void add_signed(const SignedMonomial& sm, const R& coeff) {
        add_term(sm.monomial, sm.sign < 0 ? R(-coeff) : coeff);
    }

    FormalSum& operator+=(const FormalSum& rhs) {
        for (const auto& [m, c] : rhs.terms_) add_term(m, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& rhs) {
        for (const auto& [m, c] : rhs.terms_) add_term(m, R(-c));
        return *this;
    }
    FormalSum& operator*=(const R& scalar) {
        if (schursym::is_zero(scalar)) {
            terms_.clear();
            return *this;
        }
        for (auto& entry : terms_) entry.second *= scalar;
        return *this;
    }
    FormalSum operator-() const {
        FormalSum out = *this;
        for (auto& entry : out.terms_) entry.second = -entry.second;
        return out;
    }

    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(FormalSum a, const R& scalar) { return a *= scalar; }
    friend FormalSum operator*(const R& scalar, FormalSum a) { return a *= scalar; }
    friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }

    /// Coefficient-wise exact division; IntegralityError on any remainder.
    FormalSum exact_divide(const R& divisor) const {
        FormalSum out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, exact_quotient(c, divisor));
        return out;
    }

private:
    Terms terms_;
};

template <class To, class From>
FormalSum<To> convert(const FormalSum<From>& s) {
    FormalSum<To> out;
    for (const auto& [m, c] : s.terms()) out.add_term(m, To(c));
    return out;
}

/// Rational sum with integral coefficients to an integer sum; throws
/// IntegralityError otherwise.
FormalSum<Integer> to_integer_sum(const FormalSum<Rational>& s);

template <class R>
std::string to_string(const FormalSum<R>& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : s.terms()) {
        if (!first) out += " + ";
        first = false;
        out += "(" + to_string(c) + ")*" + m.to_string();
    }
    return out;
}

} // namespace schursym

#endif // SCHURSYM_SUPERALGEBRA_HPP
