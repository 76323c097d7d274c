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

#ifndef SCHURSYM_DERIVATIONS_HPP
#define SCHURSYM_DERIVATIONS_HPP

#include <string>
#include <vector>

#include "schursym/exact_linalg.hpp"
#include "schursym/superalgebra.hpp"

namespace schursym {

/// Left superderivation D_pq (c_kl -> delta_qk c_pl) or right superderivation
/// _pqD (c_kl -> delta_lp c_kq) of A(m|n).
struct DerivationSpec {
    int p = 1;
    int q = 1;
    Side side = Side::Left;

    int parity(const Alphabet& alphabet) const {
        return (alphabet.parity(Symbol::plain(p)) + alphabet.parity(Symbol::plain(q))) % 2;
    }
};

std::string to_string(const DerivationSpec& spec);

/// Signed Leibniz images of one normal-form monomial under the derivation
/// replacing row index q by p (left) or column index p by q (right). The
/// symbols may be colored; the parity of the derivation is |p| + |q|.
///
/// A generator c_kl is graded as its column factor followed by its row
/// factor: a left derivation reaching c_kl passes every earlier generator and
/// the column symbol l, a right derivation passes every later generator and
/// the row symbol k. This is the convention under which the spans of the
/// symmetrizers are stable.
std::vector<SignedMonomial> derive_terms(Side side, Symbol p, Symbol q, const Monomial& m, const Alphabet& alphabet);

inline std::vector<SignedMonomial> derive_terms(const DerivationSpec& spec, const Monomial& m,
                                                const Alphabet& alphabet) {
    return derive_terms(spec.side, Symbol::plain(spec.p), Symbol::plain(spec.q), m, alphabet);
}

template <class R>
FormalSum<R> superderive(const DerivationSpec& spec, const FormalSum<R>& s, const Alphabet& alphabet) {
    FormalSum<R> out;
    for (const auto& [m, c] : s.terms()) {
        for (const auto& term : derive_terms(spec, m, alphabet)) out.add_signed(term, c);
    }
    return out;
}

void check_divided_power(const DerivationSpec& spec, int t, const Alphabet& alphabet);

/// e^(t) = e^t / t!, the division exact in R (IntegralityError otherwise).
/// Odd derivations admit only t <= 1.
template <class R>
FormalSum<R> divided_power(const DerivationSpec& spec, int t, const FormalSum<R>& s, const Alphabet& alphabet) {
    check_divided_power(spec, t, alphabet);
    FormalSum<R> out = s;
    for (int k = 0; k < t; ++k) out = superderive(spec, out, alphabet);
    return out.exact_divide(R(factorial(static_cast<unsigned>(t))));
}

/// Multiplies each monomial by binom(c, k), c the total exponent of
/// generators with column index q (right) or row index q (left).
template <class R>
FormalSum<R> diag_binomial(int q, int k, Side side, const FormalSum<R>& s) {
    FormalSum<R> out;
    for (const auto& [m, c] : s.terms()) {
        unsigned long count = 0;
        for (const auto& [g, e] : m.factors()) {
            const Symbol index = side == Side::Right ? g.col : g.row;
            if (index == Symbol::plain(q)) count += static_cast<unsigned long>(e);
        }
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), count, static_cast<unsigned long>(k));
        out.add_term(m, R(c * R(b)));
    }
    return out;
}

/// A generator of the integral form acting on A(m|n,r): a divided power
/// e_pq^(t) (p != q) or a diagonal binomial binom(e_qq, t).
struct ZFormOperator {
    enum class Kind { DividedPower, DiagonalBinomial };
    Kind kind = Kind::DividedPower;
    DerivationSpec spec;
    int t = 1;
};

std::string to_string(const ZFormOperator& op);

/// All divided powers e_pq^(t), t <= r for even pairs and t = 1 for odd
/// pairs, plus binom(e_qq, k) for k <= r, on both sides.
std::vector<ZFormOperator> default_zform_operators(const Alphabet& alphabet, int r);

FormalSum<Rational> apply_operator(const ZFormOperator& op, const FormalSum<Rational>& s, const Alphabet& alphabet);

struct ZFormViolation {
    std::string op;
    MultiIndex left;
    MultiIndex right;
    std::string reason;
};

struct ZFormReport {
    std::size_t checks = 0;
    std::vector<ZFormViolation> violations;
};

/// Applies every operator to every T{u:v} with T_u, T_v semistandard and
/// checks that the image has integer coordinates in that basis.
ZFormReport zform_closure_check(const Partition& lambda, const Alphabet& alphabet,
                                const std::vector<ZFormOperator>& operators);

} // namespace schursym

#endif // SCHURSYM_DERIVATIONS_HPP
