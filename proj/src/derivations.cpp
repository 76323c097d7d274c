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

#include "schursym/derivations.hpp"

#include <stdexcept>

#include "schursym/symmetrizer.hpp"

namespace schursym {

std::string to_string(const DerivationSpec& spec) {
    const std::string pq = std::to_string(spec.p) + std::to_string(spec.q);
    return spec.side == Side::Left ? "D_" + pq : "_" + pq + "D";
}

std::vector<SignedMonomial> derive_terms(Side side, Symbol p, Symbol q, const Monomial& m, const Alphabet& alphabet) {
    const int dparity = (alphabet.parity(p) + alphabet.parity(q)) % 2;
    auto product = m.flatten();
    std::vector<SignedMonomial> out;
    const auto emit = [&](std::size_t t, const Generator& replacement, int passed_parity) {
        const Generator original = product[t];
        product[t] = replacement;
        if (auto term = normalize_product(product, alphabet)) {
            if (dparity * passed_parity % 2) term->sign = -term->sign;
            out.push_back(std::move(*term));
        }
        product[t] = original;
    };
    if (side == Side::Left) {
        int prefix = 0;
        for (std::size_t t = 0; t < product.size(); ++t) {
            const Generator g = product[t];
            if (g.row == q) emit(t, Generator{p, g.col}, prefix + alphabet.parity(g.col));
            prefix += parity(g, alphabet);
        }
    } else {
        int suffix = 0;
        for (std::size_t t = product.size(); t-- > 0;) {
            const Generator g = product[t];
            if (g.col == p) emit(t, Generator{g.row, q}, suffix + alphabet.parity(g.row));
            suffix += parity(g, alphabet);
        }
    }
    return out;
}

void check_divided_power(const DerivationSpec& spec, int t, const Alphabet& alphabet) {
    if (t < 0) throw std::invalid_argument("divided power order must be non-negative");
    if (t >= 2 && spec.parity(alphabet) == 1) {
        throw std::invalid_argument("odd derivations have no divided powers beyond the first");
    }
}

std::string to_string(const ZFormOperator& op) {
    if (op.kind == ZFormOperator::Kind::DiagonalBinomial) {
        const std::string qq = std::to_string(op.spec.q) + std::to_string(op.spec.q);
        const std::string d = op.spec.side == Side::Left ? "D_" + qq : "_" + qq + "D";
        return "binom(" + d + "," + std::to_string(op.t) + ")";
    }
    return to_string(op.spec) + "^(" + std::to_string(op.t) + ")";
}

std::vector<ZFormOperator> default_zform_operators(const Alphabet& alphabet, int r) {
    std::vector<ZFormOperator> ops;
    for (Side side : {Side::Left, Side::Right}) {
        for (int p = 1; p <= alphabet.size(); ++p) {
            for (int q = 1; q <= alphabet.size(); ++q) {
                const DerivationSpec spec{p, q, side};
                if (p == q) {
                    for (int k = 1; k <= r; ++k) ops.push_back({ZFormOperator::Kind::DiagonalBinomial, spec, k});
                } else {
                    const int top = spec.parity(alphabet) ? 1 : r;
                    for (int t = 1; t <= top; ++t) ops.push_back({ZFormOperator::Kind::DividedPower, spec, t});
                }
            }
        }
    }
    return ops;
}

FormalSum<Rational> apply_operator(const ZFormOperator& op, const FormalSum<Rational>& s, const Alphabet& alphabet) {
    if (op.kind == ZFormOperator::Kind::DiagonalBinomial) return diag_binomial(op.spec.q, op.t, op.spec.side, s);
    return divided_power(op.spec, op.t, s, alphabet);
}

ZFormReport zform_closure_check(const Partition& lambda, const Alphabet& alphabet,
                                const std::vector<ZFormOperator>& operators) {
    if (!is_hook(lambda, alphabet.m, alphabet.n)) {
        throw std::invalid_argument("zform_closure_check requires an (m|n)-hook partition");
    }
    const BasicTableau tableau{lambda};
    const auto ssyt = enumerate_semistandard(lambda, alphabet);
    std::vector<std::pair<MultiIndex, MultiIndex>> labels;
    std::vector<FormalSum<Rational>> basis;
    for (const auto& u : ssyt) {
        for (const auto& v : ssyt) {
            labels.emplace_back(u, v);
            basis.push_back(convert<Rational>(modified_symmetrizer(tableau, u, v, alphabet)));
        }
    }
    ZFormReport report;
    for (const auto& op : operators) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            ++report.checks;
            const auto image = apply_operator(op, basis[b], alphabet);
            const auto coordinates = express_in_basis(image, basis);
            if (!coordinates) {
                report.violations.push_back({to_string(op), labels[b].first, labels[b].second, "image outside the span"});
                continue;
            }
            for (const auto& x : *coordinates) {
                if (x.get_den() != 1) {
                    report.violations.push_back(
                        {to_string(op), labels[b].first, labels[b].second, "non-integral coordinate " + to_string(x)});
                    break;
                }
            }
        }
    }
    return report;
}

} // namespace schursym
