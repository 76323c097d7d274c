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

#include "schursym/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "schursym/capelli.hpp"
#include "schursym/derivations.hpp"
#include "schursym/exact_linalg.hpp"
#include "schursym/schur_action.hpp"
#include "schursym/straightening.hpp"

namespace schursym {

namespace {

class Recorder {
public:
    explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++report_.checks;
        if (!ok) report_.violations.push_back(describe());
    }

    SuiteReport take() { return std::move(report_); }

private:
    SuiteReport report_;
};

std::vector<Partition> shapes(const SuiteConfig& config) {
    if (config.shape) return {*config.shape};
    return partitions_of(config.r);
}

std::vector<Partition> hook_shapes(const SuiteConfig& config) {
    std::vector<Partition> out;
    for (const auto& lambda : shapes(config)) {
        if (is_hook(lambda, config.alphabet.m, config.alphabet.n)) out.push_back(lambda);
    }
    return out;
}

std::string pair_label(const Partition& lambda, const MultiIndex& i, const MultiIndex& j) {
    return "shape " + lambda.to_string() + " [" + format_word(i) + ":" + format_word(j) + "]";
}

std::string permutation_label(const Permutation& p) {
    std::string out;
    for (int image : p.images()) out += (out.empty() ? "" : ",") + std::to_string(image + 1);
    return "(" + out + ")";
}

std::vector<std::vector<int>> subsets(const std::vector<int>& labels) {
    std::vector<std::vector<int>> out;
    const std::size_t count = std::size_t{1} << labels.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<int> chosen;
        for (std::size_t b = 0; b < labels.size(); ++b) {
            if (mask >> b & 1U) chosen.push_back(labels[b]);
        }
        out.push_back(std::move(chosen));
    }
    return out;
}

// All (X, Y) with X in block k, Y in block k + 1 and |X| + |Y| > |block k|.
std::vector<std::pair<std::vector<int>, std::vector<int>>> garnir_sets(const std::vector<std::vector<int>>& blocks) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
        for (const auto& x : subsets(blocks[k])) {
            for (const auto& y : subsets(blocks[k + 1])) {
                if (x.size() + y.size() > blocks[k].size()) out.emplace_back(x, y);
            }
        }
    }
    return out;
}

std::vector<FormalSum<Integer>> all_symmetrizers(const BasicTableau& tableau, const std::vector<MultiIndex>& words,
                                                 const Alphabet& alphabet) {
    std::vector<FormalSum<Integer>> rows;
    rows.reserve(words.size() * words.size());
    for (const auto& i : words) {
        for (const auto& j : words) rows.push_back(symmetrizer(tableau, i, j, alphabet));
    }
    return rows;
}

SuiteReport star_cocycle(const SuiteConfig& config) {
    Recorder rec("star-cocycle");
    const auto perms = all_permutations(config.r);
    for (const auto& j : all_multi_indices(config.alphabet, config.r)) {
        for (const auto& pi : perms) {
            const MultiIndex jpi = permute(j, pi);
            const int s_pi = star_exponent(j, pi, config.alphabet);
            for (const auto& sigma : perms) {
                const int lhs = star_exponent(j, pi * sigma, config.alphabet);
                const int rhs = s_pi + star_exponent(jpi, sigma, config.alphabet);
                rec.check((lhs - rhs) % 2 == 0 && permute(j, pi * sigma) == permute(jpi, sigma), [&] {
                    return "j=" + format_word(j) + " pi=" + permutation_label(pi) + " sigma=" + permutation_label(sigma) +
                           " cocycle fails";
                });
            }
        }
    }
    return rec.take();
}

SuiteReport chi_equivalence(const SuiteConfig& config) {
    Recorder rec("chi-equivalence");
    const auto words = all_multi_indices(config.alphabet, config.r);
    const auto perms = all_permutations(config.r);
    std::map<Monomial, std::vector<std::pair<MultiIndex, MultiIndex>>> classes;
    for (const auto& i : words) {
        for (const auto& j : words) {
            const auto chi = normalize_monomial(i, j, config.alphabet);
            if (chi) classes[chi->monomial].emplace_back(i, j);
            for (const auto& pi : perms) {
                const auto si = star_action(i, pi, config.alphabet);
                const auto sj = star_action(j, pi, config.alphabet);
                const auto moved = normalize_monomial(si.word, sj.word, config.alphabet);
                bool ok = chi.has_value() == moved.has_value();
                if (ok && chi) ok = moved->monomial == chi->monomial && moved->sign * si.sign * sj.sign == chi->sign;
                rec.check(ok, [&] { return "chi(" + format_word(i) + "," + format_word(j) + ") not invariant"; });
            }
        }
    }
    // equal monomials come from a single orbit, with the predicted sign
    for (const auto& [m, members] : classes) {
        const auto& [i0, j0] = members.front();
        const int s0 = normalize_monomial(i0, j0, config.alphabet)->sign;
        for (const auto& [k, l] : members) {
            const auto pi = find_equivalence(i0, j0, k, l);
            bool ok = pi.has_value();
            if (ok) {
                const int sk = normalize_monomial(k, l, config.alphabet)->sign;
                const int predicted = star_exponent(i0, *pi, config.alphabet) + star_exponent(j0, *pi, config.alphabet);
                ok = (s0 * sk == 1) == (predicted % 2 == 0);
            }
            rec.check(ok, [&] { return "monomial " + m.to_string() + " reached outside one orbit"; });
        }
    }
    return rec.take();
}

SuiteReport variant_equality(const SuiteConfig& config) {
    Recorder rec("variant-equality");
    const auto words = all_multi_indices(config.alphabet, config.r);
    for (const auto& lambda : shapes(config)) {
        const BasicTableau tableau{lambda};
        for (const auto& i : words) {
            for (const auto& j : words) {
                const auto base = symmetrizer(tableau, i, j, config.alphabet, Variant::RowThenColumn);
                const auto right = symmetrizer(tableau, i, j, config.alphabet, Variant::RightComposed);
                const auto left = symmetrizer(tableau, i, j, config.alphabet, Variant::LeftComposed);
                rec.check(base == right && base == left, [&] { return pair_label(lambda, i, j) + " variants differ"; });
            }
        }
    }
    return rec.take();
}

bool repeats_in_block(const BasicTableau& tableau, Axis axis, const MultiIndex& w, const Alphabet& alphabet,
                      int wanted_parity) {
    for (const auto& block : tableau.blocks(axis)) {
        for (std::size_t a = 0; a < block.size(); ++a) {
            for (std::size_t b = a + 1; b < block.size(); ++b) {
                const Symbol s = w[static_cast<std::size_t>(block[a])];
                if (s == w[static_cast<std::size_t>(block[b])] && alphabet.parity(s) == wanted_parity) return true;
            }
        }
    }
    return false;
}

// Lemma l1 (right side, column group) and its mirror l3 (left side, row group).
SuiteReport lemma_sign(const SuiteConfig& config, Side side) {
    Recorder rec(side == Side::Right ? "lemma-l1" : "lemma-l3");
    const Axis axis = side == Side::Right ? Axis::Column : Axis::Row;
    const auto words = all_multi_indices(config.alphabet, config.r);
    for (const auto& lambda : shapes(config)) {
        const BasicTableau tableau{lambda};
        const auto group = group_elements(tableau, axis);
        for (const auto& i : words) {
            for (const auto& j : words) {
                const auto base = symmetrizer(tableau, i, j, config.alphabet);
                for (const auto& [sigma, sgn] : group) {
                    const auto moved = star_action(side == Side::Right ? j : i, sigma, config.alphabet);
                    auto image = side == Side::Right ? symmetrizer(tableau, i, moved.word, config.alphabet)
                                                     : symmetrizer(tableau, moved.word, j, config.alphabet);
                    image *= Integer(moved.sign * (side == Side::Right ? sgn : 1));
                    rec.check(image == base, [&] { return pair_label(lambda, i, j) + " not invariant under the group"; });
                }
                // repeated even entries in a column of T_j, odd entries in a row of T_i
                const bool vanishes = side == Side::Right
                                          ? repeats_in_block(tableau, Axis::Column, j, config.alphabet, 0)
                                          : repeats_in_block(tableau, Axis::Row, i, config.alphabet, 1);
                if (vanishes) rec.check(base.is_zero(), [&] { return pair_label(lambda, i, j) + " should vanish"; });
            }
        }
    }
    return rec.take();
}

// Lemma l2 (column Garnir relations) and l4 (row Garnir relations).
SuiteReport lemma_garnir(const SuiteConfig& config, Side side) {
    Recorder rec(side == Side::Right ? "lemma-l2" : "lemma-l4");
    const auto words = all_multi_indices(config.alphabet, config.r);
    for (const auto& lambda : shapes(config)) {
        const BasicTableau tableau{lambda};
        const auto sets = garnir_sets(side == Side::Right ? tableau.columns() : tableau.rows());
        for (const auto& [x, y] : sets) {
            const auto transversal = garnir_transversal(x, y, config.r);
            for (const auto& i : words) {
                for (const auto& j : words) {
                    FormalSum<Integer> total;
                    for (const auto& sigma : transversal) {
                        if (side == Side::Right) {
                            const auto moved = star_action(j, sigma, config.alphabet);
                            total += symmetrizer(tableau, i, moved.word, config.alphabet) *
                                     Integer(moved.sign * sigma.sign());
                        } else {
                            const auto moved = star_action(i, sigma, config.alphabet);
                            total += symmetrizer(tableau, moved.word, j, config.alphabet) * Integer(moved.sign);
                        }
                    }
                    rec.check(total.is_zero(), [&] {
                        return pair_label(lambda, i, j) + " Garnir sum nonzero for |X|=" + std::to_string(x.size()) +
                               " |Y|=" + std::to_string(y.size());
                    });
                }
            }
        }
    }
    return rec.take();
}

SuiteReport straighten_sound(const SuiteConfig& config) {
    Recorder rec("straighten-sound");
    const auto words = all_multi_indices(config.alphabet, config.r);
    for (const auto& lambda : shapes(config)) {
        const BasicTableau tableau{lambda};
        const Straightener straightener(lambda, config.alphabet);
        for (const auto& i : words) {
            for (const auto& j : words) {
                const auto result = straightener.straighten_pair(i, j);
                FormalSum<Rational> rebuilt;
                for (const auto& [key, c] : result) {
                    rebuilt += convert<Rational>(symmetrizer(tableau, key.first, key.second, config.alphabet)) * c;
                }
                rec.check(rebuilt == convert<Rational>(symmetrizer(tableau, i, j, config.alphabet)),
                          [&] { return pair_label(lambda, i, j) + " re-expansion differs"; });
                if (is_semistandard(tableau, i, config.alphabet) && is_semistandard(tableau, j, config.alphabet)) {
                    const bool identity = result.size() == 1 && result.begin()->first == std::make_pair(i, j) &&
                                          result.begin()->second == 1;
                    rec.check(identity, [&] { return pair_label(lambda, i, j) + " semistandard input not fixed"; });
                }
            }
        }
    }
    return rec.take();
}

// Straightening only moves up: sorting a row of T_i raises its row
// statistics, sorting a column of T_j raises its column statistics, and every
// Garnir step preserves this. The support therefore satisfies T_i <=_r T_k and
// T_j <=_c T_l for the preorders of dominance_leq.
SuiteReport straighten_triangular(const SuiteConfig& config) {
    Recorder rec("straighten-triangular");
    const auto words = all_multi_indices(config.alphabet, config.r);
    for (const auto& lambda : shapes(config)) {
        const BasicTableau tableau{lambda};
        const Straightener straightener(lambda, config.alphabet);
        for (const auto& i : words) {
            const auto di = dominance_stats(tableau, i, Axis::Row, config.alphabet);
            for (const auto& j : words) {
                const auto dj = dominance_stats(tableau, j, Axis::Column, config.alphabet);
                for (const auto& [key, c] : straightener.straighten_pair(i, j)) {
                    const auto& [k, l] = key;
                    const bool ok = is_semistandard(tableau, k, config.alphabet) &&
                                    is_semistandard(tableau, l, config.alphabet) &&
                                    dominance_leq(di, dominance_stats(tableau, k, Axis::Row, config.alphabet)) &&
                                    dominance_leq(dj, dominance_stats(tableau, l, Axis::Column, config.alphabet));
                    rec.check(ok, [&] {
                        return pair_label(lambda, i, j) + " support term [" + format_word(k) + ":" + format_word(l) +
                               "] breaks triangularity";
                    });
                }
            }
        }
    }
    return rec.take();
}

SuiteReport capelli_p41(const SuiteConfig& config) {
    Recorder rec("capelli-p41");
    for (const auto& lambda : hook_shapes(config)) {
        const BasicTableau tableau{lambda};
        const auto base = symmetrizer(tableau, colored_ell_odd(lambda), colored_ell_even(lambda), config.alphabet);
        rec.check(!base.is_zero(), [&] { return "shape " + lambda.to_string() + " colored symmetrizer vanishes"; });
        const auto ssyt = enumerate_semistandard(lambda, config.alphabet);
        for (const auto& k : ssyt) {
            for (const auto& l : ssyt) {
                const auto image = capelli_apply(tableau, k, l, k, l, config.alphabet);
                const Integer expected = row_factor(tableau, k, config.alphabet) * column_factor(tableau, l, config.alphabet);
                const bool ok = !image.is_zero() && (image == base * expected || image == base * Integer(-expected));
                rec.check(ok, [&] { return pair_label(lambda, k, l) + " is not +-r(T_k)c(T_l) T[lbar:lund]"; });
            }
        }
    }
    return rec.take();
}

SuiteReport capelli_p42(const SuiteConfig& config) {
    Recorder rec("capelli-p42");
    for (const auto& lambda : hook_shapes(config)) {
        const BasicTableau tableau{lambda};
        const auto ssyt = enumerate_semistandard(lambda, config.alphabet);
        for (const auto& k : ssyt) {
            const auto dk = dominance_stats(tableau, k, Axis::Column, config.alphabet);
            for (const auto& l : ssyt) {
                const auto dl = dominance_stats(tableau, l, Axis::Row, config.alphabet);
                for (const auto& i : ssyt) {
                    const bool left_ok = dominance_leq(dk, dominance_stats(tableau, i, Axis::Column, config.alphabet));
                    for (const auto& j : ssyt) {
                        if (left_ok && dominance_leq(dl, dominance_stats(tableau, j, Axis::Row, config.alphabet))) continue;
                        rec.check(capelli_apply(tableau, k, l, i, j, config.alphabet).is_zero(), [&] {
                            return pair_label(lambda, i, j) + " survives C(" + format_word(k) + "," + format_word(l) +
                                   ") without dominance";
                        });
                    }
                }
            }
        }
    }
    return rec.take();
}

SuiteReport rank_thm41(const SuiteConfig& config) {
    Recorder rec("rank-thm41");
    const auto words = all_multi_indices(config.alphabet, config.r);
    for (const auto& lambda : shapes(config)) {
        const BasicTableau tableau{lambda};
        const auto ssyt = enumerate_semistandard(lambda, config.alphabet);
        const auto everything = all_symmetrizers(tableau, words, config.alphabet);
        const std::size_t rank_all = rank_exact(std::span<const FormalSum<Integer>>(everything));
        const auto standard = all_symmetrizers(tableau, ssyt, config.alphabet);
        const std::size_t rank_ss = rank_exact(std::span<const FormalSum<Integer>>(standard));
        const std::size_t expected = ssyt.size() * ssyt.size();
        rec.check(rank_all == expected && rank_ss == expected, [&] {
            return "shape " + lambda.to_string() + " rank " + std::to_string(rank_all) + " (semistandard " +
                   std::to_string(rank_ss) + "), expected " + std::to_string(expected);
        });
    }
    return rec.take();
}

SuiteReport decomposition(const SuiteConfig& config) {
    Recorder rec("decomposition");
    std::size_t total = 0;
    for (const auto& lambda : partitions_of(config.r)) {
        const auto count = enumerate_semistandard(lambda, config.alphabet).size();
        total += count * count;
    }
    const std::size_t dimension = count_normal_monomials(config.alphabet, config.r);
    rec.check(total == dimension, [&] {
        return "sum of squares " + std::to_string(total) + " != dim " + std::to_string(dimension);
    });
    return rec.take();
}

SuiteReport modified_integral(const SuiteConfig& config) {
    Recorder rec("modified-integral");
    const auto words = all_multi_indices(config.alphabet, config.r);
    for (const auto& lambda : shapes(config)) {
        const BasicTableau tableau{lambda};
        for (const auto& i : words) {
            for (const auto& j : words) {
                bool ok = true;
                try {
                    const auto modified = modified_symmetrizer(tableau, i, j, config.alphabet);
                    const Integer factor = row_factor(tableau, i, config.alphabet) * column_factor(tableau, j, config.alphabet);
                    ok = modified * factor == symmetrizer(tableau, i, j, config.alphabet);
                } catch (const IntegralityError&) {
                    ok = false;
                }
                rec.check(ok, [&] { return pair_label(lambda, i, j) + " modified symmetrizer not integral"; });
            }
        }
    }
    return rec.take();
}

SuiteReport straighten_integral(const SuiteConfig& config) {
    Recorder rec("straighten-integral");
    const auto words = all_multi_indices(config.alphabet, config.r);
    for (const auto& lambda : shapes(config)) {
        const BasicTableau tableau{lambda};
        const Straightener straightener(lambda, config.alphabet);
        for (const auto& i : words) {
            for (const auto& j : words) {
                bool ok = true;
                try {
                    const auto integral = straightener.straighten_modified(i, j);
                    const auto rational = straightener.straighten_pair(i, j);
                    FormalSum<Integer> rebuilt;
                    for (const auto& [key, c] : integral) {
                        rebuilt += modified_symmetrizer(tableau, key.first, key.second, config.alphabet) * c;
                    }
                    ok = rebuilt == modified_symmetrizer(tableau, i, j, config.alphabet) &&
                         integral.size() == rational.size();
                    // Z coefficient = Q coefficient * r(T_u)c(T_v) / (r(T_i)c(T_j))
                    const Rational source(row_factor(tableau, i, config.alphabet) * column_factor(tableau, j, config.alphabet));
                    for (const auto& [key, c] : rational) {
                        if (!ok) break;
                        const auto it = integral.find(key);
                        const Rational target(row_factor(tableau, key.first, config.alphabet) *
                                              column_factor(tableau, key.second, config.alphabet));
                        ok = it != integral.end() && Rational(it->second) == c * target / source;
                    }
                } catch (const IntegralityError&) {
                    ok = false;
                }
                rec.check(ok, [&] { return pair_label(lambda, i, j) + " integral straightening fails"; });
            }
        }
    }
    return rec.take();
}

SuiteReport modular_rank(const SuiteConfig& config) {
    Recorder rec("modular-rank");
    const std::vector<std::uint32_t> primes =
        config.characteristic == 0 ? std::vector<std::uint32_t>{3, 5} : std::vector<std::uint32_t>{config.characteristic};
    for (const auto& lambda : hook_shapes(config)) {
        const BasicTableau tableau{lambda};
        const auto ssyt = enumerate_semistandard(lambda, config.alphabet);
        for (const std::uint32_t p : primes) {
            std::vector<FormalSum<ModP>> rows;
            for (const auto& u : ssyt) {
                for (const auto& v : ssyt) rows.push_back(reduce_mod_p(modified_symmetrizer(tableau, u, v, config.alphabet), p));
            }
            const std::size_t rank = rank_exact(std::span<const FormalSum<ModP>>(rows));
            rec.check(rank == ssyt.size() * ssyt.size(), [&] {
                return "shape " + lambda.to_string() + " rank over F_" + std::to_string(p) + " is " + std::to_string(rank) +
                       ", expected " + std::to_string(ssyt.size() * ssyt.size());
            });
        }
    }
    return rec.take();
}

SuiteReport zform_closure(const SuiteConfig& config) {
    Recorder rec("zform-closure");
    const auto operators = default_zform_operators(config.alphabet, config.r);
    for (const auto& lambda : hook_shapes(config)) {
        const auto report = zform_closure_check(lambda, config.alphabet, operators);
        rec.check(report.violations.empty(), [&] {
            const auto& v = report.violations.front();
            return "shape " + lambda.to_string() + ": " + std::to_string(report.violations.size()) +
                   " violations, first " + v.op + " on {" + format_word(v.left) + ":" + format_word(v.right) +
                   "}: " + v.reason;
        });
    }
    return rec.take();
}

SuiteReport diag_binomial_suite(const SuiteConfig& config) {
    Recorder rec("diag-binomial");
    for (const auto& lambda : hook_shapes(config)) {
        const BasicTableau tableau{lambda};
        const auto ssyt = enumerate_semistandard(lambda, config.alphabet);
        for (const auto& u : ssyt) {
            for (const auto& v : ssyt) {
                const auto s = modified_symmetrizer(tableau, u, v, config.alphabet);
                for (const Side side : {Side::Left, Side::Right}) {
                    const MultiIndex& w = side == Side::Left ? u : v;
                    for (int q = 1; q <= config.alphabet.size(); ++q) {
                        const auto content = static_cast<std::size_t>(std::count(w.begin(), w.end(), Symbol::plain(q)));
                        for (int k = 0; k <= config.r; ++k) {
                            const auto image = diag_binomial(q, k, side, s);
                            const Integer scalar(static_cast<unsigned long>(binomial(content, static_cast<std::size_t>(k))));
                            rec.check(image == s * scalar, [&] {
                                return pair_label(lambda, u, v) + " binom(e_" + std::to_string(q) + std::to_string(q) +
                                       "," + std::to_string(k) + ") is not scalar";
                            });
                        }
                    }
                }
            }
        }
    }
    return rec.take();
}

using SuiteFn = std::function<SuiteReport(const SuiteConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"star-cocycle", star_cocycle},
        {"chi-equivalence", chi_equivalence},
        {"variant-equality", variant_equality},
        {"lemma-l1", [](const SuiteConfig& c) { return lemma_sign(c, Side::Right); }},
        {"lemma-l2", [](const SuiteConfig& c) { return lemma_garnir(c, Side::Right); }},
        {"lemma-l3", [](const SuiteConfig& c) { return lemma_sign(c, Side::Left); }},
        {"lemma-l4", [](const SuiteConfig& c) { return lemma_garnir(c, Side::Left); }},
        {"straighten-sound", straighten_sound},
        {"straighten-triangular", straighten_triangular},
        {"capelli-p41", capelli_p41},
        {"capelli-p42", capelli_p42},
        {"rank-thm41", rank_thm41},
        {"decomposition", decomposition},
        {"modified-integral", modified_integral},
        {"straighten-integral", straighten_integral},
        {"modular-rank", modular_rank},
        {"zform-closure", zform_closure},
        {"diag-binomial", diag_binomial_suite},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& entry : registry()) out.push_back(entry.first);
        return out;
    }();
    return names;
}

SuiteReport run_suite(std::string_view name, const SuiteConfig& config) {
    validate(config.alphabet);
    if (config.r < 1) throw std::invalid_argument("verification needs r >= 1");
    if (config.shape && config.shape->size() != config.r) {
        throw std::invalid_argument("shape " + config.shape->to_string() + " is not a partition of r");
    }
    if (name == "garnir") {
        SuiteReport merged = run_suite("lemma-l2", config);
        SuiteReport rows = run_suite("lemma-l4", config);
        merged.suite = "garnir";
        merged.checks += rows.checks;
        merged.violations.insert(merged.violations.end(), rows.violations.begin(), rows.violations.end());
        return merged;
    }
    for (const auto& [suite, fn] : registry()) {
        if (suite == name) return fn(config);
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

} // namespace schursym
