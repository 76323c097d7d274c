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

#include "schursym/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "schursym/capelli.hpp"
#include "schursym/derivations.hpp"
#include "schursym/exact_linalg.hpp"
#include "schursym/json_io.hpp"
#include "schursym/verify.hpp"

namespace schursym::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct JobConfig {
    int m = 1;
    int n = 1;
    std::optional<int> r;
    std::string shape;
    std::uint32_t characteristic = 0;
    std::string left;
    std::string right;
    std::string variant = "row-then-column";
    bool integral = false;
    std::string suite;
    std::string out;
    bool force = false;
    std::vector<std::string> extra;
};

struct Job {
    Alphabet alphabet;
    int r = 0;
    std::optional<Partition> shape;
};

constexpr int kMaxDegree = 8;
constexpr double kMaxWords = 1e6;

Job resolve(const JobConfig& config, bool needs_shape) {
    Job job;
    job.alphabet = Alphabet{config.m, config.n};
    try {
        validate(job.alphabet);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!config.shape.empty()) {
        try {
            job.shape = Partition::parse(config.shape);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--shape: ") + e.what());
        }
    }
    if (needs_shape && !job.shape) throw UsageError("this command requires --shape");
    if (config.r) {
        if (*config.r < 1) throw UsageError("-r must be positive");
        if (job.shape && job.shape->size() != *config.r) {
            throw UsageError("shape " + job.shape->to_string() + " is not a partition of r = " + std::to_string(*config.r));
        }
        job.r = *config.r;
    } else if (job.shape) {
        job.r = job.shape->size();
    } else {
        throw UsageError("either -r or --shape is required");
    }
    if (config.characteristic != 0 && (config.characteristic == 2 || !is_prime(config.characteristic))) {
        throw UsageError("--char must be 0 or an odd prime");
    }
    const double words = std::pow(static_cast<double>(job.alphabet.size()), job.r);
    if (!config.force && (job.r > kMaxDegree || words > kMaxWords)) {
        throw UsageError("problem size exceeds the desk-scale guard (r > 8 or (m+n)^r > 1e6); pass --force");
    }
    return job;
}

MultiIndex parse_index(const std::string& text, const char* flag, const Job& job, bool plain_only) {
    if (text.empty()) throw UsageError(std::string(flag) + " is required");
    MultiIndex w;
    try {
        w = parse_word(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
    if (static_cast<int>(w.size()) != job.r) {
        throw UsageError(std::string(flag) + " must have length " + std::to_string(job.r));
    }
    for (Symbol s : w) {
        if (!job.alphabet.contains(s)) throw UsageError(std::string(flag) + ": symbol " + to_string(s) + " outside the alphabet");
        if (plain_only && !s.is_plain()) throw UsageError(std::string(flag) + ": colored symbols are not allowed here");
    }
    return w;
}

Json header(const std::string& command, const Job& job) {
    Json j;
    j["command"] = command;
    j["m"] = job.alphabet.m;
    j["n"] = job.alphabet.n;
    j["r"] = job.r;
    if (job.shape) j["shape"] = to_json(*job.shape);
    return j;
}

Json violation_json(const ZFormViolation& v) {
    return Json{{"operator", v.op}, {"left", format_word(v.left)}, {"right", format_word(v.right)}, {"reason", v.reason}};
}

DerivationSpec parse_derivation(const std::string& text, int& t) {
    // p,q[,left|right[,t]]
    std::vector<std::string> parts;
    std::string field;
    for (char ch : text + ",") {
        if (ch == ',') {
            parts.push_back(field);
            field.clear();
        } else {
            field += ch;
        }
    }
    if (parts.size() < 2 || parts.size() > 4) throw UsageError("derivation '" + text + "' must be p,q[,left|right[,t]]");
    DerivationSpec spec;
    try {
        spec.p = std::stoi(parts[0]);
        spec.q = std::stoi(parts[1]);
        t = parts.size() == 4 ? std::stoi(parts[3]) : 1;
    } catch (const std::exception&) {
        throw UsageError("derivation '" + text + "' has a non-numeric field");
    }
    if (parts.size() >= 3) {
        if (parts[2] == "left") spec.side = Side::Left;
        else if (parts[2] == "right") spec.side = Side::Right;
        else throw UsageError("derivation side must be left or right, got '" + parts[2] + "'");
    }
    return spec;
}

int cmd_tableaux(const JobConfig& config, Json& report) {
    const Job job = resolve(config, false);
    report = header("tableaux", job);
    const std::vector<Partition> shapes = job.shape ? std::vector<Partition>{*job.shape} : partitions_of(job.r);
    Json listing = Json::array();
    std::size_t total = 0;
    for (const auto& lambda : shapes) {
        const BasicTableau tableau{lambda};
        Json fillings = Json::array();
        const auto ssyt = enumerate_semistandard(lambda, job.alphabet);
        for (const auto& w : ssyt) fillings.push_back(tableau_json(tableau, w));
        total += ssyt.size();
        listing.push_back(Json{{"shape", to_json(lambda)},
                               {"hook", is_hook(lambda, job.alphabet.m, job.alphabet.n)},
                               {"count", ssyt.size()},
                               {"tableaux", std::move(fillings)}});
    }
    if (job.shape) {
        report["count"] = listing[0]["count"];
        report["hook"] = listing[0]["hook"];
        report["tableaux"] = listing[0]["tableaux"];
    } else {
        report["shapes"] = std::move(listing);
        report["count"] = total;
    }
    return Ok;
}

int cmd_symmetrizer(const JobConfig& config, Json& report, bool modified) {
    const Job job = resolve(config, true);
    const MultiIndex i = parse_index(config.left, "--left", job, modified);
    const MultiIndex j = parse_index(config.right, "--right", job, modified);
    const BasicTableau tableau{*job.shape};
    report = header(modified ? "modified" : "symmetrizer", job);
    report["left"] = format_word(i);
    report["right"] = format_word(j);
    if (modified) {
        const auto factors = symmetry_factors(tableau, i, j, job.alphabet);
        report["row_factor"] = to_string(factors.row_factor);
        report["column_factor"] = to_string(factors.column_factor);
        report["terms"] = to_json(modified_symmetrizer(tableau, i, j, job.alphabet));
    } else {
        Variant variant{};
        try {
            variant = parse_variant(config.variant);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        report["variant"] = to_string(variant);
        report["terms"] = to_json(symmetrizer(tableau, i, j, job.alphabet, variant));
    }
    return Ok;
}

int cmd_straighten(const JobConfig& config, Json& report) {
    const Job job = resolve(config, true);
    const MultiIndex i = parse_index(config.left, "--left", job, true);
    const MultiIndex j = parse_index(config.right, "--right", job, true);
    const Straightener straightener(*job.shape, job.alphabet);
    report = header("straighten", job);
    report["left"] = format_word(i);
    report["right"] = format_word(j);
    report["integral"] = config.integral;
    if (config.integral) {
        report["coefficients"] = to_json(straightener.straighten_modified(i, j));
    } else {
        report["coefficients"] = to_json(straightener.straighten_pair(i, j));
    }
    return Ok;
}

int cmd_capelli(const JobConfig& config, Json& report) {
    const Job job = resolve(config, true);
    const MultiIndex k = parse_index(config.left, "--left", job, true);
    const MultiIndex l = parse_index(config.right, "--right", job, true);
    if (config.extra.size() != 0 && config.extra.size() != 2) throw UsageError("capelli takes either no or two positional words");
    const MultiIndex i = config.extra.empty() ? k : parse_index(config.extra[0], "left target", job, true);
    const MultiIndex j = config.extra.empty() ? l : parse_index(config.extra[1], "right target", job, true);
    const Partition& lambda = *job.shape;
    const BasicTableau tableau{lambda};
    const auto image = capelli_apply(tableau, k, l, i, j, job.alphabet);
    report = header("capelli", job);
    report["k"] = format_word(k);
    report["l"] = format_word(l);
    report["left"] = format_word(i);
    report["right"] = format_word(j);
    report["terms"] = to_json(image);
    report["zero"] = image.is_zero();
    if (is_hook(lambda, job.alphabet.m, job.alphabet.n)) {
        const auto base = symmetrizer(tableau, colored_ell_odd(lambda), colored_ell_even(lambda), job.alphabet);
        const auto ratio = proportionality(image, base);
        report["colored_canonical_multiple"] = ratio ? Json(to_string(*ratio)) : Json(nullptr);
    }
    return Ok;
}

int cmd_derive(const JobConfig& config, Json& report) {
    const Job job = resolve(config, true);
    const MultiIndex i = parse_index(config.left, "--left", job, true);
    const MultiIndex j = parse_index(config.right, "--right", job, true);
    if (config.extra.empty()) throw UsageError("derive needs at least one derivation p,q[,left|right[,t]]");
    const BasicTableau tableau{*job.shape};
    auto value = convert<Rational>(modified_symmetrizer(tableau, i, j, job.alphabet));
    report = header("derive", job);
    report["left"] = format_word(i);
    report["right"] = format_word(j);
    report["input"] = to_json(value);
    Json applied = Json::array();
    for (const auto& text : config.extra) {
        int t = 1;
        const DerivationSpec spec = parse_derivation(text, t);
        if (spec.p < 1 || spec.q < 1 || spec.p > job.alphabet.size() || spec.q > job.alphabet.size()) {
            throw UsageError("derivation '" + text + "' uses a symbol outside the alphabet");
        }
        try {
            check_divided_power(spec, t, job.alphabet);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        value = divided_power(spec, t, value, job.alphabet);
        applied.push_back(to_string(ZFormOperator{ZFormOperator::Kind::DividedPower, spec, t}));
    }
    report["operators"] = std::move(applied);
    report["image"] = to_json(value);
    if (is_hook(*job.shape, job.alphabet.m, job.alphabet.n)) {
        const auto ssyt = enumerate_semistandard(*job.shape, job.alphabet);
        std::vector<FormalSum<Rational>> basis;
        std::vector<std::string> labels;
        for (const auto& u : ssyt) {
            for (const auto& v : ssyt) {
                basis.push_back(convert<Rational>(modified_symmetrizer(tableau, u, v, job.alphabet)));
                labels.push_back(format_word(u) + "|" + format_word(v));
            }
        }
        const auto coordinates = express_in_basis(value, basis);
        if (!coordinates) {
            report["coordinates"] = nullptr;
            report["integral"] = false;
            return Violations;
        }
        Json coords = Json::object();
        bool integral = true;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (sgn((*coordinates)[b]) == 0) continue;
            coords[labels[b]] = to_string((*coordinates)[b]);
            integral = integral && (*coordinates)[b].get_den() == 1;
        }
        report["coordinates"] = std::move(coords);
        report["integral"] = integral;
        return integral ? Ok : Violations;
    }
    return Ok;
}

int cmd_zform(const JobConfig& config, Json& report) {
    const Job job = resolve(config, false);
    report = header("zform-check", job);
    const auto operators = default_zform_operators(job.alphabet, job.r);
    const std::vector<Partition> shapes = job.shape ? std::vector<Partition>{*job.shape} : partitions_of(job.r);
    Json per_shape = Json::array();
    Json violations = Json::array();
    std::size_t checks = 0;
    for (const auto& lambda : shapes) {
        if (!is_hook(lambda, job.alphabet.m, job.alphabet.n)) continue;
        const auto result = zform_closure_check(lambda, job.alphabet, operators);
        checks += result.checks;
        for (const auto& v : result.violations) {
            Json entry = violation_json(v);
            entry["shape"] = to_json(lambda);
            violations.push_back(std::move(entry));
        }
        per_shape.push_back(Json{{"shape", to_json(lambda)}, {"checks", result.checks}, {"violations", result.violations.size()}});
    }
    report["operators"] = operators.size();
    report["shapes"] = std::move(per_shape);
    report["checks"] = checks;
    report["violations"] = violations;
    return violations.empty() ? Ok : Violations;
}

int cmd_rank(const JobConfig& config, Json& report) {
    const Job job = resolve(config, true);
    const Partition& lambda = *job.shape;
    const BasicTableau tableau{lambda};
    const auto ssyt = enumerate_semistandard(lambda, job.alphabet);
    std::size_t rank = 0;
    if (config.characteristic == 0) {
        std::vector<FormalSum<Integer>> rows;
        const auto words = all_multi_indices(job.alphabet, job.r);
        for (const auto& i : words) {
            for (const auto& j : words) rows.push_back(symmetrizer(tableau, i, j, job.alphabet));
        }
        rank = rank_exact(std::span<const FormalSum<Integer>>(rows));
    } else {
        std::vector<FormalSum<ModP>> rows;
        for (const auto& u : ssyt) {
            for (const auto& v : ssyt) {
                rows.push_back(reduce_mod_p(modified_symmetrizer(tableau, u, v, job.alphabet), config.characteristic));
            }
        }
        rank = rank_exact(std::span<const FormalSum<ModP>>(rows));
    }
    const std::size_t squared = ssyt.size() * ssyt.size();
    report = Json{{"shape", to_json(lambda)},
                  {"m", job.alphabet.m},
                  {"n", job.alphabet.n},
                  {"char", config.characteristic},
                  {"rank", rank},
                  {"ssyt_count", ssyt.size()},
                  {"ssyt_squared", squared},
                  {"match", rank == squared}};
    return rank == squared ? Ok : Violations;
}

Json suite_json(const SuiteReport& result) {
    return Json{{"suite", result.suite},
                {"checks", result.checks},
                {"violations", result.violations},
                {"passed", result.passed()}};
}

int cmd_verify(const JobConfig& config, Json& report) {
    const Job job = resolve(config, false);
    if (config.suite.empty()) throw UsageError("verify requires --suite <name> (or --suite all)");
    SuiteConfig suite_config;
    suite_config.alphabet = job.alphabet;
    suite_config.r = job.r;
    suite_config.shape = job.shape;
    suite_config.characteristic = config.characteristic;
    report = header("verify", job);
    report["char"] = config.characteristic;
    bool passed = true;
    try {
        if (config.suite == "all") {
            Json suites = Json::array();
            for (const auto& name : suite_names()) {
                const auto result = run_suite(name, suite_config);
                passed = passed && result.passed();
                suites.push_back(suite_json(result));
            }
            report["suites"] = std::move(suites);
        } else {
            const auto result = run_suite(config.suite, suite_config);
            passed = result.passed();
            report.update(suite_json(result));
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    report["passed"] = passed;
    return passed ? Ok : Violations;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symmetrizers of the Schur superalgebra: expansion, straightening, Capelli operators and "
                 "integral forms. Every command prints a deterministic JSON report.",
                 "schursym"};
    app.require_subcommand(1);
    app.fallthrough();

    JobConfig config;
    app.add_option("-m", config.m, "number of even symbols")->check(CLI::NonNegativeNumber);
    app.add_option("-n", config.n, "number of odd symbols")->check(CLI::NonNegativeNumber);
    app.add_option("-r", config.r, "degree");
    app.add_option("--shape", config.shape, "partition, e.g. 2,1");
    app.add_option("--char", config.characteristic, "0 or an odd prime");
    app.add_option("--left", config.left, "left multi-index, e.g. 1,2,2 (colored: 1^, 2_)");
    app.add_option("--right", config.right, "right multi-index");
    app.add_option("--variant", config.variant, "row-then-column | right-composed | left-composed");
    app.add_flag("--integral", config.integral, "straighten modified symmetrizers over Z");
    app.add_option("--suite", config.suite, "verification suite name, or 'all'");
    app.add_option("--out", config.out, "write the JSON report to this file");
    app.add_flag("--force", config.force, "lift the desk-scale guard");

    auto* tableaux = app.add_subcommand("tableaux", "enumerate semistandard tableaux");
    auto* symm = app.add_subcommand("symmetrizer", "expand T[left:right]");
    auto* modified = app.add_subcommand("modified", "expand the modified symmetrizer T{left:right}");
    auto* straighten = app.add_subcommand("straighten", "straighten T[left:right] (T{left:right} with --integral)");
    auto* capelli = app.add_subcommand("capelli", "apply C(T_left, T_right) to T[i:j] (default i=left, j=right)");
    capelli->add_option("targets", config.extra, "optional i j");
    auto* derive = app.add_subcommand("derive", "apply divided powers p,q[,left|right[,t]] to T{left:right}, in order");
    derive->add_option("specs", config.extra, "derivation specs")->required();
    auto* zform = app.add_subcommand("zform-check", "closure of the modified symmetrizer lattice under divided powers");
    auto* rank = app.add_subcommand("rank", "rank of symmetrizers of one shape (over F_p with --char)");
    auto* verify = app.add_subcommand("verify", "run a verification suite");

    std::vector<std::string> argv_storage{"schursym"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run 'schursym --help' for usage\n";
        return Usage;
    }

    Json report;
    int code = Ok;
    try {
        if (tableaux->parsed()) code = cmd_tableaux(config, report);
        else if (symm->parsed()) code = cmd_symmetrizer(config, report, false);
        else if (modified->parsed()) code = cmd_symmetrizer(config, report, true);
        else if (straighten->parsed()) code = cmd_straighten(config, report);
        else if (capelli->parsed()) code = cmd_capelli(config, report);
        else if (derive->parsed()) code = cmd_derive(config, report);
        else if (zform->parsed()) code = cmd_zform(config, report);
        else if (rank->parsed()) code = cmd_rank(config, report);
        else if (verify->parsed()) code = cmd_verify(config, report);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << "run 'schursym --help' for usage\n";
        return Usage;
    } catch (const IntegralityError& e) {
        err << "integrality violation: " << e.what() << "\n";
        report = Json{{"violations", Json::array({e.what()})}};
        code = Violations;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    }

    const std::string text = report.dump(2) + "\n";
    if (config.out.empty()) {
        out << text;
    } else {
        std::ofstream file(config.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << config.out << "\n";
            return Usage;
        }
        file << text;
    }
    return code;
}

} // namespace schursym::cli
