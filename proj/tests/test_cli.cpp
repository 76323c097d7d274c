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

#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "schursym/cli.hpp"
#include "schursym/json_io.hpp"
#include "schursym/symmetrizer.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = schursym::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("tableaux command") {
    const auto result = run({"tableaux", "-m", "1", "-n", "1", "--shape", "2"});
    REQUIRE(result.code == 0);
    const auto report = result.report();
    CHECK(report["count"] == 2);
    CHECK(report["tableaux"] == json::parse("[[[1,1]],[[1,2]]]"));
    std::size_t expected = 0;
    for (const auto& lambda : schursym::partitions_of(4)) expected += oracle::semistandard_words(lambda.parts(), oracle::Grading{1, 1}).size();
    CHECK(run({"tableaux", "-m", "1", "-n", "1", "-r", "4"}).report()["count"] == expected);
}

TEST_CASE("rank command") {
    const auto result = run({"rank", "-m", "1", "-n", "1", "-r", "2", "--shape", "2"});
    REQUIRE(result.code == 0);
    const auto report = result.report();
    CHECK(report["rank"] == 4);
    CHECK(report["ssyt_squared"] == 4);
    CHECK(report["match"] == true);
    CHECK(report["char"] == 0);

    const auto modular = run({"rank", "-m", "1", "-n", "1", "--shape", "3", "--char", "3"});
    CHECK(modular.code == 1);
    CHECK(modular.report()["match"] == false);
    CHECK(run({"rank", "-m", "1", "-n", "1", "--shape", "3", "--char", "5"}).code == 0);
    CHECK(run({"rank", "-m", "1", "-n", "1", "--shape", "2,2"}).report()["rank"] == 0);
}

TEST_CASE("verify command") {
    const auto result = run({"verify", "--suite", "garnir", "-m", "1", "-n", "1", "-r", "3"});
    CHECK(result.code == 0);
    const auto report = result.report();
    CHECK(report["violations"].empty());
    CHECK(report["passed"] == true);
    CHECK(report["checks"].get<int>() > 0);

    const auto all = run({"verify", "--suite", "all", "-m", "1", "-n", "1", "-r", "2"});
    CHECK(all.code == 0);
    CHECK(all.report()["suites"].size() == 18);

    const auto failing = run({"verify", "--suite", "modular-rank", "-m", "1", "-n", "1", "-r", "3", "--char", "3"});
    CHECK(failing.code == 1);
    CHECK_FALSE(failing.report()["violations"].empty());
}

TEST_CASE("expansion commands") {
    const auto det = run({"symmetrizer", "-m", "2", "-n", "0", "--shape", "1,1", "--left", "1,2", "--right", "1,2"});
    REQUIRE(det.code == 0);
    CHECK(det.report()["terms"] == json::parse(R"([[[[1,1,1],[2,2,1]],"1"],[[[1,2,1],[2,1,1]],"-1"]])"));

    const auto variant = run({"symmetrizer", "-m", "1", "-n", "1", "--shape", "2,1", "--left", "1,2,2", "--right",
                              "2,1,2", "--variant", "left-composed"});
    const auto plain = run({"symmetrizer", "-m", "1", "-n", "1", "--shape", "2,1", "--left", "1,2,2", "--right", "2,1,2"});
    CHECK(variant.report()["terms"] == plain.report()["terms"]);

    const auto colored = run({"symmetrizer", "-m", "1", "-n", "1", "--shape", "2", "--left", "1^,2^", "--right", "1_,1_"});
    REQUIRE(colored.code == 0);
    CHECK_FALSE(colored.report()["terms"].empty());

    const auto modified = run({"modified", "-m", "1", "-n", "1", "--shape", "2", "--left", "1,1", "--right", "1,1"});
    CHECK(modified.report()["row_factor"] == "2");
    CHECK(modified.report()["terms"] == json::parse(R"([[[[1,1,2]],"1"]])"));
}

TEST_CASE("straighten command") {
    const auto rational = run({"straighten", "-m", "1", "-n", "1", "--shape", "1,1", "--left", "1,2", "--right", "2,1"});
    REQUIRE(rational.code == 0);
    CHECK(rational.report()["coefficients"] == json::parse(R"({"1,2|1,2":"-1"})"));
    const auto integral =
        run({"straighten", "-m", "1", "-n", "1", "--shape", "1,1", "--left", "1,2", "--right", "2,1", "--integral"});
    CHECK(integral.report()["coefficients"] == json::parse(R"({"1,2|1,2":"-1"})"));
    CHECK(integral.report()["integral"] == true);
    CHECK(run({"straighten", "-m", "1", "-n", "1", "--shape", "2", "--left", "1,2", "--right", "2,2"})
              .report()["coefficients"]
              .empty());
}

TEST_CASE("capelli and derive commands") {
    const auto capelli = run({"capelli", "-m", "1", "-n", "1", "--shape", "2", "--left", "1,2", "--right", "1,2"});
    REQUIRE(capelli.code == 0);
    CHECK(capelli.report()["colored_canonical_multiple"] == "1");
    CHECK(capelli.report()["zero"] == false);
    const auto killed =
        run({"capelli", "-m", "1", "-n", "1", "--shape", "2", "--left", "1,2", "--right", "1,1", "1,1", "1,1"});
    REQUIRE(killed.code == 0);
    CHECK(killed.report()["zero"] == true);

    const auto derive =
        run({"derive", "-m", "1", "-n", "1", "--shape", "2", "--left", "2,2", "--right", "1,1", "1,2,left"});
    REQUIRE(derive.code == 0);
    CHECK(derive.report()["operators"] == json::parse(R"x(["D_12^(1)"])x"));
    CHECK(derive.report()["integral"] == true);
    CHECK(run({"derive", "-m", "1", "-n", "1", "--shape", "2", "--left", "1,1", "--right", "1,1", "1,2,left,2"}).code == 2);
}

TEST_CASE("zform-check command") {
    const auto result = run({"zform-check", "-m", "1", "-n", "1", "-r", "2"});
    CHECK(result.code == 0);
    CHECK(result.report()["violations"].empty());
    CHECK(result.report()["checks"].get<int>() > 0);
}

TEST_CASE("invalid configurations") {
    CHECK(run({"rank", "-m", "1", "-n", "1", "--shape", "2", "--char", "4"}).code == 2);
    CHECK(run({"rank", "-m", "1", "-n", "1", "--shape", "2", "--char", "2"}).code == 2);
    CHECK(run({"rank", "-m", "1", "-n", "1", "-r", "3", "--shape", "2"}).code == 2);
    CHECK(run({"rank", "-m", "0", "-n", "0", "--shape", "2"}).code == 2);
    CHECK(run({"rank", "-m", "1", "-n", "1"}).code == 2);
    CHECK(run({"verify", "--suite", "nonsense", "-m", "1", "-n", "1", "-r", "2"}).code == 2);
    CHECK(run({"symmetrizer", "-m", "1", "-n", "1", "--shape", "2", "--left", "1,3", "--right", "1,1"}).code == 2);
    CHECK(run({"symmetrizer", "-m", "1", "-n", "1", "--shape", "2", "--left", "1", "--right", "1,1"}).code == 2);
    CHECK(run({"straighten", "-m", "1", "-n", "1", "--shape", "2", "--left", "1^,1", "--right", "1,1"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);

    const auto guarded = run({"tableaux", "-m", "1", "-n", "1", "-r", "9"});
    CHECK(guarded.code == 2);
    CHECK(guarded.err.find("--force") != std::string::npos);
    CHECK(run({"tableaux", "-m", "1", "-n", "1", "-r", "9", "--force", "--shape", "9"}).code == 0);
    CHECK(run({"tableaux", "-m", "5", "-n", "5", "-r", "7"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic and can go to a file") {
    const std::vector<std::string> args{"straighten", "-m", "2", "-n", "1", "--shape", "2,1", "--left", "3,1,2", "--right", "2,3,1"};
    const auto first = run(args);
    const auto second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);

    const std::string path = "schursym_cli_test_output.json";
    auto with_file = args;
    with_file.insert(with_file.end(), {"--out", path});
    const auto written = run(with_file);
    CHECK(written.code == 0);
    CHECK(written.out.empty());
    std::ifstream file(path);
    const std::string contents((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    CHECK(contents == first.out);
    std::remove(path.c_str());
}

TEST_CASE("json round trip") {
    using namespace schursym;
    const Alphabet a{1, 1};
    const auto s = symmetrizer(BasicTableau{Partition({2, 1})}, word({1, 2, 2}), word({1, 1, 2}), a);
    CHECK(formal_sum_from_json(to_json(s)) == convert<Rational>(s));
    CHECK(to_json(Symbol::odd(2)) == "2^");
    CHECK(symbol_from_json(json("1_")) == Symbol::even(1));
    CHECK(symbol_from_json(json(3)) == Symbol::plain(3));
}
