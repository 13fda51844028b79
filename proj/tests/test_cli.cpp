#include <doctest.h>

#include <sstream>

#include "unitgraph/cli.hpp"

using namespace unitgraph;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("cli ring") {
    const auto z4 = cli({"ring", "Z4"});
    CHECK(z4.code == 0);
    CHECK(has(z4.out, "local: true\n"));
    CHECK(has(z4.out, "units: 2\n"));
    CHECK(has(z4.out, "radical: {0,2}\n"));

    const auto rec = cli({"ring", "M2(GF(2))", "--format", "records"});
    CHECK(rec.code == 0);
    CHECK(has(rec.out, "units\t6\n"));
    CHECK(has(rec.out, "radical_size\t1\n"));
    CHECK(has(rec.out, "maximal_left_ideals\t3\n"));

    const auto gf6 = cli({"ring", "GF(6)"});
    CHECK(gf6.code == 2);
    CHECK(has(gf6.err, "not a prime power"));
    CHECK(gf6.out.empty());

    CHECK(cli({"--order-cap", "10", "ring", "Z16"}).code == 3);
    const auto axioms = cli({"ring", "Z6", "--check-axioms", "--seed", "3"});
    CHECK(axioms.code == 0);
    CHECK(has(axioms.out, "axioms: ok exhaustive 216 triples"));
}

TEST_CASE("cli graph") {
    CHECK(cli({"graph", "Z3", "--format", "edgelist"}).out == "0 1\n0 2\n");
    CHECK(cli({"graph", "Z4"}).out == "0 1\n0 3\n1 2\n2 3\n");
    const auto dot = cli({"graph", "Z2", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out == "graph \"Z2\" {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  0 -- 1;\n}\n");
}

TEST_CASE("cli invariants") {
    const auto z5 = cli({"invariants", "Z5"});
    CHECK(z5.code == 0);
    CHECK(has(z5.out, "omega: 3\n"));
    CHECK(has(z5.out, "alpha: 2\n"));
    CHECK(has(z5.out, "chi: 3\n"));
    CHECK(has(z5.out, "bipartite: false\n"));
    CHECK(has(z5.out, "r: 3\n"));

    const auto z4 = cli({"invariants", "Z4", "--format", "records"});
    CHECK(has(z4.out, "omega\t2\n"));
    CHECK(has(z4.out, "chi\t2\n"));
    CHECK(has(z4.out, "bipartite\ttrue\n"));

    const auto gf4 = cli({"invariants", "GF(4)"});
    CHECK(has(gf4.out, "omega: 4\n"));
    CHECK(has(gf4.out, "alpha: 1\n"));
    CHECK(has(gf4.out, "complete_multipartite: true\n"));
    CHECK(has(gf4.out, "r: 4\n"));

    const auto budget = cli({"invariants", "M2(GF(3))", "--node-budget", "50"});
    CHECK(budget.code == 4);
    CHECK(has(budget.out, "exact: false\n"));
}

TEST_CASE("cli verify") {
    const auto t31 = cli({"verify", "--theorem", "T3.1", "--max-order", "32"});
    CHECK(t31.code == 0);
    CHECK(has(t31.out, "# summary holds="));
    CHECK(has(t31.out, " fails=0 "));

    const auto t32c = cli({"verify", "--theorem", "T3.2c", "--ring", "Z3 x M2(GF(2))"});
    CHECK(t32c.code == 0);
    CHECK(has(t32c.out, "T3.2c\tZ3 x M2(GF(2))\tholds\tlhs=bipartite=false"));

    const auto t25 = cli({"verify", "--theorem", "T2.5", "--ring", "Z4"});
    CHECK(t25.code == 0);
    CHECK(has(t25.out, "T2.5-bound\tZ4\tn/a\t"));

    const auto multi = cli({"verify", "--theorem", "T3.2a,T3.2b", "--ring", "Z9", "--ring", "Z8", "--jobs", "2"});
    CHECK(multi.code == 0);
    CHECK(multi.out.find("Z9") < multi.out.find("Z8"));

    CHECK(cli({"verify", "--theorem", "T9"}).code == 2);
    CHECK(cli({"verify", "--ring", "GF(6)"}).code == 2);
}

TEST_CASE("cli catalog") {
    const auto list = cli({"catalog", "list"});
    CHECK(list.code == 0);
    const auto lines = std::count(list.out.begin(), list.out.end(), '\n');
    CHECK(lines >= 35);
    const auto small = cli({"catalog", "list", "--max-order", "16"});
    CHECK(std::count(small.out.begin(), small.out.end(), '\n') < lines);
    const auto z15 = cli({"catalog", "describe", "Z15"});
    CHECK(has(z15.out, "exercises T2.5 (two maximal ideals, 2 a unit)"));
}

TEST_CASE("cli rejects bad usage") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"ring"}).code == 2);
    CHECK(cli({"ring", "Z4", "--format", "dot"}).code == 2);
    CHECK(cli({"graph", "Z4", "--format", "human"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}
