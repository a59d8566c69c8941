#include "doctest.h"

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = mkfib::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen") {
    auto r = run({"gen", "modified", "--k", "2", "--count", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "2,2,6,14,34,82\n");
    CHECK(run({"gen", "kfib", "--k", "2", "--count", "6"}).out == "0,1,2,5,12,29\n");
    CHECK(run({"gen", "modified", "--k", "2", "--count", "6", "--fast"}).out == r.out);
}

TEST_CASE("output formats") {
    CHECK(run({"gen", "modified", "--k", "1", "--count", "2", "--format", "bfile"}).out == "0 2\n1 2\n");
    CHECK(run({"gen", "modified", "--k", "1", "--count", "2", "--format", "csv"}).out == "n,value\n0,2\n1,2\n");
    auto jl = run({"transform", "rising", "--k", "2", "--count", "3", "--format", "json-lines"});
    std::istringstream in(jl.out);
    std::string line;
    std::vector<std::string> values;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j["index"] == values.size());
        values.push_back(j["value"]);
    }
    CHECK(values == std::vector<std::string>{"2", "6", "34"});
}

TEST_CASE("bfile round trip") {
    auto r = run({"transform", "falling", "--k", "4", "--count", "30", "--format", "bfile"});
    auto plain = run({"transform", "falling", "--k", "4", "--count", "30"});
    std::istringstream in(r.out);
    std::size_t n = 0, expect = 0;
    std::string value, joined;
    while (in >> n >> value) {
        CHECK(n == expect++);
        joined += (joined.empty() ? "" : ",") + value;
    }
    CHECK(expect == 30);
    CHECK(joined + "\n" == plain.out);
}

TEST_CASE("transform") {
    auto r = run({"transform", "kbinomial", "--k", "2", "--count", "3", "--verify"});
    CHECK(r.code == 0);
    CHECK(r.out == "2,8,48\n");
    CHECK_FALSE(r.err.empty());
    CHECK(run({"transform", "binomial", "--k", "2", "--count", "6", "--method", "recurrence"}).out ==
          "2,4,12,40,136,464\n");
    CHECK(run({"transform", "binomial", "--k", "2", "--count", "6", "--method", "direct"}).out ==
          "2,4,12,40,136,464\n");
}

TEST_CASE("gf") {
    auto r = run({"gf", "rising", "--symbolic"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(2 - (2k^2-2k+2)x) / (1 - (k^2+2)x + x^2)") != std::string::npos);
    auto s = run({"gf", "binomial", "--k", "1", "--stated", "--count", "5"});
    CHECK(s.code == 0);
    CHECK(s.out.find("2,2,4,10,26") != std::string::npos);
    CHECK(run({"gf", "binomial"}).code == 2);
    CHECK(run({"gf", "binomial", "--k", "2", "--symbolic"}).code == 2);
}

TEST_CASE("binet") {
    CHECK(run({"binet", "binomial", "--k", "2", "--n", "5", "--exact"}).out == "464\n");
    CHECK(run({"binet", "falling", "--k", "2", "--n", "2", "--stated"}).out == "34\n");
    auto f = run({"binet", "binomial", "--k", "1", "--n", "5"});
    CHECK(f.code == 0);
    CHECK(std::stod(f.out) == doctest::Approx(178.0).epsilon(1e-9));
    CHECK(run({"binet", "binomial", "--k", "2", "--n", "0", "--stated"}).code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"gen", "modified", "--k", "0"}).code == 2);
    CHECK(run({"gen", "modified", "--k", "-4"}).code == 2);
    CHECK(run({"gen", "lucas", "--k", "2"}).code == 2);
    CHECK(run({"transform", "sideways", "--k", "2"}).code == 2);
    CHECK(run({"audit", "--k-min", "3", "--k-max", "2"}).code == 2);
    CHECK(run({"audit", "--format", "yaml"}).code == 2);
    CHECK_FALSE(run({"gen", "modified", "--k", "0"}).err.empty());
}

TEST_CASE("help exits 0") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("audit") != std::string::npos);
}

TEST_CASE("audit exits 0 with only discrepancies and is byte-stable") {
    std::vector<std::string> args{"audit", "--k-max", "4", "--n-max", "20"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("INFO-DISCREPANCY") != std::string::npos);
    auto j = run({"audit", "--k-max", "3", "--n-max", "10", "--no-symbolic", "--format", "json-lines"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"symbolic\":false") != std::string::npos);
}

TEST_CASE("bench") {
    auto r = run({"bench", "--k", "3", "--n", "10", "200"});
    CHECK(r.code == 0);
    CHECK(r.out.find("matrix-power") != std::string::npos);
    CHECK(r.out.find("direct-sum") != std::string::npos);
}

}  // TEST_SUITE
