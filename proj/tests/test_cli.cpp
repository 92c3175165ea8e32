#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "nsalg/cli.hpp"
#include "nsalg/error.hpp"

using namespace nsalg;
using testing::S;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("semigroup literals") {
    CHECK(cli::parse_semigroup("4,6,9") == S("4,6,9"));
    CHECK(cli::parse_semigroup(" 3/2, 5/2 ") == S("3/2,5/2"));
    CHECK(cli::parse_semigroup("[4,6,9]") == S("4,6,9"));
    CHECK(cli::parse_semigroup(R"({"generators": [[3,2], "5/2"]})") == S("3/2,5/2"));
    CHECK_THROWS_AS(cli::parse_semigroup("4,x"), Error);
    CHECK_THROWS_AS(cli::parse_semigroup("{\"gens\": [1]}"), Error);
    CHECK(cli::monomial(0) == "1");
    CHECK(cli::monomial(1) == "u");
    CHECK(cli::monomial(7) == "u^7");
    CHECK(cli::monomial(Exponent(9, 2)) == "u^(9/2)");
    CHECK(cli::monomial(Exponent(9, 2), true) == "9/2");
}

TEST_CASE("invariants and classify output") {
    auto r = call({"invariants", "--coeff", "4,6,9", "--join", "5"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "gaps: {u^5, u^11}"));
    CHECK(has(r.out, "sporadics: {1, u^6}"));
    CHECK(has(r.out, "pseudo-frobenius: {u^11}"));

    auto raw = call({"invariants", "--coeff", "4,6,9", "--join", "5", "--raw"});
    CHECK(has(raw.out, "gaps: {5, 11}"));

    auto c = call({"classify", "--coeff", "5,6,7,8,9", "--join", "2"});
    CHECK(c.code == 0);
    CHECK(has(c.out, "pseudo-symmetric, irreducible"));
    auto g = call({"classify", "--coeff", "5,7,9", "--join", "8,11"});
    CHECK(has(g.out, "general, reducible, F={u^11, u^13}"));
}

TEST_CASE("exit codes and error lines") {
    auto bad = call({"classify", "--coeff", "4,6", "--ext", "2,3"});
    CHECK(bad.code == 1);
    CHECK(has(bad.err, "error: NOT_EQUI_GCD:"));

    auto missing = call({"invariants", "--coeff", "4,6,9"});
    CHECK(missing.code == 2);
    CHECK(has(missing.err, "error: "));

    CHECK(call({}).code == 2);
    CHECK(call({"nonsense"}).code == 2);
    CHECK(call({"invariants", "--coeff", "4,x", "--join", "5"}).code == 2);
    CHECK(call({"invariants", "--coeff", "4,6", "--ext", "1"}).code == 1);
    CHECK(call({"radical", "--coeff", "3,4", "--ambient", "3,5", "--n", "2"}).code == 1);
    auto h = call({"cover", "--coeff", "4,6,7,9", "--ext", "4,5,6,7", "--n", "2", "--h", "22"});
    CHECK(h.code == 1);
    CHECK(has(h.err, "BAD_H"));
}

TEST_CASE("JSON output round-trips through the literal parser") {
    auto r = call({"invariants", "--coeff", "3/2,5/2", "--join", "1", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("gaps"));
    CHECK(j["frobenius"].is_array());
    const auto again = call({"invariants", "--coeff", j["coeff"].dump(), "--ext", j["ext"].dump(), "--json"});
    REQUIRE(again.code == 0);
    CHECK(nlohmann::json::parse(again.out) == j);
    CHECK(j["gaps"][0] == nlohmann::json::array({1, 1}));
}

TEST_CASE("--ext and --join describe the same algebra") {
    auto a = call({"invariants", "--coeff", "5,7,9", "--join", "8,11", "--json"});
    auto b = call({"invariants", "--coeff", "5,7,9", "--ext", "5,7,8,9,11", "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("the remaining subcommands") {
    CHECK(has(call({"radical", "--coeff", "6,10,14,15", "--ambient", "3,4,5", "--n", "2"}).out, "<3,5,7>"));
    auto cov = call({"cover", "--coeff", "4,6,7,9", "--ext", "4,5,6,7", "--n", "2", "--h", "21"});
    CHECK(has(cov.out, "<8,11,12,14,15,17,18>"));
    auto tr = call({"cover", "--coeff", "4,6,7,9", "--ext", "4,5,6,7", "--n", "3", "--h", "31", "--trace"});
    CHECK(tr.code == 0);
    CHECK(has(tr.out, "u^17"));
    CHECK(has(call({"duplication", "--coeff", "4,6,9", "--s0", "4", "--doubles", "9"}).out, "<4,6,9,11>"));
    auto ext = call({"extensions", "--coeff", "5,6", "--ext", "5,6,19"});
    CHECK(has(ext.out, "2 extensions"));
    auto dec = call({"decompose", "--coeff", "5,7,9", "--join", "8,11"});
    CHECK(has(dec.out, "<5,7,9,11>"));
    CHECK(has(dec.out, "<5,7,8,9>"));
    auto fg = call({"fundamental-gaps", "--coeff", "5,6", "--ext", "5,6,7,8"});
    CHECK(has(fg.out, "{u^8, u^13, u^14, u^19}"));
    auto sfg = call({"single-fg", "--ambient", "2,3"});
    CHECK(has(sfg.out, "4 rings"));
    auto ri = call({"radical-intersections", "--coeff", "5,6,13", "--join", "7,8"});
    CHECK(has(ri.out, "<5,6,8>: rad2"));
    CHECK(has(ri.out, "<5,6,7>: not an intersection of radicals"));
    auto sc = call({"selfcheck", "--count", "5"});
    CHECK(sc.code == 0);
    CHECK(has(sc.out, "total discrepancies: 0"));
}

TEST_CASE("gap limit from the environment") {
    ::setenv("NSALG_GAP_LIMIT", "3", 1);
    auto lim = call({"extensions", "--coeff", "5,6", "--ext", "1"});
    ::unsetenv("NSALG_GAP_LIMIT");
    CHECK(lim.code == 1);
    CHECK(has(lim.err, "TOO_MANY_GAPS"));
    CHECK(call({"extensions", "--coeff", "5,6", "--ext", "1"}).code == 0);
    CHECK(call({"extensions", "--coeff", "5,6", "--ext", "1", "--limit", "3"}).code == 1);
}
