#include "helpers.hpp"

#include "eds/error.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace eds;
using namespace eds::test;

namespace {

const char* kHeat = R"(system heat
coord x t u p
form alpha1 = du /\ dt - p*dx /\ dt
form alpha2 = du /\ dx + dp /\ dt
)";

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ParseError parse_error(const std::string& src) {
    try {
        parse_system(src);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no ParseError for: " << src);
    return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("parses a small system") {
    SystemFile f = parse_system(kHeat);
    CHECK(f.system.name == "heat");
    CHECK(f.system.chart.base() == std::vector<std::string>{"x", "t", "u", "p"});
    REQUIRE(f.system.generators.size() == 2);
    CHECK(f.system.generators[0].form == heat_system().generators[0].form);
    CHECK(f.system.generators[1].form == heat_system().generators[1].form);
}

TEST_CASE("repeated differentials wedge to zero") {
    SystemFile f = parse_system(std::string(kHeat) + "form z = du /\\ du\n");
    CHECK(f.system.generators.back().form.is_zero());
}

TEST_CASE("undeclared identifiers report line and column") {
    ParseError e = parse_error("system s\ncoord x t u\nform a = du /\\ dt + w*dx /\\ dt\n");
    CHECK(e.line == 3);
    CHECK(e.column == 21);
    CHECK(std::string(e.what()).find("undeclared") != std::string::npos);
}

TEST_CASE("syntax errors") {
    CHECK(parse_error("system s\ncoord x t u\nform a = du /\\ \n").line == 3);
    CHECK(parse_error("system s\ncoord x t u\nform a = (du /\\ dt\n").line == 3);
    CHECK(parse_error("system s\ncoord x t u\nparam k = 0.5\n").line == 3);
    CHECK(parse_error("system s\ncoord x t u\nfrobnicate a\n").line == 3);
}

TEST_CASE("wedge degree beyond the chart dimension is rejected") {
    ParseError e = parse_error("system s\ncoord x t\nform a = dx /\\ dt /\\ dx /\\ dt\n");
    CHECK(e.line == 3);
}

TEST_CASE("backslash continues a statement") {
    SystemFile f = parse_system("system s\ncoord x t u p\nform a = du /\\ dt \\\n  - p*dx /\\ dt\n");
    CHECK(f.system.generators[0].form == heat_system().generators[0].form);
}

TEST_CASE("fractional powers of sums bind to the matching auxiliary coordinate") {
    SystemFile f = parse_system("system s\nparam b nonzero\ncoord x t u q\ncoord xi = u - q\n"
                                "form a = (u - q)^(1/b)*dx /\\ dt\n");
    ScalarExpr c = f.system.generators[0].form.component({"x", "t"});
    CHECK(c == C("xi", ParamRational(1) / R("b")));
    CHECK_THROWS_AS(parse_system("system s\nparam b nonzero\ncoord x t u q\n"
                                 "form a = (u - q)^(1/b)*dx /\\ dt\n"),
                    ParseError);
}

TEST_CASE("brackets, connections and cases") {
    SystemFile f = parse_system(std::string(kHeat) +
                                "generator X1 X2\nbracket [X1, X2] = X2\n"
                                "connection c : A = u*X1 ; B = p*X2\n"
                                "param k\ncase nz : k != 0\n");
    CHECK(f.connection("c").A == G("X1") * C("u"));
    CHECK(f.connection("c").B == G("X2") * C("p"));
    CHECK(f.table.lookup(LieSymbol::gen("X2"), LieSymbol::gen("X1")).value() == -G("X2"));
    CHECK(f.assumption_case("nz").assumptions.provably_nonzero(R("k")));
    CHECK_THROWS_AS(f.connection("missing"), Error);
}

TEST_CASE("duplicate brackets are rejected") {
    CHECK_THROWS_AS(parse_system(std::string(kHeat) +
                                 "generator X1 X2\nbracket [X1, X2] = X2\nbracket [X2, X1] = X1\n"),
                    ParseError);
}

TEST_CASE("rendering round-trips the bundled systems") {
    for (const char* name : {"gkdv.eds", "ch.eds"}) {
        CAPTURE(name);
        std::string src = slurp(std::string(EDS_DATA_DIR) + "/" + name);
        REQUIRE_FALSE(src.empty());
        std::string once = render_system(parse_system(src));
        std::string twice = render_system(parse_system(once));
        CHECK(once == twice);
        SystemFile a = parse_system(src), b = parse_system(once);
        REQUIRE(a.system.generators.size() == b.system.generators.size());
        for (size_t i = 0; i < a.system.generators.size(); ++i)
            CHECK(a.system.generators[i].form == b.system.generators[i].form);
        REQUIRE(a.connections.size() == b.connections.size());
        for (size_t i = 0; i < a.connections.size(); ++i) {
            CHECK(a.connections[i].A == b.connections[i].A);
            CHECK(a.connections[i].B == b.connections[i].B);
        }
    }
}
