#include "oracles.hpp"

#include "negcirc/corpus.hpp"
#include "negcirc/error.hpp"
#include "negcirc/network_file.hpp"

#include <doctest.h>

using namespace negcirc;

namespace {

constexpr std::string_view kGridTable = R"(# two attractors
intervals: 0..2 0..2
table:
0 0 -> 2 0
0 1 -> 1 0
0 2 -> 0 2
1 0 -> 2 0
1 1 -> 0 0   # both components move
1 2 -> 0 1
2 0 -> 2 1
2 1 -> 0 1
2 2 -> 0 1
)";

ParseError parse_error(std::string_view text)
{
    try {
        (void)parse_network_file(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError("", 0, 0);
}

std::string without_line(std::string_view text, std::string_view line)
{
    std::string s(text);
    s.erase(s.find(line), line.size() + 1);
    return s;
}

} // namespace

TEST_CASE("table file")
{
    const NetworkMap f = parse_network_file(kGridTable);
    CHECK(f(State{1, 1}) == State{0, 0});
    CHECK(f == load(builtin_network(1)));
}

TEST_CASE("rule file")
{
    const NetworkMap f = parse_network_file("intervals: 0..3 0..3\n"
                                            "rule f2: if x1 == 0 or (x1 < 3 and x2 >= 2) then 3 else 0\n"
                                            "rule f1: if x2 == 3 or (x2 > 0 and x1 >= 2) then 3 else 0\n");
    CHECK(f(State{0, 0}) == State{0, 3});
    CHECK(f == load(builtin_network(6)));
    // The rule form and its compiled table form agree pointwise.
    CHECK(parse_network_file(write_network_file(f)) == f);
}

TEST_CASE("missing and duplicate rows are reported")
{
    const ParseError missing = parse_error(without_line(kGridTable, "1 2 -> 0 1"));
    CHECK(missing.message().find("missing row for state (1,2)") != std::string::npos);

    std::string dup(kGridTable);
    dup += "0 1 -> 0 0\n";
    const ParseError e = parse_error(dup);
    CHECK(e.line() == 13);
    CHECK(e.message().find("duplicate row for state (0,1)") != std::string::npos);
}

TEST_CASE("malformed files point at the offending token")
{
    std::string range(kGridTable);
    range.replace(range.find("2 2 -> 0 1"), 10, "2 2 -> 0 3");
    const ParseError r = parse_error(range);
    CHECK(r.line() == 12);
    CHECK(r.column() == 10);

    std::string junk(kGridTable);
    junk.replace(junk.find("2 1 -> 0 1"), 10, "2 1 -> 0 a");
    CHECK(parse_error(junk).column() == 10);

    CHECK(parse_error("table:\n0 -> 1\n").line() == 1);
    CHECK(parse_error("intervals: 0..1\n").message().find("missing") != std::string::npos);
    CHECK(parse_error("intervals: 0..1\ntable:\n0 -> 1\n1 -> 1\nrule f1: x1\n").line() == 5);
    CHECK(parse_error("intervals: 0..1\nrule f1: x1\ntable:\n").line() == 3);
    CHECK(parse_error("intervals: 0..1\nrule f2: x1\n").line() == 2);
    CHECK(parse_error("intervals: 0..1\nrule f1: x1\nrule f1: x1\n").line() == 3);
    CHECK(parse_error("intervals: 0..1 0..1\nrule f1: x1\n").message() == "missing rule for f2");
    CHECK(parse_error("intervals: 0..1\nrule f1: x1 +\n").column() == 14);
    CHECK(parse_error("intervals: 0..1\nrule f1: x1 + 1\n").message().find("outside") != std::string::npos);
    CHECK(parse_error("intervals: 0..0\n").line() == 1);
    CHECK(parse_error("intervals: 0..1 x\n").column() == 17);
    CHECK(parse_error("").line() == 1);
    CHECK(parse_error("intervals: 0..1\ntable:\n0 1 -> 1\n").line() == 3);
    CHECK_THROWS_AS(load_network_file("/nonexistent/file.net"), ParseError);
}

TEST_CASE("table files round-trip")
{
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 300; ++trial) {
        const StateSpace space = oracle::random_space(rng, 4, 5, 10'000);
        const NetworkMap f = oracle::random_map(space, rng);
        CHECK(parse_network_file(write_network_file(f)) == f);
    }
}
