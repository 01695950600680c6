#include "oracles.hpp"

#include "negcirc/circuits.hpp"
#include "negcirc/corpus.hpp"
#include "negcirc/error.hpp"

#include <doctest.h>

using namespace negcirc;

namespace {

SignedDigraph graph(int n, std::initializer_list<Arc> arcs)
{
    SignedDigraph g(n);
    for (const Arc& a : arcs)
        g.add_arc(a);
    return g;
}

} // namespace

TEST_CASE("circuit counts of the reference global graphs")
{
    const SignedDigraph g1 = global_ig(load(builtin_network(1)));
    int pos = 0;
    int neg = 0;
    for (const SignedCircuit& c : elementary_circuits(g1))
        (c.sign() > 0 ? pos : neg) += 1;
    CHECK(pos == 2);
    CHECK(neg == 2);
    CHECK(has_negative_circuit(g1));
    CHECK(oracle::circuit_counts(oracle::arcs_of(g1), 2) == std::pair{2, 2});

    const auto ring = elementary_circuits(global_ig(load(builtin_network(4))));
    REQUIRE(ring.size() == 1);
    CHECK(to_string(ring[0]) == "1 (+) 2 (+) 3 (+) 1");
    CHECK_FALSE(has_negative_circuit(global_ig(load(builtin_network(4)))));

    const auto swap = elementary_circuits(global_ig(load(builtin_network(5))));
    REQUIRE(swap.size() == 1);
    CHECK(to_string(swap[0]) == "1 (+) 2 (+) 1");
    CHECK(swap[0].sign() == 1);
}

TEST_CASE("arcless and self-loop graphs")
{
    CHECK_FALSE(has_negative_circuit(SignedDigraph(4)));
    CHECK_FALSE(has_circuit(SignedDigraph(4)));
    CHECK(elementary_circuits(SignedDigraph(4)).empty());
    const SignedDigraph both = graph(1, {{0, 1, 0}, {0, -1, 0}});
    const auto cs = elementary_circuits(both);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].sign() == 1);
    CHECK(cs[1].sign() == -1);
    CHECK(has_positive_circuit(both));
}

TEST_CASE("negative circuit through a shared vertex needs an elementary decomposition")
{
    // Two positive loops through vertex 1 whose concatenation is positive; the
    // only negative circuit is 2 -> 3 -> 2.
    const SignedDigraph g = graph(3, {{0, 1, 1}, {1, 1, 0}, {1, -1, 2}, {2, 1, 1}});
    CHECK(has_negative_circuit(g));
    const auto c = find_negative_circuit(g);
    REQUIRE(c);
    CHECK(c->is_elementary());
    CHECK(c->sign() == -1);
    CHECK(to_string(canonical_rotation(*c)) == "2 (-) 3 (+) 2");
}

TEST_CASE("circuit value operations")
{
    const SignedCircuit c{{{1, -1, 2}, {2, 1, 0}, {0, 1, 1}}};
    CHECK(c.is_closed());
    CHECK(c.is_elementary());
    CHECK(c.sign() == -1);
    CHECK(c.vertices() == std::vector<int>{1, 2, 0});
    CHECK(to_string(canonical_rotation(c)) == "1 (+) 2 (-) 3 (+) 1");
    const SignedCircuit walk{{{0, 1, 1}, {1, -1, 0}, {0, 1, 0}}};
    CHECK(walk.is_closed());
    CHECK_FALSE(walk.is_elementary());
    const SignedCircuit sub = negative_elementary_subcircuit(walk);
    CHECK(sub.is_elementary());
    CHECK(sub.sign() == -1);
    CHECK_FALSE(SignedCircuit{{{0, 1, 1}}}.is_closed());
}

TEST_CASE("sign multiplies along concatenated paths")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Arc> arcs;
        int v = 0;
        int product = 1;
        const int length = std::uniform_int_distribution<int>(1, 8)(rng);
        for (int k = 0; k < length; ++k) {
            const int w = k + 1 == length ? 0 : std::uniform_int_distribution<int>(0, 5)(rng);
            const int s = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
            arcs.push_back({v, s, w});
            product *= s;
            v = w;
        }
        const SignedCircuit c{arcs};
        CHECK(c.sign() == product);
        if (c.sign() < 0 && c.is_closed()) {
            const SignedCircuit sub = negative_elementary_subcircuit(c);
            CHECK(sub.is_elementary());
            CHECK(sub.sign() == -1);
        }
    }
}

TEST_CASE("detector, enumerator and naive search agree on random graphs")
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 6)(rng);
        const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const SignedDigraph g = oracle::random_digraph(rng, n, density * density);
        const auto arcs = oracle::arcs_of(g);
        const auto cs = elementary_circuits(g);
        int pos = 0;
        int neg = 0;
        std::set<std::string> distinct;
        for (const SignedCircuit& c : cs) {
            CHECK(c.is_elementary());
            CHECK(canonical_rotation(c) == c);
            for (const Arc& a : c.arcs)
                CHECK(g.has_arc(a));
            (c.sign() > 0 ? pos : neg) += 1;
            distinct.insert(to_string(c));
        }
        CHECK(distinct.size() == cs.size());
        CHECK(oracle::circuit_counts(arcs, n) == std::pair{pos, neg});
        CHECK(has_negative_circuit(g) == (neg > 0));
        CHECK(has_positive_circuit(g) == (pos > 0));
        CHECK(has_circuit(g) == !cs.empty());
        const auto found = find_negative_circuit(g);
        CHECK(found.has_value() == (neg > 0));
        if (found) {
            CHECK(found->is_elementary());
            CHECK(found->sign() == -1);
            for (const Arc& a : found->arcs)
                CHECK(g.has_arc(a));
        }
    }
}

TEST_CASE("enumeration refuses oversized graphs")
{
    CHECK_THROWS_AS(elementary_circuits(SignedDigraph(kMaxEnumerationVertices + 1)), DomainError);
    CHECK_NOTHROW(has_negative_circuit(SignedDigraph(kMaxComponents)));
}
