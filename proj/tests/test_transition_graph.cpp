#include "oracles.hpp"

#include "negcirc/corpus.hpp"
#include "negcirc/error.hpp"
#include "negcirc/transition_graph.hpp"

#include <doctest.h>

using namespace negcirc;

namespace {

std::vector<State> successors(const TransitionGraph& g, const State& x)
{
    std::vector<State> out;
    for (Rank y : g.successors(g.space().rank(x)))
        out.push_back(g.space().unrank(y));
    return out;
}

} // namespace

TEST_CASE("asynchronous graph of the two-attractor grid")
{
    const NetworkMap f = load(builtin_network(1));
    const TransitionGraph g = build_stg(f, Flavor::Asynchronous);
    CHECK(g.vertex_count() == 9);
    CHECK(successors(g, State{1, 1}) == std::vector<State>{State{0, 1}, State{1, 0}});
    CHECK(successors(g, State{0, 2}).empty());
    CHECK(is_trap_domain(g, std::vector<State>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}}));
    CHECK_FALSE(is_trap_domain(g, std::vector<State>{{0, 0}}));
    CHECK(path_exists(g, State{0, 0}, State{0, 2}) == false);
    CHECK(path_exists(g, State{2, 2}, State{0, 2}));
    CHECK(shortest_path(g, State{1, 1}, State{1, 1}) == std::vector<State>{State{1, 1}});
    CHECK_THROWS_AS(is_trap_domain(g, std::vector<Rank>{}), DomainError);
    CHECK_THROWS_AS(is_trap_domain(g, std::vector<Rank>{9}), DomainError);
}

TEST_CASE("unitary and synchronous graphs of small maps")
{
    const NetworkMap f3 = load(builtin_network(3));
    const TransitionGraph u = build_stg(f3, Flavor::Unitary);
    CHECK(u.arc_count() == 2);
    CHECK(u.has_arc(1, 2));
    CHECK(u.has_arc(2, 1));
    CHECK(u.out_degree(0) == 0);
    CHECK_FALSE(path_exists(build_stg(f3, Flavor::Asynchronous), 0, 1));

    const NetworkMap f5 = load(builtin_network(5));
    const TransitionGraph s = build_stg(f5, Flavor::Synchronous);
    CHECK(s.arc_count() == 2);
    CHECK(s.has_arc(f5.space().rank(State{0, 1}), f5.space().rank(State{1, 0})));
    CHECK(s.has_arc(f5.space().rank(State{1, 0}), f5.space().rank(State{0, 1})));
    CHECK(has_directed_cycle(s));
}

TEST_CASE("asynchronous successors match the definition")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const StateSpace space = oracle::random_space(rng, 3, 4, 64);
        const NetworkMap f = oracle::random_map(space, rng);
        const TransitionGraph g = build_stg(f, Flavor::Asynchronous);
        const TransitionGraph u = build_stg(f, Flavor::Unitary);
        const NetworkMap fu = oracle::unitary_map(f);
        for (const State& x : oracle::all_states(space)) {
            const auto got = successors(g, x);
            const auto want = oracle::async_successors(f, x);
            CHECK(std::set<State>(got.begin(), got.end()) == want);
            const auto got_u = successors(u, x);
            CHECK(std::set<State>(got_u.begin(), got_u.end()) == oracle::async_successors(fu, x));
        }
    }
}

TEST_CASE("shortest paths are minimal and follow arcs")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const StateSpace space = oracle::random_space(rng, 3, 3, 27);
        const TransitionGraph g = build_stg(oracle::random_map(space, rng), Flavor::Asynchronous);
        // Breadth-first distances from 0 by relaxation.
        std::vector<int> dist(space.size(), -1);
        dist[0] = 0;
        for (bool changed = true; changed;) {
            changed = false;
            for (Rank x = 0; x < space.size(); ++x)
                if (dist[x] >= 0)
                    for (Rank y : g.successors(x))
                        if (dist[y] < 0 || dist[y] > dist[x] + 1) {
                            dist[y] = dist[x] + 1;
                            changed = true;
                        }
        }
        for (Rank y = 0; y < space.size(); ++y) {
            const auto p = shortest_path(g, 0, y);
            CHECK(p.has_value() == (dist[y] >= 0));
            CHECK(path_exists(g, 0, y) == (dist[y] >= 0));
            if (!p)
                continue;
            CHECK(static_cast<int>(p->size()) == dist[y] + 1);
            for (std::size_t k = 0; k + 1 < p->size(); ++k)
                CHECK(g.has_arc((*p)[k], (*p)[k + 1]));
        }
    }
}

TEST_CASE("flavor names")
{
    CHECK(parse_flavor("async") == Flavor::Asynchronous);
    CHECK(parse_flavor("unitary") == Flavor::Unitary);
    CHECK(parse_flavor("sync") == Flavor::Synchronous);
    CHECK_FALSE(parse_flavor("other"));
    CHECK(to_string(Flavor::Unitary) == "unitary");
}
