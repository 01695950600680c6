#include "oracles.hpp"

#include "negcirc/attractor.hpp"
#include "negcirc/corpus.hpp"

#include <doctest.h>

using namespace negcirc;

namespace {

std::vector<std::vector<Rank>> as_lists(const AttractorSet& set)
{
    std::vector<std::vector<Rank>> out;
    for (const Attractor& a : set)
        out.push_back(a.states);
    std::sort(out.begin(), out.end());
    return out;
}

TransitionGraph random_graph(std::mt19937_64& rng, Rank states)
{
    const StateSpace space{{0, static_cast<int>(states) - 1}};
    const double density = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
    std::bernoulli_distribution keep(density);
    std::vector<std::size_t> offsets{0};
    std::vector<Rank> targets;
    for (Rank x = 0; x < states; ++x) {
        for (Rank y = 0; y < states; ++y)
            if (y != x && keep(rng))
                targets.push_back(y);
        offsets.push_back(targets.size());
    }
    return TransitionGraph(space, Flavor::Asynchronous, offsets, targets);
}

std::vector<std::vector<Rank>> adjacency(const TransitionGraph& g)
{
    std::vector<std::vector<Rank>> succ(g.vertex_count());
    for (Rank x = 0; x < g.vertex_count(); ++x)
        succ[x].assign(g.successors(x).begin(), g.successors(x).end());
    return succ;
}

} // namespace

TEST_CASE("two-attractor grid: a fixed point and a six-state cyclic attractor")
{
    const NetworkMap f = load(builtin_network(1));
    const AttractorSet set = attractors(build_stg(f, Flavor::Asynchronous));
    REQUIRE(set.size() == 2);
    const StateSpace& s = f.space();
    CHECK(set[0].states == std::vector<Rank>{s.rank(State{0, 0}), s.rank(State{0, 1}), s.rank(State{1, 0}),
                                             s.rank(State{1, 1}), s.rank(State{2, 0}), s.rank(State{2, 1})});
    CHECK(set[0].cyclic());
    CHECK(set[1].states == std::vector<Rank>{s.rank(State{0, 2})});
    CHECK_FALSE(set[1].cyclic());
    CHECK(count_cyclic(set) == 1);
    CHECK(fixed_points(f) == std::vector<State>{State{0, 2}});
}

TEST_CASE("attractors of the one-dimensional oscillators")
{
    const NetworkMap f2 = load(builtin_network(2));
    CHECK(as_lists(attractors(build_stg(f2, Flavor::Asynchronous))) == std::vector<std::vector<Rank>>{{0, 2}, {1}});
    CHECK(as_lists(attractors(build_stg(f2, Flavor::Unitary))) == std::vector<std::vector<Rank>>{{1}});
    const NetworkMap f6 = load(builtin_network(6));
    const StateSpace& s = f6.space();
    const AttractorSet a6 = attractors(build_stg(f6, Flavor::Asynchronous));
    std::vector<Rank> square{s.rank(State{0, 0}), s.rank(State{0, 3}), s.rank(State{3, 0}), s.rank(State{3, 3})};
    REQUIRE(count_cyclic(a6) == 1);
    for (const Attractor& a : a6)
        if (a.cyclic())
            CHECK(a.states == square);
}

TEST_CASE("ring map: fixed points and strongly connected components")
{
    const NetworkMap f4 = load(builtin_network(4));
    CHECK(fixed_points(f4) == std::vector<State>{State{0, 0, 0}, State{1, 1, 1}});
    const NetworkMap f5 = load(builtin_network(5));
    const SccPartition p = strongly_connected_components(build_stg(f5, Flavor::Synchronous));
    CHECK(p.count == 3);
    const StateSpace& s = f5.space();
    CHECK(p.component[s.rank(State{0, 1})] == p.component[s.rank(State{1, 0})]);
    CHECK(p.component[s.rank(State{0, 0})] != p.component[s.rank(State{1, 1})]);
    const SccPartition q = strongly_connected_components(build_stg(load(builtin_network(1)), Flavor::Asynchronous));
    std::set<std::size_t> ids;
    for (Rank x : {0u, 1u, 3u, 4u, 6u, 7u})
        ids.insert(q.component[x]);
    CHECK(ids.size() == 1);
}

TEST_CASE("attractors equal minimal trap domains on random graphs")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const Rank states = std::uniform_int_distribution<Rank>(2, 10)(rng);
        const TransitionGraph g = random_graph(rng, states);
        CHECK(as_lists(attractors(g)) == oracle::minimal_trap_domains(adjacency(g)));
    }
}

TEST_CASE("attractors are trap domains, and every state reaches one")
{
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        const StateSpace space = oracle::random_space(rng, 3, 3, 27);
        const TransitionGraph g = build_stg(oracle::random_map(space, rng), Flavor::Asynchronous);
        const AttractorSet set = attractors(g);
        for (std::size_t k = 1; k < set.size(); ++k)
            CHECK(set[k - 1].states.front() < set[k].states.front());
        for (const Attractor& a : set) {
            CHECK(is_trap_domain(g, a.states));
            CHECK(std::is_sorted(a.states.begin(), a.states.end()));
        }
        for (Rank x = 0; x < space.size(); ++x) {
            bool reaches = false;
            for (const Attractor& a : set)
                reaches = reaches || path_exists(g, x, a.states.front());
            CHECK(reaches);
        }
    }
}
