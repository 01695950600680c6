#include "oracles.hpp"

#include "negcirc/corpus.hpp"
#include "negcirc/error.hpp"
#include "negcirc/witness.hpp"

#include <doctest.h>

using namespace negcirc;

namespace {

/// Every arc of the witness is re-derived from the dynamic local graph
/// definition at its supporting state, which must lie in the attractor.
void check_witness(const NetworkMap& f, const Attractor& a, const WitnessTrace& w)
{
    REQUIRE(w.circuit.is_closed());
    CHECK(w.circuit.sign() == -1);
    REQUIRE(w.support.size() == w.circuit.arcs.size());
    for (std::size_t q = 0; q < w.support.size(); ++q) {
        CHECK(a.contains(w.support[q]));
        const Arc& arc = w.circuit.arcs[q];
        const auto arcs = oracle::dynamic_local_ig(f, f.space().unrank(w.support[q]));
        CHECK(arcs.count({arc.from, arc.sign, arc.to}) == 1);
    }
    CHECK(witness_is_sound(f, a.states, w));
    CHECK(has_negative_circuit(global_ig(f)));
}

} // namespace

TEST_CASE("single-step path yields the single arc at the start state")
{
    const NetworkMap f = load(builtin_network(1));
    const StateSpace& s = f.space();
    const std::vector<Rank> path{s.rank(State{0, 0}), s.rank(State{2, 0})};
    const SupportedPath p = signed_path_along(f, path, 1);
    CHECK(p.source == 0);
    CHECK(p.target == 1);
    REQUIRE(p.arcs.size() == 1);
    CHECK(p.arcs[0] == Arc{0, 1, 1});
    CHECK(p.support == std::vector<Rank>{s.rank(State{0, 0})});
    CHECK(p.sign() == 1);
}

TEST_CASE("signed paths respect their hypotheses")
{
    const NetworkMap f = load(builtin_network(1));
    const StateSpace& s = f.space();
    const std::vector<Rank> one{s.rank(State{0, 0})};
    CHECK_THROWS_AS(signed_path_along(f, one, 1), ContractError);
    // Not an arc of the asynchronous graph.
    const std::vector<Rank> jump{s.rank(State{0, 0}), s.rank(State{1, 1})};
    CHECK_THROWS_AS(signed_path_along(f, jump, 1), ContractError);
    // Component 1 is stable at the end of the path.
    const std::vector<Rank> stable_end{s.rank(State{0, 0}), s.rank(State{2, 0})};
    CHECK_THROWS_AS(signed_path_along(f, stable_end, 0), ContractError);
}

TEST_CASE("signed path sign identity on random elementary paths")
{
    std::mt19937_64 rng(53);
    int checked = 0;
    for (int trial = 0; trial < 20000 && checked < 500; ++trial) {
        const StateSpace space = oracle::random_space(rng, 3, 3, 27);
        const NetworkMap f = oracle::random_map(space, rng);
        // Random walk without repeated states.
        std::vector<Rank> path{std::uniform_int_distribution<Rank>(0, space.size() - 1)(rng)};
        const int length = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int step = 0; step < length; ++step) {
            const auto unstable = components_of(f.unstable(path.back()));
            if (unstable.empty())
                break;
            const int i = unstable[std::uniform_int_distribution<std::size_t>(0, unstable.size() - 1)(rng)];
            const Rank y = f.async_update(path.back(), i);
            if (std::find(path.begin(), path.end(), y) != path.end())
                break;
            path.push_back(y);
        }
        if (path.size() < 2)
            continue;
        const Rank end = path.back();
        for (int i : components_of(f.unstable(end))) {
            bool differs = true;
            for (std::size_t p = 0; p + 1 < path.size(); ++p)
                differs = differs && f.delta(path[p], i) != f.delta(end, i);
            if (!differs)
                continue;
            const SupportedPath sp = signed_path_along(f, path, i);
            ++checked;
            CHECK(sp.target == i);
            CHECK(f.delta(path[0], sp.source) != 0);
            CHECK(sp.sign() == f.delta(path[0], sp.source) * f.delta(end, i));
            REQUIRE(!sp.arcs.empty());
            CHECK(sp.arcs.front().from == sp.source);
            CHECK(sp.arcs.back().to == i);
            for (std::size_t q = 0; q < sp.arcs.size(); ++q) {
                if (q > 0)
                    CHECK(sp.arcs[q - 1].to == sp.arcs[q].from);
                CHECK(std::find(path.begin(), path.end() - 1, sp.support[q]) != path.end() - 1);
                const Arc& a = sp.arcs[q];
                CHECK(oracle::dynamic_local_ig(f, space.unrank(sp.support[q])).count({a.from, a.sign, a.to}) == 1);
            }
        }
    }
    CHECK(checked >= 500);
}

TEST_CASE("witness for the one-dimensional asynchronous oscillator is its negative self-loop")
{
    const NetworkMap f = load(builtin_network(2));
    const Attractor a{{0, 2}};
    const WitnessTrace w = extract_negative_circuit(f, a);
    CHECK(to_string(w.circuit) == "1 (-) 1");
    check_witness(f, a, w);
}

TEST_CASE("witnesses for the grid and the locally negative-free oscillator")
{
    for (int id : {1, 6}) {
        const NetworkMap f = load(builtin_network(id));
        for (const Attractor& a : attractors(build_stg(f, Flavor::Asynchronous)))
            if (a.cyclic()) {
                const WitnessTrace w = extract_negative_circuit(f, a);
                check_witness(f, a, w);
                if (id == 6) {
                    std::set<int> vs;
                    for (const Arc& arc : w.circuit.arcs)
                        vs.insert(arc.from);
                    CHECK(vs == std::set<int>{0, 1});
                }
            }
        const NetworkMap u = unitary_map(f);
        for (const Attractor& a : attractors(build_stg(u, Flavor::Asynchronous)))
            if (a.cyclic())
                check_witness(u, a, extract_negative_circuit(u, a));
    }
}

TEST_CASE("extraction rejects non-attractors")
{
    const NetworkMap f = load(builtin_network(1));
    CHECK_THROWS_AS(extract_negative_circuit(f, std::vector<Rank>{2}), DomainError);
    CHECK_THROWS_AS(extract_negative_circuit(f, std::vector<Rank>{0, 1}), DomainError);
    CHECK_THROWS_AS(extract_negative_circuit(f, std::vector<Rank>{}), DomainError);
}

TEST_CASE("every cyclic attractor of random maps yields a sound witness")
{
    std::mt19937_64 rng(59);
    int cyclic = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const StateSpace space = oracle::random_space(rng, 4, 4, 64);
        const NetworkMap f = oracle::random_map(space, rng);
        for (const NetworkMap& h : {f, unitary_map(f)})
            for (const Attractor& a : attractors(build_stg(h, Flavor::Asynchronous)))
                if (a.cyclic()) {
                    ++cyclic;
                    const WitnessTrace w = extract_negative_circuit(h, a);
                    check_witness(h, a, w);
                    CHECK(w.reduction_chain.size() < static_cast<std::size_t>(space.dimension()));
                }
    }
    CHECK(cyclic > 500);
}
