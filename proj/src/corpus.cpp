#include "negcirc/corpus.hpp"

#include "negcirc/attractor.hpp"
#include "negcirc/circuits.hpp"
#include "negcirc/error.hpp"
#include "negcirc/interaction.hpp"
#include "negcirc/network_file.hpp"
#include "negcirc/transition_graph.hpp"
#include "negcirc/verifier.hpp"

#include <algorithm>
#include <array>

namespace negcirc {

namespace {

constexpr std::array<CorpusNetwork, 6> kCorpus = {{
    {1, "two_attractor_grid", "a fixed point next to a six-state cyclic attractor",
     "intervals: 0..2 0..2\n"
     "table:\n"
     "0 0 -> 2 0\n"
     "0 1 -> 1 0\n"
     "0 2 -> 0 2\n"
     "1 0 -> 2 0\n"
     "1 1 -> 0 0\n"
     "1 2 -> 0 1\n"
     "2 0 -> 2 1\n"
     "2 1 -> 0 1\n"
     "2 2 -> 0 1\n"},
    {2, "async_only_oscillator", "cyclic asynchronously, stable under unit steps",
     "intervals: 0..2\n"
     "table:\n"
     "0 -> 2\n"
     "1 -> 1\n"
     "2 -> 0\n"},
    {3, "unitary_only_oscillator", "cyclic under unit steps, stable asynchronously",
     "intervals: 0..2\n"
     "table:\n"
     "0 -> 0\n"
     "1 -> 2\n"
     "2 -> 0\n"},
    {4, "positive_ring", "three-component positive ring with a directed cycle but no cyclic attractor",
     "intervals: 0..1 0..1 0..1\n"
     "rule f1: x3\n"
     "rule f2: x1\n"
     "rule f3: x2\n"},
    {5, "synchronous_swap", "swap map whose synchronous graph oscillates",
     "intervals: 0..1 0..1\n"
     "rule f1: x2\n"
     "rule f2: x1\n"},
    {6, "locally_negative_free_oscillator", "cyclic attractors although no local graph has a negative circuit",
     "intervals: 0..3 0..3\n"
     "rule f1: if x2 == 3 or (x2 > 0 and x1 >= 2) then 3 else 0\n"
     "rule f2: if x1 == 0 or (x1 < 3 and x2 >= 2) then 3 else 0\n"},
}};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string render(const StateSpace& space, const Attractor& a)
{
    std::string out = "{";
    for (std::size_t k = 0; k < a.states.size(); ++k)
        out += (k ? "," : "") + to_string(space.unrank(a.states[k]));
    return out + "}";
}

std::string render(const StateSpace& space, const AttractorSet& set)
{
    std::string out;
    for (std::size_t k = 0; k < set.size(); ++k)
        out += (k ? " " : "") + render(space, set[k]);
    return out;
}

std::string cyclic_only(const StateSpace& space, const AttractorSet& set)
{
    AttractorSet cyclic;
    for (const Attractor& a : set)
        if (a.cyclic())
            cyclic.push_back(a);
    return cyclic.empty() ? "none" : render(space, cyclic);
}

/// Attractor rendering of an explicit state list, sorted by rank.
std::string states(const StateSpace& space, std::initializer_list<State> xs)
{
    Attractor a;
    for (const State& x : xs)
        a.states.push_back(space.rank(x));
    std::sort(a.states.begin(), a.states.end());
    return render(space, a);
}

std::string circuit_counts(const SignedDigraph& g)
{
    int pos = 0;
    int neg = 0;
    for_each_elementary_circuit(g, [&](const SignedCircuit& c) {
        (c.sign() > 0 ? pos : neg) += 1;
        return true;
    });
    return std::to_string(pos) + " positive, " + std::to_string(neg) + " negative";
}

} // namespace

std::span<const CorpusNetwork> builtin_networks() { return kCorpus; }

const CorpusNetwork& builtin_network(int id)
{
    for (const CorpusNetwork& e : kCorpus)
        if (e.id == id)
            return e;
    throw DomainError("no built-in network " + std::to_string(id));
}

NetworkMap load(const CorpusNetwork& entry) { return parse_network_file(entry.source); }

std::vector<Expectation> check_expectations(const CorpusNetwork& entry)
{
    const NetworkMap f = load(entry);
    const StateSpace& space = f.space();
    const AttractorSet async = attractors(build_stg(f, Flavor::Asynchronous));
    const AttractorSet unitary = attractors(build_stg(f, Flavor::Unitary));
    const SignedDigraph g = global_ig(f);
    const SignedDigraph gu = unitary_ig(f);
    const AnalysisReport report = check_instance(f);

    std::vector<Expectation> out;
    auto expect = [&](std::string what, std::string expected, std::string actual) {
        out.push_back({std::move(what), std::move(expected), std::move(actual)});
    };
    expect("no claim violated", "no", yes_no(report.has_violation()));

    switch (entry.id) {
    case 1:
        expect("asynchronous attractors",
               states(space, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}}) + " " + states(space, {{0, 2}}),
               render(space, async));
        expect("fixed points", states(space, {{0, 2}}), render(space, Attractor{report.fixed_points}));
        expect("elementary circuits of G(F)", "2 positive, 2 negative", circuit_counts(g));
        break;
    case 2:
        expect("asynchronous attractors", "{(0),(2)} {(1)}", render(space, async));
        expect("cyclic unitary attractors", "none", cyclic_only(space, unitary));
        expect("G(F)", "{(1,-,1)}", to_string(g));
        expect("G[F]", "{}", to_string(gu));
        break;
    case 3:
        expect("cyclic unitary attractors", "{(1),(2)}", cyclic_only(space, unitary));
        expect("cyclic asynchronous attractors", "none", cyclic_only(space, async));
        expect("G(F)", "{(1,-,1),(1,+,1)}", to_string(g));
        expect("G[F]", "{(1,-,1),(1,+,1)}", to_string(gu));
        break;
    case 4:
        expect("asynchronous graph has a directed cycle", "yes",
               yes_no(has_directed_cycle(build_stg(f, Flavor::Asynchronous))));
        expect("cyclic asynchronous attractors", "none", cyclic_only(space, async));
        expect("G(F)", "{(1,+,2),(2,+,3),(3,+,1)}", to_string(g));
        expect("G(F) has a negative circuit", "no", yes_no(has_negative_circuit(g)));
        break;
    case 5:
        expect("cyclic synchronous attractors", states(space, {{0, 1}, {1, 0}}),
               cyclic_only(space, attractors(build_stg(f, Flavor::Synchronous))));
        expect("G(F) has a negative circuit", "no", yes_no(has_negative_circuit(g)));
        break;
    case 6: {
        expect("cyclic asynchronous attractors", states(space, {{0, 0}, {0, 3}, {3, 3}, {3, 0}}),
               cyclic_only(space, async));
        // The unit-step cycle also passes (2,0) and (1,0) on its way from (3,0)
        // back to (0,0), mirroring (1,3) and (2,3) on the opposite side.
        expect("cyclic unitary attractors",
               states(space, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 3}, {2, 0}, {2, 3}, {3, 0}, {3, 1}, {3, 2}, {3, 3}}),
               cyclic_only(space, unitary));
        std::string locally_negative;
        for (Rank x = 0; x < space.size(); ++x)
            if (has_negative_circuit(local_ig(f, x)))
                locally_negative += (locally_negative.empty() ? "" : " ") + to_string(space.unrank(x));
        expect("states whose G_F(x) has a negative circuit", "", locally_negative);
        expect("G(F) equals G[F]", "yes", yes_no(g == gu));
        expect("G(F) has a negative circuit", "yes", yes_no(has_negative_circuit(g)));
        expect("flagged against both local-negative-circuit questions", "yes",
               yes_no(!report.verdict(Claim::AsyncCycleLocalNegativeCircuit).holds() &&
                      !report.verdict(Claim::UnitaryCycleLocalNegativeCircuit).holds() &&
                      !report.verdict(Claim::LocallyNegativeFreeFixedPoint).holds()));
        break;
    }
    default:
        break;
    }
    return out;
}

} // namespace negcirc
