#include "oracles.hpp"

#include "negcirc/corpus.hpp"
#include "negcirc/error.hpp"
#include "negcirc/report_json.hpp"
#include "negcirc/verifier.hpp"

#include <doctest.h>

#include <cmath>

using namespace negcirc;

TEST_CASE("grid map satisfies the asynchronous claim with a cyclic attractor")
{
    const AnalysisReport r = check_instance(load(builtin_network(1)));
    const Verdict& v = r.verdict(Claim::AsyncCycleNegativeCircuit);
    CHECK(v.hypothesis);
    CHECK(v.conclusion);
    REQUIRE(v.circuit);
    CHECK(v.circuit->sign() == -1);
    CHECK_FALSE(r.has_violation());
    CHECK(r.witnesses.size() >= 1);
    for (const WitnessRecord& w : r.witnesses)
        CHECK(w.sound);
}

TEST_CASE("asynchronous-only oscillator: unitary claim is vacuous and G[F] is empty")
{
    const AnalysisReport r = check_instance(load(builtin_network(2)));
    CHECK(r.verdict(Claim::AsyncCycleNegativeCircuit).hypothesis);
    CHECK(r.verdict(Claim::AsyncCycleNegativeCircuit).holds());
    CHECK_FALSE(r.verdict(Claim::UnitaryCycleNegativeCircuit).hypothesis);
    CHECK(r.unitary.empty());
    CHECK_FALSE(r.has_violation());
}

TEST_CASE("locally negative-free oscillator is flagged against every open question")
{
    const AnalysisReport r = check_instance(load(builtin_network(6)));
    CHECK(r.verdict(Claim::AsyncCycleNegativeCircuit).hypothesis);
    CHECK(r.verdict(Claim::AsyncCycleNegativeCircuit).conclusion);
    CHECK(r.verdict(Claim::UnitaryCycleNegativeCircuit).hypothesis);
    CHECK(r.verdict(Claim::UnitaryCycleNegativeCircuit).conclusion);
    for (const LocalFacts& lf : r.local)
        CHECK_FALSE(lf.negative_circuit);
    CHECK(r.fixed_points.empty());
    CHECK_FALSE(r.verdict(Claim::AsyncCycleLocalNegativeCircuit).holds());
    CHECK_FALSE(r.verdict(Claim::UnitaryCycleLocalNegativeCircuit).holds());
    CHECK_FALSE(r.verdict(Claim::LocallyNegativeFreeFixedPoint).holds());
    CHECK(r.has_counterexample());
    CHECK_FALSE(r.has_violation());
}

TEST_CASE("lean and evidence modes give the same verdicts")
{
    std::mt19937_64 rng(61);
    CheckOptions lean;
    lean.evidence = false;
    for (int trial = 0; trial < 500; ++trial) {
        const StateSpace space = oracle::random_space(rng, 3, 3, 27);
        const NetworkMap f = oracle::random_map(space, rng);
        const AnalysisReport a = check_instance(f);
        const AnalysisReport b = check_instance(f, lean);
        REQUIRE(a.verdicts.size() == kClaimCount);
        REQUIRE(b.verdicts.size() == kClaimCount);
        for (std::size_t k = 0; k < kClaimCount; ++k) {
            CHECK(a.verdicts[k].claim == kAllClaims[k]);
            CHECK(a.verdicts[k].hypothesis == b.verdicts[k].hypothesis);
            if (kAllClaims[k] != Claim::MultistableLocalPositiveCircuit || a.verdicts[k].hypothesis)
                CHECK_MESSAGE(a.verdicts[k].conclusion == b.verdicts[k].conclusion, claim_name(kAllClaims[k]));
            CHECK(a.verdicts[k].holds() == b.verdicts[k].holds());
        }
        CHECK_FALSE(a.has_violation());
        for (const Verdict& v : a.verdicts)
            if (v.hypothesis && v.circuit)
                CHECK(v.circuit->is_elementary());
    }
}

TEST_CASE("claim facts match independent recomputation")
{
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 300; ++trial) {
        const StateSpace space = oracle::random_space(rng, 3, 3, 27);
        const NetworkMap f = oracle::random_map(space, rng);
        const AnalysisReport r = check_instance(f);
        if (space.size() <= 12) {
            std::vector<std::vector<Rank>> succ(space.size());
            for (Rank x = 0; x < space.size(); ++x)
                for (const State& y : oracle::async_successors(f, space.unrank(x)))
                    succ[x].push_back(space.rank(y));
            bool async_cyclic = false;
            for (const auto& a : oracle::minimal_trap_domains(succ))
                async_cyclic = async_cyclic || a.size() > 1;
            CHECK(r.verdict(Claim::AsyncCycleNegativeCircuit).hypothesis == async_cyclic);
        }
        bool any_local_negative = false;
        for (const State& x : oracle::all_states(space))
            any_local_negative = any_local_negative ||
                                 oracle::has_negative_circuit(oracle::local_ig(f, x), space.dimension());
        CHECK(r.verdict(Claim::LocallyNegativeFreeFixedPoint).hypothesis == !any_local_negative);
        CHECK(r.global_negative == oracle::has_negative_circuit(oracle::global_ig(f), space.dimension()));
    }
}

TEST_CASE("claim names round-trip")
{
    for (Claim c : kAllClaims)
        CHECK(parse_claim(claim_name(c)) == c);
    CHECK_FALSE(parse_claim("nope"));
    CHECK(is_open_question(Claim::LocallyNegativeFreeFixedPoint));
    CHECK_FALSE(is_open_question(Claim::AsyncCycleNegativeCircuit));
}

TEST_CASE("enumeration covers every map exactly once in odometer order")
{
    CHECK(enumerate_networks(StateSpace::boolean(2)).size() == 256);
    CHECK(enumerate_networks(StateSpace::boolean(3)).size() == 16'777'216);
    CHECK(enumerate_networks(StateSpace{{0, 2}}).size() == 27);
    CHECK_THROWS_AS(enumerate_networks(StateSpace::boolean(4)), DomainError);
    CHECK(map_count(StateSpace::boolean(4)) == std::nullopt);

    const NetworkEnumerator e = enumerate_networks(StateSpace{{0, 2}});
    std::set<std::vector<Rank>> seen;
    std::vector<Rank> table;
    e.table_at(0, table);
    CHECK(table == std::vector<Rank>{0, 0, 0});
    std::uint64_t index = 0;
    do {
        std::vector<Rank> direct;
        e.table_at(index, direct);
        CHECK(direct == table);
        CHECK(e.at(index).table()[0] == table[0]);
        seen.insert(table);
        ++index;
    } while (e.next(table));
    CHECK(index == 27);
    CHECK(seen.size() == 27);
    e.table_at(1, table);
    CHECK(table == std::vector<Rank>{0, 0, 1});
    e.table_at(26, table);
    CHECK(table == std::vector<Rank>{2, 2, 2});
}

TEST_CASE("sampling is deterministic and roughly uniform")
{
    const StateSpace space{{0, 2}, {0, 2}};
    const NetworkSampler a = sample_networks(space, 3, 42);
    const NetworkSampler b = sample_networks(space, 3, 42);
    for (std::uint64_t k = 0; k < 3; ++k)
        CHECK(a.at(k) == b.at(k));
    CHECK_FALSE(sample_networks(space, 3, 43).at(0) == a.at(0));
    CHECK(sample_networks(space, 0, 1).size() == 0);

    const StateSpace cube = StateSpace::boolean(2);
    const std::uint64_t n = 100'000;
    const NetworkSampler s = sample_networks(cube, n, 7);
    std::vector<std::uint64_t> hits(256, 0);
    std::vector<Rank> table;
    for (std::uint64_t k = 0; k < n; ++k) {
        s.table_at(k, table);
        std::size_t code = 0;
        for (Rank y : table)
            code = code * 4 + y;
        ++hits[code];
    }
    const double p = 1.0 / 256;
    const double mean = n * p;
    const double sigma = std::sqrt(n * p * (1 - p));
    for (std::uint64_t h : hits) {
        CHECK(static_cast<double>(h) > mean - 5 * sigma);
        CHECK(static_cast<double>(h) < mean + 5 * sigma);
    }
}

TEST_CASE("Boolean two-component sweep has no violations")
{
    const SweepSummary s = sweep(StateSpace::boolean(2), {});
    CHECK(s.maps == 256);
    CHECK(s.violation_count() == 0);
    CHECK(s.counterexample_count() == 0);
    CHECK(s.witness_failures == 0);
    CHECK(s.tally(Claim::DynamicLocalInGlobal).hypothesis == 256);
    CHECK(s.tally(Claim::AsyncCycleNegativeCircuit).hypothesis == s.async_cyclic_maps);
}

TEST_CASE("sweep output does not depend on the number of jobs")
{
    SweepOptions options;
    options.mode = SweepMode::Sample;
    options.count = 40'000;
    options.seed = 9;
    options.witness_cap = 500;
    options.injected.push_back(load(builtin_network(6)));
    const StateSpace space{{0, 3}, {0, 3}};
    const Json one = to_json(sweep(space, options));
    options.jobs = 3;
    const Json three = to_json(sweep(space, options));
    CHECK(one == three);
    CHECK(one["counterexample_count"].get<std::uint64_t>() >= 3);
}

TEST_CASE("injected control is flagged and replays from its serialized table")
{
    SweepOptions options;
    options.mode = SweepMode::Sample;
    options.count = 2000;
    options.seed = 1;
    options.injected.push_back(load(builtin_network(6)));
    const StateSpace space{{0, 3}, {0, 3}};
    const SweepSummary s = sweep(space, options);
    CHECK(s.maps == 2001);
    CHECK(s.injected == 1);
    CHECK(s.violation_count() == 0);
    bool injected_flagged = false;
    const Json j = to_json(s);
    for (const Json& finding : j["counterexamples"]) {
        const NetworkMap f = map_from_json(space, finding["table"]);
        const Claim c = *parse_claim(finding["claim"].get<std::string>());
        CHECK_FALSE(check_instance(f).verdict(c).holds());
        if (finding["injected"].get<bool>()) {
            injected_flagged = true;
            CHECK(f == load(builtin_network(6)));
        }
    }
    CHECK(injected_flagged);
}

TEST_CASE("record cap limits stored tables but not counts")
{
    SweepOptions options;
    options.mode = SweepMode::Sample;
    options.count = 500;
    options.record_cap = 1;
    for (int k = 0; k < 3; ++k)
        options.injected.push_back(load(builtin_network(6)));
    const SweepSummary s = sweep(StateSpace{{0, 3}, {0, 3}}, options);
    CHECK(s.tally(Claim::LocallyNegativeFreeFixedPoint).failures >= 3);
    std::size_t stored = 0;
    for (const Finding& f : s.counterexamples)
        stored += f.claim == Claim::LocallyNegativeFreeFixedPoint;
    CHECK(stored == 1);
}
