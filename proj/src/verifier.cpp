#include "negcirc/verifier.hpp"

#include "negcirc/error.hpp"

#include <algorithm>

namespace negcirc {

std::string_view claim_name(Claim c)
{
    switch (c) {
    case Claim::AsyncCycleNegativeCircuit: return "async_cycle_negative_circuit";
    case Claim::UnitaryCycleNegativeCircuit: return "unitary_cycle_negative_circuit";
    case Claim::NegativeFreeFixedPoint: return "negative_free_fixed_point";
    case Claim::UnitaryNegativeFreeFixedPoint: return "unitary_negative_free_fixed_point";
    case Claim::DynamicLocalInGlobal: return "dynamic_local_in_global";
    case Claim::UnitaryDynamicLocalInUnitary: return "unitary_dynamic_local_in_unitary";
    case Claim::LocalUnionIsGlobal: return "local_union_is_global";
    case Claim::AcyclicGlobalUniqueFixedPoint: return "acyclic_global_unique_fixed_point";
    case Claim::MultistableLocalPositiveCircuit: return "multistable_local_positive_circuit";
    case Claim::LocallyAcyclicUniqueFixedPoint: return "locally_acyclic_unique_fixed_point";
    case Claim::WitnessSound: return "witness_sound";
    case Claim::UnitaryCycleLocalNegativeCircuit: return "unitary_cycle_local_negative_circuit";
    case Claim::AsyncCycleLocalNegativeCircuit: return "async_cycle_local_negative_circuit";
    case Claim::LocallyNegativeFreeFixedPoint: return "locally_negative_free_fixed_point";
    }
    return "?";
}

std::optional<Claim> parse_claim(std::string_view name)
{
    for (Claim c : kAllClaims)
        if (claim_name(c) == name)
            return c;
    return std::nullopt;
}

bool is_open_question(Claim c)
{
    return c == Claim::UnitaryCycleLocalNegativeCircuit || c == Claim::AsyncCycleLocalNegativeCircuit ||
           c == Claim::LocallyNegativeFreeFixedPoint;
}

const Verdict& AnalysisReport::verdict(Claim c) const
{
    for (const Verdict& v : verdicts)
        if (v.claim == c)
            return v;
    throw DomainError("no verdict for " + std::string(claim_name(c)));
}

bool AnalysisReport::has_violation() const
{
    return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return !is_open_question(v.claim) && !v.holds(); });
}

bool AnalysisReport::has_counterexample() const
{
    return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return is_open_question(v.claim) && !v.holds(); });
}

namespace {

std::optional<std::size_t> first_cyclic(const AttractorSet& set)
{
    for (std::size_t k = 0; k < set.size(); ++k)
        if (set[k].cyclic())
            return k;
    return std::nullopt;
}

/// Unique fixed point that every state reaches, i.e. the only attractor is
/// that fixed point.
bool unique_attracting_fixed_point(const std::vector<Rank>& fixed, const AttractorSet& atts)
{
    return fixed.size() == 1 && atts.size() == 1 && atts.front().states.size() == 1 &&
           atts.front().states.front() == fixed.front();
}

void extract_witnesses(const NetworkMap& f, Flavor flavor, const AttractorSet& atts, const SignedDigraph& host,
                       std::size_t& budget, std::vector<WitnessRecord>& out)
{
    for (std::size_t k = 0; k < atts.size() && budget > 0; ++k) {
        if (!atts[k].cyclic())
            continue;
        --budget;
        WitnessRecord rec;
        rec.flavor = flavor;
        rec.attractor = k;
        try {
            WitnessTrace w = extract_negative_circuit(f, atts[k].states);
            const bool in_host = std::all_of(w.circuit.arcs.begin(), w.circuit.arcs.end(),
                                             [&](const Arc& a) { return host.has_arc(a); });
            rec.sound = witness_is_sound(f, atts[k].states, w) && in_host;
            if (!rec.sound)
                rec.error = in_host ? "witness failed re-verification" : "witness arc missing from the interaction graph";
            rec.trace = std::move(w);
        } catch (const std::exception& e) {
            rec.error = e.what();
        }
        out.push_back(std::move(rec));
    }
}

} // namespace

AnalysisReport check_instance(const NetworkMap& f, const CheckOptions& options)
{
    const StateSpace& space = f.space();
    const NetworkMap unit = unitary_map(f);

    AnalysisReport r{f,
                     fixed_point_ranks(f),
                     attractors(build_stg(f, Flavor::Asynchronous)),
                     attractors(build_stg(unit, Flavor::Asynchronous)),
                     global_ig(f),
                     unitary_ig(f),
                     false,
                     false,
                     std::nullopt,
                     std::nullopt,
                     {},
                     {},
                     {}};
    r.global_negative = has_negative_circuit(r.global);
    r.unitary_negative = has_negative_circuit(r.unitary);
    if (options.evidence) {
        r.global_positive = has_positive_circuit(r.global);
        r.unitary_positive = has_positive_circuit(r.unitary);
    }

    const bool has_fixed = !r.fixed_points.empty();
    const auto async_cycle = first_cyclic(r.async_attractors);
    const auto unitary_cycle = first_cyclic(r.unitary_attractors);

    auto add = [&](Claim c, bool hyp, bool concl) -> Verdict& {
        Verdict v;
        v.claim = c;
        v.hypothesis = hyp;
        v.conclusion = concl;
        r.verdicts.push_back(std::move(v));
        return r.verdicts.back();
    };

    {
        Verdict& v = add(Claim::AsyncCycleNegativeCircuit, async_cycle.has_value(), r.global_negative);
        v.attractor = async_cycle;
        if (options.evidence && r.global_negative)
            v.circuit = find_negative_circuit(r.global);
    }
    {
        Verdict& v = add(Claim::UnitaryCycleNegativeCircuit, unitary_cycle.has_value(), r.unitary_negative);
        v.attractor = unitary_cycle;
        if (options.evidence && r.unitary_negative)
            v.circuit = find_negative_circuit(r.unitary);
    }
    {
        Verdict& v = add(Claim::NegativeFreeFixedPoint, !r.global_negative, has_fixed);
        if (has_fixed)
            v.state = r.fixed_points.front();
    }
    {
        Verdict& v = add(Claim::UnitaryNegativeFreeFixedPoint, !r.unitary_negative, has_fixed);
        if (has_fixed)
            v.state = r.fixed_points.front();
    }

    // Per-state sweeps: dynamic local graphs against G(F) and G[F], and the
    // local graphs G_F(x).
    Verdict dyn;
    dyn.claim = Claim::DynamicLocalInGlobal;
    dyn.hypothesis = true;
    Verdict dyn_unit;
    dyn_unit.claim = Claim::UnitaryDynamicLocalInUnitary;
    dyn_unit.hypothesis = true;
    SignedDigraph local_union(space.dimension());
    r.local.resize(space.size());
    bool any_local_negative = false;
    bool all_local_acyclic = true;
    std::optional<Rank> first_local_negative;
    std::optional<Rank> first_local_cycle;
    for (Rank x = 0; x < space.size(); ++x) {
        if (dyn.conclusion && !is_subgraph(dynamic_local_ig(f, x), r.global)) {
            dyn.conclusion = false;
            dyn.state = x;
        }
        if (dyn_unit.conclusion && !is_subgraph(dynamic_local_ig(unit, x), r.unitary)) {
            dyn_unit.conclusion = false;
            dyn_unit.state = x;
        }
        const SignedDigraph local = local_ig(f, x);
        local_union |= local;
        LocalFacts& facts = r.local[x];
        facts.negative_circuit = has_negative_circuit(local);
        facts.any_circuit = facts.negative_circuit || has_circuit(local);
        if (options.evidence)
            facts.positive_circuit = has_positive_circuit(local);
        if (facts.negative_circuit && !first_local_negative)
            first_local_negative = x;
        if (facts.any_circuit && !first_local_cycle)
            first_local_cycle = x;
        any_local_negative |= facts.negative_circuit;
        all_local_acyclic &= !facts.any_circuit;
    }
    r.verdicts.push_back(dyn);
    r.verdicts.push_back(dyn_unit);
    {
        Verdict& v = add(Claim::LocalUnionIsGlobal, true, local_union == r.global);
        if (!v.conclusion)
            v.note = "union " + to_string(local_union) + " vs global " + to_string(r.global);
    }
    {
        const bool acyclic = !has_circuit(r.global);
        Verdict& v = add(Claim::AcyclicGlobalUniqueFixedPoint, acyclic,
                         unique_attracting_fixed_point(r.fixed_points, r.async_attractors));
        if (has_fixed)
            v.state = r.fixed_points.front();
    }
    {
        const bool multistable = r.unitary_attractors.size() >= 2;
        bool found = false;
        std::optional<Rank> where;
        if (multistable || options.evidence) {
            for (Rank x = 0; x < space.size(); ++x) {
                LocalFacts& facts = r.local[x];
                if (!facts.positive_circuit) {
                    if (!facts.any_circuit)
                        facts.positive_circuit = false;
                    else if (!found)
                        facts.positive_circuit = has_positive_circuit(local_ig(f, x));
                }
                if (facts.positive_circuit.value_or(false) && !found) {
                    found = true;
                    where = x;
                    if (!options.evidence)
                        break;
                }
            }
        }
        Verdict& v = add(Claim::MultistableLocalPositiveCircuit, multistable, found);
        v.state = where;
    }
    {
        Verdict& v = add(Claim::LocallyAcyclicUniqueFixedPoint, all_local_acyclic,
                         unique_attracting_fixed_point(r.fixed_points, r.unitary_attractors));
        if (!all_local_acyclic)
            v.state = first_local_cycle;
        else if (has_fixed)
            v.state = r.fixed_points.front();
    }

    {
        std::size_t budget = options.witness_limit;
        extract_witnesses(f, Flavor::Asynchronous, r.async_attractors, r.global, budget, r.witnesses);
        extract_witnesses(unit, Flavor::Unitary, r.unitary_attractors, r.unitary, budget, r.witnesses);
        const bool all_sound = std::all_of(r.witnesses.begin(), r.witnesses.end(), [](const WitnessRecord& w) { return w.sound; });
        Verdict& v = add(Claim::WitnessSound, !r.witnesses.empty(), all_sound);
        for (std::size_t k = 0; k < r.witnesses.size(); ++k)
            if (!r.witnesses[k].sound) {
                v.attractor = r.witnesses[k].attractor;
                v.note = std::string(to_string(r.witnesses[k].flavor)) + ": " + r.witnesses[k].error;
                break;
            }
    }

    {
        Verdict& v = add(Claim::UnitaryCycleLocalNegativeCircuit, unitary_cycle.has_value(), any_local_negative);
        v.attractor = unitary_cycle;
        v.state = first_local_negative;
    }
    {
        Verdict& v = add(Claim::AsyncCycleLocalNegativeCircuit, async_cycle.has_value(), any_local_negative);
        v.attractor = async_cycle;
        v.state = first_local_negative;
    }
    {
        Verdict& v = add(Claim::LocallyNegativeFreeFixedPoint, !any_local_negative, has_fixed);
        if (has_fixed)
            v.state = r.fixed_points.front();
        else
            v.state = first_local_negative;
    }
    return r;
}

} // namespace negcirc
