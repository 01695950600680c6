#include "negcirc/report_json.hpp"

#include "negcirc/error.hpp"

namespace negcirc {

namespace {

constexpr std::size_t kCircuitListLimit = 1000;

Json attractor_list(const AttractorSet& set, const StateSpace& space)
{
    Json out = Json::array();
    for (const Attractor& a : set) {
        Json states = Json::array();
        for (Rank x : a.states)
            states.push_back(to_string(space.unrank(x)));
        out.push_back({{"states", states}, {"cyclic", a.cyclic()}});
    }
    return out;
}

Json graph_facts(const SignedDigraph& g, bool negative, const std::optional<bool>& positive)
{
    Json j = to_json(g);
    j["negative_circuit"] = negative;
    j["positive_circuit"] = positive ? Json(*positive) : Json(nullptr);
    Json circuits = Json::array();
    bool truncated = false;
    if (g.vertex_count() <= kMaxEnumerationVertices) {
        for_each_elementary_circuit(g, [&](const SignedCircuit& c) {
            if (circuits.size() == kCircuitListLimit) {
                truncated = true;
                return false;
            }
            circuits.push_back({{"circuit", to_string(c)}, {"sign", c.sign()}});
            return true;
        });
    } else {
        truncated = true;
    }
    j["circuits"] = circuits;
    j["circuits_truncated"] = truncated;
    return j;
}

Json finding_list(const std::vector<Finding>& findings, const StateSpace& space)
{
    Json out = Json::array();
    for (const Finding& f : findings)
        out.push_back({{"index", f.index},
                       {"injected", f.injected},
                       {"claim", claim_name(f.claim)},
                       {"table", table_to_json(space, f.table)}});
    return out;
}

} // namespace

Json to_json(const SignedDigraph& g)
{
    Json arcs = Json::array();
    for (const Arc& a : g.arcs())
        arcs.push_back(to_string(a));
    return {{"vertices", g.vertex_count()}, {"arcs", arcs}};
}

Json to_json(const WitnessTrace& trace, const StateSpace& space)
{
    Json arcs = Json::array();
    for (std::size_t q = 0; q < trace.circuit.arcs.size(); ++q)
        arcs.push_back({{"arc", to_string(trace.circuit.arcs[q])},
                        {"state", to_string(space.unrank(trace.support[q]))}});
    Json chain = Json::array();
    for (int c : trace.reduction_chain)
        chain.push_back(c + 1);
    return {{"circuit", to_string(trace.circuit)},
            {"sign", trace.circuit.sign()},
            {"arcs", arcs},
            {"reduction_chain", chain}};
}

Json to_json(const AnalysisReport& report)
{
    const StateSpace& space = report.map.space();
    Json j;
    j["space"] = to_string(space);
    j["dimension"] = space.dimension();
    j["states"] = space.size();

    Json fps = Json::array();
    for (Rank x : report.fixed_points)
        fps.push_back(to_string(space.unrank(x)));
    j["fixed_points"] = fps;
    j["async_attractors"] = attractor_list(report.async_attractors, space);
    j["unitary_attractors"] = attractor_list(report.unitary_attractors, space);
    j["global_graph"] = graph_facts(report.global, report.global_negative, report.global_positive);
    j["unitary_graph"] = graph_facts(report.unitary, report.unitary_negative, report.unitary_positive);

    Json locals = Json::array();
    for (Rank x = 0; x < space.size() && x < report.local.size(); ++x) {
        const LocalFacts& lf = report.local[x];
        Json entry = {{"state", to_string(space.unrank(x))}};
        entry["arcs"] = to_json(local_ig(report.map, x))["arcs"];
        entry["negative_circuit"] = lf.negative_circuit;
        entry["positive_circuit"] = lf.positive_circuit ? Json(*lf.positive_circuit) : Json(nullptr);
        entry["circuit"] = lf.any_circuit;
        locals.push_back(entry);
    }
    j["local_graphs"] = locals;

    Json verdicts = Json::array();
    for (const Verdict& v : report.verdicts) {
        Json e;
        e["claim"] = claim_name(v.claim);
        e["open_question"] = is_open_question(v.claim);
        e["hypothesis"] = v.hypothesis;
        e["conclusion"] = v.conclusion;
        e["holds"] = v.holds();
        e["attractor"] = v.attractor ? Json(*v.attractor + 1) : Json(nullptr);
        e["state"] = v.state ? Json(to_string(space.unrank(*v.state))) : Json(nullptr);
        e["circuit"] = v.circuit ? Json(to_string(*v.circuit)) : Json(nullptr);
        e["note"] = v.note;
        verdicts.push_back(e);
    }
    j["verdicts"] = verdicts;

    Json witnesses = Json::array();
    for (const WitnessRecord& w : report.witnesses) {
        Json e;
        e["flavor"] = to_string(w.flavor);
        e["attractor"] = w.attractor + 1;
        e["sound"] = w.sound;
        e["witness"] = w.trace ? to_json(*w.trace, space) : Json(nullptr);
        e["error"] = w.error;
        witnesses.push_back(e);
    }
    j["witnesses"] = witnesses;
    j["violation"] = report.has_violation();
    j["counterexample"] = report.has_counterexample();
    return j;
}

Json to_json(const SweepSummary& s)
{
    Json j;
    j["space"] = to_string(s.space);
    j["mode"] = to_string(s.mode);
    j["seed"] = s.seed;
    j["maps"] = s.maps;
    j["injected"] = s.injected;
    j["counts"] = {{"async_cyclic", s.async_cyclic_maps},
                   {"unitary_cyclic", s.unitary_cyclic_maps},
                   {"fixed_point_free", s.fixed_point_free_maps},
                   {"global_negative", s.global_negative_maps},
                   {"unitary_negative", s.unitary_negative_maps},
                   {"locally_negative_free", s.locally_negative_free_maps}};
    Json claims = Json::array();
    for (Claim c : kAllClaims)
        claims.push_back({{"claim", claim_name(c)},
                          {"open_question", is_open_question(c)},
                          {"hypothesis", s.tally(c).hypothesis},
                          {"failures", s.tally(c).failures}});
    j["claims"] = claims;
    j["witnesses_checked"] = s.witnesses_checked;
    j["witness_failures"] = s.witness_failures;
    j["violation_count"] = s.violation_count();
    j["counterexample_count"] = s.counterexample_count();
    j["violations"] = finding_list(s.violations, s.space);
    j["counterexamples"] = finding_list(s.counterexamples, s.space);
    return j;
}

Json table_to_json(const StateSpace& space, std::span<const Rank> table)
{
    Json rows = Json::array();
    for (Rank y : table) {
        Json row = Json::array();
        for (int i = 0; i < space.dimension(); ++i)
            row.push_back(space.coord(y, i));
        rows.push_back(row);
    }
    return rows;
}

NetworkMap map_from_json(const StateSpace& space, const Json& table)
{
    if (!table.is_array() || table.size() != space.size())
        throw DomainError("table must list one image per state");
    std::vector<Rank> ranks;
    ranks.reserve(space.size());
    for (const Json& row : table) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(space.dimension()))
            throw DomainError("table row has the wrong length");
        std::vector<int> coords;
        for (const Json& v : row) {
            if (!v.is_number_integer())
                throw DomainError("table entries must be integers");
            coords.push_back(v.get<int>());
        }
        ranks.push_back(space.rank(State(std::move(coords))));
    }
    return NetworkMap(space, std::move(ranks));
}

} // namespace negcirc
