#include "negcirc/corpus.hpp"
#include "negcirc/dot.hpp"
#include "negcirc/error.hpp"
#include "negcirc/network_file.hpp"
#include "negcirc/report_json.hpp"
#include "negcirc/verifier.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace negcirc;

namespace {

enum Exit { kOk = 0, kUsage = 1, kViolation = 2, kInternal = 3 };

void emit(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write '" + path + "'", 0, 0);
    out << text;
}

State parse_state(std::string_view text, const StateSpace& space)
{
    if (!text.empty() && text.front() == '(')
        text.remove_prefix(1);
    if (!text.empty() && text.back() == ')')
        text.remove_suffix(1);
    std::vector<int> coords;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, v);
        if (ec != std::errc{} || ptr != text.data() + comma)
            throw ParseError("malformed state '" + std::string(text) + "'", 1, static_cast<int>(pos) + 1);
        coords.push_back(v);
        pos = comma + 1;
    }
    State x(std::move(coords));
    if (!space.contains(x))
        throw ParseError("state " + to_string(x) + " is not in " + to_string(space), 1, 1);
    return x;
}

std::string render_attractor(const StateSpace& space, const Attractor& a)
{
    std::string out = "{";
    for (std::size_t k = 0; k < a.states.size(); ++k)
        out += (k ? "," : "") + to_string(space.unrank(a.states[k]));
    return out + "}";
}

void print_report(const AnalysisReport& r, std::ostream& os)
{
    const StateSpace& space = r.map.space();
    os << "space " << to_string(space) << " (" << space.size() << " states)\n";
    os << "fixed points:";
    for (Rank x : r.fixed_points)
        os << ' ' << to_string(space.unrank(x));
    os << (r.fixed_points.empty() ? " none\n" : "\n");
    auto attractor_block = [&](const char* title, const AttractorSet& set) {
        os << title << ":\n";
        for (std::size_t k = 0; k < set.size(); ++k)
            os << "  " << k + 1 << (set[k].cyclic() ? " cyclic " : " stable ") << render_attractor(space, set[k]) << '\n';
    };
    attractor_block("asynchronous attractors", r.async_attractors);
    attractor_block("unitary attractors", r.unitary_attractors);
    os << "G(F) " << to_string(r.global) << " negative circuit: " << (r.global_negative ? "yes" : "no") << '\n';
    os << "G[F] " << to_string(r.unitary) << " negative circuit: " << (r.unitary_negative ? "yes" : "no") << '\n';
    std::size_t locally_negative = 0;
    for (const LocalFacts& lf : r.local)
        locally_negative += lf.negative_circuit;
    os << "local graphs with a negative circuit: " << locally_negative << " of " << r.local.size() << '\n';
    os << "claims:\n";
    for (const Verdict& v : r.verdicts) {
        os << "  " << (v.holds() ? (v.hypothesis ? "holds     " : "vacuous   ")
                                 : (is_open_question(v.claim) ? "COUNTER   " : "VIOLATED  "))
           << claim_name(v.claim);
        if (v.attractor)
            os << " attractor " << *v.attractor + 1;
        if (v.state)
            os << " state " << to_string(space.unrank(*v.state));
        if (v.circuit)
            os << " circuit " << to_string(*v.circuit);
        if (!v.note.empty())
            os << " (" << v.note << ")";
        os << '\n';
    }
    for (const WitnessRecord& w : r.witnesses) {
        os << "witness " << to_string(w.flavor) << " attractor " << w.attractor + 1 << ": ";
        if (w.trace)
            os << to_string(w.trace->circuit) << (w.sound ? " sound" : " UNSOUND") << '\n';
        else
            os << "failed: " << w.error << '\n';
    }
}

int run_analyze(const std::string& file, bool json)
{
    const AnalysisReport r = check_instance(load_network_file(file));
    if (json)
        std::cout << to_json(r).dump(2) << '\n';
    else
        print_report(r, std::cout);
    return r.has_violation() ? kViolation : kOk;
}

int run_stg(const std::string& file, const std::string& flavor, const std::string& out)
{
    const auto fl = parse_flavor(flavor);
    if (!fl)
        throw CLI::ValidationError("--flavor", "expected async, unitary or sync");
    emit(export_dot(build_stg(load_network_file(file), *fl)), out);
    return kOk;
}

int run_ig(const std::string& file, const std::string& kind, const std::string& out)
{
    const NetworkMap f = load_network_file(file);
    SignedDigraph g(f.space().dimension());
    if (kind == "global")
        g = global_ig(f);
    else if (kind == "unitary")
        g = unitary_ig(f);
    else if (kind.starts_with("local="))
        g = local_ig(f, parse_state(std::string_view(kind).substr(6), f.space()));
    else if (kind.starts_with("dynamic="))
        g = dynamic_local_ig(f, parse_state(std::string_view(kind).substr(8), f.space()));
    else
        throw CLI::ValidationError("--kind", "expected global, unitary, local=<state> or dynamic=<state>");
    emit(export_dot(g), out);
    return kOk;
}

int run_witness(const std::string& file, std::size_t index, const std::string& flavor, bool json)
{
    const auto fl = parse_flavor(flavor);
    if (!fl || *fl == Flavor::Synchronous)
        throw CLI::ValidationError("--flavor", "expected async or unitary");
    const NetworkMap f = load_network_file(file);
    const NetworkMap h = *fl == Flavor::Unitary ? unitary_map(f) : f;
    const AttractorSet set = attractors(build_stg(h, Flavor::Asynchronous));
    std::vector<std::size_t> chosen;
    if (index > 0) {
        if (index > set.size())
            throw DomainError("attractor " + std::to_string(index) + " does not exist (" + std::to_string(set.size()) +
                              " attractors)");
        chosen.push_back(index - 1);
    } else {
        for (std::size_t k = 0; k < set.size(); ++k)
            if (set[k].cyclic())
                chosen.push_back(k);
    }
    Json all = Json::array();
    int status = kOk;
    for (std::size_t k : chosen) {
        const WitnessTrace w = extract_negative_circuit(h, set[k]);
        const bool sound = witness_is_sound(h, set[k].states, w);
        if (!sound)
            status = kInternal;
        if (json) {
            Json e = {{"attractor", k + 1}, {"sound", sound}};
            e["witness"] = to_json(w, f.space());
            all.push_back(e);
            continue;
        }
        std::cout << "attractor " << k + 1 << ' ' << render_attractor(f.space(), set[k]) << '\n';
        std::cout << "  circuit " << to_string(w.circuit) << (sound ? " (sound)" : " (UNSOUND)") << '\n';
        for (std::size_t q = 0; q < w.circuit.arcs.size(); ++q)
            std::cout << "  " << to_string(w.circuit.arcs[q]) << " at " << to_string(f.space().unrank(w.support[q])) << '\n';
        if (!w.reduction_chain.empty()) {
            std::cout << "  frozen:";
            for (int c : w.reduction_chain)
                std::cout << ' ' << c + 1;
            std::cout << '\n';
        }
    }
    if (json)
        std::cout << all.dump(2) << '\n';
    else if (chosen.empty())
        std::cout << "no cyclic attractor\n";
    return status;
}

int run_sweep(const std::string& spec, const std::string& mode, const SweepOptions& base,
              const std::vector<std::string>& inject, bool json, const std::string& out)
{
    const StateSpace space = parse_space_spec(spec);
    SweepOptions options = base;
    const auto m = parse_sweep_mode(mode);
    if (!m)
        throw CLI::ValidationError("--mode", "expected exhaustive or sample");
    options.mode = *m;
    for (const std::string& file : inject) {
        NetworkMap f = load_network_file(file);
        if (!(f.space() == space))
            throw DomainError("injected network '" + file + "' lives on " + to_string(f.space()));
        options.injected.push_back(std::move(f));
    }
    const auto start = std::chrono::steady_clock::now();
    const SweepSummary s = sweep(space, options);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (json) {
        emit(to_json(s).dump(2) + "\n", out);
    } else {
        std::ostringstream os;
        os << to_string(s.mode) << " sweep of " << to_string(space) << ": " << s.maps << " maps";
        if (s.injected)
            os << " (" << s.injected << " injected)";
        os << " in " << seconds << " s\n";
        os << "maps with cyclic asynchronous attractor: " << s.async_cyclic_maps << '\n';
        os << "maps with cyclic unitary attractor:      " << s.unitary_cyclic_maps << '\n';
        os << "fixed-point-free maps:                   " << s.fixed_point_free_maps << '\n';
        os << "maps with negative circuit in G(F):      " << s.global_negative_maps << '\n';
        os << "maps with negative circuit in G[F]:      " << s.unitary_negative_maps << '\n';
        os << "maps with every G_F(x) negative-free:    " << s.locally_negative_free_maps << '\n';
        for (Claim c : kAllClaims)
            os << "  " << claim_name(c) << ": hypothesis " << s.tally(c).hypothesis << ", failures "
               << s.tally(c).failures << (is_open_question(c) ? " (open question)" : "") << '\n';
        os << "witnesses checked " << s.witnesses_checked << ", failed " << s.witness_failures << '\n';
        os << "violations " << s.violation_count() << ", counterexamples " << s.counterexample_count() << '\n';
        emit(os.str(), out);
    }
    return s.violation_count() ? kViolation : kOk;
}

int run_examples(const std::vector<int>& ids)
{
    std::vector<const CorpusNetwork*> chosen;
    if (ids.empty())
        for (const CorpusNetwork& e : builtin_networks())
            chosen.push_back(&e);
    else
        for (int id : ids)
            chosen.push_back(&builtin_network(id));
    bool all = true;
    for (const CorpusNetwork* e : chosen) {
        std::cout << e->id << ' ' << e->name << ": " << e->summary << '\n';
        for (const Expectation& x : check_expectations(*e)) {
            all = all && x.passed();
            std::cout << "  " << (x.passed() ? "ok   " : "FAIL ") << x.what;
            if (!x.passed())
                std::cout << "\n       expected: " << x.expected << "\n       actual:   " << x.actual;
            std::cout << '\n';
        }
    }
    return all ? kOk : kInternal;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Asynchronous automata network analyser"};
    app.require_subcommand(1);

    std::string file;
    std::string out;
    bool json = false;

    auto* analyze = app.add_subcommand("analyze", "Full analysis of a network file");
    analyze->add_option("file", file, "network file")->required();
    analyze->add_flag("--json", json, "structured output");

    std::string flavor = "async";
    auto* stg = app.add_subcommand("stg", "State transition graph as DOT");
    stg->add_option("file", file, "network file")->required();
    stg->add_option("--flavor", flavor, "async, unitary or sync");
    stg->add_option("--dot", out, "output path (default stdout)");

    std::string kind = "global";
    auto* ig = app.add_subcommand("ig", "Interaction graph as DOT");
    ig->add_option("file", file, "network file")->required();
    ig->add_option("--kind", kind, "global, unitary, local=<state> or dynamic=<state>");
    ig->add_option("--dot", out, "output path (default stdout)");

    std::size_t index = 0;
    std::string witness_flavor = "async";
    auto* witness = app.add_subcommand("witness", "Negative circuits extracted from cyclic attractors");
    witness->add_option("file", file, "network file")->required();
    witness->add_option("--attractor", index, "1-based attractor index (default: every cyclic one)");
    witness->add_option("--flavor", witness_flavor, "async or unitary");
    witness->add_flag("--json", json, "structured output");

    std::string spec;
    std::string mode = "exhaustive";
    SweepOptions options;
    std::vector<std::string> inject;
    auto* sw = app.add_subcommand("sweep", "Check every claim over a family of networks");
    sw->add_option("--space", spec, "e.g. 0..1^3 or 0..2,0..3")->required();
    sw->add_option("--mode", mode, "exhaustive or sample");
    sw->add_option("--count", options.count, "sample size");
    sw->add_option("--seed", options.seed, "sampler seed");
    sw->add_option("--jobs", options.jobs, "worker threads")->check(CLI::PositiveNumber);
    sw->add_option("--witness-cap", options.witness_cap, "cyclic attractors whose witness is verified");
    sw->add_option("--record-cap", options.record_cap, "tables recorded per claim");
    sw->add_option("--inject", inject, "network files appended to the stream");
    sw->add_flag("--json", json, "structured output");
    sw->add_option("--out", out, "output path (default stdout)");

    std::vector<int> ids;
    auto* examples = app.add_subcommand("examples", "Check the built-in networks against pinned expectations");
    examples->add_option("ids", ids, "network numbers 1..6")->check(CLI::Range(1, 6));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze)
            return run_analyze(file, json);
        if (*stg)
            return run_stg(file, flavor, out);
        if (*ig)
            return run_ig(file, kind, out);
        if (*witness)
            return run_witness(file, index, witness_flavor, json);
        if (*sw)
            return run_sweep(spec, mode, options, inject, json, out);
        if (*examples)
            return run_examples(ids);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ContractError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
