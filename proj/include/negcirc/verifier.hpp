#pragma once

#include "negcirc/attractor.hpp"
#include "negcirc/circuits.hpp"
#include "negcirc/witness.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace negcirc {

/// Implications checked on every analysed network. Each is "hypothesis implies
/// conclusion"; it fails only when the hypothesis holds and the conclusion does
/// not. The last three are open questions: a failure there is a counterexample
/// candidate, not a bug.
enum class Claim {
    /// Asynchronous cyclic attractor => G(F) has a negative circuit.
    AsyncCycleNegativeCircuit,
    /// Unitary cyclic attractor => G[F] has a negative circuit.
    UnitaryCycleNegativeCircuit,
    /// G(F) free of negative circuits => F has a fixed point.
    NegativeFreeFixedPoint,
    /// G[F] free of negative circuits => F has a fixed point.
    UnitaryNegativeFreeFixedPoint,
    /// Every dynamic local graph of F is a subgraph of G(F).
    DynamicLocalInGlobal,
    /// Every dynamic local graph of the unitary map is a subgraph of G[F].
    UnitaryDynamicLocalInUnitary,
    /// The union of the local graphs G_F(x) is G(F).
    LocalUnionIsGlobal,
    /// G(F) without circuits => unique fixed point reached from every state
    /// in the asynchronous graph.
    AcyclicGlobalUniqueFixedPoint,
    /// At least two unitary attractors => some G_F(x) has a positive circuit.
    MultistableLocalPositiveCircuit,
    /// Every G_F(x) without circuits => unique fixed point reached from every
    /// state in the unitary graph.
    LocallyAcyclicUniqueFixedPoint,
    /// Extracted witnesses are negative circuits supported inside their
    /// attractor.
    WitnessSound,
    /// Open: unitary cyclic attractor => some G_F(x) has a negative circuit.
    UnitaryCycleLocalNegativeCircuit,
    /// Open: asynchronous cyclic attractor => some G_F(x) has a negative circuit.
    AsyncCycleLocalNegativeCircuit,
    /// Open: no G_F(x) has a negative circuit => F has a fixed point.
    LocallyNegativeFreeFixedPoint,
};

inline constexpr std::size_t kClaimCount = 14;
inline constexpr std::array<Claim, kClaimCount> kAllClaims = {
    Claim::AsyncCycleNegativeCircuit,       Claim::UnitaryCycleNegativeCircuit,
    Claim::NegativeFreeFixedPoint,          Claim::UnitaryNegativeFreeFixedPoint,
    Claim::DynamicLocalInGlobal,            Claim::UnitaryDynamicLocalInUnitary,
    Claim::LocalUnionIsGlobal,              Claim::AcyclicGlobalUniqueFixedPoint,
    Claim::MultistableLocalPositiveCircuit, Claim::LocallyAcyclicUniqueFixedPoint,
    Claim::WitnessSound,                    Claim::UnitaryCycleLocalNegativeCircuit,
    Claim::AsyncCycleLocalNegativeCircuit,  Claim::LocallyNegativeFreeFixedPoint,
};

/// Stable snake_case identifier used in reports.
std::string_view claim_name(Claim c);
std::optional<Claim> parse_claim(std::string_view name);
bool is_open_question(Claim c);

struct Verdict
{
    Claim claim{};
    bool hypothesis = false;
    bool conclusion = true;

    /// Index into the attractor list the claim is about.
    std::optional<std::size_t> attractor;
    /// A state that witnesses the hypothesis or the failure.
    std::optional<Rank> state;
    /// A circuit that witnesses the conclusion.
    std::optional<SignedCircuit> circuit;
    std::string note;

    bool holds() const noexcept { return !hypothesis || conclusion; }
};

/// Circuit facts of one local interaction graph G_F(x).
struct LocalFacts
{
    bool negative_circuit = false;
    bool any_circuit = false;
    /// Computed only when needed or when full evidence is requested.
    std::optional<bool> positive_circuit;
};

struct WitnessRecord
{
    Flavor flavor = Flavor::Asynchronous;
    std::size_t attractor = 0;
    std::optional<WitnessTrace> trace;
    bool sound = false;
    std::string error;
};

struct CheckOptions
{
    /// Fill evidence (circuits, positive-circuit facts for every state).
    /// Without it, the local positive-circuit search runs only when there are
    /// at least two unitary attractors; otherwise that conclusion stays false.
    bool evidence = true;
    /// Extract and verify witnesses for at most this many cyclic attractors.
    std::size_t witness_limit = std::numeric_limits<std::size_t>::max();
};

struct AnalysisReport
{
    NetworkMap map;
    std::vector<Rank> fixed_points;
    AttractorSet async_attractors;
    AttractorSet unitary_attractors;
    SignedDigraph global;
    SignedDigraph unitary;
    bool global_negative = false;
    bool unitary_negative = false;
    std::optional<bool> global_positive;
    std::optional<bool> unitary_positive;
    std::vector<LocalFacts> local;
    std::vector<Verdict> verdicts;
    std::vector<WitnessRecord> witnesses;

    const Verdict& verdict(Claim c) const;
    /// A non-question claim failed.
    bool has_violation() const;
    /// An open-question claim failed.
    bool has_counterexample() const;
};

AnalysisReport check_instance(const NetworkMap& f, const CheckOptions& options = {});

// Network families -----------------------------------------------------------

/// |X|^|X|, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> map_count(const StateSpace& space);

/// Ceiling on exhaustive enumeration.
inline constexpr std::uint64_t kMaxEnumeratedMaps = std::uint64_t{1} << 31;

/// Every map X -> X exactly once. Map k has table entry x equal to digit x of
/// k written in base |X| with entry 0 most significant.
class NetworkEnumerator
{
public:
    /// Throws DomainError when |X|^|X| exceeds kMaxEnumeratedMaps.
    explicit NetworkEnumerator(const StateSpace& space);

    std::uint64_t size() const noexcept { return total_; }
    NetworkMap at(std::uint64_t index) const;
    /// Table of map `index`, written into `table` (resized to |X|).
    void table_at(std::uint64_t index, std::vector<Rank>& table) const;
    /// Advances `table` to the next map in order; false after the last.
    bool next(std::vector<Rank>& table) const;

private:
    StateSpace space_;
    std::uint64_t total_;
};

/// Seeded i.i.d. uniform tables. Map k depends only on (seed, k).
class NetworkSampler
{
public:
    NetworkSampler(const StateSpace& space, std::uint64_t count, std::uint64_t seed);

    std::uint64_t size() const noexcept { return count_; }
    NetworkMap at(std::uint64_t index) const;
    void table_at(std::uint64_t index, std::vector<Rank>& table) const;

private:
    StateSpace space_;
    std::uint64_t count_;
    std::uint64_t seed_;
};

NetworkEnumerator enumerate_networks(const StateSpace& space);
NetworkSampler sample_networks(const StateSpace& space, std::uint64_t count, std::uint64_t seed);

// Sweeps -------------------------------------------------------------------

enum class SweepMode { Exhaustive, Sample };

std::string_view to_string(SweepMode mode);
std::optional<SweepMode> parse_sweep_mode(std::string_view text);

struct SweepOptions
{
    SweepMode mode = SweepMode::Exhaustive;
    /// Sample size; exhaustive sweeps ignore it.
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    /// Witnesses are verified for the first this-many cyclic attractors in
    /// canonical order.
    std::size_t witness_cap = 10'000;
    /// Network tables recorded per claim; every failure is still counted.
    std::size_t record_cap = 1'000;
    /// Appended after the generated stream, in order.
    std::vector<NetworkMap> injected;
};

struct ClaimTally
{
    std::uint64_t hypothesis = 0;
    std::uint64_t failures = 0;
};

struct Finding
{
    /// Position in the stream; injected maps follow the generated ones.
    std::uint64_t index = 0;
    bool injected = false;
    Claim claim{};
    std::vector<Rank> table;
};

struct SweepSummary
{
    StateSpace space = StateSpace::boolean(1);
    SweepMode mode = SweepMode::Exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t maps = 0;
    std::uint64_t injected = 0;

    std::uint64_t async_cyclic_maps = 0;
    std::uint64_t unitary_cyclic_maps = 0;
    std::uint64_t fixed_point_free_maps = 0;
    std::uint64_t global_negative_maps = 0;
    std::uint64_t unitary_negative_maps = 0;
    std::uint64_t locally_negative_free_maps = 0;

    std::array<ClaimTally, kClaimCount> tallies{};
    std::uint64_t witnesses_checked = 0;
    std::uint64_t witness_failures = 0;

    std::vector<Finding> violations;
    std::vector<Finding> counterexamples;

    const ClaimTally& tally(Claim c) const { return tallies[static_cast<std::size_t>(c)]; }
    std::uint64_t violation_count() const;
    std::uint64_t counterexample_count() const;
};

/// Runs check_instance over a family of maps. Output is identical for every
/// value of `jobs`.
SweepSummary sweep(const StateSpace& space, const SweepOptions& options);

} // namespace negcirc
