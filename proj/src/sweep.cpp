#include "negcirc/error.hpp"
#include "negcirc/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <random>
#include <thread>

namespace negcirc {

std::optional<std::uint64_t> map_count(const StateSpace& space)
{
    const std::uint64_t base = space.size();
    std::uint64_t total = 1;
    for (std::uint64_t k = 0; k < base; ++k) {
        if (total > std::numeric_limits<std::uint64_t>::max() / base)
            return std::nullopt;
        total *= base;
    }
    return total;
}

NetworkEnumerator::NetworkEnumerator(const StateSpace& space) : space_(space), total_(0)
{
    const auto total = map_count(space);
    if (!total || *total > kMaxEnumeratedMaps)
        throw DomainError("exhaustive enumeration of maps on " + to_string(space) + " exceeds " +
                          std::to_string(kMaxEnumeratedMaps) + " maps; use sampling");
    total_ = *total;
}

void NetworkEnumerator::table_at(std::uint64_t index, std::vector<Rank>& table) const
{
    if (index >= total_)
        throw DomainError("map index out of range");
    const Rank base = space_.size();
    table.resize(base);
    for (Rank x = base; x-- > 0;) {
        table[x] = static_cast<Rank>(index % base);
        index /= base;
    }
}

NetworkMap NetworkEnumerator::at(std::uint64_t index) const
{
    std::vector<Rank> table;
    table_at(index, table);
    return NetworkMap(space_, std::move(table));
}

bool NetworkEnumerator::next(std::vector<Rank>& table) const
{
    const Rank base = space_.size();
    for (Rank x = base; x-- > 0;) {
        if (++table[x] < base)
            return true;
        table[x] = 0;
    }
    return false;
}

NetworkSampler::NetworkSampler(const StateSpace& space, std::uint64_t count, std::uint64_t seed)
    : space_(space), count_(count), seed_(seed)
{
}

void NetworkSampler::table_at(std::uint64_t index, std::vector<Rank>& table) const
{
    if (index >= count_)
        throw DomainError("sample index out of range");
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 engine(seq);
    std::uniform_int_distribution<Rank> pick(0, space_.size() - 1);
    table.resize(space_.size());
    for (Rank& entry : table)
        entry = pick(engine);
}

NetworkMap NetworkSampler::at(std::uint64_t index) const
{
    std::vector<Rank> table;
    table_at(index, table);
    return NetworkMap(space_, std::move(table));
}

NetworkEnumerator enumerate_networks(const StateSpace& space) { return NetworkEnumerator(space); }

NetworkSampler sample_networks(const StateSpace& space, std::uint64_t count, std::uint64_t seed)
{
    return NetworkSampler(space, count, seed);
}

std::string_view to_string(SweepMode mode) { return mode == SweepMode::Exhaustive ? "exhaustive" : "sample"; }

std::optional<SweepMode> parse_sweep_mode(std::string_view text)
{
    if (text == "exhaustive")
        return SweepMode::Exhaustive;
    if (text == "sample")
        return SweepMode::Sample;
    return std::nullopt;
}

std::uint64_t SweepSummary::violation_count() const
{
    std::uint64_t total = 0;
    for (Claim c : kAllClaims)
        if (!is_open_question(c))
            total += tally(c).failures;
    return total;
}

std::uint64_t SweepSummary::counterexample_count() const
{
    std::uint64_t total = 0;
    for (Claim c : kAllClaims)
        if (is_open_question(c))
            total += tally(c).failures;
    return total;
}

namespace {

constexpr std::uint64_t kChunkSize = std::uint64_t{1} << 14;

struct WitnessOutcome
{
    std::uint64_t index;
    bool sound;
};

struct ChunkResult
{
    SweepSummary partial;
    std::vector<WitnessOutcome> witnesses;
    /// Tables of maps with at least one extracted witness, keyed by index.
    std::vector<std::pair<std::uint64_t, std::vector<Rank>>> witness_tables;
};

class SweepRunner
{
public:
    SweepRunner(const StateSpace& space, const SweepOptions& options) : space_(space), options_(options)
    {
        if (options.mode == SweepMode::Exhaustive)
            enumerator_.emplace(space);
        else
            sampler_.emplace(space, options.count, options.seed);
        generated_ = enumerator_ ? enumerator_->size() : sampler_->size();
        total_ = generated_ + options.injected.size();
        chunks_ = (total_ + kChunkSize - 1) / kChunkSize;
        for (const NetworkMap& m : options.injected)
            if (!(m.space() == space))
                throw DomainError("injected map lives on a different state space");
    }

    SweepSummary run()
    {
        summary_.space = space_;
        summary_.mode = options_.mode;
        summary_.seed = options_.seed;
        summary_.maps = total_;
        summary_.injected = options_.injected.size();
        pending_.resize(chunks_);
        const unsigned jobs = std::max(1U, std::min<unsigned>(options_.jobs, static_cast<unsigned>(std::max<std::uint64_t>(chunks_, 1))));
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < jobs; ++t)
                pool.emplace_back([this] { worker(); });
            for (auto& th : pool)
                th.join();
        }
        if (failure_)
            std::rethrow_exception(failure_);
        return std::move(summary_);
    }

private:
    void worker()
    {
        try {
            while (true) {
                const std::uint64_t c = next_chunk_.fetch_add(1);
                if (c >= chunks_)
                    return;
                ChunkResult result = process(c, !saturated_.load());
                std::lock_guard lock(mutex_);
                pending_[c] = std::move(result);
                while (merged_ < chunks_ && pending_[merged_]) {
                    merge(*pending_[merged_]);
                    pending_[merged_].reset();
                    ++merged_;
                }
            }
        } catch (...) {
            std::lock_guard lock(mutex_);
            if (!failure_)
                failure_ = std::current_exception();
            next_chunk_.store(chunks_);
        }
    }

    void table_for(std::uint64_t index, std::vector<Rank>& table, bool& fresh) const
    {
        if (index >= generated_) {
            auto t = options_.injected[index - generated_].table();
            table.assign(t.begin(), t.end());
            fresh = true;
        } else if (enumerator_) {
            if (fresh)
                enumerator_->table_at(index, table);
            else
                enumerator_->next(table);
            fresh = false;
        } else {
            sampler_->table_at(index, table);
        }
    }

    ChunkResult process(std::uint64_t chunk, bool witnesses)
    {
        ChunkResult out;
        SweepSummary& s = out.partial;
        std::size_t witness_budget = witnesses ? options_.witness_cap : 0;
        std::array<std::size_t, kClaimCount> recorded{};
        const std::uint64_t begin = chunk * kChunkSize;
        const std::uint64_t end = std::min(total_, begin + kChunkSize);
        std::vector<Rank> table;
        bool fresh = true;
        for (std::uint64_t index = begin; index < end; ++index) {
            table_for(index, table, fresh);
            const NetworkMap f(space_, table);
            CheckOptions opts;
            opts.evidence = false;
            opts.witness_limit = witness_budget;
            const AnalysisReport r = check_instance(f, opts);

            s.async_cyclic_maps += count_cyclic(r.async_attractors) > 0;
            s.unitary_cyclic_maps += count_cyclic(r.unitary_attractors) > 0;
            s.fixed_point_free_maps += r.fixed_points.empty();
            s.global_negative_maps += r.global_negative;
            s.unitary_negative_maps += r.unitary_negative;
            s.locally_negative_free_maps += std::none_of(r.local.begin(), r.local.end(), [](const LocalFacts& l) { return l.negative_circuit; });

            for (const Verdict& v : r.verdicts) {
                if (v.claim == Claim::WitnessSound)
                    continue;
                ClaimTally& t = s.tallies[static_cast<std::size_t>(v.claim)];
                t.hypothesis += v.hypothesis;
                if (v.holds())
                    continue;
                ++t.failures;
                auto& slot = recorded[static_cast<std::size_t>(v.claim)];
                if (slot < options_.record_cap) {
                    ++slot;
                    (is_open_question(v.claim) ? s.counterexamples : s.violations)
                        .push_back({index, index >= generated_, v.claim, table});
                }
            }
            if (!r.witnesses.empty()) {
                witness_budget -= r.witnesses.size();
                for (const WitnessRecord& w : r.witnesses)
                    out.witnesses.push_back({index, w.sound});
                if (std::any_of(r.witnesses.begin(), r.witnesses.end(), [](const WitnessRecord& w) { return !w.sound; }))
                    out.witness_tables.emplace_back(index, table);
            }
        }
        return out;
    }

    void merge(const ChunkResult& chunk)
    {
        const SweepSummary& p = chunk.partial;
        summary_.async_cyclic_maps += p.async_cyclic_maps;
        summary_.unitary_cyclic_maps += p.unitary_cyclic_maps;
        summary_.fixed_point_free_maps += p.fixed_point_free_maps;
        summary_.global_negative_maps += p.global_negative_maps;
        summary_.unitary_negative_maps += p.unitary_negative_maps;
        summary_.locally_negative_free_maps += p.locally_negative_free_maps;
        for (std::size_t k = 0; k < kClaimCount; ++k) {
            summary_.tallies[k].hypothesis += p.tallies[k].hypothesis;
            summary_.tallies[k].failures += p.tallies[k].failures;
        }
        for (const Finding& f : p.violations)
            if (recorded_[static_cast<std::size_t>(f.claim)]++ < options_.record_cap)
                summary_.violations.push_back(f);
        for (const Finding& f : p.counterexamples)
            if (recorded_[static_cast<std::size_t>(f.claim)]++ < options_.record_cap)
                summary_.counterexamples.push_back(f);

        ClaimTally& wt = summary_.tallies[static_cast<std::size_t>(Claim::WitnessSound)];
        for (const WitnessOutcome& w : chunk.witnesses) {
            if (summary_.witnesses_checked >= options_.witness_cap)
                break;
            ++summary_.witnesses_checked;
            const bool new_map = w.index != last_witness_map_;
            last_witness_map_ = w.index;
            if (new_map)
                ++wt.hypothesis;
            if (w.sound)
                continue;
            ++summary_.witness_failures;
            if (w.index != last_failed_map_) {
                last_failed_map_ = w.index;
                ++wt.failures;
                if (recorded_[static_cast<std::size_t>(Claim::WitnessSound)]++ < options_.record_cap) {
                    auto it = std::find_if(chunk.witness_tables.begin(), chunk.witness_tables.end(),
                                           [&](const auto& e) { return e.first == w.index; });
                    summary_.violations.push_back({w.index, w.index >= generated_, Claim::WitnessSound, it->second});
                }
            }
        }
        if (summary_.witnesses_checked >= options_.witness_cap)
            saturated_.store(true);
    }

    StateSpace space_;
    const SweepOptions& options_;
    std::optional<NetworkEnumerator> enumerator_;
    std::optional<NetworkSampler> sampler_;
    std::uint64_t generated_ = 0;
    std::uint64_t total_ = 0;
    std::uint64_t chunks_ = 0;

    std::atomic<std::uint64_t> next_chunk_{0};
    std::atomic<bool> saturated_{false};
    std::mutex mutex_;
    std::vector<std::optional<ChunkResult>> pending_;
    std::uint64_t merged_ = 0;
    SweepSummary summary_;
    std::array<std::size_t, kClaimCount> recorded_{};
    std::uint64_t last_witness_map_ = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t last_failed_map_ = std::numeric_limits<std::uint64_t>::max();
    std::exception_ptr failure_;
};

} // namespace

SweepSummary sweep(const StateSpace& space, const SweepOptions& options)
{
    return SweepRunner(space, options).run();
}

} // namespace negcirc
