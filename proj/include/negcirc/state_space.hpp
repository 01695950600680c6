#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace negcirc {

/// Ordinal of a state in its space (mixed radix, component 0 most significant).
using Rank = std::uint32_t;

/// Bit i set means component i (0-based) is a member.
using ComponentSet = std::uint32_t;

/// Hard ceiling on the number of components; lets component and vertex sets
/// live in a single machine word.
inline constexpr int kMaxComponents = 32;

/// Default ceiling on |X|; overridable through NEGCIRC_STATE_CAP.
inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 24;

/// Current |X| cap: NEGCIRC_STATE_CAP when set to a positive integer,
/// kDefaultStateCap otherwise. Never above the Rank range.
std::uint64_t state_cap();

struct Interval
{
    int lo = 0;
    int hi = 1;

    int size() const noexcept { return hi - lo + 1; }
    bool contains(int v) const noexcept { return lo <= v && v <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// A point of X. Coordinates are indexed by 0-based component number.
class State
{
public:
    State() = default;
    explicit State(std::vector<int> coords) : coords_(std::move(coords)) {}
    State(std::initializer_list<int> coords) : coords_(coords) {}

    int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
    int size() const noexcept { return static_cast<int>(coords_.size()); }

    std::span<const int> coords() const noexcept { return coords_; }
    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }

    friend bool operator==(const State&, const State&) = default;
    friend auto operator<=>(const State&, const State&) = default;

private:
    std::vector<int> coords_;
};

/// "(x1,...,xn)"
std::string to_string(const State& x);

/// The product X of n finite integer intervals, each of size at least two.
///
/// States are ranked lexicographically with component 0 most significant, so
/// rank(x) = sum_i (x_i - lo_i) * stride_i with stride_{n-1} = 1. The space is
/// a small trivially copyable value.
class StateSpace
{
public:
    /// Throws DomainError when n is 0 or above kMaxComponents, an interval has
    /// fewer than two values, or |X| exceeds `cap`.
    explicit StateSpace(std::span<const Interval> intervals, std::uint64_t cap = state_cap());
    StateSpace(std::initializer_list<Interval> intervals) : StateSpace(std::span<const Interval>(intervals.begin(), intervals.size())) {}

    /// {lo..hi}^n
    static StateSpace uniform(int n, int lo, int hi);
    /// {0,1}^n
    static StateSpace boolean(int n) { return uniform(n, 0, 1); }

    int dimension() const noexcept { return n_; }
    Rank size() const noexcept { return size_; }
    const Interval& interval(int i) const { return intervals_[static_cast<std::size_t>(i)]; }
    std::span<const Interval> intervals() const noexcept { return {intervals_.data(), static_cast<std::size_t>(n_)}; }
    Rank stride(int i) const { return strides_[static_cast<std::size_t>(i)]; }
    bool is_boolean() const noexcept;

    /// Coordinate i of the state with the given rank.
    int coord(Rank r, int i) const
    {
        const auto& iv = intervals_[static_cast<std::size_t>(i)];
        return iv.lo + static_cast<int>((r / strides_[static_cast<std::size_t>(i)]) % static_cast<Rank>(iv.size()));
    }

    bool contains(const State& x) const noexcept;
    bool contains(Rank r) const noexcept { return r < size_; }

    /// Throws DomainError when x is not a member of X.
    Rank rank(const State& x) const;
    /// Throws DomainError when r >= |X|.
    State unrank(Rank r) const;

    friend bool operator==(const StateSpace& a, const StateSpace& b) noexcept;

private:
    std::array<Interval, kMaxComponents> intervals_{};
    std::array<Rank, kMaxComponents> strides_{};
    int n_ = 0;
    Rank size_ = 0;
};

/// "lo..hi" per component joined with ','; inverse of parse_space_spec.
std::string to_string(const StateSpace& space);

/// Parses "0..1^3", "0..2,0..3", "-1..1,0..1^2": comma-separated intervals
/// "lo..hi", each optionally repeated with "^k". Throws ParseError.
StateSpace parse_space_spec(std::string_view text);

} // namespace negcirc
