#include "negcirc/state_space.hpp"

#include "negcirc/error.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace negcirc {

std::uint64_t state_cap()
{
    constexpr std::uint64_t ceiling = std::numeric_limits<Rank>::max();
    if (const char* env = std::getenv("NEGCIRC_STATE_CAP")) {
        std::uint64_t value = 0;
        const char* end = env + std::char_traits<char>::length(env);
        auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec == std::errc{} && ptr == end && value > 0)
            return value < ceiling ? value : ceiling;
    }
    return kDefaultStateCap;
}

std::string to_string(const State& x)
{
    std::string out = "(";
    for (int i = 0; i < x.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(x[i]);
    }
    out += ')';
    return out;
}

StateSpace::StateSpace(std::span<const Interval> intervals, std::uint64_t cap)
{
    if (intervals.empty())
        throw DomainError("state space needs at least one component");
    if (intervals.size() > static_cast<std::size_t>(kMaxComponents))
        throw DomainError("state space has more than " + std::to_string(kMaxComponents) + " components");
    cap = std::min<std::uint64_t>(cap, std::numeric_limits<Rank>::max());

    n_ = static_cast<int>(intervals.size());
    std::uint64_t total = 1;
    for (int i = n_ - 1; i >= 0; --i) {
        const Interval& iv = intervals[static_cast<std::size_t>(i)];
        if (static_cast<std::int64_t>(iv.hi) - iv.lo < 1)
            throw DomainError("component " + std::to_string(i + 1) + " interval " + std::to_string(iv.lo) + ".." +
                              std::to_string(iv.hi) + " has fewer than two values");
        const auto width = static_cast<std::uint64_t>(static_cast<std::int64_t>(iv.hi) - iv.lo + 1);
        intervals_[static_cast<std::size_t>(i)] = iv;
        strides_[static_cast<std::size_t>(i)] = static_cast<Rank>(total);
        if (total > cap / width)
            throw DomainError("state space cardinality exceeds the cap of " + std::to_string(cap) + " states");
        total *= width;
    }
    size_ = static_cast<Rank>(total);
}

StateSpace StateSpace::uniform(int n, int lo, int hi)
{
    if (n < 1 || n > kMaxComponents)
        throw DomainError("component count out of range: " + std::to_string(n));
    std::vector<Interval> ivs(static_cast<std::size_t>(n), Interval{lo, hi});
    return StateSpace(ivs);
}

bool StateSpace::is_boolean() const noexcept
{
    for (const Interval& iv : intervals())
        if (iv.size() != 2)
            return false;
    return true;
}

bool StateSpace::contains(const State& x) const noexcept
{
    if (x.size() != n_)
        return false;
    for (int i = 0; i < n_; ++i)
        if (!intervals_[static_cast<std::size_t>(i)].contains(x[i]))
            return false;
    return true;
}

Rank StateSpace::rank(const State& x) const
{
    if (!contains(x))
        throw DomainError("state " + to_string(x) + " is not in " + to_string(*this));
    Rank r = 0;
    for (int i = 0; i < n_; ++i)
        r += static_cast<Rank>(x[i] - intervals_[static_cast<std::size_t>(i)].lo) * strides_[static_cast<std::size_t>(i)];
    return r;
}

State StateSpace::unrank(Rank r) const
{
    if (r >= size_)
        throw DomainError("rank " + std::to_string(r) + " out of range for a space of " + std::to_string(size_) + " states");
    std::vector<int> coords(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
        coords[static_cast<std::size_t>(i)] = coord(r, i);
    return State(std::move(coords));
}

bool operator==(const StateSpace& a, const StateSpace& b) noexcept
{
    if (a.n_ != b.n_)
        return false;
    for (int i = 0; i < a.n_; ++i)
        if (a.intervals_[static_cast<std::size_t>(i)] != b.intervals_[static_cast<std::size_t>(i)])
            return false;
    return true;
}

std::string to_string(const StateSpace& space)
{
    std::ostringstream os;
    for (int i = 0; i < space.dimension(); ++i) {
        if (i)
            os << ',';
        os << space.interval(i).lo << ".." << space.interval(i).hi;
    }
    return os.str();
}

namespace {

int parse_int(std::string_view text, std::size_t offset)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("expected an integer, got '" + std::string(text) + "'", 1, static_cast<int>(offset) + 1);
    return value;
}

} // namespace

StateSpace parse_space_spec(std::string_view text)
{
    std::vector<Interval> intervals;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        std::size_t dots = item.find("..");
        if (dots == std::string_view::npos)
            throw ParseError("expected 'lo..hi' in space spec, got '" + std::string(item) + "'", 1, static_cast<int>(pos) + 1);
        std::size_t caret = item.find('^', dots);
        std::string_view hi_text = item.substr(dots + 2, caret == std::string_view::npos ? std::string_view::npos : caret - dots - 2);
        Interval iv{parse_int(item.substr(0, dots), pos), parse_int(hi_text, pos + dots + 2)};
        int repeat = 1;
        if (caret != std::string_view::npos)
            repeat = parse_int(item.substr(caret + 1), pos + caret + 1);
        if (repeat < 1 || repeat > kMaxComponents)
            throw ParseError("repeat count out of range", 1, static_cast<int>(pos + caret) + 2);
        for (int k = 0; k < repeat; ++k)
            intervals.push_back(iv);
        if (intervals.size() > static_cast<std::size_t>(kMaxComponents))
            throw ParseError("too many components", 1, static_cast<int>(pos) + 1);
        pos = comma + 1;
    }
    try {
        return StateSpace(intervals);
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

} // namespace negcirc
