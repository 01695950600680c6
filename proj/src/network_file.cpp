#include "negcirc/network_file.hpp"

#include "negcirc/error.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace negcirc {

namespace {

struct Line
{
    int number;
    std::string_view text;
    /// Column of text[0] in the source line, 1-based.
    int column;
};

std::string_view trim(std::string_view s, int& column)
{
    std::size_t b = 0;
    while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r'))
        ++b;
    std::size_t e = s.size();
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r'))
        --e;
    column += static_cast<int>(b);
    return s.substr(b, e - b);
}

/// Whitespace-separated integers; returns the column of each.
std::vector<std::pair<int, int>> integers(const Line& line, std::string_view text, int column)
{
    std::vector<std::pair<int, int>> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t')
            ++j;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
        if (ec != std::errc{} || ptr != text.data() + j)
            throw ParseError("expected an integer, got '" + std::string(text.substr(i, j - i)) + "'", line.number,
                             column + static_cast<int>(i));
        out.emplace_back(value, column + static_cast<int>(i));
        i = j;
    }
    return out;
}

StateSpace parse_intervals(const Line& line, std::string_view body, int column)
{
    std::vector<Interval> intervals;
    std::size_t i = 0;
    while (i < body.size()) {
        if (body[i] == ' ' || body[i] == '\t') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < body.size() && body[j] != ' ' && body[j] != '\t')
            ++j;
        const std::string_view item = body.substr(i, j - i);
        const int at = column + static_cast<int>(i);
        const std::size_t dots = item.find("..");
        Interval iv;
        auto lo = std::from_chars(item.data(), item.data() + (dots == std::string_view::npos ? 0 : dots), iv.lo);
        auto hi = dots == std::string_view::npos ? lo
                                                 : std::from_chars(item.data() + dots + 2, item.data() + item.size(), iv.hi);
        if (dots == std::string_view::npos || lo.ec != std::errc{} || lo.ptr != item.data() + dots ||
            hi.ec != std::errc{} || hi.ptr != item.data() + item.size())
            throw ParseError("expected an interval 'lo..hi', got '" + std::string(item) + "'", line.number, at);
        intervals.push_back(iv);
        i = j;
    }
    if (intervals.empty())
        throw ParseError("no intervals given", line.number, column);
    try {
        return StateSpace(intervals);
    } catch (const DomainError& e) {
        throw ParseError(e.what(), line.number, column);
    }
}

} // namespace

NetworkMap parse_network_file(std::string_view text)
{
    std::vector<Line> lines;
    {
        int number = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t nl = text.find('\n', pos);
            if (nl == std::string_view::npos)
                nl = text.size();
            ++number;
            std::string_view raw = text.substr(pos, nl - pos);
            if (auto hash = raw.find('#'); hash != std::string_view::npos)
                raw = raw.substr(0, hash);
            int column = 1;
            std::string_view body = trim(raw, column);
            if (!body.empty())
                lines.push_back({number, body, column});
            pos = nl + 1;
        }
    }
    if (lines.empty())
        throw ParseError("empty network file", 1, 1);

    const Line& header = lines.front();
    constexpr std::string_view kIntervals = "intervals:";
    if (header.text.substr(0, kIntervals.size()) != kIntervals)
        throw ParseError("expected 'intervals:' header", header.number, header.column);
    int header_col = header.column + static_cast<int>(kIntervals.size());
    const std::string_view interval_text = trim(header.text.substr(kIntervals.size()), header_col);
    const StateSpace space = parse_intervals(header, interval_text, header_col);
    const int n = space.dimension();

    enum class Body { None, Table, Rules } body = Body::None;
    std::vector<Rank> table(space.size(), 0);
    std::vector<int> row_line(space.size(), 0);
    std::vector<std::optional<RuleExpr>> rules(static_cast<std::size_t>(n));
    int last_line = header.number;

    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        last_line = line.number;
        if (line.text == "table:") {
            if (body != Body::None)
                throw ParseError(body == Body::Table ? "duplicate 'table:' section" : "cannot mix a table with rules",
                                 line.number, line.column);
            body = Body::Table;
            continue;
        }
        if (line.text.substr(0, 5) == "rule ") {
            if (body == Body::Table)
                throw ParseError("cannot mix a table with rules", line.number, line.column);
            body = Body::Rules;
            const std::size_t colon = line.text.find(':');
            const std::string_view name = line.text.substr(5, colon == std::string_view::npos ? std::string_view::npos : colon - 5);
            int index = 0;
            auto [ptr, ec] = std::from_chars(name.data() + (name.empty() ? 0 : 1), name.data() + name.size(), index);
            if (colon == std::string_view::npos || name.size() < 2 || name[0] != 'f' || ec != std::errc{} ||
                ptr != name.data() + name.size() || index < 1 || index > n)
                throw ParseError("expected 'rule f<i>:' with 1 <= i <= " + std::to_string(n), line.number, line.column + 5);
            auto& slot = rules[static_cast<std::size_t>(index - 1)];
            if (slot)
                throw ParseError("duplicate rule for f" + std::to_string(index), line.number, line.column);
            const std::string_view expr = line.text.substr(colon + 1);
            const int expr_col = line.column + static_cast<int>(colon) + 1;
            try {
                slot = parse_rule(expr, n);
            } catch (const ParseError& e) {
                throw ParseError(e.message(), line.number + e.line() - 1, e.line() == 1 ? expr_col + e.column() - 1 : e.column());
            }
            continue;
        }
        if (body != Body::Table)
            throw ParseError("expected 'table:' or 'rule f<i>:'", line.number, line.column);

        const std::size_t arrow = line.text.find("->");
        if (arrow == std::string_view::npos)
            throw ParseError("expected 'x1 ... xn -> y1 ... yn'", line.number, line.column);
        const auto lhs = integers(line, line.text.substr(0, arrow), line.column);
        const auto rhs = integers(line, line.text.substr(arrow + 2), line.column + static_cast<int>(arrow) + 2);
        if (lhs.size() != static_cast<std::size_t>(n) || rhs.size() != static_cast<std::size_t>(n))
            throw ParseError("expected " + std::to_string(n) + " values on each side of '->'", line.number, line.column);
        std::vector<int> from(static_cast<std::size_t>(n));
        std::vector<int> to(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const auto& [fv, fc] = lhs[static_cast<std::size_t>(i)];
            const auto& [tv, tc] = rhs[static_cast<std::size_t>(i)];
            if (!space.interval(i).contains(fv))
                throw ParseError("x" + std::to_string(i + 1) + " = " + std::to_string(fv) + " is outside its interval", line.number, fc);
            if (!space.interval(i).contains(tv))
                throw ParseError("f" + std::to_string(i + 1) + " = " + std::to_string(tv) + " is outside its interval", line.number, tc);
            from[static_cast<std::size_t>(i)] = fv;
            to[static_cast<std::size_t>(i)] = tv;
        }
        const Rank x = space.rank(State(from));
        if (row_line[x])
            throw ParseError("duplicate row for state " + to_string(State(from)) + " (first given on line " +
                                 std::to_string(row_line[x]) + ")",
                             line.number, line.column);
        row_line[x] = line.number;
        table[x] = space.rank(State(to));
    }

    if (body == Body::None)
        throw ParseError("missing 'table:' section or rules", last_line, 1);
    if (body == Body::Table) {
        for (Rank x = 0; x < space.size(); ++x)
            if (!row_line[x])
                throw ParseError("missing row for state " + to_string(space.unrank(x)), last_line, 1);
        return NetworkMap(space, std::move(table));
    }
    std::vector<RuleExpr> compiled;
    for (int i = 0; i < n; ++i) {
        if (!rules[static_cast<std::size_t>(i)])
            throw ParseError("missing rule for f" + std::to_string(i + 1), last_line, 1);
        compiled.push_back(*rules[static_cast<std::size_t>(i)]);
    }
    try {
        return compile_network(space, compiled);
    } catch (const RangeViolation& e) {
        throw ParseError(e.what(), last_line, 1);
    }
}

NetworkMap load_network_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_network_file(buf.str());
}

std::string write_network_file(const NetworkMap& f)
{
    const StateSpace& space = f.space();
    std::ostringstream os;
    os << "intervals:";
    for (const Interval& iv : space.intervals())
        os << ' ' << iv.lo << ".." << iv.hi;
    os << "\ntable:\n";
    for (Rank x = 0; x < space.size(); ++x) {
        for (int i = 0; i < space.dimension(); ++i)
            os << (i ? " " : "") << space.coord(x, i);
        os << " ->";
        for (int i = 0; i < space.dimension(); ++i)
            os << ' ' << f.component(x, i);
        os << '\n';
    }
    return os.str();
}

} // namespace negcirc
