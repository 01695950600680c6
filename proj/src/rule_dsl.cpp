#include "negcirc/rule_dsl.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace negcirc {

namespace {

using Kind = RuleExpr::Kind;
using NodePtr = std::shared_ptr<const RuleExpr::Node>;

enum class Tok { Int, Ident, If, Then, Else, And, Or, Not, Plus, Minus, LParen, RParen, Eq, Ne, Lt, Le, Gt, Ge, End };

struct Token
{
    Tok kind;
    std::string_view text;
    long long value = 0;
    int line = 1;
    int column = 1;
};

std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t m = 0; m < k; ++m, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const char ch = src[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        Token t{Tok::End, {}, 0, line, col};
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            t.kind = Tok::Int;
            t.text = src.substr(i, j - i);
            auto [ptr, ec] = std::from_chars(src.data() + i, src.data() + j, t.value);
            if (ec != std::errc{})
                throw ParseError("integer literal too large", line, col);
            advance(j - i);
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            t.text = src.substr(i, j - i);
            if (t.text == "if")
                t.kind = Tok::If;
            else if (t.text == "then")
                t.kind = Tok::Then;
            else if (t.text == "else")
                t.kind = Tok::Else;
            else if (t.text == "and")
                t.kind = Tok::And;
            else if (t.text == "or")
                t.kind = Tok::Or;
            else if (t.text == "not")
                t.kind = Tok::Not;
            else
                t.kind = Tok::Ident;
            advance(j - i);
        } else {
            const char next = i + 1 < src.size() ? src[i + 1] : '\0';
            std::size_t len = 1;
            switch (ch) {
            case '+': t.kind = Tok::Plus; break;
            case '-': t.kind = Tok::Minus; break;
            case '(': t.kind = Tok::LParen; break;
            case ')': t.kind = Tok::RParen; break;
            case '=':
                if (next != '=')
                    throw ParseError("expected '==', got '='", line, col);
                t.kind = Tok::Eq;
                len = 2;
                break;
            case '!':
                if (next != '=')
                    throw ParseError("expected '!=', got '!'", line, col);
                t.kind = Tok::Ne;
                len = 2;
                break;
            case '<':
                t.kind = next == '=' ? Tok::Le : Tok::Lt;
                len = next == '=' ? 2 : 1;
                break;
            case '>':
                t.kind = next == '=' ? Tok::Ge : Tok::Gt;
                len = next == '=' ? 2 : 1;
                break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
            }
            t.text = src.substr(i, len);
            advance(len);
        }
        out.push_back(t);
    }
    out.push_back(Token{Tok::End, {}, 0, line, col});
    return out;
}

bool is_boolean(Kind k)
{
    switch (k) {
    case Kind::Eq: case Kind::Ne: case Kind::Lt: case Kind::Le: case Kind::Gt: case Kind::Ge:
    case Kind::Not: case Kind::And: case Kind::Or:
        return true;
    default:
        return false;
    }
}

class Parser
{
public:
    Parser(std::string_view src, int dimension) : tokens_(tokenize(src)), dimension_(dimension) {}

    NodePtr parse()
    {
        NodePtr root = expr();
        if (peek().kind != Tok::End)
            fail("unexpected '" + std::string(peek().text) + "'");
        require_int(root, "rule");
        return root;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const
    {
        const Token& t = peek();
        throw ParseError(t.kind == Tok::End ? msg + " at end of input" : msg, t.line, t.column);
    }

    void expect(Tok kind, const char* what)
    {
        if (peek().kind != kind)
            fail(std::string("expected ") + what);
        ++pos_;
    }

    static void require_int(const NodePtr& n, const char* ctx)
    {
        if (is_boolean(n->kind))
            throw ParseError(std::string("type error: ") + ctx + " must be an integer expression", n->line, n->column);
    }

    static void require_bool(const NodePtr& n, const char* ctx)
    {
        if (!is_boolean(n->kind))
            throw ParseError(std::string("type error: ") + ctx + " must be a boolean expression", n->line, n->column);
    }

    static NodePtr make(Kind k, const Token& at, NodePtr a = {}, NodePtr b = {}, NodePtr c = {}, long long v = 0)
    {
        auto n = std::make_shared<RuleExpr::Node>();
        n->kind = k;
        n->value = v;
        n->a = std::move(a);
        n->b = std::move(b);
        n->c = std::move(c);
        n->line = at.line;
        n->column = at.column;
        return n;
    }

    NodePtr expr()
    {
        if (peek().kind == Tok::If) {
            const Token& at = take();
            NodePtr guard = expr();
            require_bool(guard, "condition");
            expect(Tok::Then, "'then'");
            NodePtr then_branch = expr();
            require_int(then_branch, "'then' branch");
            expect(Tok::Else, "'else'");
            NodePtr else_branch = expr();
            require_int(else_branch, "'else' branch");
            return make(Kind::If, at, guard, then_branch, else_branch);
        }
        return disjunction();
    }

    NodePtr disjunction()
    {
        NodePtr lhs = conjunction();
        while (peek().kind == Tok::Or) {
            const Token& at = take();
            NodePtr rhs = conjunction();
            require_bool(lhs, "operand of 'or'");
            require_bool(rhs, "operand of 'or'");
            lhs = make(Kind::Or, at, lhs, rhs);
        }
        return lhs;
    }

    NodePtr conjunction()
    {
        NodePtr lhs = comparison();
        while (peek().kind == Tok::And) {
            const Token& at = take();
            NodePtr rhs = comparison();
            require_bool(lhs, "operand of 'and'");
            require_bool(rhs, "operand of 'and'");
            lhs = make(Kind::And, at, lhs, rhs);
        }
        return lhs;
    }

    NodePtr comparison()
    {
        NodePtr lhs = additive();
        Kind k;
        switch (peek().kind) {
        case Tok::Eq: k = Kind::Eq; break;
        case Tok::Ne: k = Kind::Ne; break;
        case Tok::Lt: k = Kind::Lt; break;
        case Tok::Le: k = Kind::Le; break;
        case Tok::Gt: k = Kind::Gt; break;
        case Tok::Ge: k = Kind::Ge; break;
        default: return lhs;
        }
        const Token& at = take();
        NodePtr rhs = additive();
        require_int(lhs, "operand of a comparison");
        require_int(rhs, "operand of a comparison");
        return make(k, at, lhs, rhs);
    }

    NodePtr additive()
    {
        NodePtr lhs = unary();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token& at = take();
            NodePtr rhs = unary();
            require_int(lhs, "arithmetic operand");
            require_int(rhs, "arithmetic operand");
            lhs = make(at.kind == Tok::Plus ? Kind::Add : Kind::Sub, at, lhs, rhs);
        }
        return lhs;
    }

    NodePtr unary()
    {
        if (peek().kind == Tok::Not) {
            const Token& at = take();
            NodePtr operand = unary();
            require_bool(operand, "operand of 'not'");
            return make(Kind::Not, at, operand);
        }
        if (peek().kind == Tok::Minus) {
            const Token& at = take();
            if (peek().kind == Tok::Int) {
                const Token& lit = take();
                return make(Kind::Literal, at, {}, {}, {}, -lit.value);
            }
            NodePtr operand = unary();
            require_int(operand, "operand of unary '-'");
            return make(Kind::Neg, at, operand);
        }
        return primary();
    }

    NodePtr primary()
    {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Int:
            take();
            return make(Kind::Literal, t, {}, {}, {}, t.value);
        case Tok::Ident: {
            long long index = 0;
            bool ok = t.text.size() >= 2 && t.text[0] == 'x' && t.text[1] != '0';
            if (ok) {
                auto [ptr, ec] = std::from_chars(t.text.data() + 1, t.text.data() + t.text.size(), index);
                ok = ec == std::errc{} && ptr == t.text.data() + t.text.size() && index >= 1;
            }
            if (!ok || (dimension_ > 0 && index > dimension_))
                fail("unknown identifier '" + std::string(t.text) + "'");
            take();
            return make(Kind::Variable, t, {}, {}, {}, index);
        }
        case Tok::LParen: {
            take();
            NodePtr inner = expr();
            expect(Tok::RParen, "')'");
            return inner;
        }
        default:
            fail(t.kind == Tok::End ? "expected an operand" : "expected an operand, got '" + std::string(t.text) + "'");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int dimension_;
};

bool equal_nodes(const NodePtr& a, const NodePtr& b)
{
    if (!a || !b)
        return !a && !b;
    return a->kind == b->kind && a->value == b->value && equal_nodes(a->a, b->a) && equal_nodes(a->b, b->b) &&
           equal_nodes(a->c, b->c);
}

int max_var(const NodePtr& n)
{
    if (!n)
        return 0;
    int m = n->kind == Kind::Variable ? static_cast<int>(n->value) : 0;
    return std::max({m, max_var(n->a), max_var(n->b), max_var(n->c)});
}

int precedence(Kind k)
{
    switch (k) {
    case Kind::If: return 0;
    case Kind::Or: return 1;
    case Kind::And: return 2;
    case Kind::Eq: case Kind::Ne: case Kind::Lt: case Kind::Le: case Kind::Gt: case Kind::Ge: return 3;
    case Kind::Add: case Kind::Sub: return 4;
    case Kind::Neg: case Kind::Not: return 5;
    default: return 6;
    }
}

const char* op_text(Kind k)
{
    switch (k) {
    case Kind::Add: return "+";
    case Kind::Sub: return "-";
    case Kind::Eq: return "==";
    case Kind::Ne: return "!=";
    case Kind::Lt: return "<";
    case Kind::Le: return "<=";
    case Kind::Gt: return ">";
    case Kind::Ge: return ">=";
    case Kind::And: return "and";
    case Kind::Or: return "or";
    default: return "?";
    }
}

void print(const RuleExpr::Node& n, int min_prec, std::string& out)
{
    const int p = precedence(n.kind);
    const bool parens = p < min_prec;
    if (parens)
        out += '(';
    switch (n.kind) {
    case Kind::Literal:
        out += std::to_string(n.value);
        break;
    case Kind::Variable:
        out += 'x';
        out += std::to_string(n.value);
        break;
    case Kind::Neg:
        out += '-';
        // "-1" would read back as a literal.
        print(*n.a, n.a->kind == Kind::Literal ? 7 : 5, out);
        break;
    case Kind::Not:
        out += "not ";
        print(*n.a, 5, out);
        break;
    case Kind::If:
        out += "if ";
        print(*n.a, 0, out);
        out += " then ";
        print(*n.b, 0, out);
        out += " else ";
        print(*n.c, 0, out);
        break;
    default: {
        const bool non_assoc = p == 3;
        print(*n.a, non_assoc ? p + 1 : p, out);
        out += ' ';
        out += op_text(n.kind);
        out += ' ';
        print(*n.b, p + 1, out);
        break;
    }
    }
    if (parens)
        out += ')';
}

long long eval(const RuleExpr::Node& n, std::span<const int> x)
{
    switch (n.kind) {
    case Kind::Literal: return n.value;
    case Kind::Variable: return x[static_cast<std::size_t>(n.value - 1)];
    case Kind::Neg: return -eval(*n.a, x);
    case Kind::Add: return eval(*n.a, x) + eval(*n.b, x);
    case Kind::Sub: return eval(*n.a, x) - eval(*n.b, x);
    case Kind::Eq: return eval(*n.a, x) == eval(*n.b, x);
    case Kind::Ne: return eval(*n.a, x) != eval(*n.b, x);
    case Kind::Lt: return eval(*n.a, x) < eval(*n.b, x);
    case Kind::Le: return eval(*n.a, x) <= eval(*n.b, x);
    case Kind::Gt: return eval(*n.a, x) > eval(*n.b, x);
    case Kind::Ge: return eval(*n.a, x) >= eval(*n.b, x);
    case Kind::Not: return !eval(*n.a, x);
    case Kind::And: return eval(*n.a, x) && eval(*n.b, x);
    case Kind::Or: return eval(*n.a, x) || eval(*n.b, x);
    case Kind::If: return eval(*n.a, x) ? eval(*n.b, x) : eval(*n.c, x);
    }
    return 0;
}

} // namespace

int RuleExpr::max_variable() const { return max_var(root_); }

bool operator==(const RuleExpr& a, const RuleExpr& b) { return equal_nodes(a.root_, b.root_); }

RuleExpr parse_rule(std::string_view text) { return RuleExpr(Parser(text, 0).parse()); }

RuleExpr parse_rule(std::string_view text, int dimension)
{
    if (dimension < 1)
        throw DomainError("rule dimension must be positive");
    return RuleExpr(Parser(text, dimension).parse());
}

std::string to_string(const RuleExpr& e)
{
    std::string out;
    if (!e.empty())
        print(e.root(), 0, out);
    return out;
}

long long evaluate(const RuleExpr& e, std::span<const int> x)
{
    if (e.empty())
        throw DomainError("empty rule");
    if (static_cast<std::size_t>(e.max_variable()) > x.size())
        throw DomainError("rule references x" + std::to_string(e.max_variable()) + " but the state has " +
                          std::to_string(x.size()) + " components");
    return eval(e.root(), x);
}

RangeViolation::RangeViolation(State state, int component, long long value, Interval interval)
    : DomainError("f" + std::to_string(component + 1) + to_string(state) + " = " + std::to_string(value) +
                  " is outside " + std::to_string(interval.lo) + ".." + std::to_string(interval.hi)),
      state_(std::move(state)), component_(component), value_(value)
{
}

NetworkMap compile_network(const StateSpace& space, std::span<const RuleExpr> rules)
{
    const int n = space.dimension();
    if (rules.size() != static_cast<std::size_t>(n))
        throw DomainError("expected " + std::to_string(n) + " rules, got " + std::to_string(rules.size()));
    for (int i = 0; i < n; ++i) {
        const RuleExpr& r = rules[static_cast<std::size_t>(i)];
        if (r.empty())
            throw DomainError("rule f" + std::to_string(i + 1) + " is empty");
        if (r.max_variable() > n)
            throw DomainError("rule f" + std::to_string(i + 1) + " references x" + std::to_string(r.max_variable()) +
                              " but the space has " + std::to_string(n) + " components");
    }
    std::vector<Rank> table(space.size());
    std::vector<int> coords(static_cast<std::size_t>(n));
    for (Rank x = 0; x < space.size(); ++x) {
        for (int i = 0; i < n; ++i)
            coords[static_cast<std::size_t>(i)] = space.coord(x, i);
        Rank image = 0;
        for (int i = 0; i < n; ++i) {
            const long long v = eval(rules[static_cast<std::size_t>(i)].root(), coords);
            const Interval& iv = space.interval(i);
            if (v < iv.lo || v > iv.hi)
                throw RangeViolation(State(coords), i, v, iv);
            image += static_cast<Rank>(v - iv.lo) * space.stride(i);
        }
        table[x] = image;
    }
    return NetworkMap(space, std::move(table));
}

} // namespace negcirc
