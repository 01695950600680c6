#pragma once

#include "negcirc/error.hpp"
#include "negcirc/network_map.hpp"

#include <memory>
#include <span>
#include <string>
#include <string_view>

namespace negcirc {

/// Update-rule expression language.
///
///   expr    := 'if' expr 'then' expr 'else' expr | or
///   or      := and ('or' and)*
///   and     := cmp ('and' cmp)*
///   cmp     := add [('=='|'!='|'<'|'<='|'>'|'>=') add]
///   add     := unary (('+'|'-') unary)*
///   unary   := 'not' unary | '-' unary | primary
///   primary := INT | 'x'INDEX | '(' expr ')'
///
/// Variables x1..xn are 1-based. Comparisons take integers, 'and'/'or'/'not'
/// and guards take booleans; the whole rule and both branches of a conditional
/// are integer-valued. '-' directly followed by a literal folds into a
/// negative literal.
class RuleExpr
{
public:
    enum class Kind {
        Literal, Variable, Neg, Add, Sub,
        Eq, Ne, Lt, Le, Gt, Ge,
        Not, And, Or, If
    };

    struct Node
    {
        Kind kind = Kind::Literal;
        /// Literal value or 1-based variable index.
        long long value = 0;
        std::shared_ptr<const Node> a, b, c;
        int line = 1;
        int column = 1;
    };

    RuleExpr() = default;
    explicit RuleExpr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

    const Node& root() const { return *root_; }
    bool empty() const noexcept { return !root_; }

    /// Largest variable index referenced (0 for constant rules).
    int max_variable() const;

    /// Structural equality; source positions are ignored.
    friend bool operator==(const RuleExpr& a, const RuleExpr& b);

private:
    std::shared_ptr<const Node> root_;
};

/// Throws ParseError on syntax, unknown-identifier, and type errors.
RuleExpr parse_rule(std::string_view text);

/// As above, additionally rejecting variables beyond x<dimension>.
RuleExpr parse_rule(std::string_view text, int dimension);

/// Canonical text with minimal parentheses; parse_rule(to_string(e)) == e.
std::string to_string(const RuleExpr& e);

/// Value of an integer-valued rule at the state with 0-based coordinates `x`.
long long evaluate(const RuleExpr& e, std::span<const int> x);

/// A rule produced a value outside its component's interval.
class RangeViolation : public DomainError
{
public:
    RangeViolation(State state, int component, long long value, Interval interval);

    const State& state() const noexcept { return state_; }
    int component() const noexcept { return component_; }
    long long value() const noexcept { return value_; }

private:
    State state_;
    int component_;
    long long value_;
};

/// Tabulates F(x) = (rule_1(x), ..., rule_n(x)) over X.
/// Throws DomainError for a wrong rule count or an out-of-range variable, and
/// RangeViolation when a value leaves its interval.
NetworkMap compile_network(const StateSpace& space, std::span<const RuleExpr> rules);

} // namespace negcirc
