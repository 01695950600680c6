#pragma once

#include <stdexcept>
#include <string>

namespace negcirc {

/// An argument lies outside the domain of an operation (state not in the
/// space, empty trap-domain candidate, mismatched vertex counts, ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// An internal algorithm was called with its documented hypotheses violated,
/// or an invariant that must hold by construction did not.
class ContractError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Malformed textual input. Line and column are 1-based.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          message_(message), line_(line), column_(column)
    {
    }

    const std::string& message() const noexcept { return message_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    std::string message_;
    int line_;
    int column_;
};

} // namespace negcirc
