#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twitdyn {

/// Input text that does not match an accepted file format.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Well-formed input whose values violate a documented range or invariant.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace twitdyn
