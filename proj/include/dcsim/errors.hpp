#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcsim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration or workload parameters.
struct ConfigError : Error {
    using Error::Error;
};

/// Malformed trace input; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line)
    {
    }

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A scheduler or platform precondition was violated; indicates a logic bug.
struct SchedulerLogicError : Error {
    using Error::Error;
};

/// Internal inconsistency detected while simulating (fatal).
struct SimulationError : Error {
    using Error::Error;
};

} // namespace dcsim
