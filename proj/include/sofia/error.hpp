#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sofia {

/// Malformed FIMI input. `line()` is 1-based; 0 when the error is not tied
/// to a particular line (e.g. an empty file).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The brute-force oracle refuses datasets whose subdataset space is too
/// large to enumerate.
class OracleGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sofia
