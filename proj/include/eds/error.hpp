#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace eds {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A zero test or exponent comparison could not be decided under the active
// assumptions. `undecided` holds the rendered expressions the caller has to
// split on.
struct CaseSplitError : Error {
    std::vector<std::string> undecided;
    CaseSplitError(const std::string& what, std::vector<std::string> items)
        : Error(what), undecided(std::move(items)) {}
};

struct JetOrderError : Error {
    std::string coordinate;
    JetOrderError(const std::string& what, std::string coord)
        : Error(what), coordinate(std::move(coord)) {}
};

struct UnsupportedError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& what, int l, int c)
        : Error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + what),
          line(l), column(c) {}
};

}  // namespace eds
