#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace graphoid {

// Base class for everything this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An input value breaks a documented invariant (bad triplet, ill-posed
// query, invalid protocol). `details` carries one line per violation when
// several are reported at once.
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
  ValidationError(const std::string& msg, std::vector<std::string> details_)
      : Error(msg), details(std::move(details_)) {}
  std::vector<std::string> details;
};

// Unknown variable name or out-of-range index.
struct LookupError : Error {
  using Error::Error;
};

// A directed graph turned out to be cyclic; `cycle` lists the node names
// of one cycle in traversal order.
struct CycleError : Error {
  CycleError(const std::string& msg, std::vector<std::string> cycle_)
      : Error(msg), cycle(std::move(cycle_)) {}
  std::vector<std::string> cycle;
};

// A guarded operation was asked to run past its configured size limit.
struct LimitError : Error {
  using Error::Error;
};

// Text input could not be parsed. `line` is 1-based; `directive` is the
// keyword of the offending line when one was recognized.
struct ParseError : Error {
  ParseError(const std::string& file, int line_, const std::string& directive_,
             const std::string& detail)
      : Error(file + ":" + std::to_string(line_) + ": " + detail +
              (directive_.empty() ? "" : " (in '" + directive_ + "' directive)")),
        line(line_),
        directive(directive_) {}
  int line;
  std::string directive;
};

}  // namespace graphoid
