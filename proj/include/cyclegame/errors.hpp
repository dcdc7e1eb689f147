#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cyclegame {

// Input text could not be parsed. `line` is 1-based; 0 when no single line
// is responsible (e.g. a missing declaration detected at end of input).
struct ParseError : std::runtime_error {
  ParseError(int line_no, const std::string& message)
      : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + message
                                       : message),
        line(line_no) {}
  int line;
};

// A requested computation exceeds a configured resource bound.
struct SizeLimitError : std::runtime_error {
  SizeLimitError(const std::string& what_arg, long long required_arg, long long limit_arg)
      : std::runtime_error(what_arg + ": " + std::to_string(required_arg) +
                           " exceeds limit " + std::to_string(limit_arg)),
        required(required_arg),
        limit(limit_arg) {}
  long long required;
  long long limit;
};

// Raised by algorithms that require an acyclic digraph. `cycle` is a witness
// dicycle as vertex names in walk order, closed (front() == back()).
struct CyclicGameError : std::runtime_error {
  CyclicGameError(const std::string& what_arg, std::vector<std::string> cycle_arg)
      : std::runtime_error(what_arg), cycle(std::move(cycle_arg)) {}
  std::vector<std::string> cycle;
};

}  // namespace cyclegame
