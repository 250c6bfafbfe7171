#pragma once

#include <stdexcept>
#include <string>

namespace dispersal {

/// Bad user input: malformed files, out-of-range parameters, invalid labellings.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A graph that an operation requires to be connected is not.
class connectivity_error : public input_error {
 public:
  connectivity_error(int from, int to)
      : input_error("graph is disconnected: vertex " + std::to_string(to) +
                    " is unreachable from vertex " + std::to_string(from)) {}
};

/// A solve ran out of its optional time budget. Distinct from failure:
/// the answer is simply unknown.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded() : std::runtime_error("time budget exceeded") {}
};

/// Broken internal invariant; indicates a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const char* msg) {
  if (!ok) throw internal_error(msg);
}

}  // namespace dispersal
