#pragma once

#include <stdexcept>

namespace muso {

/// Flip pattern o(v) ^ o(v ^ {d}) varies across vertices, or a loop is missing.
class NotMatousekType : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Influence graph has a directed cycle besides the loops.
class CyclicInfluence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A candidate solution has an exactly-zero free coordinate.
class DegenerateQ : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace muso
