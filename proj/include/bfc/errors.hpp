#pragma once

#include <stdexcept>
#include <string>

namespace bfc {

/// Base type for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph violates the oriented-graph invariants (self-loop, duplicate edge,
/// vertex index out of range, fewer than two vertices).
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// The interaction graph has no spanning tree.
class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

/// Two connected agents are closer than the separation floor, so a bearing
/// is undefined.
class CoincidentAgents : public Error {
 public:
  CoincidentAgents(const std::string& what, int edge = -1, double time = -1.0)
      : Error(what), edge(edge), time(time) {}
  int edge;     ///< offending edge index, -1 if unknown
  double time;  ///< simulation time, -1 if not time-indexed
};

/// A desired trajectory produces an edge shorter than the separation floor.
class DegenerateDesired : public Error {
 public:
  using Error::Error;
};

/// The scan horizon is too short for the requested PE window.
class HorizonTooShort : public Error {
 public:
  using Error::Error;
};

/// Edge count below the spanning-tree minimum in the 2-D counting bound.
class InvalidCount : public Error {
 public:
  using Error::Error;
};

/// Scenario file failed to parse; carries the offending line and field.
class ScenarioParseError : public Error {
 public:
  ScenarioParseError(const std::string& what, int line = 0, std::string field = {})
      : Error(what), line(line), field(std::move(field)) {}
  int line;
  std::string field;
};

/// An integration step failed; wraps the cause with the failing time.
class SimAborted : public Error {
 public:
  SimAborted(const std::string& what, double time) : Error(what), time(time) {}
  double time;
};

}  // namespace bfc
