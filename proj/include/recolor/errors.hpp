#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace recolor {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: malformed input files, out-of-range ids, empty batches.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// A coloring uses a color outside {1..t} or does not cover the graph.
class PaletteError : public Error {
 public:
  PaletteError(int vertex, int color, int palette);
  int vertex;
  int color;
  int palette;
};

/// The back-neighborhood of `vertex` contains the non-adjacent pair (a, b).
class NotChordal : public Error {
 public:
  NotChordal(int vertex, int a, int b);
  int vertex;
  int a;
  int b;
};

/// Greedy coloring ran out of colors at `vertex`.
class PaletteExhausted : public Error {
 public:
  PaletteExhausted(int vertex, int back_degree, int palette);
  int vertex;
};

/// The best-choice rule found no valid color for `vertex` before base step `step`.
class EmptyValidSet : public Error {
 public:
  EmptyValidSet(int vertex, std::int64_t step);
  int vertex;
  std::int64_t step;
};

class SequenceError : public Error {
 public:
  enum class Kind { ImproperStart, ImproperIntermediate, NullStep, BadStep };
  SequenceError(Kind kind, std::int64_t step, int u, int v, std::string what);
  Kind kind;
  std::int64_t step;  // -1 for the start coloring
  int u;
  int v;
};

class DecompositionError : public Error {
 public:
  enum class Kind { NotATree, BadBag, UncoveredVertex, UncoveredEdge, DisconnectedTrace };
  DecompositionError(Kind kind, int u, int v, std::string what);
  Kind kind;
  int u;
  int v;  // second endpoint for UncoveredEdge, -1 otherwise
};

/// An input coloring that must be proper has a monochromatic edge.
class ImproperColoring : public Error {
 public:
  ImproperColoring(int u, int v, const std::string& context);
  int u;
  int v;
};

/// A sequence on the merged graph failed validation before expansion.
class InvalidQuotientSequence : public Error {
 public:
  using Error::Error;
};

/// The reconfiguration graph is too large for exhaustive search.
class StateCapExceeded : public Error {
 public:
  StateCapExceeded(double states, std::uint64_t cap);
  double states;
  std::uint64_t cap;
};

class OracleInfeasible : public StateCapExceeded {
 public:
  using StateCapExceeded::StateCapExceeded;
};

}  // namespace recolor
