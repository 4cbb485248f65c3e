#include "recolor/errors.hpp"

#include <sstream>

namespace recolor {

namespace {

template <typename... Args>
std::string concat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace

PaletteError::PaletteError(int vertex, int color, int palette)
    : Error(concat("vertex ", vertex, " has color ", color, " outside palette {1..", palette, "}")),
      vertex(vertex),
      color(color),
      palette(palette) {}

NotChordal::NotChordal(int vertex, int a, int b)
    : Error(concat("not chordal: back-neighbors ", a, " and ", b, " of vertex ", vertex,
                   " are not adjacent")),
      vertex(vertex),
      a(a),
      b(b) {}

PaletteExhausted::PaletteExhausted(int vertex, int back_degree, int palette)
    : Error(concat("palette of ", palette, " colors exhausted at vertex ", vertex, " with ",
                   back_degree, " back-neighbors")),
      vertex(vertex) {}

EmptyValidSet::EmptyValidSet(int vertex, std::int64_t step)
    : Error(concat("no valid color for vertex ", vertex, " before base step ", step)),
      vertex(vertex),
      step(step) {}

SequenceError::SequenceError(Kind kind, std::int64_t step, int u, int v, std::string what)
    : Error(std::move(what)), kind(kind), step(step), u(u), v(v) {}

DecompositionError::DecompositionError(Kind kind, int u, int v, std::string what)
    : Error(std::move(what)), kind(kind), u(u), v(v) {}

ImproperColoring::ImproperColoring(int u, int v, const std::string& context)
    : Error(concat(context, ": edge ", u, "-", v, " is monochromatic")), u(u), v(v) {}

StateCapExceeded::StateCapExceeded(double states, std::uint64_t cap)
    : Error(concat("state space of ", states, " colorings exceeds cap ", cap)),
      states(states),
      cap(cap) {}

}  // namespace recolor
