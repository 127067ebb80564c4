#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace knotpoly {

// One crossing of a planar diagram: the four incident arc ids are listed
// in counterclockwise planar order.  over_diag selects the diagonal that
// carries the over-strand: 0 for ports {0,2}, 1 for ports {1,3}.
struct Crossing {
  std::array<int, 4> arcs{-1, -1, -1, -1};
  int over_diag = 0;

  bool port_is_over(int port) const { return (port & 1) == over_diag; }
};

// Planar diagram of a link.  Arcs are the edges of the underlying
// 4-valent graph, so every arc id occurs exactly twice across all
// crossing tuples.  Crossing-free unknot components are counted in
// free_loops.
struct Diagram {
  std::vector<Crossing> crossings;
  int narcs = 0;
  int free_loops = 0;

  int n() const { return static_cast<int>(crossings.size()); }
};

// endpoint of an arc: (crossing index, port index)
struct ArcEnd {
  int crossing = -1;
  int port = -1;
  friend auto operator<=>(const ArcEnd&, const ArcEnd&) = default;
};

// Component assignment and strand directions from deterministic tracing:
// components are discovered in arc-id order, each starting at its
// smallest arc directed toward the lexicographically smaller endpoint.
struct Orientation {
  std::vector<std::array<bool, 4>> incoming;  // [crossing][port]
  std::vector<int> arc_component;             // arc id -> component id
  std::vector<int> crossing_sign;             // +1 / -1 per crossing
  int n_components = 0;                       // includes free loops
  int writhe = 0;
};

// both endpoints of every arc; validation errors if an arc does not
// occur exactly twice
std::vector<std::array<ArcEnd, 2>> arc_endpoints(const Diagram& d);

std::vector<std::string> validate(const Diagram& d);

Orientation orient(const Diagram& d);
// complete an orientation from prescribed strand directions
Orientation orientation_from_incoming(const Diagram& d,
                                      const std::vector<std::array<bool, 4>>& incoming);
// flip[k] reverses the direction of component k relative to the
// canonical trace (orientation-sensitive invariants of links need this
// knob in tests and experiments)
Orientation orient(const Diagram& d, const std::vector<bool>& flip);

int component_count(const Diagram& d);
int writhe(const Diagram& d);

Diagram mirror(const Diagram& d);

// Connected sum splicing the given arcs (respecting the canonical
// orientation of both operands); a crossing-free operand acts as the
// identity element.
Diagram connected_sum(const Diagram& a, const Diagram& b, int arc_a = 0, int arc_b = 0);

bool is_connected(const Diagram& d);
bool is_alternating(const Diagram& d);

// Faces of the planar embedding.  A directed arc (arc, endpoint index)
// belongs to exactly one face, the one on its left.
struct Faces {
  int count = 0;
  // face id of the dart that traverses `arc` toward endpoint `end`
  std::vector<std::array<int, 2>> dart_face;
  // face at the corner of crossing c between ports k and k+1 (mod 4)
  std::vector<std::array<int, 4>> corner_face;
};
Faces faces(const Diagram& d);

// Signed checkerboard graph of a connected alternating diagram:
// vertices are the shaded faces, one edge per crossing.
struct CheckerboardGraph {
  int n_vertices = 0;
  struct Edge {
    int u, v;
    int sign;
  };
  std::vector<Edge> edges;
};
CheckerboardGraph checkerboard(const Diagram& d);
// planar-dual variant: shades the other color class
CheckerboardGraph checkerboard_dual(const Diagram& d);

// PD code text: one diagram per line, crossings as X[a,b,c,d] with arcs
// counterclockwise from the incoming under-strand, 1-based labels.
std::string to_pd_code(const Diagram& d);
Diagram from_pd_code(const std::string& line);

}  // namespace knotpoly
