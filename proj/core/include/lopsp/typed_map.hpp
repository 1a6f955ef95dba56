#pragma once
// Typed maps (vertex types 0/1/2), barycentric subdivision, the
// double-chamber graph, chambers, diamonds and 0-neighbourhoods.
//
// Barycentric subdivision B of a map m: one type-0 vertex per vertex of m,
// one type-1 vertex per edge, one type-2 vertex per face; every face of B is
// a triangle with one corner of each type (a chamber).  The double-chamber
// graph D drops the type-0 edges of B; its faces are double chambers, one per
// dart of m.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lopsp/map.hpp"

namespace lopsp {

struct NotBarycentric : Error {
  NotBarycentric() : Error("map is not a barycentric subdivision") {}
};
struct WrongType : Error {
  using Error::Error;
};
struct NotChamberStructured : Error {
  explicit NotChamberStructured(const std::string& why)
      : Error("map is not chamber-structured: " + why) {}
};

enum class ElemKind : std::uint8_t { vertex, edge, face };

// Where a typed vertex came from in the host map.
struct Provenance {
  ElemKind kind;
  std::uint32_t id;
  bool operator==(const Provenance&) const = default;
};

class TypedMap {
 public:
  // Validates that no edge joins two vertices of the same type.
  static TypedMap make(EmbeddedMap map, std::vector<int> vtype,
                       std::vector<Provenance> provenance = {});

  const EmbeddedMap& map() const { return map_; }
  int type(Vertex v) const { return vtype_[v]; }
  const std::vector<int>& types() const { return vtype_; }
  // Type of an edge = the type absent from its endpoints.
  int edge_type(Edge e) const {
    return 3 - vtype_[map_.endpoint(e, 0)] - vtype_[map_.endpoint(e, 1)];
  }
  bool has_provenance() const { return !provenance_.empty(); }
  const Provenance& provenance(Vertex v) const { return provenance_[v]; }

 private:
  EmbeddedMap map_;
  std::vector<int> vtype_;
  std::vector<Provenance> provenance_;  // empty or one entry per vertex
};

// A triangular face of a chamber-structured map.
struct Chamber {
  std::array<Dart, 3> darts;      // facial walk order
  std::array<Vertex, 3> vertex;   // vertex[i] has type i
  std::array<Edge, 3> edge;       // edge[i] has type i
};

// A face of a double-chamber graph: two 0-points, a 1-point, a 2-point, two
// type-1 boundary edges (the 1-sides) and two type-2 boundary edges (jointly
// the 2-side).
struct DoubleChamber {
  std::uint32_t face;  // index into faces() of the double-chamber graph
  std::array<Vertex, 2> zero_points;
  Vertex one_point;
  Vertex two_point;
  std::array<Edge, 2> one_sides;
  std::array<Edge, 2> two_side;
};

// The two double chambers around one 1-point.
struct Diamond {
  Vertex one_point;
  std::array<DoubleChamber, 2> chambers;
};

// In the subdivision of m, vertex v of m keeps its id; edge e becomes vertex
// |V|+e; face f becomes vertex |V|+|E|+f.  Provenance records the same.
TypedMap barycentric_subdivision(const EmbeddedMap& m);

// Drops the type-0 edges of a barycentric subdivision; vertices, types and
// provenance are kept, edges are renumbered in increasing order.
TypedMap double_chamber_graph(const TypedMap& b);

// The chambers of a chamber-structured typed map, in faces() order.
std::vector<Chamber> chambers(const TypedMap& b);

// Double chambers of a double-chamber graph, in faces() order.
std::vector<DoubleChamber> double_chambers(const TypedMap& dg);

Diamond diamond_around(const TypedMap& dg, Vertex one_point);

// All type-0 vertices equal or adjacent to v.
std::vector<Vertex> n0(const TypedMap& t, Vertex v);

// Inverse of barycentric subdivision: vertices = type-0 vertices (in id
// order), one edge per type-1 vertex (in id order), rotations induced by the
// order of type-1 neighbors around type-0 vertices.
EmbeddedMap extract_primal(const TypedMap& b);

}  // namespace lopsp
