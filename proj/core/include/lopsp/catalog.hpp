#pragma once
// Named built-in operations.  Each is specified as a typed plane
// triangulation by its face list; orientations are derived automatically.

#include <array>
#include <string>
#include <vector>

#include "lopsp/operation.hpp"

namespace lopsp {

struct UnknownOperation : Error {
  explicit UnknownOperation(const std::string& n) : Error("unknown operation: " + n) {}
};

// Declarative operation description: vertices 0..n-1 with types, edges by
// endpoints, faces as cyclic edge sequences (any two consecutive face edges
// must share exactly one endpoint).  The builder orients all faces
// consistently and derives the rotation system.
struct OperationSpec {
  std::string name;
  std::vector<int> vtype;
  std::vector<std::array<Vertex, 2>> edges;
  std::vector<std::vector<Edge>> face_edges;
  Vertex v0, v1, v2;
};

LopspOperation operation_from_faces(const OperationSpec& spec);

// Exchanges the v0 and v2 marks (types untouched).
LopspOperation swap_markers(const LopspOperation& o, std::string name);
// Maps every vertex type t to 2-t (marks untouched).
LopspOperation flip_types(const LopspOperation& o, std::string name);

struct CatalogEntry {
  std::string name;
  LopspOperation op;
  std::string expected_class;                 // classify() tag name
  std::array<std::size_t, 3> cube_counts;     // (V, E, F) of op(cube)
};

// identity, dual, ambo, join, truncation, leapfrog, kis, chamfer, gyro.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace lopsp
