#pragma once
// Operations on maps given as marked plane triangulations: validity checking,
// cut-path search, double chamber patches and patch diamonds.
//
// An operation is a 2-connected plane typed triangulation with three marked
// vertices v0, v1, v2 such that no edge joins equal types, t(v0) != 1,
// t(v2) != 1, every unmarked type-1 vertex has degree 4, and v1 has degree 2
// if it has type 1.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lopsp/map.hpp"
#include "lopsp/typed_map.hpp"

namespace lopsp {

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct InvalidOperation : Error {
  explicit InvalidOperation(const ValidationReport& r);
  ValidationReport report;
};

struct LopspOperation {
  TypedMap op;
  Vertex v0, v1, v2;
  std::string name;

  Vertex marked(int i) const { return i == 0 ? v0 : i == 1 ? v1 : v2; }
};

// Checks every clause of the operation definition; empty report = valid.
ValidationReport validate_lopsp(const TypedMap& candidate, Vertex v0, Vertex v1, Vertex v2);

// Validates and wraps; throws InvalidOperation with the clause report.
LopspOperation make_lopsp(TypedMap candidate, Vertex v0, Vertex v1, Vertex v2,
                          std::string name = {});

enum class CutPathStrategy { minimal, first };

// A simple path from v1 through v0 to v2.
struct CutPath {
  std::vector<Dart> darts;        // dart i leaves vertices[i]
  std::vector<Vertex> vertices;   // v1, ..., v0, ..., v2 (darts.size()+1 entries)
  std::size_t v0_index;           // position of v0 in vertices
  std::size_t size() const { return darts.size(); }
};

// minimal: a cut-path of minimum edge count, ties broken by lexicographically
// smallest dart sequence; first: the first path found by a deterministic
// depth-first search.  Existence is guaranteed for valid operations.
CutPath find_cut_path(const LopspOperation& o, CutPathStrategy strategy = CutPathStrategy::minimal);

// All cut-paths (deterministic order), capped at `limit`.
std::vector<CutPath> enumerate_cut_paths(const LopspOperation& o, std::size_t limit);

// The patch cut out of the operation along a cut-path: the internal component
// of the path's unique face.  Its boundary consists of two copies of the
// cut-path sharing the copies of v1 and v2, with two copies of v0.
struct DoubleChamberPatch {
  EmbeddedMap patch;
  std::vector<Vertex> pi_vertex;  // patch vertex -> operation vertex
  std::vector<Edge> pi_edge;      // patch edge -> operation edge
  std::vector<int> vtype;         // patch vertex types (through pi)
  std::uint32_t outer_face;
  Vertex v1_copy, v2_copy, v0_left, v0_right;
  // Boundary segments from v1 to v2; "left" follows the patch's boundary
  // orientation, "right" runs against it.  Entry j of either vertex list is a
  // copy of cut-path vertex j.
  std::vector<Vertex> left_vertices, right_vertices;
  std::vector<Edge> left_edges, right_edges;
  // Darts along the boundary: left_darts[j]/right_darts[j] leaves the j-th
  // segment vertex toward the (j+1)-th.
  std::vector<Dart> left_darts, right_darts;
};

DoubleChamberPatch double_chamber_patch(const LopspOperation& o, const CutPath& p);

// Which boundary segment of the patch to glue along.
enum class PatchSide { v0v1, v0v2 };

// Two patch copies glued along their copies of the chosen cut-path part:
// copy 0's left segment onto copy 1's right segment.  PatchSide::v0v1 gives
// the patch diamond.
struct OpDiamond {
  EmbeddedMap map;
  std::vector<Vertex> pi_vertex;  // glued vertex -> operation vertex
  std::vector<int> vtype;
  std::uint32_t outer_face;
  // vertex maps from the two patch copies into `map`
  std::vector<Vertex> copy_vertex[2];
  DoubleChamberPatch patch;
};

OpDiamond glue_patches(const LopspOperation& o, const CutPath& p, PatchSide side);
inline OpDiamond op_diamond(const LopspOperation& o, const CutPath& p) {
  return glue_patches(o, p, PatchSide::v0v1);
}

struct Rational {
  std::int64_t num, den;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

// Faces of the operation divided by 2: the edge multiplier of application.
Rational inflation_factor(const LopspOperation& o);

}  // namespace lopsp
