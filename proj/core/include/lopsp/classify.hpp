#pragma once
// Classification of operations: identity / dual / edge-breaking (type 1 or
// 2) / edge-preserving, companion pairing between the two edge-breaking
// types, cycle-based necessary checks for connectivity preservation, and the
// shadow-walk / edge-path machinery behind the classification theorems.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lopsp/map.hpp"
#include "lopsp/operation.hpp"

namespace lopsp {

enum class ClassTag {
  Identity,
  Dual,
  EdgeBreakingType1,
  EdgeBreakingType2,
  EdgePreserving,
};

std::string to_string(ClassTag tag);

struct OperationClass {
  ClassTag tag;
  // For Identity/Dual: the v0-v2 edge; for the edge-breaking tags: the v1-v2
  // edge.
  std::optional<Edge> witness_edge;
  // For EdgePreserving: an edge-path avoiding the 2-points, if one exists
  // for the minimal cut-path (vertices of the full diamond).
  std::vector<Vertex> edge_path;
};

// Identity iff v0 and v2 are adjacent and t(v0) = 0; Dual iff they are
// adjacent and t(v0) = 2; otherwise edge-breaking of type t(v1) iff v1 and
// v2 are adjacent and t(v2) = 0; otherwise edge-preserving.
OperationClass classify(const LopspOperation& o);

struct NotEdgeBreaking : Error {
  explicit NotEdgeBreaking(const std::string& name)
      : Error("operation is not edge-breaking: " + name) {}
};
struct DualHasNoCompanion : Error {
  DualHasNoCompanion() : Error("the dual operation has no companion") {}
};

// The partner of an edge-breaking operation: for type 2, the v1-v2 edge is
// doubled and a new type-1 vertex (the new v1) is placed inside the 2-gon,
// joined to both old marked vertices; for type 1 the inverse replacement.
// An involution up to isomorphism.
LopspOperation companion(const LopspOperation& o);

// Two patch copies glued along both copies of the cut-path part between v0
// and v1: one merged 1-point, two merged 0-points, two 2-point copies.  The
// remaining boundary consists of the four copies of the v0..v2 part.
OpDiamond p_diamond(const LopspOperation& o, const CutPath& p);

// The boundary walk of the patch from the v0 copy on one side through v1 to
// the v0 copy on the other side, with type-2 endpoints dropped and every
// type-2 vertex replaced by the walk along all its neighbours in rotation
// order.  All edges of the walk have type 2; vertices are patch ids.
struct ShadowWalk {
  std::vector<Vertex> vertices;
  bool start_in_left_shadow;  // first vertex lies in N0 of the left v0 copy
  bool end_in_right_shadow;   // last vertex lies in N0 of the right v0 copy
};

ShadowWalk shadow_connecting_walk(const LopspOperation& o, const CutPath& p);

// True iff one side of the cycle encloses exactly one edge and nothing else,
// or exactly one type-1 vertex together with exactly its four incident
// edges.  Accepts cycles of length 2 or 4; `cycle` holds darts, dart i
// leaving cycle vertex i along cycle edge i.
bool is_trivial_cycle(const EmbeddedMap& m, const std::vector<int>& vtype,
                      const std::vector<Dart>& cycle);

struct C3Check {
  bool pass;
  std::vector<Dart> witness_cycle;  // darts in the failing glued map
  std::string context;              // which cut-path / gluing failed
};

// Necessary condition for preserving polyhedrality: for every minimal
// cut-path, glue two patch copies along each kind of shared side and search
// for a 2-cycle or a non-trivial 4-cycle.  fail means the operation
// certainly does not always preserve polyhedrality; pass gives no verdict.
C3Check c3_necessary_check(const LopspOperation& o);

// A type-2 path in the full diamond between the 0-neighbourhoods of its two
// 0-points that uses only shadow-connecting-walk vertices; with
// avoid_2points, the two 2-point copies are excluded.  Returns diamond
// vertex ids, or nothing if no such path exists.
std::optional<std::vector<Vertex>> find_edge_path(const LopspOperation& o, const CutPath& p,
                                                  bool avoid_2points);

}  // namespace lopsp
