#pragma once
// Applying an operation to a host map: one patch copy is glued per host
// dart (= per double chamber of the host's subdivision), producing the
// subdivided result and the result itself, together with the projection onto
// the operation and shadow tables.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lopsp/map.hpp"
#include "lopsp/operation.hpp"
#include "lopsp/typed_map.hpp"

namespace lopsp {

struct UnknownVertex : Error {
  explicit UnknownVertex(Vertex v) : Error("unknown vertex " + std::to_string(v)) {}
};

struct ApplicationResult {
  EmbeddedMap result;   // the transformed map
  TypedMap b_result;    // its subdivision, assembled from patch copies

  // Projection onto the operation.
  std::vector<Vertex> pi_vertex;  // b_result vertex -> operation vertex
  std::vector<Edge> pi_edge;      // b_result edge -> operation edge

  // type-0 b_result vertex -> result vertex (kNoVertex for other types)
  std::vector<Vertex> primal_of_b;

  // Host elements' distinguished vertices in b_result.
  std::vector<Vertex> zero_point;  // host vertex -> b_result vertex
  std::vector<Vertex> one_point;   // host edge -> b_result vertex
  std::vector<Vertex> two_point;   // host face -> b_result vertex

  // Side tables: where each patch copy's elements landed.  Copy d is the one
  // glued into the double chamber of host dart d.
  std::vector<std::vector<Vertex>> copy_vertex_map;
  std::vector<std::vector<Edge>> copy_edge_map;

  // Shadow tables (result vertices).
  std::vector<std::vector<Vertex>> vertex_shadows;  // per host vertex
  std::vector<std::vector<Vertex>> face_shadows;    // per host face
};

// Glues one patch copy per host dart: copy d is oriented so that its v1 and
// v2 land on the 1-point of d's edge and the 2-point of d's face, its v0
// copies on the 0-points of d's endpoints.  The cut-path defaults to the
// minimal one.
ApplicationResult apply_lopsp(const LopspOperation& o, const EmbeddedMap& g,
                              std::optional<CutPath> p = std::nullopt);

const std::vector<Vertex>& vertex_shadow(const ApplicationResult& r, Vertex v);
const std::vector<Vertex>& face_shadow(const ApplicationResult& r, std::uint32_t f);

// All b_result elements whose projection lies in the given subgraph of the
// operation.
SubgraphMask pi_inverse(const ApplicationResult& r, const SubgraphMask& h);

}  // namespace lopsp
