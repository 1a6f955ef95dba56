#pragma once
// Combinatorial maps (embedded multigraphs on orientable surfaces) as
// rotation systems over darts.
//
// Conventions:
//  - Edge e owns darts 2e and 2e+1; inv(d) = d ^ 1.
//  - sigma is the rotation: per-vertex cyclic order of outgoing darts.
//    The cyclic order is read as the clockwise order in a drawing; every
//    algorithm in this library is invariant under the choice of convention,
//    it only has to be used consistently.
//  - Faces are the orbits of d -> sigma(inv(d)).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lopsp {

using Dart = std::uint32_t;
using Vertex = std::uint32_t;
using Edge = std::uint32_t;

constexpr Dart kNoDart = static_cast<Dart>(-1);
constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

constexpr Dart inv(Dart d) { return d ^ 1u; }
constexpr Edge edge_of(Dart d) { return d >> 1; }
constexpr Dart dart_of(Edge e, int side) { return 2 * e + static_cast<Dart>(side); }

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BuildError : Error {
  using Error::Error;
};
struct DisconnectedGraph : BuildError {
  DisconnectedGraph() : BuildError("map is not connected") {}
};
struct DanglingDart : BuildError {
  explicit DanglingDart(Dart d) : BuildError("dart " + std::to_string(d) + " appears in no rotation cycle") {}
};
struct DuplicateDart : BuildError {
  explicit DuplicateDart(Dart d) : BuildError("dart " + std::to_string(d) + " appears twice") {}
};
struct EmptyEdgeSet : BuildError {
  EmptyEdgeSet() : BuildError("map must have at least one edge") {}
};
struct NonOrientableInconsistency : Error {
  using Error::Error;
};
struct SubgraphNotConnected : Error {
  SubgraphNotConnected() : Error("subgraph mask is not connected") {}
};
struct FaceNotSimple : Error {
  FaceNotSimple() : Error("face of the subgraph is bridged (not simple)") {}
};
struct InternalInvariantViolation : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// EmbeddedMap

// Immutable after construction; all operations on maps are pure functions.
class EmbeddedMap {
 public:
  // Builds a map from per-vertex rotation cycles.  `rotations[v]` lists the
  // darts leaving v in cyclic order.  Validates the dart partition and
  // connectivity.
  static EmbeddedMap build(std::size_t vertex_count,
                           const std::vector<std::vector<Dart>>& rotations,
                           std::string name = {});

  std::size_t vertex_count() const { return degree_first_dart_.size(); }
  std::size_t edge_count() const { return sigma_.size() / 2; }
  std::size_t dart_count() const { return sigma_.size(); }

  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Vertex vertex_of(Dart d) const { return vertex_of_[d]; }
  // The two endpoints of edge e (unordered; equal for a loop).
  Vertex endpoint(Edge e, int side) const { return vertex_of_[dart_of(e, side)]; }

  // Some dart leaving v (the smallest one).
  Dart first_dart(Vertex v) const { return degree_first_dart_[v].second; }
  std::size_t degree(Vertex v) const { return degree_first_dart_[v].first; }

  // All darts leaving v in rotation order, starting at first_dart(v).
  std::vector<Dart> darts_at(Vertex v) const;

  const std::string& name() const { return name_; }
  EmbeddedMap with_name(std::string n) const {
    EmbeddedMap m = *this;
    m.name_ = std::move(n);
    return m;
  }

  bool operator==(const EmbeddedMap& o) const {
    return sigma_ == o.sigma_ && vertex_of_ == o.vertex_of_;
  }

  // A default-constructed map is empty and only valid as an assignment target.
  EmbeddedMap() = default;

 private:
  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
  std::vector<Vertex> vertex_of_;
  std::vector<std::pair<std::uint32_t, Dart>> degree_first_dart_;
  std::string name_;
};

// A facial walk: cyclic dart sequence, successor sigma(inv(d)).
struct FaceWalk {
  std::vector<Dart> darts;
  std::size_t size() const { return darts.size(); }
};

std::vector<FaceWalk> faces(const EmbeddedMap& m);
// face_of[d] = index into faces(m) of the face orbit containing d.
std::vector<std::uint32_t> face_index(const EmbeddedMap& m);

int genus(const EmbeddedMap& m);
EmbeddedMap dual(const EmbeddedMap& m);
bool is_simple(const EmbeddedMap& m);

// k = 3: true iff >= 4 vertices and no vertex cut of size < 3.  Exhaustive
// subset removal, O(|V|^(k-1) * (|V|+|E|)); fine at desk scale.
bool is_k_connected(const EmbeddedMap& m, int k);

// True iff every face is a simple cycle and any two distinct faces intersect
// in nothing, one vertex, or one edge (with its endpoints).
bool is_polyhedral(const EmbeddedMap& m);

// ---------------------------------------------------------------------------
// Subgraphs, bridges, internal components

struct SubgraphMask {
  std::vector<bool> vertex_set;  // size = host vertex count
  std::vector<bool> edge_set;    // size = host edge count

  static SubgraphMask from_edges(const EmbeddedMap& host, const std::vector<Edge>& edges);
  bool has_vertex(Vertex v) const { return vertex_set[v]; }
  bool has_edge(Edge e) const { return edge_set[e]; }
};

// Faces of the embedded subgraph: orbits of d -> sigma_s(inv(d)) over the
// subgraph's darts, where sigma_s skips darts not in the subgraph.
std::vector<FaceWalk> subgraph_faces(const EmbeddedMap& host, const SubgraphMask& s);

struct BridgeAttachment {
  Dart dart;                  // host dart of a bridge edge leaving a subgraph vertex
  std::uint32_t face;         // index into subgraph_faces
  std::uint32_t angle;        // angle position along that facial walk
};

struct Bridge {
  enum class Kind { chord, component };
  Kind kind;
  std::vector<Edge> edges;              // host edges of the bridge
  std::vector<Vertex> inner_vertices;   // bridge vertices not in the subgraph
  std::vector<BridgeAttachment> attachments;
  // Faces of the subgraph this bridge is in (usually one; >1 means the faces
  // involved are bridged, i.e. not simple).
  std::vector<std::uint32_t> in_faces;
};

std::vector<Bridge> find_bridges(const EmbeddedMap& host, const SubgraphMask& s);

// Internal component IC(f): the cycle C with one vertex/edge per appearance
// in the facial walk, with all bridges of f glued into the corresponding
// angles.  Plane map; the outer face is the far side of C.
struct InternalComponent {
  EmbeddedMap map;
  // Boundary cycle: boundary_vertices[i] is the IC vertex copy of the i-th
  // walk appearance; boundary_edges[i] joins copy i to copy i+1 (mod L).
  std::vector<Vertex> boundary_vertices;
  std::vector<Edge> boundary_edges;
  // Labels back into the host.
  std::vector<Vertex> vertex_label;  // IC vertex -> host vertex
  std::vector<Edge> edge_label;      // IC edge -> host edge
  std::uint32_t outer_face;          // index into faces(map)
};

InternalComponent internal_component(const EmbeddedMap& host, const SubgraphMask& s,
                                     std::uint32_t face);

// ---------------------------------------------------------------------------
// Isomorphism

// Canonical byte string: invariant under relabeling of darts/vertices and
// starting dart (BFS-code minimization over all start darts).  Orientation is
// fixed: mirror images generally get distinct codes.
std::string canonical_form(const EmbeddedMap& m);
bool is_isomorphic(const EmbeddedMap& a, const EmbeddedMap& b);

}  // namespace lopsp
