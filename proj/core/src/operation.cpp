#include "lopsp/operation.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "lopsp/assemble.hpp"

namespace lopsp {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

InvalidOperation::InvalidOperation(const ValidationReport& r)
    : Error("invalid operation: " + join(r.violations)), report(r) {}

ValidationReport validate_lopsp(const TypedMap& candidate, Vertex v0, Vertex v1, Vertex v2) {
  ValidationReport r;
  const auto& m = candidate.map();
  auto bad = [&](std::string s) { r.violations.push_back(std::move(s)); };

  if (v0 >= m.vertex_count() || v1 >= m.vertex_count() || v2 >= m.vertex_count()) {
    bad("marked vertex out of range");
    return r;
  }
  if (v0 == v1 || v0 == v2 || v1 == v2) bad("marked vertices must be distinct");
  if (genus(m) != 0) bad("genus is " + std::to_string(genus(m)) + ", expected 0");
  if (!is_k_connected(m, 2)) bad("not 2-connected");
  for (const auto& f : faces(m))
    if (f.size() != 3) {
      bad("face of size " + std::to_string(f.size()) + ", all faces must be triangles");
      break;
    }
  if (candidate.type(v0) == 1) bad("v0 has type 1");
  if (candidate.type(v2) == 1) bad("v2 has type 1");
  if (candidate.type(v1) == 1 && m.degree(v1) != 2)
    bad("v1 has type 1 but degree " + std::to_string(m.degree(v1)));
  for (Vertex v = 0; v < m.vertex_count(); ++v)
    if (v != v1 && candidate.type(v) == 1 && m.degree(v) != 4)
      bad("type-1 vertex " + std::to_string(v) + " has degree " +
          std::to_string(m.degree(v)) + ", expected 4");
  return r;
}

LopspOperation make_lopsp(TypedMap candidate, Vertex v0, Vertex v1, Vertex v2,
                          std::string name) {
  auto r = validate_lopsp(candidate, v0, v1, v2);
  if (!r.ok()) throw InvalidOperation(r);
  return LopspOperation{std::move(candidate), v0, v1, v2, std::move(name)};
}

// ---------------------------------------------------------------------------
// Cut-paths

namespace {

std::vector<std::uint32_t> bfs_dist(const EmbeddedMap& m, Vertex from) {
  std::vector<std::uint32_t> dist(m.vertex_count(), static_cast<std::uint32_t>(-1));
  std::queue<Vertex> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Dart d : m.darts_at(v)) {
      Vertex w = m.vertex_of(inv(d));
      if (dist[w] == static_cast<std::uint32_t>(-1)) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

struct PathSearch {
  const LopspOperation& o;
  const EmbeddedMap& m;
  std::vector<std::uint32_t> dist_v0, dist_v2;
  std::vector<bool> used;
  std::vector<Dart> darts;
  std::vector<Vertex> verts;
  std::size_t budget = static_cast<std::size_t>(-1);
  std::size_t limit = 1;  // number of paths to collect
  std::vector<CutPath> found;

  explicit PathSearch(const LopspOperation& op)
      : o(op), m(op.op.map()), dist_v0(bfs_dist(m, op.v0)), dist_v2(bfs_dist(m, op.v2)) {
    used.assign(m.vertex_count(), false);
  }

  void emit() {
    CutPath p;
    p.darts = darts;
    p.vertices = verts;
    p.v0_index = std::find(verts.begin(), verts.end(), o.v0) - verts.begin();
    found.push_back(std::move(p));
  }

  bool dfs(Vertex cur, bool seen_v0) {
    if (cur == o.v2) {
      if (!seen_v0) return false;
      emit();
      return found.size() >= limit;
    }
    std::size_t remaining = budget - darts.size();
    std::uint32_t lb = seen_v0 ? dist_v2[cur] : dist_v0[cur] + dist_v0[o.v2];
    if (lb > remaining) return false;
    auto da = m.darts_at(cur);
    std::sort(da.begin(), da.end());
    for (Dart d : da) {
      Vertex w = m.vertex_of(inv(d));
      if (used[w]) continue;
      used[w] = true;
      darts.push_back(d);
      verts.push_back(w);
      if (dfs(w, seen_v0 || w == o.v0)) return true;
      verts.pop_back();
      darts.pop_back();
      used[w] = false;
    }
    return false;
  }

  void run() {
    used[o.v1] = true;
    verts = {o.v1};
    dfs(o.v1, false);
  }
};

}  // namespace

CutPath find_cut_path(const LopspOperation& o, CutPathStrategy strategy) {
  if (strategy == CutPathStrategy::first) {
    PathSearch s(o);
    s.run();
    if (s.found.empty()) throw InternalInvariantViolation("no cut-path exists");
    return s.found.front();
  }
  // minimal: iterative deepening; the depth-first order makes the first hit
  // at the minimal length the lexicographically smallest dart sequence.
  std::size_t n = o.op.map().vertex_count();
  PathSearch probe(o);
  std::size_t lb = probe.dist_v0[o.v1] + probe.dist_v0[o.v2];
  for (std::size_t budget = lb; budget < n; ++budget) {
    PathSearch s(o);
    s.budget = budget;
    s.run();
    if (!s.found.empty()) return s.found.front();
  }
  throw InternalInvariantViolation("no cut-path exists");
}

std::vector<CutPath> enumerate_cut_paths(const LopspOperation& o, std::size_t limit) {
  PathSearch s(o);
  s.limit = limit;
  s.run();
  return s.found;
}

// ---------------------------------------------------------------------------
// Patches

DoubleChamberPatch double_chamber_patch(const LopspOperation& o, const CutPath& p) {
  const auto& m = o.op.map();
  std::vector<Edge> pedges;
  for (Dart d : p.darts) pedges.push_back(edge_of(d));
  auto s = SubgraphMask::from_edges(m, pedges);
  auto walks = subgraph_faces(m, s);
  if (walks.size() != 1)
    throw InternalInvariantViolation("cut-path has more than one face");
  auto ic = internal_component(m, s, 0);

  DoubleChamberPatch out;
  out.patch = ic.map;
  out.pi_vertex = ic.vertex_label;
  out.pi_edge = ic.edge_label;
  out.outer_face = ic.outer_face;
  out.vtype.resize(ic.map.vertex_count());
  for (Vertex v = 0; v < ic.map.vertex_count(); ++v)
    out.vtype[v] = o.op.type(ic.vertex_label[v]);

  const std::size_t L = ic.boundary_vertices.size();
  const std::size_t k = p.size();
  if (L != 2 * k) throw InternalInvariantViolation("patch boundary has wrong length");
  std::size_t i0 = L;
  for (std::size_t i = 0; i < L; ++i)
    if (ic.vertex_label[ic.boundary_vertices[i]] == o.v1) i0 = i;
  if (i0 == L) throw InternalInvariantViolation("v1 not found on patch boundary");

  for (std::size_t j = 0; j <= k; ++j) {
    out.left_vertices.push_back(ic.boundary_vertices[(i0 + j) % L]);
    out.right_vertices.push_back(ic.boundary_vertices[(i0 + L - j) % L]);
    if (j < k) {
      std::size_t li = (i0 + j) % L;
      std::size_t ri = (i0 + L - 1 - j) % L;
      out.left_edges.push_back(ic.boundary_edges[li]);
      out.right_edges.push_back(ic.boundary_edges[ri]);
      // boundary edge i has dart 2i at boundary vertex i, 2i+1 at vertex i+1
      out.left_darts.push_back(dart_of(ic.boundary_edges[li], 0));
      out.right_darts.push_back(dart_of(ic.boundary_edges[ri], 1));
    }
  }
  for (std::size_t j = 0; j <= k; ++j) {
    if (ic.vertex_label[out.left_vertices[j]] != p.vertices[j] ||
        ic.vertex_label[out.right_vertices[j]] != p.vertices[j])
      throw InternalInvariantViolation("patch boundary labels do not follow the cut-path");
  }
  out.v1_copy = out.left_vertices[0];
  out.v2_copy = out.left_vertices[k];
  out.v0_left = out.left_vertices[p.v0_index];
  out.v0_right = out.right_vertices[p.v0_index];
  if (out.v0_left == out.v0_right || out.right_vertices[k] != out.v2_copy)
    throw InternalInvariantViolation("patch boundary structure is inconsistent");
  return out;
}

OpDiamond glue_patches(const LopspOperation& o, const CutPath& p, PatchSide side) {
  auto patch = double_chamber_patch(o, p);
  GlueSpec spec;
  spec.pieces = {{&patch.patch, patch.outer_face}, {&patch.patch, patch.outer_face}};
  std::size_t lo = side == PatchSide::v0v1 ? 0 : p.v0_index;
  std::size_t hi = side == PatchSide::v0v1 ? p.v0_index : p.size();
  for (std::size_t j = lo; j < hi; ++j)
    spec.identify.push_back({PieceDart{0, patch.left_darts[j]}, PieceDart{1, patch.right_darts[j]}});
  auto glued = glue(spec);

  OpDiamond out;
  out.map = glued.map;
  out.patch = patch;
  out.pi_vertex.assign(out.map.vertex_count(), kNoVertex);
  for (int c : {0, 1}) {
    out.copy_vertex[c] = glued.vertex_map[c];
    for (Vertex v = 0; v < patch.patch.vertex_count(); ++v)
      out.pi_vertex[glued.vertex_map[c][v]] = patch.pi_vertex[v];
  }
  out.vtype.resize(out.map.vertex_count());
  for (Vertex v = 0; v < out.map.vertex_count(); ++v)
    out.vtype[v] = o.op.type(out.pi_vertex[v]);
  // copy 0's right boundary is never glued; its darts border the outer region
  out.outer_face = face_index(out.map)[glued.dart_map[0][patch.right_darts[0]]];
  return out;
}

Rational inflation_factor(const LopspOperation& o) {
  std::int64_t f = static_cast<std::int64_t>(faces(o.op.map()).size());
  std::int64_t g = std::gcd(f, std::int64_t{2});
  return Rational{f / g, 2 / g};
}

}  // namespace lopsp
