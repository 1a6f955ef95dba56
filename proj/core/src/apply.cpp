#include "lopsp/apply.hpp"

#include <cstddef>
#include <utility>

#include "lopsp/assemble.hpp"

namespace lopsp {

namespace {

// Reverses every rotation cycle; vertex, edge and dart ids are unchanged.
EmbeddedMap reversed_orientation(const EmbeddedMap& m) {
  std::vector<std::vector<Dart>> rot(m.vertex_count());
  for (Vertex v = 0; v < m.vertex_count(); ++v) {
    const auto ds = m.darts_at(v);
    rot[v].assign(ds.rbegin(), ds.rend());
  }
  return EmbeddedMap::build(m.vertex_count(), rot);
}

}  // namespace

ApplicationResult apply_lopsp(const LopspOperation& o, const EmbeddedMap& g,
                              std::optional<CutPath> p) {
  const CutPath path = p ? std::move(*p) : find_cut_path(o);
  const DoubleChamberPatch patch = double_chamber_patch(o, path);
  const std::uint32_t nd = g.dart_count();
  const std::size_t k = path.size();
  const std::size_t split = path.v0_index;

  // One patch copy per host dart d, oriented so that the copy's v1 lies on
  // the 1-point of d's edge, v2 on the 2-point of d's face, v0_left on the
  // 0-point of d's tail and v0_right on the 0-point of d's head.
  GlueSpec spec;
  spec.pieces.assign(nd, {&patch.patch, patch.outer_face});
  spec.identify.reserve(static_cast<std::size_t>(nd) * k);
  for (Dart d = 0; d < nd; ++d) {
    // The copies on the two sides of d's edge share the boundary part between
    // the 1-point and the tail 0-point.
    for (std::size_t j = 0; j < split; ++j)
      spec.identify.push_back({PieceDart{d, patch.left_darts[j]},
                               PieceDart{inv(d), patch.right_darts[j]}});
    // Consecutive copies around d's face share the boundary part between the
    // head 0-point and the 2-point.
    const Dart succ = g.sigma(inv(d));
    for (std::size_t j = split; j < k; ++j)
      spec.identify.push_back({PieceDart{succ, patch.left_darts[j]},
                               PieceDart{d, patch.right_darts[j]}});
  }
  GlueResult glued = glue(spec);
  // The copies are traversed against the host's orientation while gluing, so
  // the glued subdivision comes out mirrored; flip it back so that the
  // identity operation reproduces the host exactly, not its mirror image.
  glued.map = reversed_orientation(glued.map);

  ApplicationResult r;
  const std::uint32_t bnv = glued.map.vertex_count();
  const std::uint32_t bne = glued.map.edge_count();
  r.pi_vertex.assign(bnv, kNoVertex);
  r.pi_edge.assign(bne, static_cast<Edge>(-1));
  std::vector<int> btype(bnv, -1);
  for (Dart d = 0; d < nd; ++d) {
    for (Vertex v = 0; v < patch.patch.vertex_count(); ++v) {
      const Vertex bv = glued.vertex_map[d][v];
      r.pi_vertex[bv] = patch.pi_vertex[v];
      btype[bv] = patch.vtype[v];
    }
    for (Edge e = 0; e < patch.patch.edge_count(); ++e)
      r.pi_edge[glued.edge_map[d][e]] = patch.pi_edge[e];
  }
  r.b_result = TypedMap::make(glued.map, btype);
  r.result = extract_primal(r.b_result).with_name(o.name.empty() ? g.name()
                                                                 : o.name + "(" + g.name() + ")");

  // Result vertices are the type-0 vertices of the subdivision in id order.
  r.primal_of_b.assign(bnv, kNoVertex);
  {
    Vertex next = 0;
    for (Vertex v = 0; v < bnv; ++v)
      if (btype[v] == 0) r.primal_of_b[v] = next++;
  }

  const auto fs = faces(g);
  r.zero_point.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    r.zero_point[v] = glued.vertex_map[g.first_dart(v)][patch.v0_left];
  r.one_point.resize(g.edge_count());
  for (Edge e = 0; e < g.edge_count(); ++e)
    r.one_point[e] = glued.vertex_map[2 * e][patch.v1_copy];
  r.two_point.resize(fs.size());
  for (std::uint32_t f = 0; f < fs.size(); ++f)
    r.two_point[f] = glued.vertex_map[fs[f].darts.front()][patch.v2_copy];

  r.copy_vertex_map = std::move(glued.vertex_map);
  r.copy_edge_map = std::move(glued.edge_map);

  auto shadow_of = [&](Vertex b) {
    std::vector<Vertex> out;
    for (Vertex w : n0(r.b_result, b)) out.push_back(r.primal_of_b[w]);
    return out;
  };
  r.vertex_shadows.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    r.vertex_shadows[v] = shadow_of(r.zero_point[v]);
  r.face_shadows.resize(fs.size());
  for (std::uint32_t f = 0; f < fs.size(); ++f)
    r.face_shadows[f] = shadow_of(r.two_point[f]);
  return r;
}

const std::vector<Vertex>& vertex_shadow(const ApplicationResult& r, Vertex v) {
  if (v >= r.vertex_shadows.size()) throw UnknownVertex(v);
  return r.vertex_shadows[v];
}

const std::vector<Vertex>& face_shadow(const ApplicationResult& r, std::uint32_t f) {
  if (f >= r.face_shadows.size()) throw UnknownVertex(f);
  return r.face_shadows[f];
}

SubgraphMask pi_inverse(const ApplicationResult& r, const SubgraphMask& h) {
  const EmbeddedMap& b = r.b_result.map();
  SubgraphMask out;
  out.vertex_set.assign(b.vertex_count(), false);
  out.edge_set.assign(b.edge_count(), false);
  for (Vertex v = 0; v < b.vertex_count(); ++v)
    if (h.vertex_set[r.pi_vertex[v]]) out.vertex_set[v] = true;
  for (Edge e = 0; e < b.edge_count(); ++e)
    if (h.edge_set[r.pi_edge[e]]) out.edge_set[e] = true;
  return out;
}

}  // namespace lopsp
