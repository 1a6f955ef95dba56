#include "lopsp/assemble.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <numeric>

namespace lopsp {

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

GlueResult glue(const GlueSpec& spec) {
  const std::size_t np = spec.pieces.size();
  std::vector<std::uint32_t> dart_offset(np + 1, 0), vertex_offset(np + 1, 0);
  std::vector<std::vector<std::uint32_t>> fidx(np);
  for (std::size_t p = 0; p < np; ++p) {
    dart_offset[p + 1] = dart_offset[p] + static_cast<std::uint32_t>(spec.pieces[p].map->dart_count());
    vertex_offset[p + 1] = vertex_offset[p] + static_cast<std::uint32_t>(spec.pieces[p].map->vertex_count());
    fidx[p] = face_index(*spec.pieces[p].map);
  }
  auto gd = [&](std::uint32_t p, Dart d) { return dart_offset[p] + d; };
  auto gv = [&](std::uint32_t p, Vertex v) { return vertex_offset[p] + v; };

  UnionFind darts(dart_offset[np]);
  UnionFind verts(vertex_offset[np]);
  for (const auto& id : spec.identify) {
    auto [p1, d1] = id[0];
    auto [p2, d2] = id[1];
    darts.unite(gd(p1, d1), gd(p2, d2));
    darts.unite(gd(p1, inv(d1)), gd(p2, inv(d2)));
    verts.unite(gv(p1, spec.pieces[p1].map->vertex_of(d1)),
                gv(p2, spec.pieces[p2].map->vertex_of(d2)));
    verts.unite(gv(p1, spec.pieces[p1].map->vertex_of(inv(d1))),
                gv(p2, spec.pieces[p2].map->vertex_of(inv(d2))));
  }

  // Members of each dart class, to evaluate the rotation rule.
  std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, Dart>>> members;
  for (std::uint32_t p = 0; p < np; ++p)
    for (Dart d = 0; d < spec.pieces[p].map->dart_count(); ++d)
      members[darts.find(gd(p, d))].push_back({p, d});

  // Merged sigma on class representatives.  First pass: successors across
  // interior corners (outer corners of a piece are either filled by another
  // piece glued there, or stay boundary corners of the result).
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  std::map<std::uint32_t, std::uint32_t> sigma;
  std::map<std::uint32_t, std::uint32_t> vclass;  // dart class -> vertex class
  for (const auto& [rep, mem] : members) {
    std::uint32_t inner = kUnset;
    for (auto [p, d] : mem) {
      const auto& m = *spec.pieces[p].map;
      Dart nxt = m.sigma(d);
      // The corner (d, nxt) lies in the face of nxt.
      if (fidx[p][nxt] != spec.pieces[p].outer_face) {
        std::uint32_t cand = darts.find(gd(p, nxt));
        if (inner != kUnset && inner != cand)
          throw InternalInvariantViolation("glue: conflicting interior corners");
        inner = cand;
      }
    }
    sigma[rep] = inner;
    auto [p0, d0] = mem[0];
    vclass[rep] = verts.find(gv(p0, spec.pieces[p0].map->vertex_of(d0)));
  }
  // Second pass: at every merged vertex, the unmatched arc end (a dart with
  // no successor yet) closes onto the unmatched arc start through the one
  // remaining boundary corner.  More than one open corner per vertex would
  // make the rotation ambiguous.
  {
    std::map<std::uint32_t, std::uint32_t> open_end, open_start;
    std::set<std::uint32_t> has_pred;
    for (const auto& [rep, nxt] : sigma)
      if (nxt != kUnset) has_pred.insert(nxt);
    for (const auto& [rep, nxt] : sigma) {
      if (nxt != kUnset) continue;
      if (open_end.count(vclass[rep]))
        throw InternalInvariantViolation("glue: vertex with more than one boundary corner");
      open_end[vclass[rep]] = rep;
    }
    for (const auto& [rep, nxt] : sigma) {
      if (has_pred.count(rep)) continue;
      if (open_start.count(vclass[rep]))
        throw InternalInvariantViolation("glue: vertex with more than one boundary corner");
      open_start[vclass[rep]] = rep;
    }
    if (open_end.size() != open_start.size())
      throw InternalInvariantViolation("glue: unbalanced boundary corners");
    for (auto [v, e] : open_end) {
      auto it = open_start.find(v);
      if (it == open_start.end())
        throw InternalInvariantViolation("glue: unbalanced boundary corners");
      sigma[e] = it->second;
    }
  }

  // Number result edges/darts: iterate dart classes in representative order;
  // an edge is the pair {class(x), class(inv x)}.
  std::map<std::uint32_t, Dart> result_dart;
  Edge next_edge = 0;
  auto inv_rep = [&](std::uint32_t rep) {
    auto [p, d] = members[rep][0];
    return darts.find(gd(p, inv(d)));
  };
  for (const auto& [rep, mem] : members) {
    if (result_dart.count(rep)) continue;
    result_dart[rep] = dart_of(next_edge, 0);
    result_dart[inv_rep(rep)] = dart_of(next_edge, 1);
    ++next_edge;
  }

  // Result vertices in representative order; rotations from merged sigma.
  std::map<std::uint32_t, Vertex> result_vertex;
  for (std::uint32_t p = 0; p < np; ++p)
    for (Vertex v = 0; v < spec.pieces[p].map->vertex_count(); ++v) {
      std::uint32_t rep = verts.find(gv(p, v));
      if (!result_vertex.count(rep))
        result_vertex[rep] = static_cast<Vertex>(result_vertex.size());
    }

  std::vector<std::vector<Dart>> rot(result_vertex.size());
  std::vector<bool> placed(dart_offset[np], false);
  for (const auto& [rep, mem] : members) {
    if (placed[rep]) continue;
    auto [p0, d0] = mem[0];
    Vertex v = result_vertex.at(verts.find(gv(p0, spec.pieces[p0].map->vertex_of(d0))));
    std::uint32_t cur = rep;
    std::vector<Dart>& r = rot[v];
    if (!r.empty())
      throw InternalInvariantViolation("glue: merged vertex rotation is not a single cycle");
    do {
      if (placed[cur]) throw InternalInvariantViolation("glue: rotation does not close");
      placed[cur] = true;
      r.push_back(result_dart.at(cur));
      cur = sigma.at(cur);
    } while (cur != rep);
  }

  GlueResult out;
  out.map = EmbeddedMap::build(result_vertex.size(), rot);
  out.dart_map.resize(np);
  out.vertex_map.resize(np);
  out.edge_map.resize(np);
  for (std::uint32_t p = 0; p < np; ++p) {
    const auto& m = *spec.pieces[p].map;
    out.dart_map[p].resize(m.dart_count());
    out.vertex_map[p].resize(m.vertex_count());
    out.edge_map[p].resize(m.edge_count());
    for (Dart d = 0; d < m.dart_count(); ++d)
      out.dart_map[p][d] = result_dart.at(darts.find(gd(p, d)));
    for (Vertex v = 0; v < m.vertex_count(); ++v)
      out.vertex_map[p][v] = result_vertex.at(verts.find(gv(p, v)));
    for (Edge e = 0; e < m.edge_count(); ++e)
      out.edge_map[p][e] = edge_of(out.dart_map[p][dart_of(e, 0)]);
  }
  return out;
}

}  // namespace lopsp
