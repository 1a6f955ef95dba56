#include "lopsp/classify.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "lopsp/assemble.hpp"

namespace lopsp {

namespace {

// Edge between two vertices, if any (first in rotation order at a).
std::optional<Edge> edge_between(const EmbeddedMap& m, Vertex a, Vertex b) {
  for (Dart d : m.darts_at(a))
    if (m.vertex_of(inv(d)) == b) return edge_of(d);
  return std::nullopt;
}

bool adjacent_or_equal(const EmbeddedMap& m, Vertex a, Vertex b) {
  return a == b || edge_between(m, a, b).has_value();
}

// Rebuilds a map from per-vertex rotations of "virtual darts": tokens pair
// with token^1; ids need not be contiguous.  Edges are renumbered in order
// of first appearance.
EmbeddedMap from_tokens(const std::vector<std::vector<std::uint32_t>>& rot) {
  std::map<std::uint32_t, Dart> dart_id;
  Edge next = 0;
  for (const auto& r : rot)
    for (std::uint32_t t : r)
      if (!dart_id.count(t)) {
        dart_id[t] = 2 * next;
        dart_id[t ^ 1u] = 2 * next + 1;
        ++next;
      }
  std::vector<std::vector<Dart>> out(rot.size());
  for (std::size_t v = 0; v < rot.size(); ++v)
    for (std::uint32_t t : rot[v]) out[v].push_back(dart_id[t]);
  return EmbeddedMap::build(rot.size(), out);
}

LopspOperation companion_of_type2(const LopspOperation& o) {
  const EmbeddedMap& m = o.op.map();
  // The v1-v2 edge is doubled; a new type-1 vertex w inside the 2-gon is
  // joined to both, splitting it into two triangles.
  Dart a = 0;
  for (Dart d : m.darts_at(o.v1))
    if (m.vertex_of(inv(d)) == o.v2) {
      a = d;
      break;
    }
  const std::uint32_t nd = static_cast<std::uint32_t>(m.dart_count());
  const std::uint32_t p = nd, q = nd + 2, r = nd + 4, s = nd + 6;

  std::vector<std::vector<std::uint32_t>> rot(m.vertex_count() + 1);
  for (Vertex v = 0; v < m.vertex_count(); ++v)
    for (Dart d : m.darts_at(v)) {
      if (d == a) {
        rot[v].insert(rot[v].end(), {p, r ^ 1u, q});
      } else if (d == inv(a)) {
        rot[v].insert(rot[v].end(), {q ^ 1u, s ^ 1u, p ^ 1u});
      } else {
        rot[v].push_back(d);
      }
    }
  const Vertex w = static_cast<Vertex>(m.vertex_count());
  rot[w] = {r, s};

  std::vector<int> types = o.op.types();
  types.push_back(1);
  return make_lopsp(TypedMap::make(from_tokens(rot), std::move(types)), o.v0, w, o.v2,
                    "companion(" + o.name + ")");
}

LopspOperation companion_of_type1(const LopspOperation& o) {
  const EmbeddedMap& m = o.op.map();
  const Vertex w = o.v1;
  if (m.degree(w) != 2) throw InternalInvariantViolation("companion: type-1 v1 of degree != 2");
  // w sits inside a 2-gon between its type-2 neighbour u and v2; remove it
  // and merge the doubled u-v2 edge.
  const auto at_w = m.darts_at(w);
  Dart r = at_w[0], s = at_w[1];
  if (o.op.type(m.vertex_of(inv(r))) != 2) std::swap(r, s);
  const Vertex u = m.vertex_of(inv(r));
  if (o.op.type(u) != 2 || m.vertex_of(inv(s)) != o.v2)
    throw InternalInvariantViolation("companion: unexpected neighbourhood of v1");
  const Dart p = m.sigma_inv(inv(r)), q = m.sigma(inv(r));
  if (m.vertex_of(inv(p)) != o.v2 || m.vertex_of(inv(q)) != o.v2 || edge_of(p) == edge_of(q))
    throw InternalInvariantViolation("companion: v1 is not inside a doubled edge");

  const std::uint32_t merged = static_cast<std::uint32_t>(m.dart_count());
  auto renum = [&](Vertex v) { return v > w ? v - 1 : v; };
  std::vector<std::vector<std::uint32_t>> rot(m.vertex_count() - 1);
  for (Vertex v = 0; v < m.vertex_count(); ++v) {
    if (v == w) continue;
    auto& out = rot[renum(v)];
    for (Dart d : m.darts_at(v)) {
      if (d == p || d == inv(q)) continue;                    // dropped copies
      if (d == inv(r) || d == inv(s)) continue;               // edges to w
      if (d == q) out.push_back(merged);                      // at u
      else if (d == inv(p)) out.push_back(merged ^ 1u);       // at v2
      else out.push_back(d);
    }
  }
  std::vector<int> types;
  for (Vertex v = 0; v < m.vertex_count(); ++v)
    if (v != w) types.push_back(o.op.type(v));
  return make_lopsp(TypedMap::make(from_tokens(rot), std::move(types)), renum(o.v0), renum(u),
                    renum(o.v2), "companion(" + o.name + ")");
}

}  // namespace

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::Identity: return "Identity";
    case ClassTag::Dual: return "Dual";
    case ClassTag::EdgeBreakingType1: return "EdgeBreakingType1";
    case ClassTag::EdgeBreakingType2: return "EdgeBreakingType2";
    case ClassTag::EdgePreserving: return "EdgePreserving";
  }
  return "?";
}

OperationClass classify(const LopspOperation& o) {
  const EmbeddedMap& m = o.op.map();
  OperationClass out;
  if (auto e = edge_between(m, o.v0, o.v2)) {
    out.tag = o.op.type(o.v0) == 0 ? ClassTag::Identity : ClassTag::Dual;
    out.witness_edge = e;
    return out;
  }
  if (auto e = edge_between(m, o.v1, o.v2); e && o.op.type(o.v2) == 0) {
    out.tag = o.op.type(o.v1) == 1 ? ClassTag::EdgeBreakingType1 : ClassTag::EdgeBreakingType2;
    out.witness_edge = e;
    return out;
  }
  out.tag = ClassTag::EdgePreserving;
  if (auto path = find_edge_path(o, find_cut_path(o), true)) out.edge_path = *path;
  return out;
}

LopspOperation companion(const LopspOperation& o) {
  switch (classify(o).tag) {
    case ClassTag::Dual: throw DualHasNoCompanion();
    case ClassTag::EdgeBreakingType2: return companion_of_type2(o);
    case ClassTag::EdgeBreakingType1: return companion_of_type1(o);
    default: throw NotEdgeBreaking(o.name);
  }
}

OpDiamond p_diamond(const LopspOperation& o, const CutPath& p) {
  auto patch = double_chamber_patch(o, p);
  GlueSpec spec;
  spec.pieces = {{&patch.patch, patch.outer_face}, {&patch.patch, patch.outer_face}};
  for (std::size_t j = 0; j < p.v0_index; ++j) {
    spec.identify.push_back({PieceDart{0, patch.left_darts[j]}, PieceDart{1, patch.right_darts[j]}});
    spec.identify.push_back({PieceDart{1, patch.left_darts[j]}, PieceDart{0, patch.right_darts[j]}});
  }
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
  // the v0..v2 boundary parts are never glued here
  out.outer_face = face_index(out.map)[glued.dart_map[0][patch.right_darts[p.v0_index]]];
  return out;
}

ShadowWalk shadow_connecting_walk(const LopspOperation& o, const CutPath& p) {
  const auto patch = double_chamber_patch(o, p);
  const EmbeddedMap& m = patch.patch;
  const std::size_t split = p.v0_index;

  // Boundary course from the left v0 copy through v1 to the right v0 copy,
  // with the boundary dart toward the previous / next course vertex.
  struct Stop {
    Vertex v;
    Dart to_prev, to_next;
  };
  std::vector<Stop> course;
  for (std::size_t j = split; j > 0; --j)
    course.push_back({patch.left_vertices[j], patch.left_darts[j],
                      j > 1 ? inv(patch.left_darts[j - 1]) : inv(patch.left_darts[0])});
  course.push_back({patch.v1_copy, patch.left_darts[0], patch.right_darts[0]});
  for (std::size_t j = 1; j <= split; ++j)
    course.push_back({patch.right_vertices[j], inv(patch.right_darts[j - 1]),
                      j < split ? patch.right_darts[j] : patch.right_darts[j]});
  std::vector<Vertex> walk;
  auto push = [&](Vertex v) {
    if (walk.empty() || walk.back() != v) walk.push_back(v);
  };
  for (const auto& st : course) {
    if (patch.vtype[st.v] != 2) {
      push(st.v);
      continue;
    }
    // A type-2 course vertex is dropped and replaced by the walk along all
    // its neighbours; its rotation is a linear arc between its two boundary
    // darts. For the endpoint stops the arc starts at the boundary neighbour
    // on the far side of the course.
    std::vector<Dart> arc = m.darts_at(st.v);
    auto it = std::find(arc.begin(), arc.end(), st.to_prev);
    std::rotate(arc.begin(), it, arc.end());
    if (arc.back() != st.to_next) {
      it = std::find(arc.begin(), arc.end(), st.to_next);
      std::rotate(arc.begin(), it, arc.end());
      std::reverse(arc.begin(), arc.end());
    }
    if (arc.front() != st.to_prev || arc.back() != st.to_next)
      throw InternalInvariantViolation("shadow walk: boundary darts do not delimit the rotation");
    for (Dart d : arc) push(m.vertex_of(inv(d)));
  }

  ShadowWalk out;
  out.vertices = std::move(walk);
  out.start_in_left_shadow = patch.vtype[out.vertices.front()] == 0 &&
                             adjacent_or_equal(m, out.vertices.front(), patch.v0_left);
  out.end_in_right_shadow = patch.vtype[out.vertices.back()] == 0 &&
                            adjacent_or_equal(m, out.vertices.back(), patch.v0_right);
  return out;
}

bool is_trivial_cycle(const EmbeddedMap& m, const std::vector<int>& vtype,
                      const std::vector<Dart>& cycle) {
  const auto fidx = face_index(m);
  std::uint32_t nf = 0;
  for (auto f : fidx) nf = std::max(nf, f + 1);

  std::set<Edge> ce;
  std::set<Vertex> cv;
  for (Dart d : cycle) {
    ce.insert(edge_of(d));
    cv.insert(m.vertex_of(d));
  }

  std::vector<std::uint32_t> root(nf);
  std::iota(root.begin(), root.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (Edge e = 0; e < m.edge_count(); ++e)
    if (!ce.count(e)) root[find(fidx[2 * e])] = find(fidx[2 * e + 1]);

  std::set<std::uint32_t> sides;
  for (std::uint32_t f = 0; f < nf; ++f) sides.insert(find(f));
  if (sides.size() != 2) return false;

  for (std::uint32_t s : sides) {
    std::vector<Edge> ee;
    std::vector<Vertex> ev;
    for (Edge e = 0; e < m.edge_count(); ++e)
      if (!ce.count(e) && find(fidx[2 * e]) == s) ee.push_back(e);
    for (Vertex v = 0; v < m.vertex_count(); ++v)
      if (!cv.count(v) && find(fidx[m.first_dart(v)]) == s) ev.push_back(v);
    if (ev.empty() && ee.size() == 1) return true;
    if (ev.size() == 1 && vtype[ev[0]] == 1 && m.degree(ev[0]) == 4 && ee.size() == 4) {
      bool all_incident = true;
      for (Edge e : ee)
        if (m.endpoint(e, 0) != ev[0] && m.endpoint(e, 1) != ev[0]) all_incident = false;
      if (all_incident) return true;
    }
  }
  return false;
}

namespace {

// Searches a glued plane map for a 2-cycle or non-trivial 4-cycle.
std::optional<std::vector<Dart>> bad_cycle(const EmbeddedMap& m, const std::vector<int>& vtype) {
  // Parallel edges: any pair forms a 2-cycle; trivial ones are allowed.
  std::map<std::pair<Vertex, Vertex>, std::vector<Edge>> by_ends;
  for (Edge e = 0; e < m.edge_count(); ++e) {
    Vertex a = m.endpoint(e, 0), b = m.endpoint(e, 1);
    by_ends[{std::min(a, b), std::max(a, b)}].push_back(e);
  }
  for (const auto& [ends, es] : by_ends)
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        Dart d1 = 2 * es[i], d2 = 2 * es[j];
        if (m.vertex_of(d1) == m.vertex_of(d2)) d2 = inv(d2);
        std::vector<Dart> c = {d1, d2};
        if (!is_trivial_cycle(m, vtype, c)) return c;
      }

  // 4-cycles over distinct vertices, enumerated dart-wise so parallel edges
  // yield all variants; canonical start to avoid duplicates.
  for (Dart d1 = 0; d1 < m.dart_count(); ++d1) {
    const Vertex a = m.vertex_of(d1), b = m.vertex_of(inv(d1));
    if (b == a) continue;
    for (Dart d2 : m.darts_at(b)) {
      const Vertex c = m.vertex_of(inv(d2));
      if (c == a || c == b) continue;
      for (Dart d3 : m.darts_at(c)) {
        const Vertex d = m.vertex_of(inv(d3));
        if (d == a || d == b || d == c) continue;
        if (a != std::min({a, b, c, d}) || b >= d) continue;
        for (Dart d4 : m.darts_at(d)) {
          if (m.vertex_of(inv(d4)) != a) continue;
          std::vector<Dart> cyc = {d1, d2, d3, d4};
          if (!is_trivial_cycle(m, vtype, cyc)) return cyc;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

C3Check c3_necessary_check(const LopspOperation& o) {
  const std::size_t min_len = find_cut_path(o).size();
  std::size_t index = 0;
  for (const CutPath& p : enumerate_cut_paths(o, 1000000)) {
    ++index;
    if (p.size() != min_len) continue;
    const OpDiamond shares_2side = p_diamond(o, p);
    const OpDiamond shares_1side = glue_patches(o, p, PatchSide::v0v2);
    for (const auto* g : {&shares_2side, &shares_1side}) {
      if (auto c = bad_cycle(g->map, g->vtype)) {
        C3Check out;
        out.pass = false;
        out.witness_cycle = *c;
        out.context = (g == &shares_2side ? "two copies sharing the 2-side"
                                          : "two copies sharing a 1-side") +
                      std::string(" of minimal cut-path #") + std::to_string(index);
        return out;
      }
    }
  }
  return {true, {}, {}};
}

std::optional<std::vector<Vertex>> find_edge_path(const LopspOperation& o, const CutPath& p,
                                                  bool avoid_2points) {
  const OpDiamond dia = p_diamond(o, p);
  const ShadowWalk walk = shadow_connecting_walk(o, p);

  std::vector<bool> allowed(dia.map.vertex_count(), false);
  for (Vertex w : walk.vertices)
    for (int c : {0, 1}) allowed[dia.copy_vertex[c][w]] = true;

  const Vertex x = dia.copy_vertex[0][dia.patch.v0_left];
  const Vertex y = dia.copy_vertex[0][dia.patch.v0_right];
  std::vector<bool> banned(dia.map.vertex_count(), false);
  if (avoid_2points)
    for (int c : {0, 1}) banned[dia.copy_vertex[c][dia.patch.v2_copy]] = true;

  auto n0_of = [&](Vertex z) {
    std::vector<bool> out(dia.map.vertex_count(), false);
    if (dia.vtype[z] == 0) out[z] = true;
    for (Dart d : dia.map.darts_at(z)) {
      Vertex w = dia.map.vertex_of(inv(d));
      if (dia.vtype[w] == 0) out[w] = true;
    }
    return out;
  };
  const auto in_sx = n0_of(x), in_sy = n0_of(y);

  std::vector<Vertex> prev(dia.map.vertex_count(), kNoVertex);
  std::vector<bool> seen(dia.map.vertex_count(), false);
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < dia.map.vertex_count(); ++v)
    if (in_sx[v] && allowed[v] && !banned[v]) {
      seen[v] = true;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (in_sy[v]) {
      std::vector<Vertex> path;
      for (Vertex w = v; w != kNoVertex; w = prev[w]) path.push_back(w);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Dart d : dia.map.darts_at(v)) {
      Vertex w = dia.map.vertex_of(inv(d));
      // type-2 edges join type-0 and type-1 vertices
      if (dia.vtype[v] + dia.vtype[w] != 1) continue;
      if (seen[w] || !allowed[w] || banned[w]) continue;
      seen[w] = true;
      prev[w] = v;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace lopsp
