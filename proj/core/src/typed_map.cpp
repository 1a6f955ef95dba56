#include "lopsp/typed_map.hpp"

#include <algorithm>
#include <set>

namespace lopsp {

TypedMap TypedMap::make(EmbeddedMap map, std::vector<int> vtype,
                        std::vector<Provenance> provenance) {
  if (vtype.size() != map.vertex_count())
    throw Error("type vector size does not match vertex count");
  for (int t : vtype)
    if (t < 0 || t > 2) throw Error("vertex type must be 0, 1 or 2");
  if (!provenance.empty() && provenance.size() != map.vertex_count())
    throw Error("provenance size does not match vertex count");
  for (Edge e = 0; e < map.edge_count(); ++e)
    if (vtype[map.endpoint(e, 0)] == vtype[map.endpoint(e, 1)])
      throw Error("edge " + std::to_string(e) + " joins two vertices of type " +
                  std::to_string(vtype[map.endpoint(e, 0)]));
  TypedMap t;
  t.map_ = std::move(map);
  t.vtype_ = std::move(vtype);
  t.provenance_ = std::move(provenance);
  return t;
}

TypedMap barycentric_subdivision(const EmbeddedMap& m) {
  const std::size_t V = m.vertex_count();
  const std::size_t E = m.edge_count();
  const Dart D = static_cast<Dart>(m.dart_count());
  auto fs = faces(m);
  auto fidx = face_index(m);
  const std::size_t F = fs.size();

  // One edge triple per dart d of m:
  //   a-edge d      : vertex(d) -- edge(d)     darts 2d (v side), 2d+1 (e side)
  //   b-edge D+d    : vertex(d) -- face(sigma(d))  darts 2(D+d), 2(D+d)+1
  //   c-edge 2D+d   : edge(d) -- face(d)       darts 2(2D+d), 2(2D+d)+1
  auto a_v = [](Dart d) { return 2 * d; };
  auto a_e = [](Dart d) { return 2 * d + 1; };
  auto b_v = [D](Dart d) { return 2 * (D + d); };
  auto b_f = [D](Dart d) { return 2 * (D + d) + 1; };
  auto c_e = [D](Dart d) { return 2 * (2 * D + d); };
  auto c_f = [D](Dart d) { return 2 * (2 * D + d) + 1; };

  std::vector<std::vector<Dart>> rot(V + E + F);
  for (Vertex v = 0; v < V; ++v) {
    auto& r = rot[v];
    for (Dart d : m.darts_at(v)) {
      r.push_back(a_v(d));
      r.push_back(b_v(d));
    }
  }
  for (Edge e = 0; e < E; ++e) {
    Dart u = dart_of(e, 0), w = dart_of(e, 1);
    rot[V + e] = {a_e(u), c_e(u), a_e(w), c_e(w)};
  }
  for (std::size_t f = 0; f < F; ++f) {
    auto& r = rot[V + E + f];
    const auto& walk = fs[f].darts;
    const std::size_t k = walk.size();
    // Facial walk in reverse, interleaving wall darts and angle darts.
    for (std::size_t j = 0; j < k; ++j) {
      Dart d = walk[(k - j) % k];
      r.push_back(c_f(d));
      r.push_back(b_f(m.sigma_inv(d)));
    }
  }

  std::vector<int> vtype(V + E + F);
  std::vector<Provenance> prov(V + E + F);
  for (Vertex v = 0; v < V; ++v) {
    vtype[v] = 0;
    prov[v] = {ElemKind::vertex, v};
  }
  for (Edge e = 0; e < E; ++e) {
    vtype[V + e] = 1;
    prov[V + e] = {ElemKind::edge, e};
  }
  for (std::uint32_t f = 0; f < F; ++f) {
    vtype[V + E + f] = 2;
    prov[V + E + f] = {ElemKind::face, f};
  }
  return TypedMap::make(EmbeddedMap::build(V + E + F, rot, m.name()), std::move(vtype),
                        std::move(prov));
}

std::vector<Chamber> chambers(const TypedMap& b) {
  std::vector<Chamber> out;
  for (const auto& f : faces(b.map())) {
    if (f.size() != 3) throw NotChamberStructured("face of size " + std::to_string(f.size()));
    Chamber c{};
    c.darts = {f.darts[0], f.darts[1], f.darts[2]};
    std::set<int> vtypes, etypes;
    for (Dart d : f.darts) {
      Vertex v = b.map().vertex_of(d);
      c.vertex[b.type(v)] = v;
      vtypes.insert(b.type(v));
      int et = b.edge_type(edge_of(d));
      c.edge[et] = edge_of(d);
      etypes.insert(et);
    }
    if (vtypes.size() != 3 || etypes.size() != 3)
      throw NotChamberStructured("face without one corner of each type");
    out.push_back(c);
  }
  return out;
}

TypedMap double_chamber_graph(const TypedMap& b) {
  try {
    chambers(b);
  } catch (const NotChamberStructured&) {
    throw NotBarycentric();
  }
  std::vector<Edge> new_id(b.map().edge_count(), kNoVertex);
  Edge next = 0;
  for (Edge e = 0; e < b.map().edge_count(); ++e)
    if (b.edge_type(e) != 0) new_id[e] = next++;
  std::vector<std::vector<Dart>> rot(b.map().vertex_count());
  for (Vertex v = 0; v < b.map().vertex_count(); ++v)
    for (Dart d : b.map().darts_at(v))
      if (new_id[edge_of(d)] != kNoVertex)
        rot[v].push_back(dart_of(new_id[edge_of(d)], d & 1u));
  auto prov = b.has_provenance()
                  ? std::vector<Provenance>(&b.provenance(0), &b.provenance(0) + b.map().vertex_count())
                  : std::vector<Provenance>{};
  return TypedMap::make(EmbeddedMap::build(rot.size(), rot, b.map().name()), b.types(),
                        std::move(prov));
}

std::vector<DoubleChamber> double_chambers(const TypedMap& dg) {
  std::vector<DoubleChamber> out;
  auto fs = faces(dg.map());
  for (std::uint32_t fi = 0; fi < fs.size(); ++fi) {
    const auto& w = fs[fi].darts;
    if (w.size() != 4) throw NotBarycentric();
    DoubleChamber dc{};
    dc.face = fi;
    int n0c = 0, n1c = 0, n2c = 0, s1 = 0, s2 = 0;
    for (Dart d : w) {
      Vertex v = dg.map().vertex_of(d);
      switch (dg.type(v)) {
        case 0:
          if (n0c < 2) dc.zero_points[n0c] = v;
          ++n0c;
          break;
        case 1:
          dc.one_point = v;
          ++n1c;
          break;
        case 2:
          dc.two_point = v;
          ++n2c;
          break;
      }
      int et = dg.edge_type(edge_of(d));
      if (et == 1) {
        if (s1 < 2) dc.one_sides[s1] = edge_of(d);
        ++s1;
      } else if (et == 2) {
        if (s2 < 2) dc.two_side[s2] = edge_of(d);
        ++s2;
      }
    }
    if (n0c != 2 || n1c != 1 || n2c != 1 || s1 != 2 || s2 != 2) throw NotBarycentric();
    out.push_back(dc);
  }
  return out;
}

Diamond diamond_around(const TypedMap& dg, Vertex one_point) {
  if (dg.type(one_point) != 1)
    throw WrongType("vertex " + std::to_string(one_point) + " has type " +
                    std::to_string(dg.type(one_point)) + ", expected 1");
  if (dg.map().degree(one_point) != 2) throw NotBarycentric();
  auto dcs = double_chambers(dg);
  auto fidx = face_index(dg.map());
  auto darts = dg.map().darts_at(one_point);
  Diamond d{};
  d.one_point = one_point;
  d.chambers[0] = dcs[fidx[darts[0]]];
  d.chambers[1] = dcs[fidx[darts[1]]];
  return d;
}

std::vector<Vertex> n0(const TypedMap& t, Vertex v) {
  std::set<Vertex> out;
  if (t.type(v) == 0) out.insert(v);
  for (Dart d : t.map().darts_at(v)) {
    Vertex w = t.map().vertex_of(inv(d));
    if (t.type(w) == 0) out.insert(w);
  }
  return {out.begin(), out.end()};
}

EmbeddedMap extract_primal(const TypedMap& b) {
  chambers(b);  // throws NotChamberStructured if not a triangulated typed map
  const auto& m = b.map();
  std::vector<Vertex> pvertex(m.vertex_count(), kNoVertex);
  std::vector<Edge> pedge(m.vertex_count(), kNoVertex);
  Vertex nv = 0;
  Edge ne = 0;
  for (Vertex v = 0; v < m.vertex_count(); ++v) {
    if (b.type(v) == 0) pvertex[v] = nv++;
    if (b.type(v) == 1) pedge[v] = ne++;
  }
  // Each type-1 vertex yields one primal edge via its two darts to type-0
  // neighbors; the reversed darts (at the type-0 side) become primal darts.
  std::vector<Dart> primal_dart(m.dart_count(), kNoDart);
  for (Vertex u = 0; u < m.vertex_count(); ++u) {
    if (b.type(u) != 1) continue;
    if (m.degree(u) != 4)
      throw NotChamberStructured("type-1 vertex of degree " + std::to_string(m.degree(u)));
    std::vector<Dart> to0;
    for (Dart d : m.darts_at(u))
      if (b.type(m.vertex_of(inv(d))) == 0) to0.push_back(inv(d));
    if (to0.size() != 2)
      throw NotChamberStructured("type-1 vertex without two type-0 neighbors");
    std::sort(to0.begin(), to0.end());
    primal_dart[to0[0]] = dart_of(pedge[u], 0);
    primal_dart[to0[1]] = dart_of(pedge[u], 1);
  }
  std::vector<std::vector<Dart>> rot(nv);
  for (Vertex v = 0; v < m.vertex_count(); ++v) {
    if (b.type(v) != 0) continue;
    for (Dart d : m.darts_at(v))
      if (primal_dart[d] != kNoDart) rot[pvertex[v]].push_back(primal_dart[d]);
  }
  return EmbeddedMap::build(nv, rot, m.name());
}

}  // namespace lopsp
