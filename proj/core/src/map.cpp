#include "lopsp/map.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace lopsp {

// ---------------------------------------------------------------------------
// Construction

EmbeddedMap EmbeddedMap::build(std::size_t vertex_count,
                               const std::vector<std::vector<Dart>>& rotations,
                               std::string name) {
  if (rotations.size() != vertex_count)
    throw BuildError("rotation cycle count does not match vertex count");
  std::size_t dart_count = 0;
  for (const auto& cyc : rotations) dart_count += cyc.size();
  if (dart_count == 0 || dart_count % 2 != 0) throw EmptyEdgeSet();

  EmbeddedMap m;
  m.sigma_.assign(dart_count, kNoDart);
  m.sigma_inv_.assign(dart_count, kNoDart);
  m.vertex_of_.assign(dart_count, kNoVertex);
  m.degree_first_dart_.assign(vertex_count, {0, kNoDart});
  m.name_ = std::move(name);

  for (Vertex v = 0; v < vertex_count; ++v) {
    const auto& cyc = rotations[v];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Dart d = cyc[i];
      if (d >= dart_count) throw DanglingDart(d);
      if (m.vertex_of_[d] != kNoVertex) throw DuplicateDart(d);
      m.vertex_of_[d] = v;
      m.sigma_[d] = cyc[(i + 1) % cyc.size()];
      m.sigma_inv_[cyc[(i + 1) % cyc.size()]] = d;
    }
    m.degree_first_dart_[v].first = static_cast<std::uint32_t>(cyc.size());
    m.degree_first_dart_[v].second =
        cyc.empty() ? kNoDart : *std::min_element(cyc.begin(), cyc.end());
  }
  for (Dart d = 0; d < dart_count; ++d)
    if (m.vertex_of_[d] == kNoVertex) throw DanglingDart(d);

  // Connectivity over darts: moves sigma and inv span the whole map.
  std::vector<bool> seen(dart_count, false);
  std::vector<Dart> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    for (Dart n : {m.sigma_[d], inv(d)}) {
      if (!seen[n]) {
        seen[n] = true;
        ++reached;
        stack.push_back(n);
      }
    }
  }
  if (reached != dart_count) throw DisconnectedGraph();
  for (Vertex v = 0; v < vertex_count; ++v)
    if (rotations[v].empty()) throw DisconnectedGraph();  // isolated vertex
  return m;
}

std::vector<Dart> EmbeddedMap::darts_at(Vertex v) const {
  std::vector<Dart> out;
  out.reserve(degree(v));
  Dart d0 = first_dart(v);
  Dart d = d0;
  do {
    out.push_back(d);
    d = sigma(d);
  } while (d != d0);
  return out;
}

// ---------------------------------------------------------------------------
// Faces / genus / dual

std::vector<FaceWalk> faces(const EmbeddedMap& m) {
  std::vector<FaceWalk> out;
  std::vector<bool> seen(m.dart_count(), false);
  for (Dart d0 = 0; d0 < m.dart_count(); ++d0) {
    if (seen[d0]) continue;
    FaceWalk w;
    Dart d = d0;
    do {
      seen[d] = true;
      w.darts.push_back(d);
      d = m.sigma(inv(d));
    } while (d != d0);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::uint32_t> face_index(const EmbeddedMap& m) {
  std::vector<std::uint32_t> idx(m.dart_count(), 0);
  auto fs = faces(m);
  for (std::uint32_t i = 0; i < fs.size(); ++i)
    for (Dart d : fs[i].darts) idx[d] = i;
  return idx;
}

int genus(const EmbeddedMap& m) {
  long v = static_cast<long>(m.vertex_count());
  long e = static_cast<long>(m.edge_count());
  long f = static_cast<long>(faces(m).size());
  long twice = 2 - v + e - f;
  if (twice < 0 || twice % 2 != 0)
    throw NonOrientableInconsistency("Euler formula gives invalid genus " +
                                     std::to_string(twice) + "/2");
  return static_cast<int>(twice / 2);
}

EmbeddedMap dual(const EmbeddedMap& m) {
  // Dual vertex i = face i of m; the rotation at it is the facial walk
  // reversed, so the dual carries the orientation that makes it agree with
  // applying the dual operation as a vertex/face exchange.
  auto fs = faces(m);
  std::vector<std::vector<Dart>> rot;
  rot.reserve(fs.size());
  for (auto& f : fs) rot.emplace_back(f.darts.rbegin(), f.darts.rend());
  return EmbeddedMap::build(rot.size(), rot, m.name().empty() ? "" : m.name() + "*");
}

bool is_simple(const EmbeddedMap& m) {
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (Edge e = 0; e < m.edge_count(); ++e) {
    Vertex a = m.endpoint(e, 0), b = m.endpoint(e, 1);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    if (!pairs.insert({a, b}).second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Connectivity

namespace {

// Is the graph minus `removed` connected (on its remaining vertices)?
bool connected_without(const EmbeddedMap& m, const std::vector<bool>& removed) {
  std::size_t n = m.vertex_count();
  Vertex start = kNoVertex;
  std::size_t remaining = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) {
      if (start == kNoVertex) start = v;
      ++remaining;
    }
  if (remaining <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Dart d : m.darts_at(v)) {
      Vertex w = m.vertex_of(inv(d));
      if (!removed[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == remaining;
}

bool any_cut_of_size(const EmbeddedMap& m, int size, std::vector<Vertex>& chosen,
                     Vertex from, std::vector<bool>& removed) {
  if (static_cast<int>(chosen.size()) == size)
    return !connected_without(m, removed);
  for (Vertex v = from; v < m.vertex_count(); ++v) {
    chosen.push_back(v);
    removed[v] = true;
    if (any_cut_of_size(m, size, chosen, v + 1, removed)) return true;
    removed[v] = false;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool is_k_connected(const EmbeddedMap& m, int k) {
  if (k < 1) throw Error("k must be >= 1");
  if (m.vertex_count() < static_cast<std::size_t>(k) + 1) return false;
  for (int s = 1; s < k; ++s) {
    std::vector<Vertex> chosen;
    std::vector<bool> removed(m.vertex_count(), false);
    if (any_cut_of_size(m, s, chosen, 0, removed)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Polyhedrality

bool is_polyhedral(const EmbeddedMap& m) {
  auto fs = faces(m);
  std::vector<std::set<Vertex>> fverts(fs.size());
  std::vector<std::set<Edge>> fedges(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& w = fs[i].darts;
    if (w.size() < 2) return false;
    for (Dart d : w) {
      // A facial walk that is a simple cycle visits distinct vertices and has
      // no loop edges.
      if (m.vertex_of(d) == m.vertex_of(inv(d))) return false;
      if (!fverts[i].insert(m.vertex_of(d)).second) return false;
      if (!fedges[i].insert(edge_of(d)).second) return false;
    }
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      std::vector<Vertex> vcap;
      std::set_intersection(fverts[i].begin(), fverts[i].end(), fverts[j].begin(),
                            fverts[j].end(), std::back_inserter(vcap));
      std::vector<Edge> ecap;
      std::set_intersection(fedges[i].begin(), fedges[i].end(), fedges[j].begin(),
                            fedges[j].end(), std::back_inserter(ecap));
      if (ecap.size() > 1) return false;
      if (ecap.size() == 1) {
        Edge e = ecap[0];
        std::set<Vertex> ends{m.endpoint(e, 0), m.endpoint(e, 1)};
        if (std::set<Vertex>(vcap.begin(), vcap.end()) != ends) return false;
      } else if (vcap.size() > 1) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Subgraphs / bridges / internal components

SubgraphMask SubgraphMask::from_edges(const EmbeddedMap& host,
                                      const std::vector<Edge>& edges) {
  SubgraphMask s;
  s.vertex_set.assign(host.vertex_count(), false);
  s.edge_set.assign(host.edge_count(), false);
  for (Edge e : edges) {
    s.edge_set[e] = true;
    s.vertex_set[host.endpoint(e, 0)] = true;
    s.vertex_set[host.endpoint(e, 1)] = true;
  }
  return s;
}

namespace {

bool mask_connected(const EmbeddedMap& host, const SubgraphMask& s) {
  Vertex start = kNoVertex;
  std::size_t total = 0;
  for (Vertex v = 0; v < host.vertex_count(); ++v)
    if (s.vertex_set[v]) {
      if (start == kNoVertex) start = v;
      ++total;
    }
  if (start == kNoVertex) return false;
  std::vector<bool> seen(host.vertex_count(), false);
  std::vector<Vertex> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Dart d : host.darts_at(v)) {
      if (!s.edge_set[edge_of(d)]) continue;
      Vertex w = host.vertex_of(inv(d));
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == total;
}

bool is_subgraph_dart(const SubgraphMask& s, Dart d) { return s.edge_set[edge_of(d)]; }

// Next subgraph dart at the same vertex, strictly after d in rotation order.
Dart next_subgraph_dart(const EmbeddedMap& host, const SubgraphMask& s, Dart d) {
  Dart n = host.sigma(d);
  while (!is_subgraph_dart(s, n)) n = host.sigma(n);
  return n;
}

}  // namespace

std::vector<FaceWalk> subgraph_faces(const EmbeddedMap& host, const SubgraphMask& s) {
  if (!mask_connected(host, s)) throw SubgraphNotConnected();
  std::vector<FaceWalk> out;
  std::set<Dart> seen;
  for (Dart d0 = 0; d0 < host.dart_count(); ++d0) {
    if (!is_subgraph_dart(s, d0) || seen.count(d0)) continue;
    FaceWalk w;
    Dart d = d0;
    do {
      seen.insert(d);
      w.darts.push_back(d);
      d = next_subgraph_dart(host, s, inv(d));
    } while (d != d0);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Bridge> find_bridges(const EmbeddedMap& host, const SubgraphMask& s) {
  auto walks = subgraph_faces(host, s);  // validates connectivity

  // Angle lookup: for every non-subgraph dart at a subgraph vertex, which
  // (face, angle) is it in?  Angle i of a walk is the corner at the start of
  // the walk's i-th dart.
  std::map<Dart, std::pair<std::uint32_t, std::uint32_t>> angle_of;
  for (std::uint32_t fi = 0; fi < walks.size(); ++fi) {
    const auto& w = walks[fi].darts;
    for (std::uint32_t i = 0; i < w.size(); ++i) {
      Dart prev_in = inv(w[(i + w.size() - 1) % w.size()]);
      for (Dart d = host.sigma(prev_in); d != w[i]; d = host.sigma(d))
        angle_of[d] = {fi, i};
    }
  }

  // Components of the graph induced by vertices outside the subgraph.
  std::vector<std::int64_t> comp(host.vertex_count(), -1);
  std::int64_t ncomp = 0;
  for (Vertex v = 0; v < host.vertex_count(); ++v) {
    if (s.vertex_set[v] || comp[v] >= 0) continue;
    std::vector<Vertex> stack{v};
    comp[v] = ncomp;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Dart d : host.darts_at(u)) {
        Vertex w = host.vertex_of(inv(d));
        if (!s.vertex_set[w] && comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }

  std::vector<Bridge> bridges(static_cast<std::size_t>(ncomp));
  for (auto& b : bridges) b.kind = Bridge::Kind::component;
  for (Vertex v = 0; v < host.vertex_count(); ++v)
    if (comp[v] >= 0) bridges[comp[v]].inner_vertices.push_back(v);

  auto bridge_of_edge = [&](Edge e) -> Bridge& {
    Vertex a = host.endpoint(e, 0), b = host.endpoint(e, 1);
    if (!s.vertex_set[a]) return bridges[comp[a]];
    if (!s.vertex_set[b]) return bridges[comp[b]];
    // chord: gets its own bridge, created by caller
    throw InternalInvariantViolation("chord looked up as component edge");
  };

  for (Edge e = 0; e < host.edge_count(); ++e) {
    if (s.edge_set[e]) continue;
    Vertex a = host.endpoint(e, 0), b = host.endpoint(e, 1);
    if (s.vertex_set[a] && s.vertex_set[b]) {
      Bridge chord;
      chord.kind = Bridge::Kind::chord;
      chord.edges.push_back(e);
      bridges.push_back(std::move(chord));
    } else {
      bridge_of_edge(e).edges.push_back(e);
    }
  }

  // Attachments: darts of bridge edges leaving subgraph vertices.
  for (auto& b : bridges) {
    for (Edge e : b.edges) {
      for (int side : {0, 1}) {
        Dart d = dart_of(e, side);
        if (!s.vertex_set[host.vertex_of(d)]) continue;
        auto it = angle_of.find(d);
        if (it == angle_of.end())
          throw InternalInvariantViolation("attachment dart not found in any angle");
        b.attachments.push_back({d, it->second.first, it->second.second});
      }
    }
    std::set<std::uint32_t> fs;
    for (const auto& a : b.attachments) fs.insert(a.face);
    b.in_faces.assign(fs.begin(), fs.end());
  }
  return bridges;
}

InternalComponent internal_component(const EmbeddedMap& host, const SubgraphMask& s,
                                     std::uint32_t face) {
  auto walks = subgraph_faces(host, s);
  if (face >= walks.size()) throw Error("face index out of range");
  const auto& walk = walks[face].darts;
  const std::size_t L = walk.size();

  auto bridges = find_bridges(host, s);
  std::vector<const Bridge*> in_face;
  for (const auto& b : bridges) {
    bool touches = false;
    for (auto f : b.in_faces)
      if (f == face) touches = true;
    if (!touches) continue;
    if (b.in_faces.size() != 1) throw FaceNotSimple();
    in_face.push_back(&b);
  }

  InternalComponent ic;
  // Vertex ids: boundary copies first (c_0..c_{L-1}), then interior vertices.
  std::vector<Vertex> interior_of_host(host.vertex_count(), kNoVertex);
  Vertex next_vertex = static_cast<Vertex>(L);
  for (const Bridge* b : in_face)
    for (Vertex v : b->inner_vertices) {
      interior_of_host[v] = next_vertex++;
      ic.vertex_label.push_back(v);
    }
  // Edge ids: boundary copies first (b_0..b_{L-1}), then bridge edge copies.
  std::map<Edge, Edge> copy_of_edge;
  Edge next_edge = static_cast<Edge>(L);
  for (const Bridge* b : in_face)
    for (Edge e : b->edges) {
      copy_of_edge[e] = next_edge++;
    }

  ic.boundary_vertices.resize(L);
  ic.boundary_edges.resize(L);
  std::vector<Vertex> vlabels(static_cast<std::size_t>(L), kNoVertex);
  for (std::size_t i = 0; i < L; ++i) {
    ic.boundary_vertices[i] = static_cast<Vertex>(i);
    ic.boundary_edges[i] = static_cast<Edge>(i);
    vlabels[i] = host.vertex_of(walk[i]);
  }
  // Final vertex labels: boundary copies then interior (already pushed).
  ic.vertex_label.insert(ic.vertex_label.begin(), vlabels.begin(), vlabels.end());
  ic.edge_label.resize(next_edge);
  for (std::size_t i = 0; i < L; ++i) ic.edge_label[i] = edge_of(walk[i]);
  for (const auto& [he, ce] : copy_of_edge) ic.edge_label[ce] = he;

  // Dart copies: boundary edge b_i has dart 2*b_i at c_i (copy of walk[i]) and
  // 2*b_i+1 at c_{i+1}.  A bridge edge copy e' of host edge e maps host dart
  // 2e+k to 2e'+k.
  auto bridge_dart_copy = [&](Dart d) -> Dart {
    return 2 * copy_of_edge.at(edge_of(d)) + (d & 1u);
  };

  std::vector<std::vector<Dart>> rot(next_vertex);
  for (std::size_t i = 0; i < L; ++i) {
    // Rotation at c_i: incoming boundary edge, the darts of angle i, outgoing
    // boundary edge.  Angle i holds the host darts strictly between
    // inv(walk[i-1]) and walk[i].
    std::size_t prev = (i + L - 1) % L;
    std::vector<Dart>& r = rot[i];
    r.push_back(2 * static_cast<Dart>(ic.boundary_edges[prev]) + 1);  // toward c_{i-1}
    for (Dart d = host.sigma(inv(walk[prev])); d != walk[i]; d = host.sigma(d))
      r.push_back(bridge_dart_copy(d));
    r.push_back(2 * static_cast<Dart>(ic.boundary_edges[i]));  // toward c_{i+1}
  }
  for (const Bridge* b : in_face)
    for (Vertex v : b->inner_vertices) {
      std::vector<Dart>& r = rot[interior_of_host[v]];
      for (Dart d : host.darts_at(v)) r.push_back(bridge_dart_copy(d));
    }

  ic.map = EmbeddedMap::build(next_vertex, rot);

  // The outer face is the far side of C: it traverses the boundary backwards
  // via the darts 2*b_i+1.
  auto fidx = face_index(ic.map);
  ic.outer_face = fidx[2 * static_cast<Dart>(ic.boundary_edges[0]) + 1];
  return ic;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

// BFS code from a start dart: vertices numbered in discovery order, each
// vertex's rotation read from its entry dart, edges numbered in order of first
// traversal.  The emitted edge-id sequence reconstructs the map uniquely.
std::vector<std::uint32_t> bfs_code(const EmbeddedMap& m, Dart start) {
  constexpr std::uint32_t kSep = static_cast<std::uint32_t>(-2);
  std::vector<std::uint32_t> code;
  code.reserve(m.dart_count() + m.vertex_count());
  std::vector<Dart> entry(m.vertex_count(), kNoDart);
  std::vector<std::uint32_t> edge_id(m.edge_count(), static_cast<std::uint32_t>(-1));
  std::uint32_t next_edge = 0;
  std::vector<Vertex> order;
  order.reserve(m.vertex_count());

  entry[m.vertex_of(start)] = start;
  order.push_back(m.vertex_of(start));
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    Vertex v = order[qi];
    Dart d = entry[v];
    do {
      Edge e = edge_of(d);
      if (edge_id[e] == static_cast<std::uint32_t>(-1)) {
        edge_id[e] = next_edge++;
        Vertex w = m.vertex_of(inv(d));
        if (entry[w] == kNoDart) {
          entry[w] = inv(d);
          order.push_back(w);
        }
      }
      code.push_back(edge_id[e]);
      d = m.sigma(d);
    } while (d != entry[v]);
    code.push_back(kSep);
  }
  return code;
}

}  // namespace

std::string canonical_form(const EmbeddedMap& m) {
  std::vector<std::uint32_t> best;
  for (Dart d = 0; d < m.dart_count(); ++d) {
    auto code = bfs_code(m, d);
    if (best.empty() || code < best) best = std::move(code);
  }
  std::string out;
  out.reserve(best.size() * 4);
  for (std::uint32_t x : best) {
    out.push_back(static_cast<char>(x & 0xff));
    out.push_back(static_cast<char>((x >> 8) & 0xff));
    out.push_back(static_cast<char>((x >> 16) & 0xff));
    out.push_back(static_cast<char>((x >> 24) & 0xff));
  }
  return out;
}

bool is_isomorphic(const EmbeddedMap& a, const EmbeddedMap& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace lopsp
