#include "lopsp/catalog.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace lopsp {

namespace {

// The dart of edge e leaving vertex v (loops not supported here).
Dart dart_from(const OperationSpec& s, Edge e, Vertex v) {
  if (s.edges[e][0] == v) return dart_of(e, 0);
  if (s.edges[e][1] == v) return dart_of(e, 1);
  throw Error("face lists inconsistent: vertex not on edge");
}

Vertex shared_vertex(const OperationSpec& s, Edge a, Edge b) {
  int hits = 0;
  Vertex found = kNoVertex;
  for (Vertex v : s.edges[a])
    if (v == s.edges[b][0] || v == s.edges[b][1]) {
      ++hits;
      found = v;
    }
  if (hits != 1) throw Error("consecutive face edges must share exactly one vertex");
  return found;
}

// Dart cycle of a face in its listed direction: dart i leaves the vertex
// shared by face edges i-1 and i.
std::vector<Dart> face_darts(const OperationSpec& s, const std::vector<Edge>& fe) {
  std::vector<Dart> out;
  const std::size_t k = fe.size();
  for (std::size_t i = 0; i < k; ++i)
    out.push_back(dart_from(s, fe[i], shared_vertex(s, fe[(i + k - 1) % k], fe[i])));
  return out;
}

}  // namespace

LopspOperation operation_from_faces(const OperationSpec& spec) {
  const std::size_t nf = spec.face_edges.size();
  std::vector<std::vector<Dart>> fwd(nf);
  for (std::size_t f = 0; f < nf; ++f) fwd[f] = face_darts(spec, spec.face_edges[f]);

  // Orient faces by 2-coloring the face-adjacency constraints: two slots of
  // the same edge must use opposite darts.
  std::map<Dart, std::vector<std::pair<std::size_t, std::size_t>>> slots;  // fwd dart -> (face, pos)
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t i = 0; i < fwd[f].size(); ++i) slots[fwd[f][i]].push_back({f, i});
  std::vector<std::vector<std::pair<std::size_t, bool>>> constraints(nf);  // (face, same orientation?)
  std::map<Edge, std::vector<std::pair<std::size_t, std::size_t>>> by_edge;
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t i = 0; i < fwd[f].size(); ++i) by_edge[edge_of(fwd[f][i])].push_back({f, i});
  for (const auto& [e, occ] : by_edge) {
    if (occ.size() != 2) throw Error("every edge must lie in exactly two face slots");
    auto [f1, i1] = occ[0];
    auto [f2, i2] = occ[1];
    // same forward dart -> orientations must differ; opposite darts -> same
    bool same = fwd[f1][i1] != fwd[f2][i2];
    constraints[f1].push_back({f2, same});
    constraints[f2].push_back({f1, same});
  }
  std::vector<int> orient(nf, -1);
  for (std::size_t start = 0; start < nf; ++start) {
    if (orient[start] != -1) continue;
    orient[start] = 0;
    std::queue<std::size_t> q;
    q.push(start);
    while (!q.empty()) {
      std::size_t f = q.front();
      q.pop();
      for (auto [g, same] : constraints[f]) {
        int want = same ? orient[f] : 1 - orient[f];
        if (orient[g] == -1) {
          orient[g] = want;
          q.push(g);
        } else if (orient[g] != want) {
          throw Error("face lists are not orientable");
        }
      }
    }
  }

  // sigma = (face successor) composed with inv.
  std::vector<Dart> fsucc(2 * spec.edges.size(), kNoDart);
  for (std::size_t f = 0; f < nf; ++f) {
    std::vector<Dart> cyc = fwd[f];
    if (orient[f] == 1) {
      std::reverse(cyc.begin(), cyc.end());
      for (Dart& d : cyc) d = inv(d);
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (fsucc[cyc[i]] != kNoDart) throw Error("face lists are not orientable");
      fsucc[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
  }
  std::vector<std::vector<Dart>> rot(spec.vtype.size());
  std::vector<bool> seen(fsucc.size(), false);
  for (Dart d0 = 0; d0 < fsucc.size(); ++d0) {
    if (seen[d0]) continue;
    Vertex v = spec.edges[edge_of(d0)][d0 & 1u];
    Dart d = d0;
    do {
      seen[d] = true;
      rot[v].push_back(d);
      d = fsucc[inv(d)];
    } while (d != d0);
  }
  auto tm = TypedMap::make(EmbeddedMap::build(rot.size(), rot, spec.name), spec.vtype);
  return make_lopsp(std::move(tm), spec.v0, spec.v1, spec.v2, spec.name);
}

LopspOperation swap_markers(const LopspOperation& o, std::string name) {
  LopspOperation out = o;
  std::swap(out.v0, out.v2);
  out.name = std::move(name);
  return out;
}

LopspOperation flip_types(const LopspOperation& o, std::string name) {
  std::vector<int> t = o.op.types();
  for (int& x : t) x = 2 - x;
  auto tm = TypedMap::make(o.op.map().with_name(name), std::move(t));
  return make_lopsp(std::move(tm), o.v0, o.v1, o.v2, name);
}

namespace {

LopspOperation build_identity() {
  OperationSpec s;
  s.name = "identity";
  s.vtype = {0, 1, 2};
  s.edges = {{0, 1}, {1, 2}, {0, 2}};
  s.face_edges = {{0, 1, 2}, {0, 1, 2}};
  s.v0 = 0;
  s.v1 = 1;
  s.v2 = 2;
  return operation_from_faces(s);
}

LopspOperation build_ambo() {
  // vertices: 0=v0(2), 1=v1(0), 2=v2(2), 3=y(1)
  OperationSpec s;
  s.name = "ambo";
  s.vtype = {2, 0, 2, 1};
  s.edges = {{3, 1}, {3, 1}, {3, 0}, {3, 2}, {0, 1}, {1, 2}};
  //          a1      a2      b       c       d       e
  s.face_edges = {{0, 4, 2}, {2, 4, 1}, {1, 5, 3}, {3, 5, 0}};
  s.v0 = 0;
  s.v1 = 1;
  s.v2 = 2;
  return operation_from_faces(s);
}

LopspOperation build_truncation() {
  // vertices: 0=v0(2), 1=v1(1), 2=v2(2), 3=x(0), 4=y(1)
  OperationSpec s;
  s.name = "truncation";
  s.vtype = {2, 1, 2, 0, 1};
  s.edges = {{3, 1}, {3, 2}, {3, 2}, {3, 4}, {3, 4}, {3, 0}, {1, 2}, {2, 4}, {4, 0}};
  //          A       B1      B2      C1      C2      D       E       F       G
  s.face_edges = {{0, 6, 1}, {1, 7, 3}, {3, 8, 5}, {5, 8, 4}, {4, 7, 2}, {2, 6, 0}};
  s.v0 = 0;
  s.v1 = 1;
  s.v2 = 2;
  return operation_from_faces(s);
}

LopspOperation build_chamfer() {
  // vertices: 0=v0(0), 1=v1(2), 2=v2(2), 3=x(0), 4=y(1), 5=z(1)
  OperationSpec s;
  s.name = "chamfer";
  s.vtype = {0, 2, 2, 0, 1, 1};
  s.edges = {{0, 4}, {0, 1}, {1, 3}, {1, 3}, {1, 4}, {1, 4},
             {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {3, 5}};
  //          p       q       r1      r2      s1      s2
  //          t       u       w       m       n1      n2
  s.face_edges = {{0, 4, 1}, {1, 5, 0}, {7, 10, 8}, {8, 11, 7},
                  {9, 4, 2}, {3, 5, 9}, {10, 6, 2}, {11, 6, 3}};
  s.v0 = 0;
  s.v1 = 1;
  s.v2 = 2;
  return operation_from_faces(s);
}

LopspOperation build_gyro() {
  // vertices: 0=v0(0), 1=v1(1), 2=v2(0), 3=x(0), 4=y(1), 5=z(1), 6=f(2)
  OperationSpec s;
  s.name = "gyro";
  s.vtype = {0, 1, 0, 0, 1, 1, 2};
  s.edges = {{0, 6}, {0, 4}, {2, 6}, {2, 5}, {1, 6}, {1, 3}, {4, 6}, {4, 6},
             {5, 6}, {5, 6}, {3, 6}, {3, 6}, {3, 6}, {3, 4}, {3, 5}};
  //          a       b       c       d       e       g       h1      h2
  //          i1      i2      j1      j2      j3      k       l
  s.face_edges = {{0, 1, 6}, {7, 1, 0}, {2, 3, 8}, {9, 3, 2}, {4, 5, 10},
                  {11, 5, 4}, {6, 13, 10}, {12, 13, 7}, {8, 14, 12}, {11, 14, 9}};
  s.v0 = 0;
  s.v1 = 1;
  s.v2 = 2;
  return operation_from_faces(s);
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  auto identity = build_identity();
  auto ambo = build_ambo();
  auto truncation = build_truncation();
  auto leapfrog = swap_markers(truncation, "leapfrog");
  out.push_back({"identity", identity, "Identity", {8, 12, 6}});
  out.push_back({"dual", swap_markers(identity, "dual"), "Dual", {6, 12, 8}});
  out.push_back({"ambo", ambo, "EdgePreserving", {12, 24, 14}});
  out.push_back({"join", flip_types(ambo, "join"), "EdgeBreakingType2", {14, 24, 12}});
  out.push_back({"truncation", truncation, "EdgePreserving", {24, 36, 14}});
  out.push_back({"leapfrog", leapfrog, "EdgePreserving", {24, 36, 14}});
  out.push_back({"kis", flip_types(leapfrog, "kis"), "EdgePreserving", {14, 36, 24}});
  out.push_back({"chamfer", build_chamfer(), "EdgePreserving", {32, 48, 18}});
  out.push_back({"gyro", build_gyro(), "EdgePreserving", {38, 60, 24}});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = build_catalog();
  return c;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw UnknownOperation(name);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) out.push_back(e.name);
  return out;
}

}  // namespace lopsp
