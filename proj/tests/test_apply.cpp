#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "lopsp/apply.hpp"
#include "lopsp/catalog.hpp"

using namespace lopsp;
using namespace lopsp::testing;

TEST_CASE("identity reproduces the host") {
  for (const EmbeddedMap& g : {cube(), tetrahedron()}) {
    const auto r = apply_lopsp(catalog_entry("identity").op, g);
    CHECK(is_isomorphic(r.result, g));
    CHECK(genus(r.b_result.map()) == genus(g));
  }
}

TEST_CASE("dual application matches the dual construction") {
  const EmbeddedMap c = cube();
  const auto r = apply_lopsp(catalog_entry("dual").op, c);
  CHECK(r.result.vertex_count() == 6);
  CHECK(r.result.edge_count() == 12);
  CHECK(faces(r.result).size() == 8);
  CHECK(is_isomorphic(r.result, dual(c)));

  const auto again = apply_lopsp(catalog_entry("dual").op, r.result);
  CHECK(is_isomorphic(again.result, c));
}

TEST_CASE("catalog operations on the cube give the classical counts") {
  const EmbeddedMap c = cube();
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    const auto r = apply_lopsp(entry.op, c);
    CHECK(r.result.vertex_count() == entry.cube_counts[0]);
    CHECK(r.result.edge_count() == entry.cube_counts[1]);
    CHECK(faces(r.result).size() == entry.cube_counts[2]);
    CHECK(genus(r.result) == 0);
    CHECK(is_polyhedral(r.result));

    const Rational f = inflation_factor(entry.op);
    CHECK(r.result.edge_count() * f.den ==
          c.edge_count() * static_cast<std::size_t>(f.num));
  }
}

TEST_CASE("application preserves genus") {
  const EmbeddedMap t = torus_bouquet();
  for (const char* name : {"ambo", "truncation", "dual"}) {
    CAPTURE(name);
    const auto r = apply_lopsp(catalog_entry(name).op, t);
    CHECK(genus(r.result) == 1);
    CHECK(genus(r.b_result.map()) == 1);
  }
}

TEST_CASE("leapfrog factors as truncation after dual") {
  const EmbeddedMap c = cube();
  const auto lf = apply_lopsp(catalog_entry("leapfrog").op, c);
  const auto td = apply_lopsp(catalog_entry("truncation").op, dual(c));
  CHECK(is_isomorphic(lf.result, td.result));
}

TEST_CASE("the result does not depend on the cut-path") {
  const auto& o = catalog_entry("truncation").op;
  const EmbeddedMap c = cube();
  const auto reference = apply_lopsp(o, c);
  for (const CutPath& p : enumerate_cut_paths(o, 4)) {
    const auto r = apply_lopsp(o, c, p);
    CHECK(is_isomorphic(r.result, reference.result));
  }
}

TEST_CASE("projection and side tables are consistent") {
  const auto& entry = catalog_entry("ambo");
  const EmbeddedMap c = cube();
  const auto r = apply_lopsp(entry.op, c);
  const EmbeddedMap& b = r.b_result.map();

  // Types are carried through the projection.
  for (Vertex v = 0; v < b.vertex_count(); ++v)
    CHECK(r.b_result.type(v) == entry.op.op.type(r.pi_vertex[v]));

  // Every operation vertex and edge has a preimage.
  std::vector<bool> vhit(entry.op.op.map().vertex_count(), false);
  std::vector<bool> ehit(entry.op.op.map().edge_count(), false);
  for (Vertex v = 0; v < b.vertex_count(); ++v) vhit[r.pi_vertex[v]] = true;
  for (Edge e = 0; e < b.edge_count(); ++e) ehit[r.pi_edge[e]] = true;
  CHECK(std::all_of(vhit.begin(), vhit.end(), [](bool x) { return x; }));
  CHECK(std::all_of(ehit.begin(), ehit.end(), [](bool x) { return x; }));

  // The whole operation pulls back to the whole subdivision.
  SubgraphMask all;
  all.vertex_set.assign(entry.op.op.map().vertex_count(), true);
  all.edge_set.assign(entry.op.op.map().edge_count(), true);
  const SubgraphMask pre = pi_inverse(r, all);
  CHECK(std::all_of(pre.vertex_set.begin(), pre.vertex_set.end(),
                    [](bool x) { return x; }));

  // Distinguished points carry the marked vertices' projections.
  for (Vertex v = 0; v < c.vertex_count(); ++v)
    CHECK(r.pi_vertex[r.zero_point[v]] == entry.op.v0);
  for (Edge e = 0; e < c.edge_count(); ++e)
    CHECK(r.pi_vertex[r.one_point[e]] == entry.op.v1);
  for (std::uint32_t f = 0; f < faces(c).size(); ++f)
    CHECK(r.pi_vertex[r.two_point[f]] == entry.op.v2);
}

namespace {
EmbeddedMap mirror(const EmbeddedMap& m) {
  std::vector<std::vector<Dart>> rot(m.vertex_count());
  for (Vertex v = 0; v < m.vertex_count(); ++v) {
    rot[v] = m.darts_at(v);
    std::reverse(rot[v].begin(), rot[v].end());
  }
  return EmbeddedMap::build(m.vertex_count(), rot);
}
}  // namespace

TEST_CASE("gyro of the cube is chiral, chamfer is not") {
  const EmbeddedMap c = cube();
  const EmbeddedMap gy = apply_lopsp(catalog_entry("gyro").op, c).result;
  CHECK_FALSE(is_isomorphic(gy, mirror(gy)));
  const EmbeddedMap ch = apply_lopsp(catalog_entry("chamfer").op, c).result;
  CHECK(is_isomorphic(ch, mirror(ch)));
}

TEST_CASE("shadows") {
  const EmbeddedMap c = cube();

  // Identity: each host vertex casts exactly itself.
  const auto id = apply_lopsp(catalog_entry("identity").op, c);
  std::vector<bool> seen(c.vertex_count(), false);
  for (Vertex v = 0; v < c.vertex_count(); ++v) {
    REQUIRE(vertex_shadow(id, v).size() == 1);
    seen[vertex_shadow(id, v)[0]] = true;
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }));

  // Dual: a host vertex's shadow is the result face around it, one result
  // vertex per incident host face.
  const auto du = apply_lopsp(catalog_entry("dual").op, c);
  for (Vertex v = 0; v < c.vertex_count(); ++v)
    CHECK(vertex_shadow(du, v).size() == c.degree(v));
  for (std::uint32_t f = 0; f < faces(c).size(); ++f)
    CHECK(face_shadow(du, f).size() == 1);

  CHECK_THROWS_AS(vertex_shadow(id, 1000), UnknownVertex);
}
