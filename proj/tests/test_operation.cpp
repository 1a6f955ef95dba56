#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "lopsp/operation.hpp"

using namespace lopsp;
using namespace lopsp::testing;

namespace {

// Triangle on vertices {0,1,2} with edges 0-1, 1-2, 0-2 and two faces.
EmbeddedMap triangle() { return EmbeddedMap::build(3, {{0, 4}, {1, 2}, {3, 5}}); }

LopspOperation identity_op() {
  return make_lopsp(TypedMap::make(triangle(), {0, 1, 2}), 0, 1, 2, "identity");
}

LopspOperation dual_op() {
  return make_lopsp(TypedMap::make(triangle(), {2, 1, 0}), 0, 1, 2, "dual");
}

}  // namespace

TEST_CASE("triangle fixture is a valid operation carrier") {
  auto t = triangle();
  CHECK(genus(t) == 0);
  CHECK(faces(t).size() == 2);
}

TEST_CASE("validate_lopsp accepts identity and dual") {
  CHECK(validate_lopsp(TypedMap::make(triangle(), {0, 1, 2}), 0, 1, 2).ok());
  CHECK(validate_lopsp(TypedMap::make(triangle(), {2, 1, 0}), 0, 1, 2).ok());
}

TEST_CASE("validate_lopsp rejects clause violations") {
  auto tm = TypedMap::make(triangle(), {0, 1, 2});
  // v0 of type 1
  auto r = validate_lopsp(tm, 1, 0, 2);
  CHECK_FALSE(r.ok());
  // marked vertices not distinct
  CHECK_FALSE(validate_lopsp(tm, 0, 0, 2).ok());
  // out of range
  CHECK_FALSE(validate_lopsp(tm, 7, 1, 2).ok());
  // v1 of type 1 with wrong degree: square with types 0,1,2,1 has a type-1
  // vertex of degree 2 that is not v1, plus non-triangular faces
  auto sq = TypedMap::make(cycle(4), {0, 1, 2, 1});
  auto r2 = validate_lopsp(sq, 0, 1, 2);
  CHECK_FALSE(r2.ok());
  CHECK(r2.violations.size() >= 2);  // triangle clause and type-1 degree clause
  // marked vertex of wrong type through make_lopsp
  CHECK_THROWS_AS(make_lopsp(TypedMap::make(triangle(), {0, 1, 2}), 1, 0, 2), InvalidOperation);
}

TEST_CASE("cut-paths of the triangle operations") {
  for (auto o : {identity_op(), dual_op()}) {
    auto p = find_cut_path(o);
    CHECK(p.size() == 2);
    CHECK(p.vertices == std::vector<Vertex>{1, 0, 2});
    CHECK(p.v0_index == 1);
    auto pf = find_cut_path(o, CutPathStrategy::first);
    CHECK(pf.vertices == p.vertices);
    auto all = enumerate_cut_paths(o, 10);
    CHECK(all.size() == 1);
  }
}

TEST_CASE("double chamber patch of dual") {
  auto o = dual_op();
  auto p = find_cut_path(o);
  auto patch = double_chamber_patch(o, p);
  CHECK(patch.patch.vertex_count() == 4);
  CHECK(patch.patch.edge_count() == 5);
  CHECK(genus(patch.patch) == 0);
  CHECK(faces(patch.patch).size() == 3);  // outer + |F_O| = 2 chambers
  CHECK(faces(patch.patch)[patch.outer_face].size() == 4);
  // pi is surjective onto the operation
  std::set<Vertex> vs(patch.pi_vertex.begin(), patch.pi_vertex.end());
  CHECK(vs == std::set<Vertex>{0, 1, 2});
  std::set<Edge> es(patch.pi_edge.begin(), patch.pi_edge.end());
  CHECK(es == std::set<Edge>{0, 1, 2});
  // boundary structure
  CHECK(patch.pi_vertex[patch.v1_copy] == o.v1);
  CHECK(patch.pi_vertex[patch.v2_copy] == o.v2);
  CHECK(patch.pi_vertex[patch.v0_left] == o.v0);
  CHECK(patch.pi_vertex[patch.v0_right] == o.v0);
  CHECK(patch.v0_left != patch.v0_right);
  CHECK(patch.left_vertices.size() == 3);
  CHECK(patch.left_edges.size() == 2);
  // left and right darts leave matching copies
  for (std::size_t j = 0; j < p.size(); ++j) {
    CHECK(patch.patch.vertex_of(patch.left_darts[j]) == patch.left_vertices[j]);
    CHECK(patch.patch.vertex_of(patch.right_darts[j]) == patch.right_vertices[j]);
  }
  // types transported through pi
  CHECK(patch.vtype[patch.v1_copy] == 1);
  CHECK(patch.vtype[patch.v2_copy] == 0);  // dual: t(v2) = 0
}

TEST_CASE("patch diamond of dual") {
  auto o = dual_op();
  auto p = find_cut_path(o);
  auto d = op_diamond(o, p);
  CHECK(d.map.vertex_count() == 6);
  CHECK(d.map.edge_count() == 9);
  CHECK(genus(d.map) == 0);
  // shared copies: v1 and one v0 copy
  CHECK(d.copy_vertex[0][d.patch.v1_copy] == d.copy_vertex[1][d.patch.v1_copy]);
  CHECK(d.copy_vertex[0][d.patch.v0_left] == d.copy_vertex[1][d.patch.v0_right]);
  // v2 copies stay distinct
  CHECK(d.copy_vertex[0][d.patch.v2_copy] != d.copy_vertex[1][d.patch.v2_copy]);
  // outer face exists and bounds the glued figure
  CHECK(d.outer_face < faces(d.map).size());

  auto g2 = glue_patches(o, p, PatchSide::v0v2);
  CHECK(g2.map.vertex_count() == 6);
  CHECK(g2.map.edge_count() == 9);
  CHECK(genus(g2.map) == 0);
  CHECK(g2.copy_vertex[0][g2.patch.v2_copy] == g2.copy_vertex[1][g2.patch.v2_copy]);
  CHECK(g2.copy_vertex[0][g2.patch.v1_copy] != g2.copy_vertex[1][g2.patch.v1_copy]);
}

TEST_CASE("inflation factors of the triangle operations") {
  CHECK(inflation_factor(identity_op()) == Rational{1, 1});
  CHECK(inflation_factor(dual_op()) == Rational{1, 1});
}
