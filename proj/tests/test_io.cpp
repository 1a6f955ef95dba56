#include <doctest.h>

#include "fixtures.hpp"
#include "lopsp/catalog.hpp"
#include "lopsp/classify.hpp"
#include "lopsp/io.hpp"
#include "lopsp/typed_map.hpp"

using namespace lopsp;
using namespace lopsp::testing;

TEST_CASE("round trip is byte-for-byte stable") {
  for (const EmbeddedMap& m : {tetrahedron(), cube(), torus_bouquet()}) {
    const std::string text = print_rotsys(m);
    const RotsysDocument doc = parse_rotsys(text);
    CHECK(doc.map == m);
    CHECK(doc.map.name() == m.name());
    CHECK_FALSE(doc.is_typed());
    CHECK(print_rotsys(doc) == text);
  }
}

TEST_CASE("typed and marked documents round trip") {
  const TypedMap b = barycentric_subdivision(cube());
  const std::string tb = print_rotsys(b);
  const RotsysDocument db = parse_rotsys(tb);
  REQUIRE(db.is_typed());
  CHECK_FALSE(db.is_operation());
  CHECK(db.as_typed().types() == b.types());
  CHECK(print_rotsys(db) == tb);

  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const std::string to = print_rotsys(e.op);
    const RotsysDocument doc = parse_rotsys(to);
    REQUIRE(doc.is_operation());
    const LopspOperation op = doc.as_operation();
    CHECK(op.op.map() == e.op.op.map());
    CHECK(op.op.types() == e.op.op.types());
    CHECK(op.v0 == e.op.v0);
    CHECK(op.v1 == e.op.v1);
    CHECK(op.v2 == e.op.v2);
    CHECK(classify(op).tag == classify(e.op).tag);
    CHECK(print_rotsys(op) == to);
  }
}

TEST_CASE("parsing normalizes to canonical form") {
  // Rotated cycles and noise: cycles may start anywhere; comments, blank
  // lines and extra spaces disappear.
  const std::string text =
      "# a triangle\n"
      "rotsys v1\n"
      "\n"
      "name   tri angle\n"
      "vertices 3\n"
      "edges 3\n"
      "v1:  2  1   # rotated cycle\n"
      "v0: 4 0\n"
      "v2: 5 3\n";
  const RotsysDocument doc = parse_rotsys(text);
  CHECK(doc.map.name() == "tri angle");
  const std::string canon = print_rotsys(doc);
  CHECK(canon.find("v0: 0 4\n") != std::string::npos);
  CHECK(canon.find("v1: 1 2\n") != std::string::npos);
  CHECK(parse_rotsys(canon).map == doc.map);
  CHECK(print_rotsys(parse_rotsys(canon)) == canon);
}

TEST_CASE("syntax errors carry line positions") {
  auto expect_error = [](const std::string& text, int line) {
    try {
      parse_rotsys(text);
      FAIL_CHECK("no error for:\n" << text);
    } catch (const SyntaxError& e) {
      CHECK(e.line == line);
      CHECK(!e.expected.empty());
    }
  };
  expect_error("rotsys v2\n", 1);
  expect_error("rotsys v1\nvertices 3\n", 2);  // missing edges and rotations
  // edges says 3 but 8 darts are listed
  expect_error("rotsys v1\nvertices 2\nedges 3\nv0: 0 2 4 6\nv1: 1 3 5 7\n", 4);
  // dart out of range
  expect_error("rotsys v1\nvertices 2\nedges 1\nv0: 0 7\nv1: 1\n", 4);
  // duplicate vertex line
  expect_error("rotsys v1\nvertices 2\nedges 1\nv0: 0\nv0: 1\n", 5);
  // types count mismatch
  expect_error("rotsys v1\nvertices 2\nedges 1\nv0: 0\nv1: 1\ntypes: 0\n", 6);
  // special without types
  expect_error("rotsys v1\nvertices 2\nedges 1\nv0: 0\nv1: 1\nspecial: 0 1 0\n", 6);
  // bad type value
  expect_error("rotsys v1\nvertices 2\nedges 1\nv0: 0\nv1: 1\ntypes: 0 7\n", 6);
}

TEST_CASE("semantic errors surface from validation") {
  // 8 darts for 4 edges but dart 1 appears twice.
  CHECK_THROWS_AS(
      parse_rotsys("rotsys v1\nvertices 2\nedges 2\nv0: 0 1\nv1: 1 2\n"),
      BuildError);
  // Types violating the no-equal-type-edge rule.
  CHECK_THROWS_AS(
      parse_rotsys("rotsys v1\nvertices 2\nedges 1\nv0: 0\nv1: 1\ntypes: 0 0\n"),
      Error);
  // A marked triangulation that is no valid operation (marks on equal types).
  const std::string id = print_rotsys(catalog_entry("identity").op);
  std::string broken = id.substr(0, id.find("special:")) + "special: 0 0 0\n";
  CHECK_THROWS_AS(parse_rotsys(broken), Error);
}

TEST_CASE("accessors require the sections") {
  const RotsysDocument doc = parse_rotsys(print_rotsys(cube()));
  CHECK_THROWS_AS(doc.as_typed(), WrongType);
  CHECK_THROWS_AS(doc.as_operation(), WrongType);
}
