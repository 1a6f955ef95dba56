#pragma once
// Theorem-level verification: breaking predicates, host corpora, pinned
// counterexamples, and reproduction of the connectivity summary table.

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "lopsp/apply.hpp"
#include "lopsp/map.hpp"

namespace lopsp {

// ---------------------------------------------------------------------------
// Breaking predicates

// True iff the cut X (|X| <= 2, result vertices) breaks host vertex v: the
// whole vertex-shadow of v lies in X, or the shadow minus X meets at least
// two components of result minus X.
bool breaks_vertex(const ApplicationResult& r, const std::vector<Vertex>& X, Vertex v);

// True iff X breaks the host edge {v, w}: no component of result minus X
// contains vertices of both shadows.  A shadow fully contained in X counts
// as broken.
bool breaks_edge(const ApplicationResult& r, const std::vector<Vertex>& X, Vertex v, Vertex w);

struct BreakReport {
  std::vector<Vertex> cut;
  std::vector<Vertex> broken_vertices;             // host vertices broken by the cut
  std::vector<std::array<Vertex, 2>> broken_edges; // broken host edges, by endpoints
  // component_shadows[c] lists the host vertices whose shadow meets the c-th
  // component of result minus cut.
  std::vector<std::vector<Vertex>> component_shadows;
};
BreakReport break_report(const EmbeddedMap& host, const ApplicationResult& r,
                         const std::vector<Vertex>& X);

// ---------------------------------------------------------------------------
// Pinned counterexamples

// A simple 3-connected genus-1 embedding of the cube graph with face vector
// (4, 4, 8, 8) whose two octagons jointly cover all eight vertices.  Every
// edge-breaking catalog operation destroys its 3-connectivity.  Found once by
// exhaustive search over cube rotation systems (the search is kept as a
// regression test) and pinned here.
EmbeddedMap counterexample_torus();

// The searched property, for the regression test: all cube rotation systems
// with the face-vector/coverage properties above, up to isomorphism.
std::vector<EmbeddedMap> counterexample_torus_search();

// A simple 3-connected embedded graph with a simple dual whose dual is not
// 3-connected.  Witnesses the "dual of a simple-dual host" failure cell of
// the summary table.  Found once by search over small rotation systems and
// pinned; the search is kept as a regression test.
EmbeddedMap simple_dual_counterexample();

// Fixed hosts used throughout the harness: tetrahedron, cube, dodecahedron,
// and the pinned torus embedding of the cube graph.
std::vector<EmbeddedMap> standard_hosts();

// ---------------------------------------------------------------------------
// Corpus generation

struct CorpusSpec {
  std::size_t max_vertices = 0;
  std::set<int> genus_set;
  bool require_3conn = true;
  bool require_simple = true;
  std::uint64_t seed = 1;
  // Per base graph, at most this many rotation systems are examined; beyond
  // it a seeded sample is drawn instead of the full enumeration.
  std::size_t max_rotations_per_graph = 50000;
};

// Deterministic enumeration of rotation systems of a fixed family of small
// simple 3-connected graphs, filtered by the spec and deduplicated by
// canonical form.
std::vector<EmbeddedMap> corpus_generate(const CorpusSpec& spec);

// ---------------------------------------------------------------------------
// Theorem checks

struct CheckRecord {
  std::string check;
  std::string host;
  std::string op;
  bool pass = false;
  std::string witness;  // failure detail, empty on pass
};

struct VerifyReport {
  std::vector<CheckRecord> records;
  bool all_pass() const;
  std::size_t failure_count() const;
};

// A failed theorem check: signals an implementation bug, never a property of
// the inputs.  Carries the full report including the failing records.
struct TheoremViolation : Error {
  explicit TheoremViolation(VerifyReport r);
  VerifyReport report;
};

// Every edge-preserving catalog operation yields a 3-connected result on
// every corpus host; every edge-breaking one destroys the 3-connectivity of
// the pinned torus host.  Throws TheoremViolation on any failure.
VerifyReport check_theorem_main2(const std::vector<EmbeddedMap>& corpus);

// On hosts with a simple dual, every catalog operation except dual (plus the
// type-1 companion of join) yields a 3-connected result.
VerifyReport check_theorem_main1_simple_dual(const std::vector<EmbeddedMap>& corpus);

// Type-1 edge-breaking operations other than dual preserve 3-connectivity
// whenever the result is simple; operations that are not type-1
// edge-breaking give simple results on hosts with a simple subdivision; and
// the pinned torus host witnesses a simple, non-3-connected type-2 result.
VerifyReport check_theorem_simple(const std::vector<EmbeddedMap>& corpus);

// ---------------------------------------------------------------------------
// Summary table

struct CellMismatch : Error {
  using Error::Error;
};

struct Table1Cell {
  std::string row;        // host condition
  std::string col;        // operation class
  bool expected_yes;      // published verdict
  bool verdict_yes;       // recomputed verdict
  std::size_t checks;     // (host, op) pairs examined for a Yes cell
  std::string witness;    // counterexample description for a No cell
};

// Recomputes the 5x4 "does O(G) stay 3-connected" grid: Yes cells by
// exhaustive checking on the row's hosts, No cells by evaluating the pinned
// counterexamples.  Throws CellMismatch if any verdict disagrees with the
// published table.
std::vector<Table1Cell> table1_report(const std::vector<EmbeddedMap>& hosts);

}  // namespace lopsp
