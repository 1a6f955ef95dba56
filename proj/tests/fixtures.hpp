#pragma once
// Shared map fixtures for the test suite.  All plane embeddings below were
// derived by hand from coordinates and double-checked by the genus oracle.

#include <map>
#include <utility>
#include <vector>

#include "lopsp/map.hpp"

namespace lopsp::testing {

// Builds a map of a simple graph from per-vertex neighbor lists given in
// rotation order.  Edge ids are assigned in order of first appearance; dart
// 2e lives at the endpoint that appeared first.
inline EmbeddedMap from_neighbors(const std::vector<std::vector<int>>& nbrs,
                                  std::string name = {}) {
  std::map<std::pair<int, int>, Edge> ids;
  Edge next = 0;
  std::vector<std::vector<Dart>> rot(nbrs.size());
  for (int v = 0; v < static_cast<int>(nbrs.size()); ++v) {
    for (int w : nbrs[v]) {
      auto key = std::minmax(v, w);
      auto it = ids.find(key);
      if (it == ids.end()) {
        ids.emplace(key, next);
        rot[v].push_back(dart_of(next, 0));
        ++next;
      } else {
        rot[v].push_back(dart_of(it->second, 1));
      }
    }
  }
  return EmbeddedMap::build(nbrs.size(), rot, std::move(name));
}

// Tetrahedron (plane, all rotations counterclockwise).
inline EmbeddedMap tetrahedron() {
  return from_neighbors({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}, "tetrahedron");
}

// Cube: 0-3 inner (bottom) square, 4-7 outer (top) square, i joined to i+4.
inline EmbeddedMap cube() {
  return from_neighbors({{1, 3, 4},
                         {2, 0, 5},
                         {6, 3, 1},
                         {2, 7, 0},
                         {5, 0, 7},
                         {6, 1, 4},
                         {7, 2, 5},
                         {6, 4, 3}},
                        "cube");
}

// Torus map: one vertex, two interleaved loops.
inline EmbeddedMap torus_bouquet() {
  return EmbeddedMap::build(1, {{0, 2, 1, 3}}, "torus-bouquet");
}

// Square with one diagonal, plane.  Edges in id order: 0-1, 0-2, 0-3, 1-2, 2-3.
inline EmbeddedMap square_with_diagonal() {
  return from_neighbors({{1, 2, 3}, {2, 0}, {3, 0, 1}, {2, 0}}, "square-diag");
}

// Cycle on n vertices.
inline EmbeddedMap cycle(int n) {
  std::vector<std::vector<int>> nbrs(n);
  for (int v = 0; v < n; ++v) nbrs[v] = {(v + 1) % n, (v + n - 1) % n};
  return from_neighbors(nbrs, "cycle");
}

}  // namespace lopsp::testing
