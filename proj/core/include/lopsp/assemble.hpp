#pragma once
// Gluing machinery: build one map out of several pieces by identifying
// boundary darts across pieces.  Used for diamonds and for gluing patch
// copies during operation application.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "lopsp/map.hpp"

namespace lopsp {

// A dart of one particular piece.
struct PieceDart {
  std::uint32_t piece;
  Dart dart;
};

struct GlueSpec {
  // Each piece is a plane map with a designated outer face; identified darts
  // must lie on their piece's outer boundary.
  struct Piece {
    const EmbeddedMap* map;
    std::uint32_t outer_face;  // index into faces(*map)
  };
  std::vector<Piece> pieces;
  // Each entry identifies two darts (same direction: they leave identified
  // vertices along the identified edge) that become one dart of the result.
  std::vector<std::array<PieceDart, 2>> identify;
};

struct GlueResult {
  EmbeddedMap map;
  // dart_map[p][d] = result dart of piece p's dart d (identified darts map to
  // the same result dart); likewise for vertices and edges.
  std::vector<std::vector<Dart>> dart_map;
  std::vector<std::vector<Vertex>> vertex_map;
  std::vector<std::vector<Edge>> edge_map;
};

// Merged rotation rule: the successor of a dart x at a merged vertex is the
// within-piece successor whose corner is an interior corner of its piece; if
// the within-piece corner is on the piece's outer face, the successor is
// taken from the piece glued onto x at that corner.  Corners that remain
// unglued keep their within-piece successor (they stay corners of the glued
// map's boundary).
GlueResult glue(const GlueSpec& spec);

}  // namespace lopsp
