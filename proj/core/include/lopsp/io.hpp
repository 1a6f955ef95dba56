#pragma once
// The rotsys v1 text format: maps, typed maps and operations as per-vertex
// dart cycles, with optional type and marked-vertex sections.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lopsp/map.hpp"
#include "lopsp/operation.hpp"
#include "lopsp/typed_map.hpp"

namespace lopsp {

struct SyntaxError : Error {
  SyntaxError(int line, int column, std::string expected);
  int line, column;
  std::string expected;
};

// A parsed document: always a map, promoted by the optional sections.  The
// `types:` section makes it a typed map; `special:` additionally makes it a
// lopsp-operation (fully validated at parse time).
struct RotsysDocument {
  EmbeddedMap map;
  std::optional<std::vector<int>> types;
  std::optional<std::array<Vertex, 3>> special;

  bool is_typed() const { return types.has_value(); }
  bool is_operation() const { return special.has_value(); }
  TypedMap as_typed() const;          // throws WrongType if untyped
  LopspOperation as_operation() const;  // throws WrongType if unmarked
};

// `#` starts a comment; blank lines are ignored.  Throws SyntaxError with
// 1-based position info, or the map/operation validation errors.
RotsysDocument parse_rotsys(const std::string& text);

// Canonical form: vertices ascending, every cycle rotated to start at its
// smallest dart; deterministic, round-trip stable.
std::string print_rotsys(const EmbeddedMap& m);
std::string print_rotsys(const TypedMap& t);
std::string print_rotsys(const LopspOperation& o);
std::string print_rotsys(const RotsysDocument& doc);

}  // namespace lopsp
