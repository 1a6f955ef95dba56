#include "lopsp/io.hpp"

#include <charconv>
#include <sstream>

namespace lopsp {
namespace {

struct Line {
  int number;  // 1-based
  std::string text;
};

// Strips comments and surrounding whitespace, drops blank lines.
std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto begin = raw.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = raw.find_last_not_of(" \t\r");
    out.push_back({number, raw.substr(begin, end - begin + 1)});
  }
  return out;
}

// Splits on runs of blanks.  Column of token i is its 1-based offset.
std::vector<std::pair<int, std::string>> tokens_of(const std::string& s) {
  std::vector<std::pair<int, std::string>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size()) break;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    out.emplace_back(static_cast<int>(start) + 1, s.substr(start, i - start));
  }
  return out;
}

long parse_number(const Line& line, const std::pair<int, std::string>& tok,
                  const std::string& what) {
  long value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.second.data(), tok.second.data() + tok.second.size(), value);
  if (ec != std::errc{} || ptr != tok.second.data() + tok.second.size() || value < 0)
    throw SyntaxError(line.number, tok.first, what);
  return value;
}

}  // namespace

SyntaxError::SyntaxError(int line_, int column_, std::string expected_)
    : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
            ": expected " + expected_),
      line(line_),
      column(column_),
      expected(std::move(expected_)) {}

TypedMap RotsysDocument::as_typed() const {
  if (!types) throw WrongType("document has no types section");
  return TypedMap::make(map, *types);
}

LopspOperation RotsysDocument::as_operation() const {
  if (!special) throw WrongType("document has no special section");
  return make_lopsp(as_typed(), (*special)[0], (*special)[1], (*special)[2], map.name());
}

RotsysDocument parse_rotsys(const std::string& text) {
  const auto lines = significant_lines(text);
  std::size_t li = 0;
  auto next = [&]() -> const Line& {
    if (li >= lines.size()) {
      const int at = lines.empty() ? 1 : lines.back().number;
      throw SyntaxError(at, 1, "more input");
    }
    return lines[li++];
  };

  {
    const Line& header = next();
    if (header.text != "rotsys v1") throw SyntaxError(header.number, 1, "'rotsys v1' header");
  }

  std::string name;
  long nv = -1, ne = -1;
  // Optional name, then required vertex and edge counts, in order.
  while (nv < 0 || ne < 0) {
    const Line& line = next();
    auto toks = tokens_of(line.text);
    const std::string& key = toks[0].second;
    if (key == "name" && nv < 0 && ne < 0 && name.empty()) {
      if (toks.size() < 2) throw SyntaxError(line.number, 1, "name value");
      name = line.text.substr(toks[1].first - 1);
    } else if (key == "vertices" && nv < 0) {
      if (toks.size() != 2) throw SyntaxError(line.number, 1, "'vertices <n>'");
      nv = parse_number(line, toks[1], "vertex count");
    } else if (key == "edges" && nv >= 0 && ne < 0) {
      if (toks.size() != 2) throw SyntaxError(line.number, 1, "'edges <m>'");
      ne = parse_number(line, toks[1], "edge count");
    } else {
      throw SyntaxError(line.number, 1,
                        nv < 0 ? "'name', 'vertices' or 'edges' section" : "'edges' section");
    }
  }

  std::vector<std::vector<Dart>> rotations(nv);
  std::vector<bool> seen(nv, false);
  std::size_t darts_listed = 0;
  for (long i = 0; i < nv; ++i) {
    const Line& line = next();
    auto toks = tokens_of(line.text);
    const std::string& key = toks[0].second;
    if (key.size() < 2 || key.front() != 'v' || key.back() != ':')
      throw SyntaxError(line.number, toks[0].first, "'v<i>:' rotation line");
    const Line fake{line.number, key};
    const long v = parse_number(fake, {toks[0].first + 1, key.substr(1, key.size() - 2)},
                                "vertex index");
    if (v >= nv) throw SyntaxError(line.number, toks[0].first, "vertex index below the count");
    if (seen[v]) throw SyntaxError(line.number, toks[0].first, "each vertex exactly once");
    seen[v] = true;
    for (std::size_t t = 1; t < toks.size(); ++t) {
      const long d = parse_number(line, toks[t], "dart number");
      if (d >= 2 * ne) throw SyntaxError(line.number, toks[t].first, "dart below 2*edges");
      rotations[v].push_back(static_cast<Dart>(d));
      ++darts_listed;
    }
  }
  if (darts_listed != static_cast<std::size_t>(2 * ne)) {
    const int at = lines.empty() ? 1 : lines[li - 1].number;
    throw SyntaxError(at, 1, std::to_string(2 * ne) + " darts in total");
  }

  RotsysDocument doc;
  while (li < lines.size()) {
    const Line& line = next();
    auto toks = tokens_of(line.text);
    const std::string& key = toks[0].second;
    if (key == "types:" && !doc.types) {
      if (toks.size() != static_cast<std::size_t>(nv) + 1)
        throw SyntaxError(line.number, 1, "one type per vertex");
      std::vector<int> types;
      for (std::size_t t = 1; t < toks.size(); ++t) {
        const long ty = parse_number(line, toks[t], "type 0, 1 or 2");
        if (ty > 2) throw SyntaxError(line.number, toks[t].first, "type 0, 1 or 2");
        types.push_back(static_cast<int>(ty));
      }
      doc.types = std::move(types);
    } else if (key == "special:" && doc.types && !doc.special) {
      if (toks.size() != 4) throw SyntaxError(line.number, 1, "'special: <v0> <v1> <v2>'");
      std::array<Vertex, 3> marks;
      for (int t = 0; t < 3; ++t) {
        const long v = parse_number(line, toks[t + 1], "marked vertex index");
        if (v >= nv) throw SyntaxError(line.number, toks[t + 1].first, "vertex index below the count");
        marks[t] = static_cast<Vertex>(v);
      }
      doc.special = marks;
    } else {
      throw SyntaxError(line.number, 1,
                        doc.types ? "'special:' section or end of input"
                                  : "'types:' section or end of input");
    }
  }

  doc.map = EmbeddedMap::build(nv, rotations, std::move(name));
  if (doc.types) (void)doc.as_typed();          // validate type constraints
  if (doc.special) (void)doc.as_operation();    // validate the operation
  return doc;
}

std::string print_rotsys(const RotsysDocument& doc) {
  std::ostringstream out;
  out << "rotsys v1\n";
  if (!doc.map.name().empty()) out << "name " << doc.map.name() << "\n";
  out << "vertices " << doc.map.vertex_count() << "\n";
  out << "edges " << doc.map.edge_count() << "\n";
  for (Vertex v = 0; v < doc.map.vertex_count(); ++v) {
    out << "v" << v << ":";
    for (Dart d : doc.map.darts_at(v)) out << " " << d;  // starts at the smallest dart
    out << "\n";
  }
  if (doc.types) {
    out << "types:";
    for (int t : *doc.types) out << " " << t;
    out << "\n";
  }
  if (doc.special)
    out << "special: " << (*doc.special)[0] << " " << (*doc.special)[1] << " "
        << (*doc.special)[2] << "\n";
  return out.str();
}

std::string print_rotsys(const EmbeddedMap& m) { return print_rotsys(RotsysDocument{m, {}, {}}); }

std::string print_rotsys(const TypedMap& t) {
  return print_rotsys(RotsysDocument{t.map(), t.types(), {}});
}

std::string print_rotsys(const LopspOperation& o) {
  RotsysDocument doc{o.op.map().with_name(o.name), o.op.types(),
                     std::array<Vertex, 3>{o.v0, o.v1, o.v2}};
  return print_rotsys(doc);
}

}  // namespace lopsp
