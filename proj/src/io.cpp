#include "twoblock/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "twoblock/error.hpp"

namespace twoblock {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view s, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    parse_fail(line, "expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

// A fixed qualitative palette, cycled for larger colourings.
constexpr const char* kFill[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                 "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

}  // namespace

Digraph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    if (n < 0) {
      if (tok.size() != 1) parse_fail(line_no, "expected the vertex count");
      n = to_int(tok[0], line_no);
      if (n < 0) parse_fail(line_no, "negative vertex count");
      continue;
    }
    if (tok.size() != 2) parse_fail(line_no, "expected 'tail head'");
    const Arc a{to_int(tok[0], line_no), to_int(tok[1], line_no)};
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      parse_fail(line_no, "vertex out of range 0.." + std::to_string(n - 1));
    }
    if (a.tail == a.head) parse_fail(line_no, "loop arc");
    if (!seen.insert(a).second) parse_fail(line_no, "duplicate arc");
    arcs.push_back(a);
  }
  if (n < 0) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": missing vertex count");
  return Digraph::build(n, arcs);
}

Digraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string format_edge_list(const Digraph& d) {
  std::string out = std::to_string(d.vertex_count()) + "\n";
  for (const Arc& a : d.arcs()) out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  return out;
}

void write_edge_list(const std::filesystem::path& path, const Digraph& d) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << format_edge_list(d);
}

std::string write_dot(const Digraph& d, const Coloring* coloring) {
  std::string out = "digraph D {\n";
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    out += "  " + std::to_string(v);
    if (coloring != nullptr && v < static_cast<Vertex>(coloring->colors.size())) {
      const int c = coloring->colors[v];
      out += " [style=filled, fillcolor=\"" + std::string(kFill[c % std::size(kFill)]) +
             "\", label=\"" + std::to_string(v) + ":" + std::to_string(c) + "\"]";
    }
    out += ";\n";
  }
  for (const Arc& a : d.arcs()) {
    out += "  " + std::to_string(a.tail) + " -> " + std::to_string(a.head) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace twoblock
