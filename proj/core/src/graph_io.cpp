#include "dirlap/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace dirlap {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::optional<VertexId> parse_id(const std::string& tok) {
  if (tok.size() >= 2 && tok.front() == '"' && tok.back() == '"') {
    std::string name = tok.substr(1, tok.size() - 2);
    if (name.empty() || name.find('"') != std::string::npos) return std::nullopt;
    return VertexId(std::move(name));
  }
  std::string_view v = tok;
  if (!v.empty() && (v.front() == '+' || v.front() == '-')) v.remove_prefix(1);
  if (v.empty()) return std::nullopt;
  for (char c : v)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  try {
    return VertexId(static_cast<std::int64_t>(std::stoll(tok)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

ParseError::ParseError(std::string kind_, int line_, const std::string& detail)
    : GraphError(kind_ + " at line " + std::to_string(line_) + ": " + detail),
      kind(std::move(kind_)),
      line(line_) {}

Graph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw ParseError("bad header", 1, "empty input");
  ++lineno;
  if (line != "graph v2") throw ParseError("bad header", 1, "expected 'graph v2', got '" + line + "'");

  GraphBuilder builder;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& directive = toks[0];
    if (directive == "v") {
      if (toks.size() != 3 && toks.size() != 4)
        throw ParseError("malformed vertex line", lineno, line);
      bool rim = toks.size() == 4;
      if (rim && toks[3] != "rim") throw ParseError("malformed vertex line", lineno, line);
      auto id = parse_id(toks[1]);
      if (!id) throw ParseError("bad vertex id", lineno, toks[1]);
      auto m = parse_rational(toks[2]);
      if (!m) throw ParseError("bad measure", lineno, toks[2]);
      if (*m <= 0) throw ParseError("nonpositive measure", lineno, toks[2]);
      if (builder.has_vertex(*id)) throw ParseError("duplicate vertex", lineno, id->display());
      builder.add_vertex(*id, *m, rim);
    } else if (directive == "e") {
      if (toks.size() != 4) throw ParseError("malformed edge line", lineno, line);
      auto src = parse_id(toks[1]), dst = parse_id(toks[2]);
      if (!src || !dst) throw ParseError("bad vertex id", lineno, line);
      auto b = parse_rational(toks[3]);
      if (!b) throw ParseError("bad weight", lineno, toks[3]);
      if (*src == *dst) throw ParseError("self-loop", lineno, src->display());
      if (*b <= 0) throw ParseError("nonpositive weight", lineno, toks[3]);
      if (!builder.has_vertex(*src)) throw ParseError("missing measure", lineno, src->display());
      if (!builder.has_vertex(*dst)) throw ParseError("missing measure", lineno, dst->display());
      try {
        builder.add_edge(*src, *dst, *b);
      } catch (const GraphError& err) {
        throw ParseError("duplicate edge", lineno, err.what());
      }
    } else {
      throw ParseError("unknown directive", lineno, directive);
    }
  }
  if (builder.vertex_count() == 0) throw ParseError("empty graph", lineno, "no vertices");
  return std::move(builder).build();
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return parse_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
  out << "graph v2\n";
  std::vector<int> vs(g.size());
  std::iota(vs.begin(), vs.end(), 0);
  std::sort(vs.begin(), vs.end(),
            [&](int a, int b) { return g.vertex(a).id < g.vertex(b).id; });
  for (int v : vs) {
    out << "v " << g.vertex(v).id.display() << " " << format_rational(g.vertex(v).measure);
    if (g.vertex(v).window_boundary) out << " rim";
    out << "\n";
  }
  std::vector<int> es(g.edge_count());
  std::iota(es.begin(), es.end(), 0);
  std::sort(es.begin(), es.end(), [&](int x, int y) {
    const auto &a = g.edge(x), &b = g.edge(y);
    if (g.vertex(a.src).id != g.vertex(b.src).id) return g.vertex(a.src).id < g.vertex(b.src).id;
    return g.vertex(a.dst).id < g.vertex(b.dst).id;
  });
  for (int e : es)
    out << "e " << g.vertex(g.edge(e).src).id.display() << " " << g.vertex(g.edge(e).dst).id.display()
        << " " << format_rational(g.edge(e).weight) << "\n";
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(g, out);
  return out.str();
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write " + path);
  write_graph(g, out);
}

}  // namespace dirlap
