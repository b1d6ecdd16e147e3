#include "dirlap/graph.hpp"

#include <algorithm>

namespace dirlap {

std::string VertexId::display() const {
  if (is_int()) return std::to_string(as_int());
  return "\"" + as_name() + "\"";
}

std::optional<int> Graph::index_of(const VertexId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const int> Graph::out_edges(int v) const {
  return {out_adj_.data() + out_off_[v], static_cast<size_t>(out_off_[v + 1] - out_off_[v])};
}

std::span<const int> Graph::in_edges(int v) const {
  return {in_adj_.data() + in_off_[v], static_cast<size_t>(in_off_[v + 1] - in_off_[v])};
}

std::span<const int> Graph::pairs_of(int v) const {
  return {pair_adj_.data() + pair_off_[v], static_cast<size_t>(pair_off_[v + 1] - pair_off_[v])};
}

const Rational& Graph::weight(int s, int t) const {
  static const Rational zero{0};
  auto it = edge_index_.find({s, t});
  return it == edge_index_.end() ? zero : edges_[it->second].weight;
}

double Graph::weight_d(int s, int t) const {
  auto it = edge_index_.find({s, t});
  return it == edge_index_.end() ? 0.0 : edges_[it->second].weight_d;
}

std::vector<int> Graph::interior() const {
  std::vector<int> out;
  out.reserve(vertices_.size());
  for (int i = 0; i < size(); ++i)
    if (!vertices_[i].window_boundary) out.push_back(i);
  return out;
}

int GraphBuilder::add_vertex(VertexId id, Rational measure, bool window_boundary) {
  if (index_.count(id)) throw GraphError("duplicate vertex " + id.display());
  if (measure <= 0) throw GraphError("nonpositive measure at vertex " + id.display());
  int idx = static_cast<int>(vertices_.size());
  index_.emplace(id, idx);
  vertices_.push_back(Vertex{std::move(id), measure, to_double(measure), window_boundary});
  return idx;
}

void GraphBuilder::add_edge(const VertexId& src, const VertexId& dst, Rational weight) {
  auto s = index_.find(src), t = index_.find(dst);
  if (s == index_.end()) throw GraphError("unknown vertex " + src.display());
  if (t == index_.end()) throw GraphError("unknown vertex " + dst.display());
  const int si = s->second, ti = t->second;
  if (si == ti) throw GraphError("self-loop at vertex " + src.display());
  if (weight <= 0)
    throw GraphError("nonpositive weight on edge " + src.display() + " -> " + dst.display());
  if (edge_index_.count({si, ti}))
    throw GraphError("duplicate edge " + src.display() + " -> " + dst.display());
  edge_index_.emplace(std::make_pair(si, ti), static_cast<int>(edges_.size()));
  edges_.push_back(Edge{si, ti, weight, to_double(weight)});
}

Graph GraphBuilder::build() && {
  Graph g;
  g.vertices_ = std::move(vertices_);
  g.edges_ = std::move(edges_);
  g.index_ = std::move(index_);
  g.edge_index_ = std::move(edge_index_);

  const int n = g.size();
  const int m = g.edge_count();
  g.beta_plus_.assign(n, Rational(0));
  g.beta_minus_.assign(n, Rational(0));
  for (const auto& e : g.edges_) {
    g.beta_plus_[e.src] += e.weight;
    g.beta_minus_[e.dst] += e.weight;
  }
  g.beta_plus_d_.resize(n);
  g.beta_minus_d_.resize(n);
  for (int i = 0; i < n; ++i) {
    g.beta_plus_d_[i] = to_double(g.beta_plus_[i]);
    g.beta_minus_d_[i] = to_double(g.beta_minus_[i]);
    g.has_boundary_ = g.has_boundary_ || g.vertices_[i].window_boundary;
  }

  auto fill_csr = [n, m](const std::vector<Edge>& edges, bool by_src, std::vector<int>& adj,
                         std::vector<int>& off) {
    off.assign(n + 1, 0);
    for (const auto& e : edges) ++off[(by_src ? e.src : e.dst) + 1];
    for (int i = 0; i < n; ++i) off[i + 1] += off[i];
    adj.resize(m);
    std::vector<int> cursor(off.begin(), off.end() - 1);
    for (int e = 0; e < m; ++e)
      adj[cursor[by_src ? edges[e].src : edges[e].dst]++] = e;
  };
  fill_csr(g.edges_, true, g.out_adj_, g.out_off_);
  fill_csr(g.edges_, false, g.in_adj_, g.in_off_);

  std::map<std::pair<int, int>, Rational> totals;
  for (const auto& e : g.edges_) {
    auto key = std::minmax(e.src, e.dst);
    totals[{key.first, key.second}] += e.weight;
  }
  g.pairs_.reserve(totals.size());
  for (auto& [key, total] : totals)
    g.pairs_.push_back(PairWeight{key.first, key.second, total, to_double(total)});

  g.pair_off_.assign(n + 1, 0);
  for (const auto& p : g.pairs_) {
    ++g.pair_off_[p.a + 1];
    ++g.pair_off_[p.b + 1];
  }
  for (int i = 0; i < n; ++i) g.pair_off_[i + 1] += g.pair_off_[i];
  g.pair_adj_.resize(2 * g.pairs_.size());
  std::vector<int> cursor(g.pair_off_.begin(), g.pair_off_.end() - 1);
  for (int p = 0; p < static_cast<int>(g.pairs_.size()); ++p) {
    g.pair_adj_[cursor[g.pairs_[p].a]++] = p;
    g.pair_adj_[cursor[g.pairs_[p].b]++] = p;
  }
  return g;
}

}  // namespace dirlap
