#pragma once

#include "dirlap/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace dirlap {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vertex keys: signed integers for lattice windows, quoted names from files.
// Total order: all integers before all names, then natural order within each.
class VertexId {
 public:
  VertexId() : v_(std::int64_t{0}) {}
  VertexId(std::int64_t n) : v_(n) {}
  VertexId(int n) : v_(static_cast<std::int64_t>(n)) {}
  VertexId(std::string name) : v_(std::move(name)) {}
  VertexId(const char* name) : v_(std::string(name)) {}

  bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  const std::string& as_name() const { return std::get<std::string>(v_); }

  // File-format spelling: bare integer or double-quoted name.
  std::string display() const;

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend std::strong_ordering operator<=>(const VertexId& a, const VertexId& b) {
    if (a.v_.index() != b.v_.index()) return a.v_.index() <=> b.v_.index();
    if (a.is_int()) return a.as_int() <=> b.as_int();
    return a.as_name() <=> b.as_name();
  }

 private:
  std::variant<std::int64_t, std::string> v_;
};

struct Vertex {
  VertexId id;
  Rational measure;   // m(x) > 0
  double measure_d;
  // Window rim produced by a generator: the row's edge set is truncated, so
  // balance checks and default operator subsets skip it.
  bool window_boundary = false;
};

struct Edge {
  int src, dst;       // vertex indices
  Rational weight;    // b(src,dst) > 0
  double weight_d;
};

// Unordered adjacency entry with the orientation-summed weight b(x,y)+b(y,x),
// used by cut weights, the path metric and connectivity.
struct PairWeight {
  int a, b;           // a < b
  Rational total;
  double total_d;
};

class Graph {
 public:
  int size() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Vertex& vertex(int i) const { return vertices_[i]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<int> index_of(const VertexId& id) const;

  // Edge indices, grouped per vertex.
  std::span<const int> out_edges(int v) const;
  std::span<const int> in_edges(int v) const;

  // Unordered-pair indices (into pair_weights()), grouped per vertex.
  std::span<const int> pairs_of(int v) const;
  const std::vector<PairWeight>& pair_weights() const { return pairs_; }

  const Rational& beta_plus(int v) const { return beta_plus_[v]; }
  const Rational& beta_minus(int v) const { return beta_minus_[v]; }
  double beta_plus_d(int v) const { return beta_plus_d_[v]; }
  double beta_minus_d(int v) const { return beta_minus_d_[v]; }

  // b(s,t); zero when (s,t) is not an edge.
  const Rational& weight(int s, int t) const;
  double weight_d(int s, int t) const;

  bool has_window_boundary() const { return has_boundary_; }
  // Indices not flagged as window rim.
  std::vector<int> interior() const;

 private:
  friend class GraphBuilder;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, int> index_;
  std::map<std::pair<int, int>, int> edge_index_;
  std::vector<int> out_adj_, out_off_;  // CSR over edges
  std::vector<int> in_adj_, in_off_;
  std::vector<PairWeight> pairs_;
  std::vector<int> pair_adj_, pair_off_;
  std::vector<Rational> beta_plus_, beta_minus_;
  std::vector<double> beta_plus_d_, beta_minus_d_;
  bool has_boundary_ = false;
};

class GraphBuilder {
 public:
  // Returns the vertex index. Duplicate ids and nonpositive measures throw.
  int add_vertex(VertexId id, Rational measure, bool window_boundary = false);
  // Self-loops, nonpositive weights, unknown endpoints and duplicates throw.
  // Endpoints are ids, never indices: an integer argument names the vertex
  // added as VertexId(that integer), wherever it landed in the index order.
  void add_edge(const VertexId& src, const VertexId& dst, Rational weight);

  bool has_vertex(const VertexId& id) const { return index_.count(id) > 0; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }

  Graph build() &&;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, int> index_;
  std::map<std::pair<int, int>, int> edge_index_;
};

}  // namespace dirlap
