#include "dirlap/validate.hpp"

#include <vector>

namespace dirlap {

std::string to_string(Connectivity c) {
  switch (c) {
    case Connectivity::disconnected: return "disconnected";
    case Connectivity::weakly_connected: return "weakly-connected";
    case Connectivity::connected: return "connected";
    case Connectivity::strongly_connected: return "strongly-connected";
  }
  return "disconnected";
}

namespace {

// Reach everything from vertex 0 along the given adjacency.
bool covers_all(const Graph& g, bool undirected, bool reversed) {
  const int n = g.size();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    auto push = [&](int u) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    };
    if (undirected) {
      for (int p : g.pairs_of(v)) {
        const auto& pw = g.pair_weights()[p];
        push(pw.a == v ? pw.b : pw.a);
      }
    } else {
      for (int e : (reversed ? g.in_edges(v) : g.out_edges(v)))
        push(reversed ? g.edge(e).src : g.edge(e).dst);
    }
  }
  return count == n;
}

}  // namespace

Connectivity connectivity_class(const Graph& g) {
  if (g.size() == 0) throw GraphError("empty graph");
  if (g.size() == 1) return Connectivity::strongly_connected;
  if (!covers_all(g, true, false)) return Connectivity::disconnected;
  if (covers_all(g, false, false) && covers_all(g, false, true))
    return Connectivity::strongly_connected;
  return Connectivity::weakly_connected;
}

ValidationReport validate(const Graph& g, double tolerance) {
  if (g.size() == 0) throw GraphError("empty graph");
  ValidationReport r;
  r.tolerance = tolerance;
  r.beta_exact = true;
  r.self_loop_free = true;  // builder invariant

  Rational beta_dev(0), gamma(0);
  for (int v = 0; v < g.size(); ++v) {
    if (g.vertex(v).window_boundary) continue;
    Rational dev = g.beta_plus(v) - g.beta_minus(v);
    if (dev < 0) dev = -dev;
    if (dev > beta_dev) beta_dev = dev;
    Rational anti(0);
    for (int p : g.pairs_of(v)) {
      const auto& pw = g.pair_weights()[p];
      int other = pw.a == v ? pw.b : pw.a;
      Rational diff = g.weight(v, other) - g.weight(other, v);
      if (diff < 0) diff = -diff;
      anti += diff;
    }
    Rational row = anti / g.vertex(v).measure;
    if (row > gamma) gamma = row;
  }
  r.beta_max_deviation_exact = beta_dev;
  r.beta_max_deviation = to_double(beta_dev);
  r.gamma_constant_exact = gamma;
  r.gamma_constant = to_double(gamma);
  r.beta_ok = r.beta_max_deviation <= tolerance || beta_dev == 0;

  int deg = 0;
  bool outgoing = true;
  for (int v = 0; v < g.size(); ++v) {
    deg = std::max(deg, static_cast<int>(g.pairs_of(v).size()));
    if (g.out_edges(v).empty()) outgoing = false;
  }
  r.degree_bound = deg;
  r.outgoing_condition = outgoing;
  r.connectivity_class = connectivity_class(g);
  return r;
}

}  // namespace dirlap
