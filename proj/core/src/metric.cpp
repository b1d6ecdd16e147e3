#include "dirlap/metric.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace dirlap {

namespace {

bool induced_weakly_connected(const Graph& g, const std::vector<int>& subset) {
  if (subset.empty()) return true;
  std::vector<int> pos(g.size(), -1);
  for (int i = 0; i < static_cast<int>(subset.size()); ++i) pos[subset[i]] = i;
  std::vector<char> seen(subset.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  size_t count = 1;
  while (!stack.empty()) {
    int v = subset[stack.back()];
    stack.pop_back();
    for (int p : g.pairs_of(v)) {
      const auto& pw = g.pair_weights()[p];
      int u = pw.a == v ? pw.b : pw.a;
      if (pos[u] >= 0 && !seen[pos[u]]) {
        seen[pos[u]] = 1;
        ++count;
        stack.push_back(pos[u]);
      }
    }
  }
  return count == subset.size();
}

}  // namespace

Filtration::Filtration(const Graph& g, std::vector<std::vector<int>> levels) {
  if (levels.empty()) throw GraphError("filtration needs at least one level");
  for (auto& lv : levels) {
    std::sort(lv.begin(), lv.end());
    lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
    if (lv.empty()) throw GraphError("empty filtration level");
    if (lv.front() < 0 || lv.back() >= g.size()) throw GraphError("filtration level out of range");
  }
  for (size_t i = 1; i < levels.size(); ++i) {
    if (levels[i].size() <= levels[i - 1].size() ||
        !std::includes(levels[i].begin(), levels[i].end(), levels[i - 1].begin(),
                       levels[i - 1].end()))
      throw GraphError("filtration levels must strictly increase");
  }
  connected_.reserve(levels.size());
  for (const auto& lv : levels) connected_.push_back(induced_weakly_connected(g, lv));
  levels_ = std::move(levels);
}

Filtration Filtration::balls(const Graph& g, int center, int n_max) {
  std::vector<std::vector<int>> levels;
  levels.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) levels.push_back(hop_ball(g, center, n));
  return Filtration(g, std::move(levels));
}

int default_center(const Graph& g) {
  if (auto idx = g.index_of(VertexId(std::int64_t{0}))) return *idx;
  return 0;
}

std::vector<int> hop_distance_field(const Graph& g, int center) {
  std::vector<int> dist(g.size(), -1);
  std::queue<int> q;
  dist[center] = 0;
  q.push(center);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int p : g.pairs_of(v)) {
      const auto& pw = g.pair_weights()[p];
      int u = pw.a == v ? pw.b : pw.a;
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  return dist;
}

std::vector<int> hop_ball(const Graph& g, int center, int radius) {
  std::vector<int> dist = hop_distance_field(g, center);
  std::vector<int> ball;
  for (int v = 0; v < g.size(); ++v)
    if (dist[v] >= 0 && dist[v] <= radius) ball.push_back(v);
  return ball;
}

std::vector<double> delta_b_distances_from(const Graph& g, const std::vector<int>& sources) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(g.size(), inf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (int s : sources) {
    dist[s] = 0.0;
    heap.push({0.0, s});
  }
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[v]) continue;
    for (int p : g.pairs_of(v)) {
      const auto& pw = g.pair_weights()[p];
      int u = pw.a == v ? pw.b : pw.a;
      double len =
          std::sqrt(g.vertex(v).measure_d * g.vertex(u).measure_d) / std::sqrt(pw.total_d);
      if (d + len < dist[u]) {
        dist[u] = d + len;
        heap.push({dist[u], u});
      }
    }
  }
  return dist;
}

double delta_b_distance(const Graph& g, int x, int y) {
  auto dist = delta_b_distances_from(g, {x});
  if (std::isinf(dist[y]))
    throw GraphError("no chain between " + g.vertex(x).id.display() + " and " +
                     g.vertex(y).id.display());
  return dist[y];
}

CutoffReport chi_cutoffs(const Graph& g, const Filtration& f,
                         const std::vector<double>& radius_profile) {
  if (static_cast<int>(radius_profile.size()) < f.count())
    throw GraphError("radius profile shorter than filtration");
  for (double r : radius_profile)
    if (!(r > 0)) throw GraphError("radius profile must be positive");

  CutoffReport rep;
  rep.chi.reserve(f.count());
  rep.constants.reserve(f.count());
  for (int n = 0; n < f.count(); ++n) {
    auto dist = delta_b_distances_from(g, f.level(n));
    std::vector<double> chi(g.size());
    for (int v = 0; v < g.size(); ++v) {
      double c = std::isinf(dist[v]) ? 0.0 : 1.0 - dist[v] / radius_profile[n];
      chi[v] = std::clamp(c, 0.0, 1.0);
    }
    double cn = 0.0;
    for (int x = 0; x < g.size(); ++x) {
      double s = 0.0;
      for (int e : g.out_edges(x)) {
        int y = g.edge(e).dst;
        double total = g.edge(e).weight_d + g.weight_d(y, x);
        double d = chi[x] - chi[y];
        s += total * d * d;
      }
      cn = std::max(cn, s / g.vertex(x).measure_d);
    }
    rep.chi.push_back(std::move(chi));
    rep.constants.push_back(cn);
  }
  rep.sup_constant = *std::max_element(rep.constants.begin(), rep.constants.end());
  rep.bounded_trend = true;
  for (size_t i = rep.constants.size() >= 3 ? rep.constants.size() - 3 : 0;
       i + 1 < rep.constants.size(); ++i)
    if (rep.constants[i + 1] > rep.constants[i] + 1e-12) rep.bounded_trend = false;
  return rep;
}

EsaAdvisory esa_advisory(const Graph& g, const Filtration& f,
                         const std::vector<double>& radius_profile) {
  EsaAdvisory a;
  a.m_constant = true;
  for (int v = 1; v < g.size(); ++v)
    if (g.vertex(v).measure != g.vertex(0).measure) a.m_constant = false;

  int deg = 0;
  for (int v = 0; v < g.size(); ++v)
    deg = std::max(deg, static_cast<int>(g.pairs_of(v).size()));
  a.degree_bound = deg;

  // On a finite window every ball is finite; the flag reports whether growth
  // saturates strictly inside the window (metric traps) or only at the rim.
  auto dist = delta_b_distances_from(g, {default_center(g)});
  a.ball_growth_finite = std::none_of(dist.begin(), dist.end(),
                                      [](double d) { return std::isinf(d); });

  auto cut = chi_cutoffs(g, f, radius_profile);
  a.cutoff_sup_constant = cut.sup_constant;
  a.cutoff_bounded_trend = cut.bounded_trend;

  if (a.m_constant)
    a.criterion = "constant-measure";
  else if (a.cutoff_bounded_trend)
    a.criterion = "cutoff-energy";
  else
    a.criterion = "none";
  return a;
}

}  // namespace dirlap
