#include "dirlap/cheeger.hpp"

#include "dirlap/metric.hpp"
#include "dirlap/operators.hpp"
#include "dirlap/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

namespace dirlap {

namespace {

constexpr int kExactCap = 22;

std::vector<int> checked_subset(const Graph& g, std::vector<int> subset, bool allow_empty) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (!allow_empty && subset.empty()) throw GraphError("empty omega");
  for (int v : subset)
    if (v < 0 || v >= g.size()) throw GraphError("omega index out of range");
  return subset;
}

std::vector<char> membership(const Graph& g, const std::vector<int>& subset) {
  std::vector<char> in(g.size(), 0);
  for (int v : subset) in[v] = 1;
  return in;
}

// Connected components of the subgraph induced on omega (undirected pairs).
std::vector<std::vector<int>> components_within(const Graph& g, const std::vector<int>& omega) {
  std::vector<char> in = membership(g, omega);
  std::vector<char> seen(g.size(), 0);
  std::vector<std::vector<int>> comps;
  for (int start : omega) {
    if (seen[start]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int p : g.pairs_of(v)) {
        const PairWeight& pw = g.pair_weights()[p];
        int u = pw.a == v ? pw.b : pw.a;
        if (in[u] && !seen[u]) {
          seen[u] = 1;
          q.push(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Rational exact_measure_sum(const Graph& g, const std::vector<int>& subset) {
  Rational total = 0;
  for (int v : subset) total += g.vertex(v).measure;
  return total;
}

Rational exact_beta_sum(const Graph& g, const std::vector<int>& subset) {
  Rational total = 0;
  for (int v : subset) total += g.beta_plus(v);
  return total;
}

// Best-ratio tracker over the double-valued scan. Near-ties are kept so the
// final winner can be settled in exact arithmetic.
struct BestTrack {
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::uint32_t> cands;

  void offer(double ratio, std::uint32_t mask) {
    if (!std::isfinite(ratio)) return;
    double tol = 1e-9 * std::max(1.0, std::abs(best));
    if (ratio < best - tol) {
      best = ratio;
      cands.assign(1, mask);
      return;
    }
    if (ratio < best) best = ratio;
    if (ratio <= best + tol && cands.size() < 256) cands.push_back(mask);
  }
};

struct ExactPick {
  Rational ratio;
  std::vector<int> witness;
  bool valid = false;
};

void consider(ExactPick& pick, const Rational& ratio, std::vector<int> witness) {
  if (!pick.valid || ratio < pick.ratio ||
      (ratio == pick.ratio && witness < pick.witness)) {
    pick.ratio = ratio;
    pick.witness = std::move(witness);
    pick.valid = true;
  }
}

// One component, full scan. Gray-code order so the cut weight and denominators
// update in O(popcount) per subset.
void enumerate_component(const Graph& g, const std::vector<int>& verts, ExactPick& pick_h,
                         ExactPick& pick_ht) {
  const int s = static_cast<int>(verts.size());
  std::vector<double> cross(s, 0), den_m(s), den_b(s);
  std::vector<std::vector<double>> pw(s, std::vector<double>(s, 0.0));
  std::vector<int> local(g.size(), -1);
  for (int i = 0; i < s; ++i) local[verts[i]] = i;
  for (int i = 0; i < s; ++i) {
    Rational single = 0;
    for (int p : g.pairs_of(verts[i])) {
      const PairWeight& e = g.pair_weights()[p];
      single += e.total;
      int other = e.a == verts[i] ? e.b : e.a;
      if (local[other] >= 0) pw[i][local[other]] = e.total_d;
    }
    cross[i] = to_double(single);
    den_m[i] = g.vertex(verts[i]).measure_d;
    den_b[i] = g.beta_plus_d(verts[i]);
  }

  BestTrack track_h, track_ht;
  std::uint32_t cur = 0;
  double bd = 0, mu = 0, bu = 0;
  const std::uint32_t total = 1u << s;
  for (std::uint32_t i = 1; i < total; ++i) {
    int j = std::countr_zero(i);
    std::uint32_t bit = 1u << j;
    if (!(cur & bit)) {
      double cw = 0;
      for (std::uint32_t r = cur; r; r &= r - 1) cw += pw[j][std::countr_zero(r)];
      bd += cross[j] - 2 * cw;
      mu += den_m[j];
      bu += den_b[j];
      cur |= bit;
    } else {
      cur &= ~bit;
      double cw = 0;
      for (std::uint32_t r = cur; r; r &= r - 1) cw += pw[j][std::countr_zero(r)];
      bd -= cross[j] - 2 * cw;
      mu -= den_m[j];
      bu -= den_b[j];
    }
    track_h.offer(bd / mu, cur);
    if (bu > 0) track_ht.offer(bd / bu, cur);
  }

  auto settle = [&](const BestTrack& track, bool beta_den, ExactPick& pick) {
    for (std::uint32_t mask : track.cands) {
      std::vector<int> u;
      for (std::uint32_t r = mask; r; r &= r - 1) u.push_back(verts[std::countr_zero(r)]);
      std::sort(u.begin(), u.end());
      Rational den = beta_den ? exact_beta_sum(g, u) : exact_measure_sum(g, u);
      if (den == 0) continue;
      Rational ratio = boundary_weight(g, u).weight / den;
      consider(pick, ratio, std::move(u));
    }
  };
  settle(track_h, false, pick_h);
  settle(track_ht, true, pick_ht);
}

// Least-squares slope of log(value) against log(n); NaN when fewer than two
// usable points remain.
double fit_power_exponent(const std::vector<int>& ns, const std::vector<double>& values) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (ns[i] <= 0 || !(values[i] > 0)) continue;
    double x = std::log(static_cast<double>(ns[i]));
    double y = std::log(values[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  double det = count * sxx - sx * sx;
  if (count < 2 || det == 0) return std::numeric_limits<double>::quiet_NaN();
  return (count * sxy - sx * sy) / det;
}

void finish_result(const Graph& g, const ExactPick& pick_h, const ExactPick& pick_ht,
                   bool exact, CheegerResult& out) {
  if (!pick_h.valid) throw GraphError("no admissible set for h");
  if (!pick_ht.valid) throw GraphError("beta+ vanishes on omega; h_tilde undefined");
  out.h = pick_h.ratio;
  out.h_d = to_double(out.h);
  out.witness = pick_h.witness;
  out.h_tilde = pick_ht.ratio;
  out.h_tilde_d = to_double(out.h_tilde);
  out.witness_tilde = pick_ht.witness;
  out.exact = exact;
  out.rim_contact = boundary_weight(g, out.witness).touches_rim ||
                    boundary_weight(g, out.witness_tilde).touches_rim;
}

}  // namespace

BoundaryWeight boundary_weight(const Graph& g, const std::vector<int>& subset) {
  std::vector<int> u = checked_subset(g, subset, true);
  std::vector<char> in = membership(g, u);
  BoundaryWeight out;
  out.weight = 0;
  for (const PairWeight& pw : g.pair_weights()) {
    if (in[pw.a] == in[pw.b]) continue;
    out.weight += pw.total;
    if (g.vertex(pw.a).window_boundary || g.vertex(pw.b).window_boundary) out.touches_rim = true;
  }
  out.weight_d = to_double(out.weight);
  return out;
}

CheegerResult cheeger_exact(const Graph& g, const std::vector<int>& omega) {
  std::vector<int> om = checked_subset(g, omega, false);
  if (static_cast<int>(om.size()) > kExactCap) {
    std::ostringstream msg;
    msg << "omega has " << om.size() << " vertices, exceeding the exact enumeration cap of "
        << kExactCap << "; use cheeger_heuristic";
    throw GraphError(msg.str());
  }
  auto comps = components_within(g, om);
  ExactPick pick_h, pick_ht;
  for (const auto& comp : comps) enumerate_component(g, comp, pick_h, pick_ht);
  CheegerResult out;
  finish_result(g, pick_h, pick_ht, true, out);
  return out;
}

CheegerResult cheeger_heuristic(const Graph& g, const std::vector<int>& omega) {
  std::vector<int> om = checked_subset(g, omega, false);
  std::vector<char> in = membership(g, om);

  double best_h = std::numeric_limits<double>::infinity();
  double best_ht = std::numeric_limits<double>::infinity();
  ExactPick pick_h, pick_ht;
  auto offer = [&](std::vector<int> cand) {
    if (cand.empty()) return;
    std::sort(cand.begin(), cand.end());
    Rational num = boundary_weight(g, cand).weight;
    double num_d = to_double(num);
    Rational den_m = exact_measure_sum(g, cand);
    double r_h = num_d / to_double(den_m);
    if (r_h < best_h) {
      best_h = r_h;
      pick_h.ratio = num / den_m;
      pick_h.witness = cand;
      pick_h.valid = true;
    }
    Rational den_b = exact_beta_sum(g, cand);
    if (den_b > 0) {
      double r_ht = num_d / to_double(den_b);
      if (r_ht < best_ht) {
        best_ht = r_ht;
        pick_ht.ratio = num / den_b;
        pick_ht.witness = std::move(cand);
        pick_ht.valid = true;
      }
    }
  };

  // Singleton cuts first; they settle ties toward small witnesses.
  for (int v : om) offer({v});

  // Breadth-first distance from the boundary anchors: the vertices of omega
  // with a neighbor outside. Prefixes of this order sweep omega inward.
  std::vector<int> dist(g.size(), std::numeric_limits<int>::max());
  std::queue<int> q;
  for (int v : om) {
    bool anchor = false;
    for (int p : g.pairs_of(v)) {
      const PairWeight& pw = g.pair_weights()[p];
      int u = pw.a == v ? pw.b : pw.a;
      if (!in[u]) anchor = true;
    }
    if (anchor) {
      dist[v] = 0;
      q.push(v);
    }
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int p : g.pairs_of(v)) {
      const PairWeight& pw = g.pair_weights()[p];
      int u = pw.a == v ? pw.b : pw.a;
      if (in[u] && dist[u] == std::numeric_limits<int>::max()) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  std::vector<int> order = om;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return dist[a] != dist[b] ? dist[a] < dist[b] : a < b; });
  for (std::size_t len = 1; len <= order.size(); ++len)
    offer(std::vector<int>(order.begin(), order.begin() + len));

  // Sweep cuts ordered by the second eigenvector of the symmetrized Dirichlet
  // form on each component. Both directions, so the eigensolver's sign choice
  // cannot matter.
  for (const auto& comp : components_within(g, om)) {
    const int s = static_cast<int>(comp.size());
    if (s < 2 || s > 4096) continue;
    Eigen::MatrixXd a = assemble(g, comp, OpKind::S).symmetrized();
    Eigen::MatrixXd herm = 0.5 * (a + a.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(herm);
    if (es.info() != Eigen::Success) continue;
    Eigen::VectorXd fiedler = es.eigenvectors().col(1);
    std::vector<int> idx(comp.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
      if (fiedler[x] != fiedler[y]) return fiedler[x] < fiedler[y];
      return comp[x] < comp[y];
    });
    std::vector<int> sweep;
    for (int i : idx) {
      sweep.push_back(comp[i]);
      offer(sweep);
    }
    sweep.clear();
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
      sweep.push_back(comp[*it]);
      offer(sweep);
    }
  }

  // Local refinement: toggle single vertices on the incumbent witness while it
  // keeps improving. Fixed scan order keeps the result deterministic.
  auto refine = [&](bool beta_den) {
    const ExactPick& cur = beta_den ? pick_ht : pick_h;
    double& best = beta_den ? best_ht : best_h;
    if (!cur.valid) return;
    for (int pass = 0; pass < 3; ++pass) {
      bool improved = false;
      for (int v : om) {
        std::vector<int> trial = cur.witness;
        auto it = std::lower_bound(trial.begin(), trial.end(), v);
        if (it != trial.end() && *it == v) {
          if (trial.size() == 1) continue;
          trial.erase(it);
        } else {
          trial.insert(it, v);
        }
        double before = best;
        offer(std::move(trial));
        if (best < before) improved = true;
      }
      if (!improved) break;
    }
  };
  refine(false);
  refine(true);

  CheegerResult out;
  finish_result(g, pick_h, pick_ht, false, out);
  return out;
}

SupRatio m_sup(const Graph& g, const std::vector<int>& omega) {
  std::vector<int> om = checked_subset(g, omega, false);
  SupRatio out;
  for (int v : om) {
    Rational ratio = g.beta_plus(v) / g.vertex(v).measure;
    if (out.argmax < 0 || ratio > out.value) {
      out.value = ratio;
      out.argmax = v;
    }
  }
  out.value_d = to_double(out.value);
  return out;
}

CheegerInequality inequality_check(const Graph& g, const std::vector<int>& omega) {
  std::vector<int> om = checked_subset(g, omega, false);
  bool can_exact = static_cast<int>(om.size()) <= kExactCap;
  CheegerResult ch = can_exact ? cheeger_exact(g, om) : cheeger_heuristic(g, om);
  SupRatio sup = m_sup(g, om);
  CheegerInequality out;
  out.h = ch.h_d;
  out.m = sup.value_d;
  out.nu = nu(assemble(g, om, OpKind::delta));
  out.lower = out.h * out.h / 8;
  out.product = out.m * out.nu;
  out.upper = out.m * out.h / 2;
  out.exact_h = can_exact;
  out.lower_certified = can_exact;
  double tol = 1e-9 * std::max(1.0, std::abs(out.product));
  out.holds = out.product <= out.upper + tol &&
              (!out.lower_certified || out.lower <= out.product + tol);
  return out;
}

TrendReport h_infinity_trend(const Graph& g, const std::vector<int>& ns) {
  if (ns.empty()) throw GraphError("empty level list");
  TrendReport out;
  std::vector<int> dist = hop_distance_field(g, default_center(g));
  for (int n : ns) {
    std::vector<int> omega;
    for (int v : g.interior())
      if (dist[v] > n) omega.push_back(v);
    if (omega.empty()) {
      std::ostringstream msg;
      msg << "no interior vertices beyond ball(" << n << ")";
      throw GraphError(msg.str());
    }
    CheegerResult ch = static_cast<int>(omega.size()) <= kExactCap ? cheeger_exact(g, omega)
                                                                  : cheeger_heuristic(g, omega);
    SupRatio sup = m_sup(g, omega);
    out.ns.push_back(n);
    out.h.push_back(ch.h_d);
    out.h_tilde.push_back(ch.h_tilde_d);
    out.m_sups.push_back(sup.value_d);
    out.c_n.push_back(ch.h_d * ch.h_d / (8 * sup.value_d));
    out.window_dominated.push_back(ch.rim_contact);

    std::vector<int> annulus;
    for (int v : g.interior())
      if (dist[v] > n && dist[v] <= 2 * n) annulus.push_back(v);
    if (annulus.empty()) {
      out.testset_ratio.push_back(std::numeric_limits<double>::quiet_NaN());
    } else {
      Rational den = exact_beta_sum(g, annulus);
      double ratio = den > 0 ? to_double(boundary_weight(g, annulus).weight) / to_double(den)
                             : std::numeric_limits<double>::quiet_NaN();
      out.testset_ratio.push_back(ratio);
    }
  }
  out.h_estimate = out.h.back();
  out.h_tilde_estimate = out.h_tilde.back();
  out.h_exponent = fit_power_exponent(out.ns, out.h);
  out.h_tilde_exponent = fit_power_exponent(out.ns, out.h_tilde);
  out.testset_exponent = fit_power_exponent(out.ns, out.testset_ratio);
  return out;
}

AbsReport abs_condition(const GeneratorSpec& spec, const std::vector<int>& ns,
                        const std::vector<std::vector<int>>& k_schedule) {
  if (ns.empty()) throw GraphError("empty level list");
  if (k_schedule.size() != ns.size()) throw GraphError("k schedule must have one row per level");
  AbsReport rep;
  rep.ns = ns;
  rep.k_schedule = k_schedule;
  int max_k = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    auto& row = rep.k_schedule[i];
    if (row.empty()) throw GraphError("empty k row");
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    if (row.front() <= ns[i]) {
      std::ostringstream msg;
      msg << "k must exceed n: got k = " << row.front() << " with n = " << ns[i];
      throw GraphError(msg.str());
    }
    max_k = std::max(max_k, row.back());
  }

  EssWindow win = ess_window(spec, max_k);
  const Graph& g = win.graph;
  rep.window_saturated = win.saturated;

  rep.cell_c.resize(ns.size());
  rep.cell_lambda1.resize(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    double row_c = std::numeric_limits<double>::infinity();
    double row_margin = std::numeric_limits<double>::infinity();
    for (int k : rep.k_schedule[i]) {
      std::vector<int> subset;
      for (int v = 0; v < g.size(); ++v)
        if (win.dist[v] > ns[i] && win.dist[v] <= k) {
          subset.push_back(v);
          if (g.vertex(v).window_boundary) rep.window_saturated = true;
        }
      if (subset.empty()) {
        std::ostringstream msg;
        msg << "empty annulus for n = " << ns[i] << ", k = " << k;
        throw GraphError(msg.str());
      }
      CheegerResult ch = static_cast<int>(subset.size()) <= kExactCap
                             ? cheeger_exact(g, subset)
                             : cheeger_heuristic(g, subset);
      SupRatio sup = m_sup(g, subset);
      double c = ch.h_d * ch.h_d / (8 * sup.value_d);
      double l1 = lambda1_symmetric(assemble(g, subset, OpKind::S));
      rep.cell_c[i].push_back(c);
      rep.cell_lambda1[i].push_back(l1);
      row_c = std::min(row_c, c);
      row_margin = std::min(row_margin, l1 - c);
    }
    rep.c_n.push_back(row_c);
    rep.margin.push_back(row_margin);
  }

  if (rep.c_n.size() < 3) {
    rep.verdict = "inconclusive";
    return rep;
  }
  std::size_t last = rep.c_n.size() - 1;
  bool increasing = rep.c_n[last - 2] < rep.c_n[last - 1] && rep.c_n[last - 1] < rep.c_n[last];
  bool nonincreasing = rep.c_n[last - 2] >= rep.c_n[last - 1] - 1e-12 &&
                       rep.c_n[last - 1] >= rep.c_n[last] - 1e-12;
  bool margins_ok = true;
  for (std::size_t i = 0; i < rep.margin.size(); ++i)
    if (rep.margin[i] < -1e-9 * std::max(1.0, std::abs(rep.c_n[i]))) margins_ok = false;
  if (increasing && margins_ok && !rep.window_saturated)
    rep.verdict = "satisfied";
  else if (nonincreasing)
    rep.verdict = "not satisfied";
  else
    rep.verdict = "inconclusive";
  return rep;
}

}  // namespace dirlap
