#pragma once

#include "dirlap/graph.hpp"
#include "dirlap/validate.hpp"

#include <limits>
#include <vector>

namespace dirlap {

// Nested vertex sets G_1 ⊂ G_2 ⊂ ... inside a window. Strict inclusion is
// required; levels are sorted index lists. A level whose induced subgraph is
// not (weakly) connected is recorded, not rejected: generators always produce
// connected levels, hand-built ones may not.
class Filtration {
 public:
  explicit Filtration(const Graph& g, std::vector<std::vector<int>> levels);

  int count() const { return static_cast<int>(levels_.size()); }
  const std::vector<int>& level(int i) const { return levels_[i]; }
  bool level_connected(int i) const { return connected_[i]; }

  // Combinatorial balls of radius 1..n_max around `center` (undirected hops).
  static Filtration balls(const Graph& g, int center, int n_max);

 private:
  std::vector<std::vector<int>> levels_;
  std::vector<bool> connected_;
};

// Prefers the vertex with integer id 0 (lattice windows), else index 0.
int default_center(const Graph& g);

// Undirected hop distance to every vertex; -1 when unreachable.
std::vector<int> hop_distance_field(const Graph& g, int center);

// Closed ball in undirected hop distance.
std::vector<int> hop_ball(const Graph& g, int center, int radius);

// Chain metric with edge length sqrt(m(x)m(y)) / sqrt(b(x,y)+b(y,x)).
double delta_b_distance(const Graph& g, int x, int y);  // throws on no chain
// Multi-source variant; unreachable vertices get +infinity.
std::vector<double> delta_b_distances_from(const Graph& g, const std::vector<int>& sources);

struct CutoffReport {
  std::vector<std::vector<double>> chi;  // per level, per vertex, in [0,1]
  std::vector<double> constants;         // C_n = max_x (1/m) sum (b+b^T)|dchi|^2
  double sup_constant;
  bool bounded_trend;                    // advisory: tail of C_n is non-increasing
};

// chi_n(x) = clamp(1 - dist_delta_b(x, levels[n]) / radius_profile[n], 0, 1).
CutoffReport chi_cutoffs(const Graph& g, const Filtration& f,
                         const std::vector<double>& radius_profile);

// Advisory essential-self-adjointness report for the symmetric part: names
// which known sufficient criterion applies on this window. Not a proof; the
// completeness of an infinite graph is not decidable from a finite window.
struct EsaAdvisory {
  bool m_constant;
  int degree_bound;
  bool ball_growth_finite;    // delta_b balls stop growing only at the window edge
  double cutoff_sup_constant; // sup_n C_n from chi_cutoffs
  bool cutoff_bounded_trend;
  std::string criterion;      // "constant-measure" | "cutoff-energy" | "none"
};

EsaAdvisory esa_advisory(const Graph& g, const Filtration& f,
                         const std::vector<double>& radius_profile);

}  // namespace dirlap
