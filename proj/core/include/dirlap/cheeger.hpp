#pragma once

#include "dirlap/generators.hpp"
#include "dirlap/graph.hpp"

#include <string>
#include <vector>

namespace dirlap {

// b(edge boundary of U): every directed edge crossing U in either orientation,
// i.e. the orientation-summed weight of the unordered crossing pairs. The flag
// marks cuts that involve a window-rim endpoint: their weight reflects the
// truncation, not the graph.
struct BoundaryWeight {
  Rational weight;
  double weight_d = 0;
  bool touches_rim = false;
};

BoundaryWeight boundary_weight(const Graph& g, const std::vector<int>& subset);

// Isoperimetric ratios over non-empty U inside omega:
//   h       = min b(boundary U) / m(U)
//   h_tilde = min b(boundary U) / beta+(U)
// Ratios are exact rationals recomputed for the minimizing set; `exact` says
// the minimum is certified by enumeration rather than found by search.
struct CheegerResult {
  Rational h;
  double h_d = 0;
  std::vector<int> witness;  // graph indices, ascending
  Rational h_tilde;
  double h_tilde_d = 0;
  std::vector<int> witness_tilde;
  bool exact = false;
  bool rim_contact = false;  // a witness cut touches the window rim
};

// Full enumeration, component by component (a minimizer always lies inside one
// connected component of omega). Throws when omega exceeds 22 vertices; use
// cheeger_heuristic past that size.
CheegerResult cheeger_exact(const Graph& g, const std::vector<int>& omega);

// Deterministic search over a fixed candidate family: every singleton, the
// prefixes of the boundary-anchored breadth-first order of omega, and sweep
// cuts ordered by the second eigenvector of the symmetrized Dirichlet form on
// each component, then single-vertex local refinement. The values are upper
// bounds for h and h_tilde.
CheegerResult cheeger_heuristic(const Graph& g, const std::vector<int>& omega);

// M_omega = sup beta+(x)/m(x), compared exactly.
struct SupRatio {
  Rational value;
  double value_d = 0;
  int argmax = -1;
};

SupRatio m_sup(const Graph& g, const std::vector<int>& omega);

// The two-sided estimate h^2/8 <= M * nu <= M*h/2 linking the isoperimetric
// ratio to the bottom of the numerical range of the Dirichlet Laplacian.
// With a heuristic h only the upper side is certified: an overestimated h can
// break the lower side without meaning anything.
struct CheegerInequality {
  double h = 0, m = 0, nu = 0;
  double lower = 0;    // h^2 / 8
  double product = 0;  // m * nu
  double upper = 0;    // m * h / 2
  bool exact_h = false;
  bool lower_certified = false;
  bool holds = false;
};

CheegerInequality inequality_check(const Graph& g, const std::vector<int>& omega);

// Exterior isoperimetric profile: for each n the ratios on the complement of
// ball(n) inside the window interior, the sup ratio M there, and the resulting
// coercivity candidate c_n = h^2/(8M). testset_ratio evaluates the concrete
// family U = ball(2n) \ ball(n), an upper bound for h_tilde(exterior) that
// stays meaningful when the window dominates the infimum.
struct TrendReport {
  std::vector<int> ns;
  std::vector<double> h, h_tilde, m_sups, c_n;
  std::vector<double> testset_ratio;    // NaN when the annulus is empty
  std::vector<bool> window_dominated;   // witness cut touches the rim
  double h_estimate = 0, h_tilde_estimate = 0;  // last level
  // Fitted power-law slopes d log(value) / d log(n); NaN with < 2 usable points.
  double h_exponent = 0, h_tilde_exponent = 0, testset_exponent = 0;
};

TrendReport h_infinity_trend(const Graph& g, const std::vector<int>& ns);

// Coercivity condition over nested annuli: cell value h^2/(8M) on
// ball(k) \ ball(n), c_n its minimum over the k row, margin the worst slack
// lambda1 - cell of the guaranteed bound lambda1(S Dirichlet) >= cell.
// Verdict "satisfied" needs a strictly increasing c_n tail with non-negative
// margins on an unsaturated window.
struct AbsReport {
  std::vector<int> ns;
  std::vector<std::vector<int>> k_schedule;
  std::vector<std::vector<double>> cell_c;
  std::vector<std::vector<double>> cell_lambda1;
  std::vector<double> c_n;
  std::vector<double> margin;
  bool window_saturated = false;
  std::string verdict;  // "satisfied" | "not satisfied" | "inconclusive"
};

AbsReport abs_condition(const GeneratorSpec& spec, const std::vector<int>& ns,
                        const std::vector<std::vector<int>>& k_schedule);

}  // namespace dirlap
