#pragma once

#include "dirlap/generators.hpp"
#include "dirlap/graph.hpp"
#include "dirlap/operators.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace dirlap {

// Eigenvalues in symmetrized coordinates, sorted by real part then imaginary
// part. Symmetric matrices go through the self-adjoint solver so their spectra
// come back exactly real.
std::vector<std::complex<double>> eigenvalues(const WeightedOperator& op);

// Bottom eigenvalue of an operator that is self-adjoint on l2(m). Dense up to
// `dense_cutoff`, Lanczos with full reorthogonalization beyond. Throws when
// the symmetrized matrix is not symmetric -- i.e. beta violated on subset
// closure -- because such a restriction has no self-adjoint realization.
double lambda1_symmetric(const WeightedOperator& op, int dense_cutoff = 4096);

// Bottom of the numerical range: lambda_min of the Hermitian part in
// symmetrized coordinates.
double nu(const WeightedOperator& op);

struct NuIdentity {
  double nu_delta = 0;   // bottom of the numerical range of the Dirichlet Laplacian
  double lambda1_S = 0;  // bottom eigenvalue of the Dirichlet symmetric part
  double gap = 0;        // |nu_delta - lambda1_S|, zero in exact arithmetic
};

NuIdentity nu_identity(const Graph& g, const std::vector<int>& subset);

struct RangeSweep {
  std::vector<double> thetas;                // sweep angles in [0, 2pi)
  std::vector<std::complex<double>> points;  // boundary points v* A v
  std::vector<double> support;               // support values max Re(e^{-i theta} W)
};

// Boundary of the numerical range by supporting half-planes: for each angle the
// top eigenvector v of the Hermitian part of e^{-i theta} Atilde gives both a
// boundary point v* Atilde v and the support value in that direction. Requires
// angle_count >= 8.
RangeSweep numerical_range_boundary(const WeightedOperator& op, int angle_count = 64);

// z lies in every supporting half-plane of the sweep, up to tol. The test is
// circumscribed, so it cannot reject a point of the range no matter how coarse
// the sweep is.
bool range_contains(const RangeSweep& sweep, std::complex<double> z, double tol = 1e-6);

struct SectorReport {
  double vertex = 0;      // apex a on the real axis
  double half_angle = 0;  // radians; obtuse when the range spills left of the apex
  double nu = 0;          // bottom of the numerical range
  double im_bound = 0;    // ||skew part||_2 >= sup |Im W|
  double gamma = 0;       // weight-asymmetry constant over the subset rows
  bool sectorial = false; // half_angle strictly below pi/2
};

// Smallest sector {z : |arg(z - a)| <= theta} with apex a containing the
// rectangle {Re >= nu, |Im| <= im_bound}, hence the numerical range. The apex
// defaults to -gamma/2, the lower bound the asymmetry constant guarantees.
SectorReport sector_fit(const Graph& g, const std::vector<int>& subset,
                        std::optional<double> vertex = std::nullopt);

bool in_sector(const SectorReport& s, std::complex<double> z, double tol = 1e-9);

struct EssSpectrumEstimate {
  std::vector<int> ns;
  std::vector<std::vector<int>> k_schedule;
  std::vector<std::vector<double>> lambda1;  // lambda1(S restricted to ball(k) \ ball(n))
  std::vector<double> inner_limits;          // per n: min over the k row
  bool k_monotone = true;       // every row non-increasing in k
  bool k_converged = true;      // every row's last step below 1e-3 relative
  bool window_saturated = false;// outermost ball hit the window edge
  double limit_estimate = 0;    // inner_limits.back(): tail estimate of the essential bottom
  std::string verdict;          // "diverges" | "bounded" | "inconclusive"
};

// Window instantiation shared by the exterior estimates: the integer-line
// family is regenerated large enough to keep balls of radius max_k clear of
// the rim; fixed graphs are used as-is and flagged saturated when the
// outermost ball already covers them.
struct EssWindow {
  Graph graph;
  std::vector<int> dist;  // undirected hops from the default center
  bool saturated = false;
};
EssWindow ess_window(const GeneratorSpec& spec, int max_k);

// Exterior bottom eigenvalues over nested annuli: lambda1 of the Dirichlet
// symmetric part on ball(k) \ ball(n) decreases in k to the exterior value,
// whose limit in n is the bottom of the essential spectrum. Every k must
// exceed its n.
EssSpectrumEstimate ess_spectrum_estimate(const GeneratorSpec& spec, const std::vector<int>& ns,
                                          const std::vector<std::vector<int>>& k_schedule);

// k = n+1 .. 4n for each n (requires n >= 1).
std::vector<std::vector<int>> default_k_schedule(const std::vector<int>& ns);

struct LewisCheck {
  double lambda1_S = 0;        // bottom eigenvalue of the symmetric part
  double min_re_spectrum = 0;  // min Re over eigenvalues of the full operator
  double margin = 0;           // min_re_spectrum - lambda1_S
  double form_residual = 0;    // max relative |Re(Df,f)_m - (Sf,f)_m| over probes
  bool holds = false;
};

// Finite shadow of the half-plane comparison between an operator and its
// symmetric lower bound: Re(Df,f)_m equals (Sf,f)_m identically, so every
// eigenvalue of D has real part at least lambda1(S).
LewisCheck lewis_check(const Graph& g, const std::vector<int>& subset, int probes = 16,
                       std::uint64_t seed = 7);

}  // namespace dirlap
