#pragma once

#include "dirlap/graph.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <complex>
#include <iosfwd>
#include <vector>

namespace dirlap {

enum class OpKind { delta, delta_prime, S, B, custom };

std::string to_string(OpKind k);

// A matrix together with the measure it is weighted by: the operator acts on
// l2(subset, m). Spectra are computed in symmetrized coordinates
// Atilde = D^{1/2} A D^{-1/2}, D = diag(m), where the weighted inner product
// becomes the standard one.
struct WeightedOperator {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd measure;
  OpKind label = OpKind::custom;
  std::vector<int> subset;  // graph indices, ascending

  int dim() const { return static_cast<int>(matrix.rows()); }
  Eigen::MatrixXd symmetrized() const;
};

// Dirichlet semantics: functions are extended by zero outside the subset, so
// the diagonal keeps the full beta+/m (resp. beta-/m) including edges that
// exit the subset, while off-diagonal entries only couple subset vertices.
WeightedOperator assemble(const Graph& g, std::vector<int> subset, OpKind which);

// The two sides of the summation-by-parts identity
//   (Df,g)_m + (f,Dg)_m = sum_{(x,y)} b(x,y)(f(x)-f(y)) conj(g(x)-g(y))
// on the full window, for f,g supported away from the window rim. Exact when
// in/out balance holds on the support's rows. (For real f,g this is the
// classical two-term Green formula; the mixed form above is the one that
// survives complex scalars.)
struct GreenPairing {
  std::complex<double> lhs, rhs, residual;
};

GreenPairing green_pairing(const Graph& g, const Eigen::VectorXcd& f, const Eigen::VectorXcd& g_vec);
std::complex<double> green_residual(const Graph& g, const Eigen::VectorXcd& f,
                                    const Eigen::VectorXcd& g_vec);

Eigen::VectorXcd apply(const WeightedOperator& op, const Eigen::VectorXcd& f);
std::complex<double> inner_m(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g,
                             const Eigen::VectorXd& measure);
double norm_m(const Eigen::VectorXcd& f, const Eigen::VectorXd& measure);

// l2(m) operator norm of B = delta - delta' (largest singular value in
// symmetrized coordinates), on the window interior unless a subset is given.
// Bounded by the antisymmetry constant of the validation report; rim rows are
// skipped by default because their imbalance is a truncation artifact.
double operator_norm_B(const Graph& g, std::vector<int> subset = {});

// Sparse symmetrized S for windows past the dense cutoff.
struct SparseSym {
  Eigen::SparseMatrix<double> matrix;
  Eigen::VectorXd measure;
};
SparseSym assemble_S_symmetrized_sparse(const Graph& g, const std::vector<int>& subset);

// Triplet export `i j value` (subset-local indices) plus the measure vector,
// for inspection outside the toolkit.
void write_triplets(const WeightedOperator& op, std::ostream& out);
void write_measure(const WeightedOperator& op, std::ostream& out);

}  // namespace dirlap
