#include "dirlap/operators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace dirlap {

std::string to_string(OpKind k) {
  switch (k) {
    case OpKind::delta: return "delta";
    case OpKind::delta_prime: return "delta-prime";
    case OpKind::S: return "S";
    case OpKind::B: return "B";
    case OpKind::custom: return "custom";
  }
  return "custom";
}

Eigen::MatrixXd WeightedOperator::symmetrized() const {
  Eigen::VectorXd sqrt_m = measure.array().sqrt();
  Eigen::MatrixXd out = matrix;
  const int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) *= sqrt_m(i) / sqrt_m(j);
  return out;
}

namespace {

WeightedOperator assemble_one(const Graph& g, const std::vector<int>& subset, OpKind which) {
  const int n = static_cast<int>(subset.size());
  std::vector<int> pos(g.size(), -1);
  for (int i = 0; i < n; ++i) pos[subset[i]] = i;

  WeightedOperator op;
  op.label = which;
  op.subset = subset;
  op.measure.resize(n);
  op.matrix = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    int x = subset[i];
    double m = g.vertex(x).measure_d;
    op.measure(i) = m;
    op.matrix(i, i) = (which == OpKind::delta ? g.beta_plus_d(x) : g.beta_minus_d(x)) / m;
    auto edges = which == OpKind::delta ? g.out_edges(x) : g.in_edges(x);
    for (int e : edges) {
      int y = which == OpKind::delta ? g.edge(e).dst : g.edge(e).src;
      if (pos[y] >= 0) op.matrix(i, pos[y]) -= g.edge(e).weight_d / m;
    }
  }
  return op;
}

}  // namespace

WeightedOperator assemble(const Graph& g, std::vector<int> subset, OpKind which) {
  if (subset.empty()) throw GraphError("empty subset");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.front() < 0 || subset.back() >= g.size()) throw GraphError("subset out of range");

  switch (which) {
    case OpKind::delta:
    case OpKind::delta_prime:
      return assemble_one(g, subset, which);
    case OpKind::S: {
      WeightedOperator op = assemble_one(g, subset, OpKind::delta);
      op.matrix = (op.matrix + assemble_one(g, subset, OpKind::delta_prime).matrix) / 2.0;
      op.label = OpKind::S;
      return op;
    }
    case OpKind::B: {
      WeightedOperator op = assemble_one(g, subset, OpKind::delta);
      op.matrix -= assemble_one(g, subset, OpKind::delta_prime).matrix;
      op.label = OpKind::B;
      return op;
    }
    case OpKind::custom:
      break;
  }
  throw GraphError("cannot assemble custom operator");
}

GreenPairing green_pairing(const Graph& g, const Eigen::VectorXcd& f,
                           const Eigen::VectorXcd& g_vec) {
  const int n = g.size();
  if (f.size() != n || g_vec.size() != n) throw GraphError("vector dimension mismatch");
  for (int v = 0; v < n; ++v)
    if (g.vertex(v).window_boundary && (f(v) != 0.0 || g_vec(v) != 0.0))
      throw GraphError("support must be interior");

  auto lap = [&](const Eigen::VectorXcd& h) {
    Eigen::VectorXcd out(n);
    for (int x = 0; x < n; ++x) {
      std::complex<double> acc = 0.0;
      for (int e : g.out_edges(x)) acc += g.edge(e).weight_d * (h(x) - h(g.edge(e).dst));
      out(x) = acc / g.vertex(x).measure_d;
    }
    return out;
  };

  Eigen::VectorXcd df = lap(f), dg = lap(g_vec);
  std::complex<double> lhs = 0.0;
  for (int x = 0; x < n; ++x) {
    double m = g.vertex(x).measure_d;
    lhs += m * df(x) * std::conj(g_vec(x));
    lhs += m * f(x) * std::conj(dg(x));
  }
  std::complex<double> rhs = 0.0;
  for (const auto& e : g.edges())
    rhs += e.weight_d * (f(e.src) - f(e.dst)) * std::conj(g_vec(e.src) - g_vec(e.dst));
  return GreenPairing{lhs, rhs, lhs - rhs};
}

std::complex<double> green_residual(const Graph& g, const Eigen::VectorXcd& f,
                                    const Eigen::VectorXcd& g_vec) {
  return green_pairing(g, f, g_vec).residual;
}

Eigen::VectorXcd apply(const WeightedOperator& op, const Eigen::VectorXcd& f) {
  if (f.size() != op.dim()) throw GraphError("vector dimension mismatch");
  return op.matrix.cast<std::complex<double>>() * f;
}

std::complex<double> inner_m(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g,
                             const Eigen::VectorXd& measure) {
  if (f.size() != measure.size() || g.size() != measure.size())
    throw GraphError("vector dimension mismatch");
  std::complex<double> acc = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i) acc += measure(i) * f(i) * std::conj(g(i));
  return acc;
}

double norm_m(const Eigen::VectorXcd& f, const Eigen::VectorXd& measure) {
  return std::sqrt(std::abs(inner_m(f, f, measure)));
}

double operator_norm_B(const Graph& g, std::vector<int> subset) {
  if (subset.empty()) subset = g.interior();
  WeightedOperator b = assemble(g, std::move(subset), OpKind::B);
  Eigen::MatrixXd bt = b.symmetrized();
  return bt.bdcSvd().singularValues()(0);
}

SparseSym assemble_S_symmetrized_sparse(const Graph& g, const std::vector<int>& subset_in) {
  if (subset_in.empty()) throw GraphError("empty subset");
  std::vector<int> subset = subset_in;
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  const int n = static_cast<int>(subset.size());
  std::vector<int> pos(g.size(), -1);
  for (int i = 0; i < n; ++i) pos[subset[i]] = i;

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(3 * n);
  SparseSym out;
  out.measure.resize(n);
  for (int i = 0; i < n; ++i) {
    int x = subset[i];
    double m = g.vertex(x).measure_d;
    out.measure(i) = m;
    trip.emplace_back(i, i, (g.beta_plus_d(x) + g.beta_minus_d(x)) / (2.0 * m));
    for (int p : g.pairs_of(x)) {
      const auto& pw = g.pair_weights()[p];
      int y = pw.a == x ? pw.b : pw.a;
      if (pos[y] >= 0)
        trip.emplace_back(i, pos[y],
                          -pw.total_d / (2.0 * std::sqrt(m * g.vertex(y).measure_d)));
    }
  }
  out.matrix.resize(n, n);
  out.matrix.setFromTriplets(trip.begin(), trip.end());
  return out;
}

void write_triplets(const WeightedOperator& op, std::ostream& out) {
  char buf[64];
  for (int i = 0; i < op.dim(); ++i)
    for (int j = 0; j < op.dim(); ++j)
      if (op.matrix(i, j) != 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", op.matrix(i, j));
        out << i << " " << j << " " << buf << "\n";
      }
}

void write_measure(const WeightedOperator& op, std::ostream& out) {
  char buf[64];
  for (int i = 0; i < op.dim(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", op.measure(i));
    out << buf << "\n";
  }
}

}  // namespace dirlap
