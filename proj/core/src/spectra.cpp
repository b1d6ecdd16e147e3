#include "dirlap/spectra.hpp"

#include "dirlap/metric.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

namespace dirlap {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

int worker_count() {
  if (const char* env = std::getenv("DIRLAP_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Results are written by index, so the split is invisible in the output.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
  int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::future<void>> futs;
  futs.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    futs.push_back(std::async(std::launch::async, [&, w] {
      for (int i = w; i < n; i += workers) fn(i);
    }));
  }
  for (auto& f : futs) f.get();
}

double max_asymmetry(const MatrixXd& a) {
  double worst = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - a(j, i)));
  return worst;
}

bool effectively_symmetric(const MatrixXd& a) {
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  return max_asymmetry(a) <= 1e-12 * scale;
}

double lanczos_lambda_min(const MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  const int max_iter = std::min(n, 600);
  VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = 1.0 + 0.001 * std::sin(static_cast<double>(i));
  v.normalize();
  MatrixXd basis(n, max_iter);
  VectorXd alpha(max_iter), beta(max_iter);
  double prev = std::numeric_limits<double>::infinity();
  int j = 0;
  for (; j < max_iter; ++j) {
    basis.col(j) = v;
    VectorXd w = a * v;
    alpha(j) = v.dot(w);
    w -= alpha(j) * v;
    if (j > 0) w -= beta(j - 1) * basis.col(j - 1);
    // Two reorthogonalization passes keep the basis orthogonal to working
    // precision; without them spurious eigenvalue copies appear.
    for (int pass = 0; pass < 2; ++pass)
      w -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).transpose() * w);
    double b = w.norm();
    bool invariant = b < 1e-14;
    if (invariant || j == max_iter - 1 || (j >= 20 && j % 10 == 0)) {
      Eigen::SelfAdjointEigenSolver<MatrixXd> es;
      es.computeFromTridiagonal(alpha.head(j + 1), beta.head(j), Eigen::EigenvaluesOnly);
      double cur = es.eigenvalues()(0);
      if (invariant || std::abs(cur - prev) <= 1e-13 * std::max(1.0, std::abs(cur))) return cur;
      prev = cur;
    }
    if (invariant) break;
    beta(j) = b;
    v = w / b;
  }
  Eigen::SelfAdjointEigenSolver<MatrixXd> es;
  int steps = std::min(j + 1, max_iter);
  es.computeFromTridiagonal(alpha.head(steps), beta.head(steps - 1), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double subset_gamma(const Graph& g, const std::vector<int>& subset) {
  double worst = 0;
  for (int x : subset) {
    std::map<int, double> diff;
    for (int ei : g.out_edges(x)) diff[g.edge(ei).dst] += g.edge(ei).weight_d;
    for (int ei : g.in_edges(x)) diff[g.edge(ei).src] -= g.edge(ei).weight_d;
    double row = 0;
    for (const auto& [y, d] : diff) row += std::abs(d);
    worst = std::max(worst, row / g.vertex(x).measure_d);
  }
  return worst;
}

}  // namespace

std::vector<std::complex<double>> eigenvalues(const WeightedOperator& op) {
  MatrixXd at = op.symmetrized();
  std::vector<std::complex<double>> out;
  out.reserve(op.dim());
  if (effectively_symmetric(at)) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(((at + at.transpose()) / 2).eval(),
                                               Eigen::EigenvaluesOnly);
    for (int i = 0; i < op.dim(); ++i) out.emplace_back(es.eigenvalues()(i), 0.0);
  } else {
    Eigen::EigenSolver<MatrixXd> es(at, false);
    for (int i = 0; i < op.dim(); ++i) out.push_back(es.eigenvalues()(i));
  }
  std::sort(out.begin(), out.end(), [](std::complex<double> a, std::complex<double> b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

double lambda1_symmetric(const WeightedOperator& op, int dense_cutoff) {
  MatrixXd at = op.symmetrized();
  double scale = std::max(1.0, at.cwiseAbs().maxCoeff());
  double asym = max_asymmetry(at);
  if (asym > 1e-12 * scale) {
    std::ostringstream msg;
    msg << "beta violated on subset closure: symmetrized " << to_string(op.label)
        << " deviates from symmetry by " << asym;
    throw GraphError(msg.str());
  }
  MatrixXd sym = (at + at.transpose()) / 2;
  if (op.dim() <= dense_cutoff) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(sym, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
  }
  return lanczos_lambda_min(sym);
}

double nu(const WeightedOperator& op) {
  MatrixXd at = op.symmetrized();
  MatrixXd herm = (at + at.transpose()) / 2;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

NuIdentity nu_identity(const Graph& g, const std::vector<int>& subset) {
  NuIdentity out;
  out.nu_delta = nu(assemble(g, subset, OpKind::delta));
  out.lambda1_S = lambda1_symmetric(assemble(g, subset, OpKind::S));
  out.gap = std::abs(out.nu_delta - out.lambda1_S);
  return out;
}

RangeSweep numerical_range_boundary(const WeightedOperator& op, int angle_count) {
  if (angle_count < 8) throw GraphError("angle_count must be at least 8");
  MatrixXcd a = op.symmetrized().cast<std::complex<double>>();
  RangeSweep sweep;
  sweep.thetas.resize(angle_count);
  sweep.points.resize(angle_count);
  sweep.support.resize(angle_count);
  const int dim = op.dim();
  parallel_for(angle_count, [&](int j) {
    double theta = 2.0 * std::numbers::pi * j / angle_count;
    std::complex<double> rot = std::polar(1.0, -theta);
    MatrixXcd rotated = rot * a;
    MatrixXcd herm = (rotated + rotated.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(herm);
    VectorXcd v = es.eigenvectors().col(dim - 1);
    sweep.thetas[j] = theta;
    sweep.points[j] = v.dot(a * v);
    sweep.support[j] = es.eigenvalues()(dim - 1);
  });
  return sweep;
}

bool range_contains(const RangeSweep& sweep, std::complex<double> z, double tol) {
  for (std::size_t j = 0; j < sweep.thetas.size(); ++j) {
    double along = z.real() * std::cos(sweep.thetas[j]) + z.imag() * std::sin(sweep.thetas[j]);
    if (along > sweep.support[j] + tol) return false;
  }
  return true;
}

SectorReport sector_fit(const Graph& g, const std::vector<int>& subset,
                        std::optional<double> vertex) {
  WeightedOperator d = assemble(g, subset, OpKind::delta);
  MatrixXd at = d.symmetrized();
  MatrixXd herm = (at + at.transpose()) / 2;
  MatrixXd skew = (at - at.transpose()) / 2;
  SectorReport out;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(herm, Eigen::EigenvaluesOnly);
  out.nu = es.eigenvalues()(0);
  out.im_bound = skew.bdcSvd().singularValues()(0);
  out.gamma = subset_gamma(g, d.subset);
  out.vertex = vertex.value_or(-out.gamma / 2);
  out.half_angle = std::atan2(out.im_bound, out.nu - out.vertex);
  out.sectorial = out.half_angle < std::numbers::pi / 2;
  return out;
}

bool in_sector(const SectorReport& s, std::complex<double> z, double tol) {
  std::complex<double> shifted = z - std::complex<double>(s.vertex, 0);
  if (std::abs(shifted) == 0) return true;
  return std::abs(std::arg(shifted)) <= s.half_angle + tol;
}

std::vector<std::vector<int>> default_k_schedule(const std::vector<int>& ns) {
  std::vector<std::vector<int>> out;
  out.reserve(ns.size());
  for (int n : ns) {
    if (n < 1) throw GraphError("default schedule needs n >= 1");
    std::vector<int> row;
    for (int k = n + 1; k <= 4 * n; ++k) row.push_back(k);
    out.push_back(std::move(row));
  }
  return out;
}

EssWindow ess_window(const GeneratorSpec& spec, int max_k) {
  GeneratorSpec effective = spec;
  if (spec.kind == GeneratorSpec::Kind::z_line)
    effective.radius = std::max(spec.radius, max_k + 2);
  EssWindow win{effective.build(), {}, false};
  win.dist = hop_distance_field(win.graph, default_center(win.graph));
  int within_max = 0;
  for (int x = 0; x < win.graph.size(); ++x)
    if (win.dist[x] >= 0 && win.dist[x] <= max_k) ++within_max;
  win.saturated = within_max == win.graph.size();
  return win;
}

EssSpectrumEstimate ess_spectrum_estimate(const GeneratorSpec& spec, const std::vector<int>& ns,
                                          const std::vector<std::vector<int>>& k_schedule) {
  if (ns.empty()) throw GraphError("empty level list");
  if (k_schedule.size() != ns.size())
    throw GraphError("k schedule must have one row per level");
  EssSpectrumEstimate est;
  est.ns = ns;
  est.k_schedule = k_schedule;
  int max_k = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    auto& row = est.k_schedule[i];
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
  const std::vector<int>& dist = win.dist;
  est.window_saturated = win.saturated;

  struct Task {
    std::size_t row;
    std::size_t col;
    std::vector<int> subset;
  };
  std::vector<Task> tasks;
  est.lambda1.resize(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    est.lambda1[i].resize(est.k_schedule[i].size());
    for (std::size_t c = 0; c < est.k_schedule[i].size(); ++c) {
      int k = est.k_schedule[i][c];
      std::vector<int> subset;
      for (int x = 0; x < g.size(); ++x)
        if (dist[x] > ns[i] && dist[x] <= k) {
          subset.push_back(x);
          if (g.vertex(x).window_boundary) est.window_saturated = true;
        }
      if (subset.empty()) {
        std::ostringstream msg;
        msg << "empty annulus for n = " << ns[i] << ", k = " << k;
        throw GraphError(msg.str());
      }
      tasks.push_back({i, c, std::move(subset)});
    }
  }
  parallel_for(static_cast<int>(tasks.size()), [&](int t) {
    const Task& task = tasks[t];
    est.lambda1[task.row][task.col] = lambda1_symmetric(assemble(g, task.subset, OpKind::S));
  });

  est.inner_limits.resize(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const auto& row = est.lambda1[i];
    est.inner_limits[i] = *std::min_element(row.begin(), row.end());
    for (std::size_t c = 1; c < row.size(); ++c)
      if (row[c] > row[c - 1] + 1e-9 * std::max(1.0, std::abs(row[c]))) est.k_monotone = false;
    if (row.size() >= 2) {
      double step = std::abs(row.back() - row[row.size() - 2]);
      if (step > 1e-3 * std::max(1.0, std::abs(row.back()))) est.k_converged = false;
    }
  }
  est.limit_estimate = est.inner_limits.back();

  const auto& lim = est.inner_limits;
  if (lim.size() < 3) {
    est.verdict = "inconclusive";
    return est;
  }
  std::size_t last = lim.size() - 1;
  bool increasing = lim[last - 2] < lim[last - 1] && lim[last - 1] < lim[last];
  bool nonincreasing = lim[last - 2] >= lim[last - 1] - 1e-12 && lim[last - 1] >= lim[last] - 1e-12;
  bool grows_enough = true;
  for (std::size_t i = 0; i < lim.size(); ++i)
    if (lim[i] < ns[i] / 16.0) grows_enough = false;
  if (increasing && grows_enough && !est.window_saturated)
    est.verdict = "diverges";
  else if (nonincreasing)
    est.verdict = "bounded";
  else
    est.verdict = "inconclusive";
  return est;
}

LewisCheck lewis_check(const Graph& g, const std::vector<int>& subset, int probes,
                       std::uint64_t seed) {
  WeightedOperator d = assemble(g, subset, OpKind::delta);
  WeightedOperator s = assemble(g, subset, OpKind::S);
  LewisCheck out;
  out.lambda1_S = lambda1_symmetric(s);
  double min_re = std::numeric_limits<double>::infinity();
  for (const auto& ev : eigenvalues(d)) min_re = std::min(min_re, ev.real());
  out.min_re_spectrum = min_re;
  out.margin = out.min_re_spectrum - out.lambda1_S;

  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return (rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  double worst = 0;
  for (int p = 0; p < probes; ++p) {
    VectorXcd f(d.dim());
    for (int i = 0; i < d.dim(); ++i) f(i) = std::complex<double>(unit(), unit());
    std::complex<double> dform = inner_m(dirlap::apply(d, f), f, d.measure);
    std::complex<double> sform = inner_m(dirlap::apply(s, f), f, s.measure);
    double rel = std::abs(dform.real() - sform.real()) / std::max(1.0, std::abs(dform));
    worst = std::max(worst, rel);
  }
  out.form_residual = worst;
  out.holds = out.margin >= -1e-9 * std::max(1.0, std::abs(out.lambda1_S)) &&
              out.form_residual <= 1e-9;
  return out;
}

}  // namespace dirlap
