#pragma once

#include "dirlap/graph.hpp"

#include <string>

namespace dirlap {

// Strongest class is reported. On a finite graph the middle notion ("a path
// between any two vertices, following positive-weight steps") coincides with
// strong connectivity, so `connected` never appears on its own; it is kept so
// report vocabularies match across tools.
enum class Connectivity { disconnected, weakly_connected, connected, strongly_connected };

std::string to_string(Connectivity c);

struct ValidationReport {
  Rational beta_max_deviation_exact;  // max |beta+ - beta-| over non-rim rows
  double beta_max_deviation;
  Rational gamma_constant_exact;      // minimal M with sum |b - b^T| <= M m, row-wise
  double gamma_constant;
  bool beta_exact;                    // computed in rational arithmetic (always true here)
  int degree_bound;                   // max count of undirected neighbours
  Connectivity connectivity_class;
  bool outgoing_condition;            // every vertex has an outgoing edge
  bool self_loop_free;
  double tolerance;
  bool beta_ok;                       // beta_max_deviation <= tolerance

  bool beta_holds(double tol) const { return beta_max_deviation <= tol; }
};

// Balance and antisymmetry are evaluated on rows not flagged as window rim;
// a generator window's truncated rows would otherwise report artificial
// imbalance. File-loaded graphs carry no flags, so every row participates.
ValidationReport validate(const Graph& g, double tolerance = 1e-12);

Connectivity connectivity_class(const Graph& g);

}  // namespace dirlap
