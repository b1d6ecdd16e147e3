#pragma once

#include "dirlap/graph.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace dirlap {

// Integer line window {-radius..radius} with m = 1 and the cubic-growth
// forward/backward weights b(l,l+1) = (|l|^3+1)/2 + 1/4, b(l+1,l) = ... - 1/4.
// The two extreme vertices are flagged as window rim: their balance is
// truncated by the cut and they stay out of assumption checks and default
// operator subsets.
Graph gen_z_line(int radius);

// b(i,i+1 mod n) = forward, b(i+1,i mod n) = backward (edge dropped at 0),
// m = 1. Balanced at every vertex by construction.
Graph gen_directed_cycle(int n, const Rational& forward, const Rational& backward);

struct CirculationParams {
  int size = 12;
  std::uint64_t seed = 0;
  double symmetric_density = 0.3;        // extra symmetric edges beyond the tree
  int cycle_count = 4;                   // directed simple cycles layered on top
  std::pair<double, double> weight_range = {0.25, 4.0};
};

// Random symmetric base (a spanning tree plus density-controlled extras, each
// undirected edge weighted equally both ways) plus directed simple cycles each
// carrying one positive weight along its orientation. Any such layering is
// divergence-free, so in/out balance holds exactly in rational arithmetic.
// All weights and measures are dyadic rationals k/64; identical parameters
// produce byte-identical graphs.
Graph gen_circulation_random(const CirculationParams& params);

Graph gen_symmetric_random(int size, std::uint64_t seed, double density,
                           std::pair<double, double> weight_range = {0.25, 4.0});

struct GeneratorSpec {
  enum class Kind { z_line, directed_cycle, symmetric_random, circulation_random, file };
  Kind kind = Kind::z_line;
  int radius = 8;                        // z-line
  int size = 12;                         // cycle / random kinds
  std::uint64_t seed = 0;
  double density = 0.3;
  int cycles = 4;
  std::pair<double, double> weight_range = {0.25, 4.0};
  Rational forward = 1, backward = 0;    // directed cycle
  std::string path;                      // file kind

  Graph build() const;
  std::string describe() const;
};

}  // namespace dirlap
