#include "dirlap/generators.hpp"

#include "dirlap/graph_io.hpp"
#include "dirlap/validate.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <random>

namespace dirlap {

Graph gen_z_line(int radius) {
  if (radius < 1) throw GraphError("z-line radius must be >= 1");
  GraphBuilder b;
  for (std::int64_t l = -radius; l <= radius; ++l)
    b.add_vertex(VertexId(l), Rational(1), std::abs(l) == radius);
  for (std::int64_t l = -radius; l < radius; ++l) {
    BigInt cube = BigInt(std::abs(l)) * std::abs(l) * std::abs(l);
    // (|l|^3+1)/2 + 1/4 and (|l|^3+1)/2 - 1/4 over a common denominator 4
    Rational fwd(2 * cube + 3, 4), bwd(2 * cube + 1, 4);
    b.add_edge(VertexId(l), VertexId(l + 1), fwd);
    b.add_edge(VertexId(l + 1), VertexId(l), bwd);
  }
  return std::move(b).build();
}

Graph gen_directed_cycle(int n, const Rational& forward, const Rational& backward) {
  if (n < 3) throw GraphError("directed cycle needs n >= 3");
  if (forward <= 0) throw GraphError("forward weight must be positive");
  if (backward < 0) throw GraphError("backward weight must be nonnegative");
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex(VertexId(i), Rational(1));
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    b.add_edge(i, j, forward);
    if (backward > 0) b.add_edge(j, i, backward);
  }
  return std::move(b).build();
}

namespace {

// Dyadic sample t/64 with t uniform over the representable points of [lo, hi].
// Integer arithmetic throughout so the stream is identical across platforms.
Rational dyadic_in(std::mt19937_64& rng, double lo, double hi) {
  auto lo_t = static_cast<long long>(std::ceil(lo * 64.0));
  auto hi_t = static_cast<long long>(std::floor(hi * 64.0));
  if (lo_t < 1) lo_t = 1;
  if (hi_t < lo_t) throw GraphError("weight range contains no positive dyadic k/64");
  long long t = lo_t + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi_t - lo_t + 1));
  return Rational(t, 64);
}

}  // namespace

Graph gen_circulation_random(const CirculationParams& params) {
  if (params.size < 2) throw GraphError("circulation graph needs size >= 2");
  if (params.cycle_count > 0 && params.size < 3)
    throw GraphError("directed cycles need size >= 3");
  std::mt19937_64 rng(params.seed);

  std::vector<Rational> measures;
  measures.reserve(params.size);
  for (int i = 0; i < params.size; ++i)
    measures.push_back(dyadic_in(rng, params.weight_range.first, params.weight_range.second));

  std::map<std::pair<int, int>, Rational> acc;
  auto add_sym = [&](int i, int j, const Rational& w) {
    acc[{i, j}] += w;
    acc[{j, i}] += w;
  };

  // Random spanning tree keeps the base connected without resampling.
  for (int i = 1; i < params.size; ++i) {
    int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(i));
    add_sym(i, parent, dyadic_in(rng, params.weight_range.first, params.weight_range.second));
  }
  const std::uint64_t density_ppm =
      static_cast<std::uint64_t>(params.symmetric_density * 1000000.0);
  for (int i = 0; i < params.size; ++i)
    for (int j = i + 1; j < params.size; ++j) {
      bool tree_edge = acc.count({i, j}) > 0;
      bool take = (rng() % 1000000) < density_ppm;
      if (!tree_edge && take)
        add_sym(i, j, dyadic_in(rng, params.weight_range.first, params.weight_range.second));
    }

  std::vector<int> scratch(params.size);
  for (int c = 0; c < params.cycle_count; ++c) {
    int max_len = std::min(params.size, 8);
    int len = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_len - 2));
    std::iota(scratch.begin(), scratch.end(), 0);
    for (int t = 0; t < len; ++t) {
      int pick = t + static_cast<int>(rng() % static_cast<std::uint64_t>(params.size - t));
      std::swap(scratch[t], scratch[pick]);
    }
    Rational w = dyadic_in(rng, params.weight_range.first, params.weight_range.second);
    for (int t = 0; t < len; ++t) acc[{scratch[t], scratch[(t + 1) % len]}] += w;
  }

  GraphBuilder b;
  for (int i = 0; i < params.size; ++i) b.add_vertex(VertexId(i), measures[i]);
  for (const auto& [key, w] : acc) b.add_edge(key.first, key.second, w);
  Graph g = std::move(b).build();
  if (connectivity_class(g) == Connectivity::disconnected)
    throw GraphError("circulation generator produced a disconnected graph");
  return g;
}

Graph gen_symmetric_random(int size, std::uint64_t seed, double density,
                           std::pair<double, double> weight_range) {
  CirculationParams p;
  p.size = size;
  p.seed = seed;
  p.symmetric_density = density;
  p.cycle_count = 0;
  p.weight_range = weight_range;
  return gen_circulation_random(p);
}

Graph GeneratorSpec::build() const {
  switch (kind) {
    case Kind::z_line:
      return gen_z_line(radius);
    case Kind::directed_cycle:
      return gen_directed_cycle(size, forward, backward);
    case Kind::symmetric_random:
      return gen_symmetric_random(size, seed, density, weight_range);
    case Kind::circulation_random: {
      CirculationParams p;
      p.size = size;
      p.seed = seed;
      p.symmetric_density = density;
      p.cycle_count = cycles;
      p.weight_range = weight_range;
      return gen_circulation_random(p);
    }
    case Kind::file:
      return load_graph(path);
  }
  throw GraphError("unknown generator kind");
}

std::string GeneratorSpec::describe() const {
  switch (kind) {
    case Kind::z_line:
      return "z-line radius=" + std::to_string(radius);
    case Kind::directed_cycle:
      return "directed-cycle size=" + std::to_string(size) + " forward=" +
             format_rational(forward) + " backward=" + format_rational(backward);
    case Kind::symmetric_random:
      return "symmetric-random size=" + std::to_string(size) + " seed=" + std::to_string(seed);
    case Kind::circulation_random:
      return "circulation-random size=" + std::to_string(size) + " seed=" + std::to_string(seed) +
             " cycles=" + std::to_string(cycles);
    case Kind::file:
      return "file " + path;
  }
  return "?";
}

}  // namespace dirlap
