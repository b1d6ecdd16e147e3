#include <doctest.h>

#include "dirlap/generators.hpp"
#include "dirlap/metric.hpp"

#include <cmath>

using namespace dirlap;

TEST_CASE("hop distances and balls on the line window") {
  Graph g = gen_z_line(5);
  int center = default_center(g);
  CHECK(g.vertex(center).id.as_int() == 0);
  std::vector<int> dist = hop_distance_field(g, center);
  for (int v = 0; v < g.size(); ++v)
    CHECK(dist[v] == static_cast<int>(std::abs(g.vertex(v).id.as_int())));
  CHECK(hop_ball(g, center, 2).size() == 5);
  CHECK(hop_ball(g, center, 0) == std::vector<int>{center});
}

TEST_CASE("hop distance marks unreachable vertices") {
  GraphBuilder b;
  b.add_vertex(0, 1);
  b.add_vertex(1, 1);
  b.add_vertex(2, 1);
  b.add_edge(0, 1, 1);
  Graph g = std::move(b).build();
  std::vector<int> dist = hop_distance_field(g, 0);
  CHECK(dist[1] == 1);  // undirected hops: the reverse edge is not needed
  CHECK(dist[2] == -1);
}

TEST_CASE("ball filtration nests strictly and stays connected") {
  Graph g = gen_z_line(8);
  Filtration f = Filtration::balls(g, default_center(g), 4);
  CHECK(f.count() == 4);
  for (int i = 0; i < f.count(); ++i) {
    CHECK(f.level(i).size() == std::size_t(2 * (i + 1) + 1));
    CHECK(f.level_connected(i));
    if (i > 0)
      CHECK(std::includes(f.level(i).begin(), f.level(i).end(), f.level(i - 1).begin(),
                          f.level(i - 1).end()));
  }
}

TEST_CASE("filtration rejects non-nested levels") {
  Graph g = gen_z_line(4);
  std::vector<std::vector<int>> bad = {{0, 1, 2}, {0, 1, 2}};  // not strict
  CHECK_THROWS_AS(Filtration(g, bad), GraphError);
}

TEST_CASE("chain metric balances weight against measure") {
  // Two vertices, symmetric weight 4, m = 1: edge length sqrt(1*1)/sqrt(8).
  GraphBuilder b;
  b.add_vertex(0, 1);
  b.add_vertex(1, 1);
  b.add_edge(0, 1, 4);
  b.add_edge(1, 0, 4);
  Graph g = std::move(b).build();
  CHECK(delta_b_distance(g, 0, 1) == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-12));
  CHECK(delta_b_distance(g, 0, 0) == 0.0);
}

TEST_CASE("cutoff constants on the line window decay like 2/n^2") {
  Graph g = gen_z_line(32);
  int n_max = 8;
  Filtration f = Filtration::balls(g, default_center(g), n_max);
  std::vector<double> profile;
  for (int n = 1; n <= n_max; ++n) profile.push_back(n);
  CutoffReport rep = chi_cutoffs(g, f, profile);
  REQUIRE(rep.constants.size() == std::size_t(n_max));
  for (int n = 1; n <= n_max; ++n)
    CHECK(rep.constants[n - 1] == doctest::Approx(2.0 / (n * n)).epsilon(1e-9));
  CHECK(rep.bounded_trend);
  CHECK(rep.sup_constant == doctest::Approx(2.0).epsilon(1e-9));
  for (const auto& level : rep.chi)
    for (double v : level) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
}

TEST_CASE("essential-self-adjointness advisory names a criterion") {
  Graph g = gen_z_line(16);
  Filtration f = Filtration::balls(g, default_center(g), 4);
  EsaAdvisory adv = esa_advisory(g, f, {1, 2, 3, 4});
  CHECK(adv.m_constant);
  CHECK(adv.degree_bound == 2);
  CHECK(adv.criterion == "constant-measure");

  // Non-constant measure falls back to the cutoff-energy criterion when the
  // constants stay bounded.
  GraphBuilder b;
  b.add_vertex(0, 1);
  b.add_vertex(1, 2);
  b.add_vertex(2, 1);
  b.add_edge(0, 1, 1);
  b.add_edge(1, 0, 1);
  b.add_edge(1, 2, 1);
  b.add_edge(2, 1, 1);
  Graph h = std::move(b).build();
  Filtration fh(h, {{1}, {0, 1, 2}});
  EsaAdvisory adv2 = esa_advisory(h, fh, {1, 2});
  CHECK_FALSE(adv2.m_constant);
  CHECK((adv2.criterion == "cutoff-energy" || adv2.criterion == "none"));
}
