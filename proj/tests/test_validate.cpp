#include <doctest.h>

#include "dirlap/generators.hpp"
#include "dirlap/graph_io.hpp"
#include "dirlap/validate.hpp"

#include <sstream>

using namespace dirlap;

TEST_CASE("cubic-weight line window balances exactly with gamma 1") {
  Graph g = gen_z_line(16);
  ValidationReport r = validate(g);
  CHECK(r.beta_max_deviation_exact == 0);
  CHECK(r.beta_ok);
  CHECK(r.gamma_constant_exact == 1);
  CHECK(r.gamma_constant == 1.0);
  CHECK(r.degree_bound == 2);
  CHECK(r.connectivity_class == Connectivity::strongly_connected);
  CHECK(r.outgoing_condition);
  CHECK(r.self_loop_free);
}

TEST_CASE("rimless file of a truncated line exposes the cut imbalance") {
  // Strip the rim tokens to get the plain file an external writer would
  // produce. Without the flags the truncated end rows participate and the
  // balance defect 1/4+1/4 shows up.
  Graph g = gen_z_line(6);
  std::string text = serialize_graph(g);
  for (size_t p; (p = text.find(" rim")) != std::string::npos;) text.erase(p, 4);
  std::istringstream in(text);
  Graph loaded = parse_graph(in);
  CHECK_FALSE(loaded.has_window_boundary());
  ValidationReport r = validate(loaded);
  CHECK(r.beta_max_deviation_exact == Rational(1, 2));
  CHECK_FALSE(r.beta_ok);
  CHECK(r.beta_holds(0.5));
  CHECK_FALSE(r.beta_holds(0.49));

  // With the tokens intact the reload is faithful and the window stays clean.
  std::istringstream full(serialize_graph(g));
  Graph kept = parse_graph(full);
  CHECK(kept.has_window_boundary());
  CHECK(validate(kept).beta_ok);
}

TEST_CASE("single directed edge is weakly connected and unbalanced") {
  GraphBuilder b;
  b.add_vertex("a", 1);
  b.add_vertex("b", 1);
  b.add_edge(VertexId("a"), VertexId("b"), 1);
  Graph g = std::move(b).build();
  ValidationReport r = validate(g);
  CHECK(r.connectivity_class == Connectivity::weakly_connected);
  CHECK(r.beta_max_deviation_exact == 1);
  CHECK_FALSE(r.beta_ok);
  CHECK_FALSE(r.outgoing_condition);  // b has no outgoing edge
}

TEST_CASE("symmetric graphs have zero asymmetry constant") {
  Graph g = gen_symmetric_random(20, 3, 0.4);
  ValidationReport r = validate(g);
  CHECK(r.beta_max_deviation_exact == 0);
  CHECK(r.gamma_constant_exact == 0);
  CHECK(r.connectivity_class == Connectivity::strongly_connected);
}

TEST_CASE("disconnected graphs are classified as such") {
  GraphBuilder b;
  b.add_vertex(0, 1);
  b.add_vertex(1, 1);
  b.add_vertex(2, 1);
  b.add_vertex(3, 1);
  b.add_edge(0, 1, 1);
  b.add_edge(1, 0, 1);
  b.add_edge(2, 3, 1);
  b.add_edge(3, 2, 1);
  Graph g = std::move(b).build();
  CHECK(validate(g).connectivity_class == Connectivity::disconnected);
}

TEST_CASE("gamma constant measures one-row weight asymmetry over m") {
  // b(0,1) = 3, b(1,0) = 1: each row's |b - b^T| sum is 2, so the balance
  // defect is 2 and gamma = max(2/m(0), 2/m(1)) = 2.
  GraphBuilder b;
  b.add_vertex(0, 2);
  b.add_vertex(1, 1);
  b.add_edge(0, 1, 3);
  b.add_edge(1, 0, 1);
  Graph g = std::move(b).build();
  ValidationReport r = validate(g);
  CHECK(r.gamma_constant_exact == 2);
  CHECK(r.beta_max_deviation_exact == 2);  // row 1: |beta+ - beta-| = 2 over m = 1
}

TEST_CASE("connectivity names are hyphenated") {
  CHECK(std::string(to_string(Connectivity::strongly_connected)) == "strongly-connected");
  CHECK(std::string(to_string(Connectivity::weakly_connected)) == "weakly-connected");
  CHECK(std::string(to_string(Connectivity::disconnected)) == "disconnected");
}
