#include "hgraphon/graphon.hpp"

#include "doctest.h"
#include "hgraphon/rng.hpp"
#include "oracles.hpp"

#include <cmath>
#include <sstream>

using namespace hgraphon;

namespace {

const char* kCheckerboard =
    "hgraphon v1\n"
    "q 4\n"
    "sigma 0 0.25 0.5 0.75 1\n"
    "W\n"
    "0 1 0 1\n"
    "1 0 1 0\n"
    "0 1 0 1\n"
    "1 0 1 0\n";

StepGraphon constant_graphon(const Rat& p) {
  RatVector sigma(2);
  sigma << 0, 1;
  RatMatrix values(1, 1);
  values << p;
  return make_graphon(sigma, values);
}

}  // namespace

TEST_SUITE_BEGIN("graphon");

TEST_CASE("parses the checkerboard file") {
  StepGraphon w = parse_graphon_string(kCheckerboard);
  CHECK(w.q() == 4);
  RatVector x = concentration(w);
  for (int i = 0; i < 4; ++i) CHECK(x(i) == Rat(1, 4));
  CHECK(w.values(0, 1) == 1);
  CHECK(w.values(0, 0) == 0);
  CHECK(w.values(0, 2) == 0);
}

TEST_CASE("parses q=1 constant graphon") {
  StepGraphon w = parse_graphon_string("hgraphon v1\nq 1\nsigma 0 1\nW\n1\n");
  CHECK(w.q() == 1);
  CHECK(value_at(w, 0.3, 0.9) == 1);
  CHECK(concentration(w)(0) == 1);
}

TEST_CASE("accepts comments and rational tokens") {
  StepGraphon w = parse_graphon_string(
      "hgraphon v1  # header\n# a comment line\nq 2\nsigma 0 1/3 1\nW\n1/2 1/4\n1/4 0\n");
  CHECK(w.sigma(1) == Rat(1, 3));
  CHECK(w.values(0, 0) == Rat(1, 2));
  CHECK(w.values(1, 1) == 0);
}

TEST_CASE("parse errors name line and cause") {
  auto expect_error = [](const std::string& text, int line, const char* needle) {
    try {
      parse_graphon_string(text);
      FAIL_CHECK("expected ParseError for: " << needle);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error("hgraphon v1\nq 2\nsigma 0 0.5 1\nW\n1 1.5\n1.5 1\n", 5, "out of range");
  expect_error("hgraphon v1\nq 2\nsigma 0 0.5 1\nW\n0 1\n0.5 1\n", 6, "symmetric");
  expect_error("hgraphon v1\nq 3\nsigma 0 0.7 0.4 1\nW\n1 1 1\n1 1 1\n1 1 1\n", 3, "increasing");
  expect_error("hgraphon v1\nq 2\nsigma 0 0.5 0.9\nW\n1 1\n1 1\n", 3, "end at 1");
  expect_error("hgraphon v2\n", 1, "hgraphon v1");
  expect_error("hgraphon v1\nq 2\nsigma 0 1\nW\n1 1\n1 1\n", 3, "q+1");
  expect_error("hgraphon v1\nq 1\nsigma 0 1\nW\n1\nextra\n", 6, "trailing");
}

TEST_CASE("value_at follows the half-open block convention") {
  StepGraphon w = parse_graphon_string(kCheckerboard);
  CHECK(value_at(w, 0.1, 0.3) == 1);   // blocks (1,2) in 1-based terms
  CHECK(value_at(w, 0.1, 0.1) == 0);   // diagonal block
  CHECK(value_at(w, 1.0, 1.0) == 0);   // s = 1 maps to the last block
  CHECK(value_at(w, 0.74, 1.0) == 1);  // blocks (3,4)
  CHECK_THROWS_AS(value_at(w, -0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(value_at(w, 0.5, 1.5), std::invalid_argument);

  // breakpoints belong to the block on their right
  CHECK(block_of(w, Rat(1, 4)) == 1);
  CHECK(block_of(w, Rat(1, 4) - Rat(1, 1000000000)) == 0);
  CHECK(block_of(w, Rat(0)) == 0);
  CHECK(block_of(w, Rat(1)) == 3);
}

TEST_CASE("block assignment is exact at non-dyadic breakpoints") {
  RatVector sigma(3);
  sigma << 0, Rat(1, 3), 1;
  RatMatrix values(2, 2);
  values << 1, 1, 1, 1;
  StepGraphon w = make_graphon(sigma, values);
  const double below = 0.33333333333333331;  // nearest double under 1/3
  const double above = std::nextafter(below, 1.0);
  CHECK(rational_from_double(below) < Rat(1, 3));
  CHECK(rational_from_double(above) > Rat(1, 3));
  CHECK(block_of(w, rational_from_double(below)) == 0);
  CHECK(block_of(w, rational_from_double(above)) == 1);
  CHECK(block_of(w, Rat(1, 3)) == 1);
}

TEST_CASE("sampling the constant graphons") {
  SampledGraph complete = sample(constant_graphon(1), 5, 123);
  CHECK(complete.n == 5);
  CHECK(complete.edges.size() == 10);  // K5

  SampledGraph empty = sample(constant_graphon(0), 5, 123);
  CHECK(empty.edges.empty());

  CHECK_THROWS_AS(sample(constant_graphon(1), 0, 1), std::invalid_argument);
}

TEST_CASE("sampling is reproducible bit for bit") {
  StepGraphon w = parse_graphon_string(kCheckerboard);
  SampledGraph a = sample(w, 60, 99);
  SampledGraph b = sample(w, 60, 99);
  CHECK(a.coords == b.coords);
  CHECK(a.blocks == b.blocks);
  CHECK(a.edges == b.edges);

  SampledGraph c = sample(w, 60, 100);
  CHECK(a.edges != c.edges);  // different stream
}

TEST_CASE("sampled edges respect the kernel support") {
  StepGraphon w = load_graphon(std::string(HGRAPHON_TEST_DATA) + "/experiment_d.hgraphon");
  SampledGraph g = sample(w, 80, 7);
  for (auto [i, j] : g.edges) {
    CHECK(i < j);
    CHECK(value_at(w, g.coords[i], g.coords[j]) > 0);
  }
  for (int v = 0; v < g.n; ++v)
    CHECK(g.blocks[v] == block_of(w, rational_from_double(g.coords[v])));
}

TEST_CASE("coordinate phase is a prefix of the sampling stream") {
  StepGraphon w = parse_graphon_string(kCheckerboard);
  SampledGraph full = sample(w, 40, 2718);
  SampledGraph coords = sample_coordinates(w, 40, 2718);
  CHECK(full.coords == coords.coords);
  CHECK(full.blocks == coords.blocks);
  CHECK(coords.edges.empty());
}

TEST_CASE("block fractions concentrate at x*") {
  StepGraphon w = parse_graphon_string(kCheckerboard);
  SampledGraph g = sample_coordinates(w, 10000, 31);
  RatVector x = empirical_concentration(g);
  for (int i = 0; i < 4; ++i) {
    double dev = std::abs(static_cast<double>(x(i)) - 0.25);
    CHECK(dev < 0.02);
  }
}

TEST_CASE("empirical concentration counts blocks exactly") {
  SampledGraph g;
  g.n = 4;
  g.q = 2;
  g.blocks = {0, 0, 1, 1};
  RatVector x = empirical_concentration(g);
  CHECK(x(0) == Rat(1, 2));
  CHECK(x(1) == Rat(1, 2));

  g.n = 3;
  g.q = 3;
  g.blocks = {0, 0, 0};
  x = empirical_concentration(g);
  CHECK(x(0) == 1);
  CHECK(x(1) == 0);
  CHECK(x(2) == 0);

  g.n = 6;
  g.q = 3;
  g.blocks = {0, 0, 0, 1, 1, 2};
  x = empirical_concentration(g);
  CHECK(x(0) == Rat(1, 2));
  CHECK(x(1) == Rat(1, 3));
  CHECK(x(2) == Rat(1, 6));

  // sums to one exactly on sampled graphs
  StepGraphon w = parse_graphon_string(kCheckerboard);
  SampledGraph s = sample_coordinates(w, 137, 5);
  RatVector e = empirical_concentration(s);
  Rat total = 0;
  for (int i = 0; i < 4; ++i) total += e(i);
  CHECK(total == 1);
}

TEST_CASE("refinement keeps the kernel pointwise identical") {
  StepGraphon one = constant_graphon(1);
  StepGraphon split = refine_partition(one, 0, Rat(1, 2));
  CHECK(split.q() == 2);
  CHECK(concentration(split)(0) == Rat(1, 2));
  CHECK(concentration(split)(1) == Rat(1, 2));
  CHECK(split.values(0, 1) == 1);

  StepGraphon w = parse_graphon_string(kCheckerboard);
  StepGraphon fine = refine_partition(w, 0, Rat(1, 8));
  CHECK(fine.q() == 5);
  SplitMix64 rng(77);
  for (int k = 0; k < 1000; ++k) {
    double s = rng.next_unit(), t = rng.next_unit();
    CHECK(value_at(w, s, t) == value_at(fine, s, t));
  }

  // concentration mass of the split block is preserved
  RatVector coarse_x = concentration(w);
  RatVector fine_x = concentration(fine);
  CHECK(fine_x(0) + fine_x(1) == coarse_x(0));
  for (int i = 1; i < 4; ++i) CHECK(fine_x(i + 1) == coarse_x(i));

  CHECK_THROWS_AS(refine_partition(w, 0, Rat(1, 4)), std::invalid_argument);
  CHECK_THROWS_AS(refine_partition(w, 0, Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(refine_partition(w, 1, Rat(1, 8)), std::invalid_argument);
}

TEST_CASE("random refinements agree pointwise") {
  SplitMix64 rng(404);
  for (int iter = 0; iter < 25; ++iter) {
    StepGraphon w = testing::random_graphon(rng);
    int block = static_cast<int>(testing::rand_below(rng, w.q()));
    Rat mid = (w.sigma(block) + w.sigma(block + 1)) / 2;
    StepGraphon fine = refine_partition(w, block, mid);
    for (int k = 0; k < 60; ++k) {
      double s = rng.next_unit(), t = rng.next_unit();
      CHECK(value_at(w, s, t) == value_at(fine, s, t));
    }
  }
}

TEST_CASE("hgraph files round-trip") {
  StepGraphon w = parse_graphon_string(kCheckerboard);
  SampledGraph g = sample(w, 25, 11);
  std::ostringstream out;
  write_hgraph(out, g);
  std::istringstream in(out.str());
  SampledGraph back = read_hgraph(in);
  CHECK(back.n == g.n);
  CHECK(back.q == g.q);
  CHECK(back.blocks == g.blocks);
  CHECK(back.coords == g.coords);
  CHECK(back.edges == g.edges);
}

TEST_CASE("hgraph parser rejects malformed files") {
  auto bad = [](const std::string& text, const char* needle) {
    try {
      std::istringstream in(text);
      read_hgraph(in);
      FAIL_CHECK("expected ParseError: " << needle);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  bad("hgraph v1\nn 2\nq 1\nedges 1\n0 1\n", "out of range");
  bad("hgraph v1\nn 2\nq 1\nedges 1\n2 1\n", "i < j");
  bad("hgraph v1\nn 2\nq 1\nedges 1\n1 1\n", "i < j");
  bad("hgraph v1\nn 2\nq 1\nblocks 1 2\nedges 0\n", "out of range");
  bad("hgraph v1\nn 2\nq 1\nedges 2\n1 2\n", "unexpected end");

  // blocks line is optional
  std::istringstream in("hgraph v1\nn 3\nq 2\nedges 2\n1 2\n2 3\n");
  SampledGraph g = read_hgraph(in);
  CHECK(g.blocks.empty());
  CHECK(g.edges.size() == 2);
}

TEST_SUITE_END();
