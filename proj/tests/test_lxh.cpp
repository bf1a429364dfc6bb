#include <catch_amalgamated.hpp>

#include <random>

#include "hopf/invariants.hpp"
#include "hopf/io.hpp"
#include "hopf/lxh.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

using Arcs = std::vector<std::pair<int, int>>;

LinearOrder order(const std::string& s) { return io::parse_element<Orders>(s); }

template <class H>
void check_lxh_matches_takeuchi(const std::vector<typename LxH<H>::element>& elems) {
  for (const auto& [alpha, x] : elems) {
    const auto fast = antipode_lxh<H>(alpha, x);
    REQUIRE(fast == takeuchi_antipode<LxH<H>>({alpha, x}));
    for (const auto& [e, c] : fast.terms()) CHECK((c == 1 || c == -1));
  }
}

}  // namespace

TEST_CASE("minimal Lambda of the eight-vertex graph example", "[lxh]") {
  const Hypergraph x = io::parse_element<Graphs>("1-3,2-7,8-6,7-5,2-5,4-2", 8);
  const Hypergraph y = io::parse_element<Graphs>("2-5,4-2", 8);
  const auto lambda = minimal_lambda<Graphs>(identity_order(8), x, order("12456783"), y);
  REQUIRE(lambda);
  CHECK(*lambda == SetComposition{{bit(0), bit(1) | bit(3) | bit(4), bit(5), bit(6), bit(7), bit(2)}});
  const auto g = conflict_graph<Graphs>(identity_order(8), x, order("12456783"), y, *lambda);
  CHECK(g.arcs == Arcs{{2, 4}, {3, 5}, {5, 6}});
  CHECK(c_graph_bruteforce(g) == 0);
  CHECK(c_graph_fast(g) == 0);
}

TEST_CASE("minimal Lambda for identical pairs is the singleton split", "[lxh]") {
  const LinearOrder a = order("3142");
  const Hypergraph x{full_mask(4), {}};
  const auto lambda = minimal_lambda<Graphs>(a, x, a, x);
  REQUIRE(lambda);
  CHECK(*lambda == SetComposition{{bit(2), bit(0), bit(3), bit(1)}});
}

TEST_CASE("minimal Lambda with an edge between two vertices", "[lxh]") {
  const Hypergraph edge = io::parse_element<Graphs>("1-2");
  // 21 is unreachable from (12, {12}): a single part keeps 12, two parts drop the edge.
  CHECK_FALSE(minimal_lambda<Graphs>(order("12"), edge, order("21"), edge));
  const auto lambda = minimal_lambda<Graphs>(order("12"), edge, order("12"), edge);
  REQUIRE(lambda);
  CHECK(*lambda == SetComposition{{0b11}});
}

TEST_CASE("minimal Lambda rejects mismatched ground sets", "[lxh]") {
  CHECK_THROWS_AS(minimal_lambda<Orders>(order("12"), order("12"), order("123"), order("123")), InvalidInput);
}

TEST_CASE("conflict graphs targeting 1243", "[lxh]") {
  const LinearOrder eps = identity_order(4);
  const LinearOrder beta = order("1243");
  SECTION("hypergraph {124, 234} down to the empty hypergraph") {
    const Hypergraph x = io::parse_element<Hypergraphs>("1,2,4/2,3,4");
    const Hypergraph y{full_mask(4), {}};
    const auto lambda = minimal_lambda<Hypergraphs>(eps, x, beta, y);
    REQUIRE(lambda);
    CHECK(lambda->length() == 4);
    const auto g = conflict_graph<Hypergraphs>(eps, x, beta, y, *lambda);
    CHECK(g.arcs == Arcs{{1, 3}, {3, 4}});
    CHECK(c_graph_fast(g) == -1);
    CHECK(takeuchi_antipode<LxH<Hypergraphs>>({eps, x}).coefficient({beta, y}) == -1);
  }
  SECTION("pure L x L keeps only the descent arc") {
    const auto lambda = minimal_lambda<Orders>(eps, eps, beta, beta);
    REQUIRE(lambda);
    const auto g = conflict_graph<Orders>(eps, eps, beta, beta, *lambda);
    CHECK(g.arcs == Arcs{{3, 4}});
    CHECK(c_graph_fast(g) == 0);
  }
}

TEST_CASE("conflict graph on a single part", "[lxh]") {
  const LinearOrder a = order("1");
  const auto lambda = minimal_lambda<Orders>(a, a, a, a);
  REQUIRE(lambda);
  const auto g = conflict_graph<Orders>(a, a, a, a, *lambda);
  CHECK(g.m == 1);
  CHECK(g.arcs.empty());
}

TEST_CASE("c(G) examples", "[lxh]") {
  CHECK(c_graph_bruteforce(NonNestingGraph::make(1, {})) == -1);
  CHECK(c_graph_fast(NonNestingGraph::make(1, {})) == -1);
  CHECK(c_graph_bruteforce(NonNestingGraph::make(2, {{1, 2}})) == 1);
  CHECK(c_graph_fast(NonNestingGraph::make(2, {{1, 2}})) == 1);
  for (int m = 3; m <= 9; ++m) {
    const auto g = NonNestingGraph::make(m, {{1, m}});
    CHECK(c_graph_fast(g) == 1);
    CHECK(c_graph_bruteforce(g) == 1);
    REQUIRE(phi_fixed_points(g).size() == 1);
    CHECK(phi_fixed_points(g)[0] == IntervalSplit::from_blocks({{1, 1}, {2, m}}));
  }
  const auto two = NonNestingGraph::make(4, {{1, 3}, {2, 4}});
  CHECK(c_graph_fast(two) == -1);
  CHECK(c_graph_bruteforce(two) == -1);
  REQUIRE(phi_fixed_points(two).size() == 1);
  CHECK(phi_fixed_points(two)[0] == IntervalSplit::from_blocks({{1, 1}, {2, 3}, {4, 4}}));
  const auto gap = NonNestingGraph::make(5, {{1, 2}, {3, 5}});
  CHECK(c_graph_fast(gap) == 0);
  CHECK(c_graph_bruteforce(gap) == 0);
}

TEST_CASE("c(G) of the six-vertex example by length", "[lxh]") {
  const auto g = NonNestingGraph::make(6, {{2, 4}, {3, 5}, {5, 6}});
  std::map<int, int> by_length;
  for (Mask cuts = 0; cuts < 32; ++cuts) {
    IntervalSplit a{6, cuts};
    if (split_avoids_arcs(g, a)) ++by_length[a.length()];
  }
  CHECK(by_length == std::map<int, int>{{3, 1}, {4, 4}, {5, 4}, {6, 1}});
  CHECK(c_graph_bruteforce(g) == 0);
}

TEST_CASE("nested arc sets are rejected", "[lxh]") {
  CHECK_THROWS_AS(NonNestingGraph::make(4, {{1, 4}, {2, 3}}), InvalidInput);
  CHECK_THROWS_AS(NonNestingGraph::make(3, {{1, 3}, {1, 2}}), InvalidInput);
  CHECK_THROWS_AS(NonNestingGraph::make(3, {{2, 2}}), InvalidInput);
  CHECK_THROWS_AS(NonNestingGraph::make(3, {{1, 4}}), InvalidInput);
}

TEST_CASE("phi examples", "[lxh]") {
  const auto singles = IntervalSplit::singletons(2);
  CHECK(phi_step(NonNestingGraph::make(2, {{1, 2}}), singles) == singles);
  CHECK(phi_step(NonNestingGraph::make(2, {}), singles) == IntervalSplit::whole(2));
  CHECK(phi_step(NonNestingGraph::make(2, {}), IntervalSplit::whole(2)) == singles);
  CHECK_THROWS_AS(phi_step(NonNestingGraph::make(2, {{1, 2}}), IntervalSplit::whole(2)), InvalidInput);
}

TEST_CASE("non-nested graph counts", "[lxh]") {
  // Catalan numbers
  CHECK(enumerate_non_nesting_graphs(1).size() == 1);
  CHECK(enumerate_non_nesting_graphs(2).size() == 2);
  CHECK(enumerate_non_nesting_graphs(3).size() == 5);
  CHECK(enumerate_non_nesting_graphs(4).size() == 14);
  for (const auto& g : enumerate_non_nesting_graphs(6)) CHECK(g.is_non_nested());
}

TEST_CASE("fast c(G) matches brute force on every non-nested graph", "[lxh][property]") {
  for (int m = 1; m <= 7; ++m) {
    for (const auto& g : enumerate_non_nesting_graphs(m)) {
      const int c = c_graph_bruteforce(g);
      REQUIRE(c_graph_fast(g) == c);
      CHECK((c >= -1 && c <= 1));
    }
  }
}

TEST_CASE("phi is a sign-reversing involution", "[lxh][property]") {
  for (int m = 1; m <= 6; ++m) {
    for (const auto& g : enumerate_non_nesting_graphs(m)) {
      int fixed_sum = 0;
      for (Mask cuts = 0; cuts < (Mask{1} << (m - 1)); ++cuts) {
        const IntervalSplit a{m, cuts};
        if (!split_avoids_arcs(g, a)) continue;
        const IntervalSplit b = phi_step(g, a);
        REQUIRE(split_avoids_arcs(g, b));
        REQUIRE(phi_step(g, b) == a);
        if (b == a) {
          fixed_sum += a.length() % 2 == 0 ? 1 : -1;
        } else {
          CHECK(std::abs(b.length() - a.length()) == 1);
        }
      }
      CHECK(fixed_sum == c_graph_bruteforce(g));
    }
  }
}

TEST_CASE("antipode of a one-element pair", "[lxh]") {
  const LinearOrder a = order("1");
  const Hypergraph x{1, {}};
  CHECK(antipode_lxh<Graphs>(a, x) == FormalSum<std::pair<LinearOrder, Hypergraph>>({a, x}, -1));
}

TEST_CASE("antipode of (12, 12) in L x L", "[lxh]") {
  // (12) and (1,2) both give (12, 12) with opposite signs; only (21, 21) survives.
  const LinearOrder a = order("12");
  FormalSum<std::pair<LinearOrder, LinearOrder>> expected({order("21"), order("21")}, 1);
  CHECK(antipode_lxh<Orders>(a, a) == expected);
  CHECK(lxh_coefficient<Orders>(a, a, a, a) == 0);
  CHECK(lxh_coefficient<Orders>(a, a, order("21"), order("21")) == 1);
}

TEST_CASE("L x H antipode agrees with Takeuchi", "[lxh][property]") {
  for (int n = 1; n <= 4; ++n) {
    check_lxh_matches_takeuchi<Orders>(ElementGen<LxH<Orders>>::all(n));
    check_lxh_matches_takeuchi<Partitions>(ElementGen<LxH<Partitions>>::all(n));
    check_lxh_matches_takeuchi<Graphs>(ElementGen<LxH<Graphs>>::all(n));
  }
  for (int n = 1; n <= 3; ++n) check_lxh_matches_takeuchi<Hypergraphs>(ElementGen<LxH<Hypergraphs>>::all(n));
}

TEST_CASE("L x HG antipode agrees with Takeuchi at n = 4", "[lxh-exhaustive]") {
  check_lxh_matches_takeuchi<Hypergraphs>(ElementGen<LxH<Hypergraphs>>::all(4));
}

TEST_CASE("L x H antipode on random larger inputs", "[lxh][property]") {
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    const auto [alpha, x] = ElementGen<LxH<Graphs>>::random(rng, 6);
    const auto s = antipode_lxh<Graphs>(alpha, x);
    CHECK(antipode_axiom_check<LxH<Graphs>>({alpha, x}, s).empty());
  }
}

TEST_CASE("d counts", "[lxh]") {
  CHECK(d_count(order("21"), order("12")) == 2);
  CHECK(d_count(order("12"), order("12")) == 1);
  CHECK_THROWS_AS(d_count(order("12"), order("123")), InvalidInput);
}

TEST_CASE("d(alpha, eps) counts acyclic orientations of the incomparability graph", "[lxh][property]") {
  for (int n = 1; n <= 5; ++n) {
    for_each_permutation(n, [&](const LinearOrder& alpha) {
      CHECK(d_count(alpha, identity_order(n)) == oracle::acyclic_orientations_brute(incomparability_graph(alpha)));
    });
  }
}

TEST_CASE("PR antipode examples", "[lxh]") {
  CHECK(pr_antipode(order("12")) == FormalSum<LinearOrder>(order("12"), 1));
  CHECK(pr_antipode(order("1")) == FormalSum<LinearOrder>(order("1"), -1));
  CHECK_THROWS_AS(pr_antipode(LinearOrder{{0, 2}}), InvalidInput);
}

TEST_CASE("PR antipode agrees with the collapsed Takeuchi sum", "[lxh][property]") {
  for (int n = 1; n <= 5; ++n) {
    for_each_permutation(n, [&](const LinearOrder& alpha) {
      REQUIRE(pr_antipode(alpha) == kh_antipode_takeuchi<Orders>(alpha));
    });
  }
}
