#include <catch_amalgamated.hpp>

#include <random>

#include "hopf/io.hpp"
#include "hopf/monoids.hpp"

using namespace hopf;

namespace {

template <class M>
typename M::element random_on(std::mt19937& rng, Mask part) {
  const auto elems = elements_of(part);
  auto x = ElementGen<M>::random(rng, static_cast<int>(elems.size()));
  std::vector<int> sigma(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) sigma[i] = elems[i];
  return M::relabel(x, sigma);
}

template <class M>
std::optional<typename M::element> res(const std::optional<typename M::element>& x, Mask part) {
  if (!x) return std::nullopt;
  return M::restrict(*x, part);
}

Hypergraph graph(const std::string& s, int n) { return io::parse_element<Graphs>(s, n); }
Hypergraph hyper(const std::string& s, int n) { return io::parse_element<Hypergraphs>(s, n); }

}  // namespace

using AllMonoids = std::tuple<Orders, Partitions, Graphs, Hypergraphs, SimplicialComplexes, Hyperforests, LxH<Graphs>,
                              LxH<Partitions>>;

TEMPLATE_LIST_TEST_CASE("product is associative and coproduct coassociative", "[monoids][property]", AllMonoids) {
  using M = TestType;
  std::mt19937 rng(1);
  for (int n = 1; n <= 4; ++n) {
    for_each_set_composition_of_length(full_mask(n), 3, [&](const std::vector<Mask>& a) {
      const auto x1 = random_on<M>(rng, a[0]);
      const auto x2 = random_on<M>(rng, a[1]);
      const auto x3 = random_on<M>(rng, a[2]);
      CHECK(M::product(M::product(x1, x2), x3) == M::product(x1, M::product(x2, x3)));

      const auto x = ElementGen<M>::random(rng, n);
      const std::optional<typename M::element> whole = x;
      const auto left23 = res<M>(whole, a[1] | a[2]);
      const auto left12 = res<M>(whole, a[0] | a[1]);
      const auto p1 = res<M>(whole, a[0]);
      const auto p3 = res<M>(whole, a[2]);
      // Delta_{A1, A23} then Delta_{A2, A3} against Delta_{A12, A3} then Delta_{A1, A2}
      const bool right_defined = p1 && left23 && res<M>(left23, a[1]) && res<M>(left23, a[2]);
      const bool left_defined = left12 && p3 && res<M>(left12, a[0]) && res<M>(left12, a[1]);
      CHECK(right_defined == left_defined);
      if (right_defined && left_defined) {
        CHECK(*res<M>(left23, a[1]) == *res<M>(left12, a[1]));
        CHECK(*res<M>(left23, a[2]) == *p3);
        CHECK(*res<M>(left12, a[0]) == *p1);
      }
    });
  }
}

TEMPLATE_LIST_TEST_CASE("product and coproduct are compatible", "[monoids][property]", AllMonoids) {
  using M = TestType;
  std::mt19937 rng(2);
  for (int n = 1; n <= 4; ++n) {
    const Mask ground = full_mask(n);
    for_each_subset(ground, [&](Mask a1) {
      const Mask a2 = ground & ~a1;
      const auto x = random_on<M>(rng, a1);
      const auto y = random_on<M>(rng, a2);
      const auto xy = M::product(x, y);
      for_each_subset(ground, [&](Mask b1) {
        const Mask b2 = ground & ~b1;
        const auto lhs = coproduct<M>(xy, b1, b2);
        const auto cx = coproduct<M>(x, a1 & b1, a1 & b2);
        const auto cy = coproduct<M>(y, a2 & b1, a2 & b2);
        REQUIRE(lhs.has_value() == (cx.has_value() && cy.has_value()));
        if (lhs) {
          CHECK(lhs->first == M::product(cx->first, cy->first));
          CHECK(lhs->second == M::product(cx->second, cy->second));
        }
      });
    });
  }
}

TEMPLATE_LIST_TEST_CASE("relabelling round trip", "[monoids][property]", AllMonoids) {
  using M = TestType;
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 5;
    const auto x = ElementGen<M>::random(rng, n);
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    CHECK(M::relabel(x, sigma) == x);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    CHECK(M::relabel(M::relabel(x, sigma), inverse_permutation(sigma)) == x);
  }
}

using Bicommutative = std::tuple<Partitions, Graphs, Hypergraphs, SimplicialComplexes, Hyperforests>;

TEMPLATE_LIST_TEST_CASE("commutative and cocommutative", "[monoids][property]", Bicommutative) {
  using M = TestType;
  STATIC_REQUIRE(M::commutative);
  STATIC_REQUIRE(M::cocommutative);
  std::mt19937 rng(4);
  for (int n = 2; n <= 5; ++n) {
    const Mask ground = full_mask(n);
    for_each_subset(ground, [&](Mask a1) {
      const Mask a2 = ground & ~a1;
      const auto x = random_on<M>(rng, a1);
      const auto y = random_on<M>(rng, a2);
      CHECK(M::product(x, y) == M::product(y, x));
      const auto z = ElementGen<M>::random(rng, n);
      const auto c12 = coproduct<M>(z, a1, a2);
      const auto c21 = coproduct<M>(z, a2, a1);
      REQUIRE(c12.has_value() == c21.has_value());
      if (c12) CHECK((c12->first == c21->second && c12->second == c21->first));
    });
  }
}

TEST_CASE("linear orders do not commute", "[monoids]") {
  const LinearOrder a{{0}}, b{{1}};
  CHECK_FALSE(Orders::product(a, b) == Orders::product(b, a));
}

TEST_CASE("restrictions stay in the family", "[monoids][property]") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const auto sc = ElementGen<SimplicialComplexes>::random(rng, n);
    const auto hf = ElementGen<Hyperforests>::random(rng, n, 4);
    for_each_subset(full_mask(n), [&](Mask part) {
      CHECK_NOTHROW(SimplicialComplexes::validate(*SimplicialComplexes::restrict(sc, part)));
      CHECK_NOTHROW(Hyperforests::validate(*Hyperforests::restrict(hf, part)));
    });
  }
}

TEST_CASE("products of basis elements", "[monoids]") {
  CHECK(Orders::product(LinearOrder{{0, 2}}, LinearOrder{{1}}) == LinearOrder{{0, 2, 1}});
  CHECK(Partitions::product(SetPartition{{0b011}}, SetPartition{{0b100}}) == SetPartition{{0b011, 0b100}});
  CHECK(Hypergraphs::product(Hypergraph{0b0011, {0b0011}}, Hypergraph{0b1100, {0b1100}}) == hyper("1,2/3,4", 4));
  CHECK_THROWS_AS(Orders::product(LinearOrder{{0}}, LinearOrder{{0}}), InvalidInput);
}

TEST_CASE("coproduct of set partitions is partial", "[monoids]") {
  const SetPartition x{{0b011, 0b100}};
  const auto split = coproduct<Partitions>(x, 0b011, 0b100);
  REQUIRE(split.has_value());
  CHECK(split->first == SetPartition{{0b011}});
  CHECK(split->second == SetPartition{{0b100}});
  CHECK_FALSE(coproduct<Partitions>(x, 0b001, 0b110).has_value());
  CHECK_THROWS_AS(coproduct<Partitions>(x, 0b001, 0b010), InvalidInput);
}

TEST_CASE("coproduct of a path keeps only internal edges", "[monoids]") {
  const auto split = coproduct<Graphs>(graph("1-2,2-3", 3), 0b101, 0b010);
  REQUIRE(split.has_value());
  CHECK(split->first == Hypergraph{0b101, {}});
  CHECK(split->second == Hypergraph{0b010, {}});
}

TEST_CASE("x_A examples", "[monoids]") {
  // a..f are 0..5
  const LinearOrder alpha = identity_order(6);
  const SetComposition a{{0b000110, 0b100000, 0b001001, 0b010000}};
  CHECK(*mu_delta<Orders>(alpha, a) == LinearOrder{{1, 2, 5, 0, 3, 4}});
  CHECK(*mu_delta<Orders>(alpha, SetComposition{{0b111111}}) == alpha);
  const auto x = hyper("1,2,4/2,3,4", 4);
  CHECK(*mu_delta<Hypergraphs>(x, SetComposition{{0b0001, 0b1110}}) == hyper("2,3,4", 4));
  CHECK(*mu_delta<Hypergraphs>(x, SetComposition{{0b1111}}) == x);
  CHECK_THROWS_AS(mu_delta<Hypergraphs>(x, SetComposition{{0b0001}}), InvalidInput);
}

TEST_CASE("relabelling examples", "[monoids]") {
  CHECK(Orders::relabel(LinearOrder{{1, 0}}, {1, 0}) == LinearOrder{{0, 1}});
  CHECK(Hypergraphs::relabel(hyper("1,2,4", 4), {1, 0, 2, 3}) == hyper("1,2,4", 4));
  CHECK_THROWS_AS(Orders::relabel(LinearOrder{{0, 1}}, {0, 0}), InvalidInput);
}

TEST_CASE("edge family validation", "[monoids]") {
  CHECK_THROWS_AS(Hypergraphs::make(0b11, {0b01}), InvalidInput);
  CHECK_THROWS_AS(Hypergraphs::make(0b11, {0b11, 0b11}), InvalidInput);
  CHECK_THROWS_AS(Graphs::make(0b111, {0b111}), InvalidInput);
  CHECK_THROWS_AS(SimplicialComplexes::make(0b111, {0b111}), InvalidInput);
  CHECK_NOTHROW(SimplicialComplexes::make(0b111, {0b011, 0b101, 0b110, 0b111}));
  CHECK_THROWS_AS(Hyperforests::make(0b111, {0b011, 0b110, 0b101}), InvalidInput);
  CHECK_THROWS_AS(Hyperforests::make(0b111, {0b111, 0b011}), InvalidInput);
  CHECK_NOTHROW(Hyperforests::make(0b1111, {0b0111, 0b1100}));
  CHECK_THROWS_AS(Hyperforests::product(Hypergraph{0b0011, {}}, Hypergraph{0b0011, {}}), InvalidInput);
}

TEST_CASE("proper cycle search agrees with union-find", "[monoids][property]") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& h : ElementGen<Hypergraphs>::all(n)) {
      CHECK(has_proper_cycle(h.edges) == !hopf::detail::union_find_forest(h.edges));
    }
  }
}

TEST_CASE("formal sum arithmetic", "[monoids]") {
  const LinearOrder x{{0, 1}}, y{{1, 0}};
  FormalSum<LinearOrder> s(x);
  CHECK((s + s.scaled(-1)).empty());
  CHECK((FormalSum<LinearOrder>(x, 2) + FormalSum<LinearOrder>(x, 3)) == FormalSum<LinearOrder>(x, 5));
  CHECK((FormalSum<LinearOrder>(x, 2) - FormalSum<LinearOrder>(x, 2)).size() == 0);
  CHECK(FormalSum<LinearOrder>(x, 0).empty());

  const auto g1 = graph("1-2", 3), g2 = graph("2-3", 3);
  FormalSum<Hypergraph> sum(g1);
  sum.add(g2, 1);
  const auto lhs = coproduct_linear<Graphs>(sum, 0b011, 0b100);
  const auto rhs = coproduct_linear<Graphs>(FormalSum<Hypergraph>(g1), 0b011, 0b100) +
                   coproduct_linear<Graphs>(FormalSum<Hypergraph>(g2), 0b011, 0b100);
  CHECK(lhs == rhs);
  CHECK(lhs.size() == 2);

  FormalSum<LinearOrder> big(x, INT64_MAX);
  CHECK_THROWS_AS(big.add(x, 1), ArithmeticOverflow);
  CHECK_THROWS_AS(big.scaled(2), ArithmeticOverflow);
}

TEST_CASE("graded product shifts the right factor", "[monoids]") {
  CHECK(graded_product<Orders>(LinearOrder{{1, 0}}, LinearOrder{{0}}) == LinearOrder{{1, 0, 2}});
  CHECK(graded_product<Graphs>(graph("1-2", 2), graph("1-2", 2)) == graph("1-2,3-4", 4));
}
