#include <catch_amalgamated.hpp>

#include <random>

#include "hopf/io.hpp"
#include "hopf/takeuchi.hpp"

using namespace hopf;

namespace {

Hypergraph hyper(const std::string& s, int n = -1) { return io::parse_element<Hypergraphs>(s, n); }

template <class M>
std::vector<typename M::element> sample(int n_max, int random_at_top, unsigned seed) {
  std::vector<typename M::element> out;
  std::mt19937 rng(seed);
  for (int n = 1; n <= n_max; ++n) {
    try {
      auto all = ElementGen<M>::all(n);
      out.insert(out.end(), all.begin(), all.end());
    } catch (const GuardExceeded&) {
      for (int i = 0; i < random_at_top; ++i) out.push_back(ElementGen<M>::random(rng, n));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("antipode of 12 in L", "[takeuchi]") {
  CHECK(takeuchi_antipode<Orders>(LinearOrder{{0, 1}}) == FormalSum<LinearOrder>(LinearOrder{{1, 0}}, 1));
}

TEST_CASE("antipode of a one-block partition", "[takeuchi]") {
  const SetPartition x{{0b11}};
  CHECK(takeuchi_antipode<Partitions>(x) == FormalSum<SetPartition>(x, -1));
}

TEST_CASE("antipode of the two-hyperedge example", "[takeuchi]") {
  const auto x = hyper("1,2,4/2,3,4");
  FormalSum<Hypergraph> expected(x, -1);
  expected.add(hyper("1,2,4", 4), 2);
  expected.add(hyper("2,3,4", 4), 2);
  expected.add(Hypergraph{0b1111, {}}, -2);
  CHECK(takeuchi_antipode<Hypergraphs>(x) == expected);
  CHECK(takeuchi_antipode<Hypergraphs>(x, 3) == expected);
}

TEST_CASE("degree zero gives the unit", "[takeuchi]") {
  CHECK(takeuchi_antipode<Orders>(LinearOrder{}) == FormalSum<LinearOrder>(LinearOrder{}));
}

TEST_CASE("axiom check examples", "[takeuchi]") {
  CHECK(antipode_axiom_check<Orders>(LinearOrder{{0, 1}}, FormalSum<LinearOrder>(LinearOrder{{1, 0}})).empty());
  const SetPartition x{{0b11}};
  CHECK(antipode_axiom_check<Partitions>(x, FormalSum<SetPartition>(x, -1)).empty());
  CHECK_FALSE(antipode_axiom_check<Partitions>(x, FormalSum<SetPartition>(x, 1)).empty());
  CHECK_THROWS_AS(antipode_axiom_check<Partitions>(x, FormalSum<SetPartition>(SetPartition{{0b1}})), InvalidInput);
}

TEST_CASE("K(L) antipode by collapsing L x L", "[takeuchi]") {
  CHECK(kh_antipode_takeuchi<Orders>(LinearOrder{{0, 1}}) == FormalSum<LinearOrder>(LinearOrder{{0, 1}}));
  CHECK(kh_antipode_takeuchi<Orders>(LinearOrder{{0}}) == FormalSum<LinearOrder>(LinearOrder{{0}}, -1));
  CHECK_THROWS_AS(kh_antipode_takeuchi<Orders>(LinearOrder{{1}}), InvalidInput);
}

TEST_CASE("K(Pi) antipode of two singletons", "[takeuchi]") {
  // Direct L x Pi sum over the three compositions of {1,2}:
  // (12) -> -(12, 1|2); (1,2) -> +(12, 1|2); (2,1) -> +(21, 1|2)
  const SetPartition x{{0b01, 0b10}};
  const auto lifted = takeuchi_antipode<LxH<Partitions>>({identity_order(2), x});
  FormalSum<std::pair<LinearOrder, SetPartition>> expected;
  expected.add({LinearOrder{{1, 0}}, x}, 1);
  CHECK(lifted == expected);
  // Collapsing (21, 1|2) relabels 2 -> 1, 1 -> 2, which fixes 1|2.
  CHECK(kh_antipode_takeuchi<Partitions>(x) == FormalSum<SetPartition>(x, 1));
}

TEST_CASE("Takeuchi satisfies the antipode axiom", "[takeuchi][property]") {
  auto run = [](auto tag, const auto& elems) {
    using M = decltype(tag);
    for (const auto& x : elems) CHECK(antipode_axiom_check<M>(x, takeuchi_antipode<M>(x)).empty());
  };
  run(Orders{}, sample<Orders>(5, 0, 1));
  run(Partitions{}, sample<Partitions>(5, 0, 2));
  run(Graphs{}, sample<Graphs>(5, 0, 3));
  run(Hypergraphs{}, sample<Hypergraphs>(5, 40, 4));
  run(SimplicialComplexes{}, sample<SimplicialComplexes>(5, 40, 5));
  run(Hyperforests{}, sample<Hyperforests>(5, 40, 6));
  std::mt19937 rng(8);
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i < 20; ++i) {
      const auto x = ElementGen<LxH<Hypergraphs>>::random(rng, n);
      CHECK(antipode_axiom_check<LxH<Hypergraphs>>(x, takeuchi_antipode<LxH<Hypergraphs>>(x)).empty());
    }
  }
}

TEST_CASE("antipode is an involution in cocommutative monoids", "[takeuchi][property]") {
  auto run = [](auto tag, const auto& elems) {
    using M = decltype(tag);
    for (const auto& x : elems) {
      CHECK(takeuchi_antipode<M>(takeuchi_antipode<M>(x)) == FormalSum<typename M::element>(x));
    }
  };
  run(Orders{}, sample<Orders>(4, 0, 1));
  run(Partitions{}, sample<Partitions>(4, 0, 2));
  run(Graphs{}, sample<Graphs>(4, 0, 3));
  run(Hypergraphs{}, sample<Hypergraphs>(4, 0, 4));
  run(SimplicialComplexes{}, sample<SimplicialComplexes>(4, 0, 5));
  run(Hyperforests{}, sample<Hyperforests>(4, 0, 6));
}

TEST_CASE("closed forms in L and Pi", "[takeuchi][property]") {
  for (int n = 1; n <= 6; ++n) {
    const int sign = n % 2 == 0 ? 1 : -1;
    for_each_permutation(n, [&](const LinearOrder& a) {
      const LinearOrder rev{{a.seq.rbegin(), a.seq.rend()}};
      CHECK(takeuchi_antipode<Orders>(a) == FormalSum<LinearOrder>(rev, sign));
    });
    for (const auto& p : ElementGen<Partitions>::all(n)) {
      CHECK(takeuchi_antipode<Partitions>(p) == FormalSum<SetPartition>(p, p.size() % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("parallel sweep matches the serial one", "[takeuchi]") {
  std::mt19937 rng(9);
  for (int i = 0; i < 10; ++i) {
    const auto x = ElementGen<Graphs>::random(rng, 5);
    CHECK(takeuchi_antipode<Graphs>(x, 4) == takeuchi_antipode<Graphs>(x));
  }
}

TEST_CASE("K(L) antipode satisfies the graded axiom", "[takeuchi][property]") {
  for (int n = 1; n <= 5; ++n) {
    for_each_permutation(n, [&](const LinearOrder& a) {
      CHECK(kh_antipode_axiom_check<Orders>(a, kh_antipode_takeuchi<Orders>(a)).empty());
    });
  }
  // The L antipode of 12 is not the K(L) antipode.
  CHECK_FALSE(kh_antipode_axiom_check<Orders>(LinearOrder{{0, 1}}, FormalSum<LinearOrder>(LinearOrder{{1, 0}})).empty());
  const SetPartition x{{0b01, 0b10}};
  CHECK(kh_antipode_axiom_check<Partitions>(x, kh_antipode_takeuchi<Partitions>(x)).empty());
}
