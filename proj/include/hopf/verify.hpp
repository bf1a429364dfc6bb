#pragma once

// Named verification suites and the numbered acceptance checks. Each case
// reports pass/fail plus a short detail string; nothing here throws on a
// mismatch.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hopf/cocommutative.hpp"
#include "hopf/invariants.hpp"
#include "hopf/io.hpp"
#include "hopf/lxh.hpp"
#include "hopf/takeuchi.hpp"

namespace hopf::verify {

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

/// Runs `body`, turning library exceptions into a failed case.
inline CaseResult guarded(const std::string& name, const std::function<CaseResult()>& body) {
  try {
    CaseResult r = body();
    r.name = name;
    return r;
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

/// Accumulates a pass flag and the first failure message.
struct Tally {
  bool ok = true;
  long long checked = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++checked;
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
  CaseResult result(const std::string& summary) const {
    return {"", ok, ok ? summary : first_failure};
  }
};

inline std::string composition_text(const SetComposition& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    if (i) out += ",";
    for (int v : elements_of(a.parts[i])) out += std::to_string(v + 1);
  }
  return out + ")";
}

template <LinearizedMonoid M>
bool axiom_holds(const typename M::element& x, const FormalSum<typename M::element>& s) {
  return antipode_axiom_check<M>(x, s).empty();
}

inline Hypergraph hg(const std::string& s, int n = -1) { return io::parse_element<Hypergraphs>(s, n); }

inline Hypergraph empty_graph(int n) { return Hypergraph{full_mask(n), {}}; }

inline bool is_connected(const Hypergraph& x) {
  return hopf::detail::connectivity_classes(x.support, x.edges).size() <= 1;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Acceptance criteria

inline CaseResult criterion_hg_example() {
  const Hypergraph x = detail::hg("1,2,4/2,3,4");
  FormalSum<Hypergraph> expected;
  expected.add(x, -1);
  expected.add(detail::hg("1,2,4", 4), 2);
  expected.add(detail::hg("2,3,4", 4), 2);
  expected.add(detail::empty_graph(4), -2);
  const auto t = takeuchi_antipode<Hypergraphs>(x);
  const auto o = antipode_cocommutative<Hypergraphs>(x);
  const auto p = antipode_via_permutations<Hypergraphs>(x);
  detail::Tally tally;
  tally.expect(t == expected, "Takeuchi: " + io::sum_json<Hypergraphs>(t).dump());
  tally.expect(o == expected, "orientations: " + io::sum_json<Hypergraphs>(o).dump());
  tally.expect(p == expected, "permutations: " + io::sum_json<Hypergraphs>(p).dump());
  return tally.result("S(x) = " + io::sum_json<Hypergraphs>(t).dump() + " by all three methods");
}

inline const std::vector<std::string>& hg_example_orientation_list() {
  static const std::vector<std::string> list = {
      "(4,3,2,1)", "(3,4,2,1)", "(34,2,1)", "(3,2,4,1)", "(2,4,3,1)", "(23,4,1)", "(1,4,3,2)",
      "(3,1,4,2)", "(1,2,4,3)", "(1,23,4)", "(1,24,3)", "(1,34,2)", "(3,12,4)", "(12,4,3)",
      "(123,4)",   "(14,3,2)",  "(3,14,2)", "(134,2)",   "(3,24,1)", "(24,3,1)"};
  return list;
}

inline CaseResult criterion_orientation_list() {
  const Hypergraph x = detail::hg("1,2,4/2,3,4");
  const Hypergraph y = detail::empty_graph(4);
  const auto lambda = minimal_support_partition<Hypergraphs>(x, y);
  if (!lambda) return {"", false, "C_x^y is empty"};
  const QuotientHypergraph q = quotient_hypergraph<Hypergraphs>(x, y, *lambda);
  std::vector<std::string> got;
  int even = 0, odd = 0;
  for (const auto& o : enumerate_acyclic_orientations(q)) {
    const SetComposition a = orientation_composition(q, o);
    got.push_back(detail::composition_text(a));
    (a.length() % 2 == 0 ? even : odd) += 1;
  }
  detail::Tally tally;
  tally.expect(got.size() == 20, "found " + std::to_string(got.size()) + " acyclic orientations");
  tally.expect(got == hg_example_orientation_list(), "A_O list differs from the reference list");
  tally.expect(even == 9 && odd == 11, "even/odd = " + std::to_string(even) + "/" + std::to_string(odd));
  tally.expect(even - odd == -2, "signed sum " + std::to_string(even - odd));
  return tally.result("20 orientations, list matches, 9 even / 11 odd, sum -2");
}

inline CaseResult criterion_quotient_example() {
  // a..e are 1..5
  const Hypergraph x = detail::hg("2,3/1,2,5/1,4,5/2,3,5");
  const Hypergraph y = detail::hg("2,3", 5);
  detail::Tally tally;
  const auto lambda = minimal_support_partition<Hypergraphs>(x, y);
  const SetComposition expected_lambda{{bit(0), bit(1) | bit(2), bit(3), bit(4)}};
  tally.expect(lambda && *lambda == expected_lambda,
               "Lambda = " + (lambda ? detail::composition_text(*lambda) : std::string("none")));
  if (!lambda) return tally.result("");
  const QuotientHypergraph q = quotient_hypergraph<Hypergraphs>(x, y, *lambda);
  const std::vector<Mask> expected_edges{bit(1) | bit(3), bit(0) | bit(2) | bit(3)};
  tally.expect(q.hyperedges == expected_edges, "quotient hyperedges differ");
  std::map<int, int> by_length;
  for_each_set_composition(x.support, [&](const std::vector<Mask>& parts) {
    auto img = mu_delta_unchecked<Hypergraphs>(x, parts);
    if (img && *img == y) by_length[static_cast<int>(parts.size())] += 1;
  });
  tally.expect(by_length == std::map<int, int>{{2, 6}, {3, 30}, {4, 24}}, "length-graded counts differ");
  const auto c = coefficient_via_orientations<Hypergraphs>(x, y);
  tally.expect(c == 0, "c_x^y = " + std::to_string(c));
  tally.expect(takeuchi_antipode<Hypergraphs>(x).coefficient(y) == 0, "Takeuchi coefficient is nonzero");
  return tally.result("Lambda (a|bc|d|e), hyperedges {{1,3,4},{2,4}}, 24 - 30 + 6 = 0");
}

inline CaseResult criterion_conflict_graph_example() {
  // a..h are 1..8
  const LinearOrder alpha = identity_order(8);
  const Hypergraph x = io::parse_element<Graphs>("1-3,2-7,8-6,7-5,2-5,4-2", 8);
  const LinearOrder beta = io::parse_element<Orders>("12456783");
  const Hypergraph y = io::parse_element<Graphs>("2-5,4-2", 8);
  detail::Tally tally;
  const auto lambda = minimal_lambda<Graphs>(alpha, x, beta, y);
  const SetComposition expected{{bit(0), bit(1) | bit(3) | bit(4), bit(5), bit(6), bit(7), bit(2)}};
  tally.expect(lambda && *lambda == expected,
               "Lambda = " + (lambda ? detail::composition_text(*lambda) : std::string("none")));
  if (!lambda) return tally.result("");
  const NonNestingGraph g = conflict_graph<Graphs>(alpha, x, beta, y, *lambda);
  tally.expect(g.arcs == std::vector<std::pair<int, int>>{{2, 4}, {3, 5}, {5, 6}}, "arcs differ");
  tally.expect(c_graph_fast(g) == 0 && c_graph_bruteforce(g) == 0, "c(G) is nonzero");
  tally.expect(takeuchi_antipode<LxH<Graphs>>({alpha, x}).coefficient({beta, y}) == 0, "Takeuchi coefficient is nonzero");
  return tally.result("Lambda (a|bde|f|g|h|c), arcs {(2,4),(3,5),(5,6)}, c = 0");
}

inline CaseResult criterion_tau_contributions() {
  const Hypergraph x = detail::hg("1,2,4/2,3,4");
  const Hypergraph y = detail::empty_graph(4);
  const auto lambda = minimal_support_partition<Hypergraphs>(x, y);
  if (!lambda) return {"", false, "C_x^y is empty"};
  std::map<std::string, int> nonzero;
  for (const auto& [tau, c] : permutation_contributions(quotient_hypergraph<Hypergraphs>(x, y, *lambda))) {
    if (c != 0) nonzero[io::Codec<Orders>::text(tau)] = c;
  }
  const std::map<std::string, int> expected{{"1243", -1}, {"2341", -1}, {"3124", -1}, {"4321", 1}};
  detail::Tally tally;
  std::string got;
  for (const auto& [t, c] : nonzero) got += t + ":" + std::to_string(c) + " ";
  tally.expect(nonzero == expected, "nonzero contributions " + got);
  return tally.result("1243:-1 2341:-1 3124:-1 4321:+1, all other tau give 0");
}

inline CaseResult criterion_orders() {
  detail::Tally tally;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : ElementGen<Orders>::all(n)) {
      LinearOrder rev{{a.seq.rbegin(), a.seq.rend()}};
      tally.expect(takeuchi_antipode<Orders>(a) == FormalSum<LinearOrder>(rev, n % 2 == 0 ? 1 : -1),
                   "mismatch at " + io::Codec<Orders>::text(a));
    }
  }
  return tally.result(std::to_string(tally.checked) + " orders, n <= 6");
}

inline CaseResult criterion_partitions() {
  detail::Tally tally;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : ElementGen<Partitions>::all(n)) {
      const int sign = p.blocks.size() % 2 == 0 ? 1 : -1;
      tally.expect(takeuchi_antipode<Partitions>(p) == FormalSum<SetPartition>(p, sign),
                   "mismatch at " + io::Codec<Partitions>::text(p));
    }
  }
  return tally.result(std::to_string(tally.checked) + " partitions, n <= 6");
}

inline CaseResult criterion_graphs() {
  detail::Tally tally;
  const auto zeta = discrete_character<Graphs>();
  for (int n = 1; n <= 5; ++n) {
    const Hypergraph edgeless = detail::empty_graph(n);
    const std::int64_t sign = n % 2 == 0 ? 1 : -1;
    for (const auto& g : ElementGen<Graphs>::all(n)) {
      const std::string at = " at " + io::Codec<Graphs>::text(g);
      const auto s = takeuchi_antipode<Graphs>(g);
      const std::int64_t acyclic = count_acyclic_orientations(g);
      tally.expect(s.coefficient(edgeless) == sign * acyclic, "edgeless coefficient" + at);
      const auto [chi, zs] = reciprocity_check<Graphs>(g, zeta, s);
      tally.expect(chi == zs, "reciprocity" + at);
      const auto poly = chromatic_poly<Graphs>(g, zeta);
      for (int t = 0; t <= 4; ++t) {
        tally.expect(poly.evaluate_int(t) == coloring_count_oracle(g, t), "coloring count t=" + std::to_string(t) + at);
      }
    }
  }
  return tally.result(std::to_string(tally.checked) + " checks on all graphs n <= 5");
}

inline CaseResult criterion_lxh_coefficients() {
  using P = LxH<Graphs>;
  detail::Tally tally;
  auto check = [&](const P::element& e) {
    const auto s = antipode_lxh<Graphs>(e.first, e.second);
    for (const auto& [term, c] : s) tally.expect(c >= -1 && c <= 1, "coefficient outside {-1,0,1}");
    tally.expect(s == takeuchi_antipode<P>(e),
                 "differs from Takeuchi at " + io::Codec<P>::text(e));
  };
  for (int n = 1; n <= 4; ++n) {
    for (const auto& e : ElementGen<P>::all(n)) check(e);
  }
  std::mt19937 rng(2024);
  for (int i = 0; i < 50; ++i) check(ElementGen<P>::random(rng, 5));
  return tally.result("all L x G pairs n <= 4 and 50 random at n = 5");
}

inline CaseResult criterion_c_graph() {
  detail::Tally tally;
  long long graphs = 0;
  for (int m = 1; m <= 7; ++m) {
    for (const auto& g : enumerate_non_nesting_graphs(m)) {
      ++graphs;
      const int fast = c_graph_fast(g);
      tally.expect(fast >= -1 && fast <= 1, "fast value out of range");
      tally.expect(fast == c_graph_bruteforce(g), "fast != brute force on m=" + std::to_string(m));
    }
  }
  return tally.result(std::to_string(graphs) + " non-nested graphs, m <= 7");
}

inline CaseResult criterion_antipode_axiom() {
  detail::Tally tally;
  auto bicommutative = [&]<class M>(const std::vector<typename M::element>& elems) {
    for (const auto& x : elems) {
      tally.expect(detail::axiom_holds<M>(x, antipode_cocommutative<M>(x)),
                   M::name() + " axiom fails at " + io::Codec<M>::text(x));
    }
  };
  for (int n = 1; n <= 4; ++n) {
    for (const auto& a : ElementGen<Orders>::all(n)) {
      tally.expect(detail::axiom_holds<Orders>(a, takeuchi_antipode<Orders>(a)), "l axiom fails");
    }
    bicommutative.operator()<Partitions>(ElementGen<Partitions>::all(n));
    bicommutative.operator()<Graphs>(ElementGen<Graphs>::all(n));
    bicommutative.operator()<Hypergraphs>(ElementGen<Hypergraphs>::all(n));
    bicommutative.operator()<SimplicialComplexes>(ElementGen<SimplicialComplexes>::all(n));
    bicommutative.operator()<Hyperforests>(ElementGen<Hyperforests>::all(n));
  }
  std::mt19937 rng(11);
  std::vector<Hypergraph> random_hg;
  for (int i = 0; i < 50; ++i) random_hg.push_back(ElementGen<Hypergraphs>::random(rng, 5));
  bicommutative.operator()<Hypergraphs>(random_hg);
  return tally.result(std::to_string(tally.checked) + " elements across l, pi, g, hg, sc, hf");
}

inline CaseResult criterion_hyperforests() {
  detail::Tally tally;
  std::mt19937 rng(99);
  int odd_cases = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const Hypergraph f = ElementGen<Hyperforests>::random(rng, n, 4);
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    std::vector<Mask> parts(k, 0);
    for (int v = 0; v < n; ++v) parts[std::uniform_int_distribution<int>(0, k - 1)(rng)] |= bit(v);
    std::erase(parts, Mask{0});
    const Hypergraph h = *mu_delta_unchecked<Hyperforests>(f, parts);
    const auto lambda = minimal_support_partition<Hyperforests>(f, h);
    if (!lambda) {
      tally.expect(false, "f_A not recognized as reachable");
      continue;
    }
    const QuotientHypergraph q = quotient_hypergraph<Hyperforests>(f, h, *lambda);
    bool odd = false;
    for (Mask e : q.hyperedges) odd = odd || popcount(e) % 2 != 0;
    const std::int64_t closed = hyperforest_coefficient(f, h);
    const std::int64_t sum = orientation_sum(q);
    if (odd) {
      ++odd_cases;
      tally.expect(closed == 0 && sum == 0, "odd hyperedge case is nonzero");
    }
    tally.expect(closed == sum, "closed form " + std::to_string(closed) + " vs orientation sum " + std::to_string(sum));
  }
  return tally.result("100 random hyperforests, " + std::to_string(odd_cases) + " with an odd quotient hyperedge");
}

inline CaseResult criterion_pr_antipode() {
  detail::Tally tally;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : ElementGen<Orders>::all(n)) {
      tally.expect(pr_antipode(a) == kh_antipode_takeuchi<Orders>(a), "mismatch at " + io::Codec<Orders>::text(a));
    }
  }
  return tally.result(std::to_string(tally.checked) + " orders, n <= 5");
}

inline CaseResult criterion_permutation_chromatic() {
  detail::Tally tally;
  const auto zeta = identity_order_character();
  for (int n = 1; n <= 6; ++n) {
    const std::int64_t sign = n % 2 == 0 ? 1 : -1;
    for (const auto& a : ElementGen<Orders>::all(n)) {
      const std::string at = " at " + io::Codec<Orders>::text(a);
      const std::int64_t chi = chromatic_poly<Orders>(a, zeta).evaluate_int(-1);
      const std::int64_t d = d_count(a, identity_order(n));
      const std::int64_t acyclic = count_acyclic_orientations(incomparability_graph(a));
      tally.expect(chi == sign * d, "chi(-1) != (-1)^n d" + at);
      tally.expect(d == acyclic, "d != acyclic orientations" + at);
    }
  }
  const std::int64_t spot = chromatic_poly<Orders>(io::parse_element<Orders>("2143"), zeta).evaluate_int(-1);
  tally.expect(spot == 14, "identity holds for all n <= 6, but chi_2143(-1) = " + std::to_string(spot) + ", expected 14");
  return tally.result("identity holds for all n <= 6; chi_2143(-1) = 14");
}

inline CaseResult criterion_primitivity() {
  detail::Tally tally;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : ElementGen<Graphs>::all(n)) {
      if (!detail::is_connected(g)) continue;
      tally.expect(primitivity_check(gbar(g)), "gbar not primitive at " + io::Codec<Graphs>::text(g));
    }
  }
  return tally.result(std::to_string(tally.checked) + " connected graphs, n <= 5");
}

inline CaseResult criterion_psi21() {
  detail::Tally tally;
  auto check = [&](const LinearOrder& a) {
    const auto [lhs, rhs] = psi21_identity_check(a);
    tally.expect(lhs == rhs, "identity fails at " + io::Codec<Orders>::text(a));
  };
  for (int n : {2, 4}) {
    for (const auto& a : ElementGen<Orders>::all(n)) check(a);
  }
  std::mt19937 rng(6);
  for (int i = 0; i < 50; ++i) check(ElementGen<Orders>::random(rng, 6));
  return tally.result("all n in {2,4} and 50 random at n = 6");
}

struct Criterion {
  int number;
  std::string title;
  CaseResult (*run)();
};

inline const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> list = {
      {1, "HG antipode by Takeuchi, orientations and permutations", criterion_hg_example},
      {2, "20 acyclic orientations and their compositions", criterion_orientation_list},
      {3, "quotient hypergraph example on {a..e}", criterion_quotient_example},
      {4, "conflict graph example on {a..h}", criterion_conflict_graph_example},
      {5, "contributing permutations for {{1,2,4},{2,3,4}}", criterion_tau_contributions},
      {6, "S(alpha) = (-1)^n reverse(alpha), n <= 6", criterion_orders},
      {7, "S(X) = (-1)^|X| X, n <= 6", criterion_partitions},
      {8, "graphs: acyclic orientations, reciprocity, colorings", criterion_graphs},
      {9, "L x G coefficients in {-1,0,1} and equal to Takeuchi", criterion_lxh_coefficients},
      {10, "c(G) fast = brute force, m <= 7", criterion_c_graph},
      {11, "antipode axiom in six monoids", criterion_antipode_axiom},
      {12, "hyperforest closed form", criterion_hyperforests},
      {13, "PR antipode = K(L) Takeuchi, n <= 5", criterion_pr_antipode},
      {14, "permutation chromatic identity", criterion_permutation_chromatic},
      {15, "gbar primitivity", criterion_primitivity},
      {16, "Psi_21 identity", criterion_psi21},
  };
  return list;
}

inline std::vector<CaseResult> run_acceptance() {
  std::vector<CaseResult> out;
  for (const auto& c : acceptance_criteria()) {
    out.push_back(detail::guarded(std::to_string(c.number) + ". " + c.title, c.run));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites

template <LinearizedMonoid M>
CaseResult axiom_case(int n_max, bool fast) {
  detail::Tally tally;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& x : ElementGen<M>::all(n)) {
      FormalSum<typename M::element> s;
      if constexpr (M::commutative && M::cocommutative) {
        s = fast ? antipode_cocommutative<M>(x) : takeuchi_antipode<M>(x);
      } else {
        s = takeuchi_antipode<M>(x);
      }
      tally.expect(detail::axiom_holds<M>(x, s), "axiom fails at " + io::Codec<M>::text(x));
    }
  }
  return tally.result(std::to_string(tally.checked) + " elements");
}

inline std::vector<CaseResult> antipode_axiom_suite(int n_max = 4) {
  using detail::guarded;
  return {
      guarded("l", [&] { return axiom_case<Orders>(n_max, false); }),
      guarded("pi", [&] { return axiom_case<Partitions>(n_max, true); }),
      guarded("g", [&] { return axiom_case<Graphs>(n_max, true); }),
      guarded("hg", [&] { return axiom_case<Hypergraphs>(std::min(n_max, 4), true); }),
      guarded("sc", [&] { return axiom_case<SimplicialComplexes>(std::min(n_max, 4), true); }),
      guarded("hf", [&] { return axiom_case<Hyperforests>(std::min(n_max, 4), true); }),
  };
}

template <LinearizedMonoid H>
CaseResult lxh_equivalence_case(int n_max) {
  using P = LxH<H>;
  detail::Tally tally;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& e : ElementGen<P>::all(n)) {
      tally.expect(antipode_lxh<H>(e.first, e.second) == takeuchi_antipode<P>(e),
                   "differs from Takeuchi at " + io::Codec<P>::text(e));
    }
  }
  return tally.result(std::to_string(tally.checked) + " pairs, n <= " + std::to_string(n_max));
}

template <LinearizedMonoid M>
CaseResult cocommutative_equivalence_case(const std::vector<typename M::element>& elems) {
  detail::Tally tally;
  for (const auto& x : elems) {
    const auto t = takeuchi_antipode<M>(x);
    tally.expect(antipode_cocommutative<M>(x) == t, "orientations differ at " + io::Codec<M>::text(x));
    tally.expect(antipode_via_permutations<M>(x) == t, "permutations differ at " + io::Codec<M>::text(x));
  }
  return tally.result(std::to_string(elems.size()) + " elements");
}

template <LinearizedMonoid M>
std::vector<typename M::element> exhaustive_or_sampled(int n_max, int samples, unsigned seed) {
  std::vector<typename M::element> out;
  std::mt19937 rng(seed);
  for (int n = 1; n <= n_max; ++n) {
    try {
      auto all = ElementGen<M>::all(n);
      out.insert(out.end(), all.begin(), all.end());
    } catch (const GuardExceeded&) {
      for (int i = 0; i < samples; ++i) out.push_back(ElementGen<M>::random(rng, n));
    }
  }
  return out;
}

inline std::vector<CaseResult> oracle_equivalence_suite(int n_max = 4) {
  using detail::guarded;
  const int lxh_n = std::min(n_max, 4);
  return {
      guarded("lxh l", [&] { return lxh_equivalence_case<Orders>(lxh_n); }),
      guarded("lxh pi", [&] { return lxh_equivalence_case<Partitions>(lxh_n); }),
      guarded("lxh g", [&] { return lxh_equivalence_case<Graphs>(lxh_n); }),
      guarded("lxh hg", [&] { return lxh_equivalence_case<Hypergraphs>(std::min(n_max, 3)); }),
      guarded("orientations pi",
              [&] { return cocommutative_equivalence_case<Partitions>(exhaustive_or_sampled<Partitions>(n_max + 1, 40, 1)); }),
      guarded("orientations g",
              [&] { return cocommutative_equivalence_case<Graphs>(exhaustive_or_sampled<Graphs>(n_max, 40, 2)); }),
      guarded("orientations hg",
              [&] { return cocommutative_equivalence_case<Hypergraphs>(exhaustive_or_sampled<Hypergraphs>(std::min(n_max, 4), 40, 3)); }),
      guarded("orientations sc",
              [&] { return cocommutative_equivalence_case<SimplicialComplexes>(exhaustive_or_sampled<SimplicialComplexes>(n_max, 40, 4)); }),
      guarded("orientations hf",
              [&] { return cocommutative_equivalence_case<Hyperforests>(exhaustive_or_sampled<Hyperforests>(n_max, 40, 5)); }),
      guarded("pr", [&] {
        detail::Tally tally;
        for (int n = 1; n <= std::min(n_max + 1, 5); ++n) {
          for (const auto& a : ElementGen<Orders>::all(n)) {
            tally.expect(pr_antipode(a) == kh_antipode_takeuchi<Orders>(a), "mismatch at " + io::Codec<Orders>::text(a));
          }
        }
        return tally.result(std::to_string(tally.checked) + " orders");
      }),
  };
}

/// chi_alpha(-1) = zeta(S(alpha)) = (-1)^n d_{alpha,e} = (-1)^n a(G_alpha).
inline std::vector<CaseResult> pr_reciprocity_suite(int n_max = 5) {
  std::vector<CaseResult> out;
  const auto zeta = identity_order_character();
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(detail::guarded("n=" + std::to_string(n), [&] {
      detail::Tally tally;
      const std::int64_t sign = n % 2 == 0 ? 1 : -1;
      for (const auto& a : ElementGen<Orders>::all(n)) {
        const std::string at = " at " + io::Codec<Orders>::text(a);
        const auto [chi, zs] = reciprocity_check<Orders>(a, zeta, pr_antipode(a));
        const std::int64_t d = d_count(a, identity_order(n));
        tally.expect(chi == zs, "chi(-1) != zeta(S)" + at);
        tally.expect(chi == sign * d, "chi(-1) != (-1)^n d" + at);
        tally.expect(d == count_acyclic_orientations(incomparability_graph(a)), "d != acyclic orientations" + at);
      }
      return tally.result(std::to_string(tally.checked / 3) + " orders");
    }));
  }
  return out;
}

inline std::vector<CaseResult> hyperforest_suite() {
  return {detail::guarded("closed form vs orientation sum", criterion_hyperforests)};
}

inline std::vector<CaseResult> worked_examples_suite() { return run_acceptance(); }

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"antipode-axiom", "oracle-equivalence", "pr-reciprocity",
                                                 "hyperforest", "paper-examples"};
  return names;
}

/// `n` bounds the degree where a suite takes one; 0 keeps the default.
inline std::vector<CaseResult> run_suite(const std::string& name, int n = 0) {
  if (name == "antipode-axiom") return antipode_axiom_suite(n > 0 ? n : 4);
  if (name == "oracle-equivalence") return oracle_equivalence_suite(n > 0 ? n : 4);
  if (name == "pr-reciprocity") return pr_reciprocity_suite(n > 0 ? n : 5);
  if (name == "hyperforest") return hyperforest_suite();
  if (name == "paper-examples") return worked_examples_suite();
  throw InvalidInput("unknown suite '" + name + "'");
}

}  // namespace hopf::verify
