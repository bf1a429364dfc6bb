#pragma once

// Antipode coefficients for commutative and cocommutative linearized monoids:
// minimal partitions, the quotient hypergraph, its acyclic orientations, the
// permutation-sum alternative and the hyperforest closed form.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hopf/compositions.hpp"
#include "hopf/formal_sum.hpp"
#include "hopf/lxh.hpp"
#include "hopf/monoids.hpp"
#include "hopf/takeuchi.hpp"

namespace hopf {

template <LinearizedMonoid M>
void require_bicommutative() {
  if constexpr (!(M::commutative && M::cocommutative)) {
    throw MonoidMismatch("monoid '" + M::name() + "' is not commutative and cocommutative");
  }
}

/// Simple hypergraph on {0..m-1} built over the parts of a fixed Lambda.
struct QuotientHypergraph {
  int m = 0;
  std::vector<Mask> hyperedges;  // sorted
  SetComposition lambda;
};

/// One (head, tail) pair per hyperedge, aligned with QuotientHypergraph::hyperedges.
struct HyperOrientation {
  std::vector<std::pair<Mask, Mask>> sides;
  auto operator<=>(const HyperOrientation&) const = default;
};

namespace detail {

inline std::vector<Mask> connectivity_classes(Mask support, const std::vector<Mask>& edges) {
  std::vector<Mask> classes;
  for (Mask r = support; r != 0; r &= r - 1) classes.push_back(bit(lowest_element(r)));
  for (Mask e : edges) {
    Mask merged = e;
    std::vector<Mask> keep;
    for (Mask c : classes) {
      if (c & e) {
        merged |= c;
      } else {
        keep.push_back(c);
      }
    }
    keep.push_back(merged);
    classes = std::move(keep);
  }
  std::sort(classes.begin(), classes.end(), [](Mask a, Mask b) { return lowest_element(a) < lowest_element(b); });
  return classes;
}

template <LinearizedMonoid M>
std::optional<SetComposition> minimal_partition_scan(const typename M::element& x, const typename M::element& y) {
  std::optional<std::vector<Mask>> best;
  std::vector<std::vector<Mask>> valid;
  for_each_set_partition(M::support(x), [&](const std::vector<Mask>& blocks) {
    auto img = mu_delta_unchecked<M>(x, blocks);
    if (!img || !(*img == y)) return;
    valid.push_back(blocks);
    if (!best || blocks.size() > best->size()) best = blocks;
  });
  if (!best) return std::nullopt;
  for (const auto& v : valid) {
    for (Mask b : *best) {
      bool inside = false;
      for (Mask block : v) inside = inside || is_subset(b, block);
      ensure(inside, "valid partitions have no common refinement");
    }
  }
  return SetComposition{*best};
}

/// Union-find over m vertices, used for head classes.
struct Classes {
  std::vector<int> parent;
  explicit Classes(int m) : parent(m) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// Minimal element of C_x^y with parts sorted by minimum, or nullopt.
template <LinearizedMonoid M>
std::optional<SetComposition> minimal_support_partition(const typename M::element& x, const typename M::element& y) {
  require_bicommutative<M>();
  M::validate(x);
  M::validate(y);
  if (M::support(x) != M::support(y)) throw InvalidInput("x and y over different ground sets");
  const int n = popcount(M::support(x));
  if constexpr (is_edge_monoid<M>) {
    SetComposition lambda{detail::connectivity_classes(y.support, y.edges)};
    auto img = mu_delta_unchecked<M>(x, lambda.parts);
    std::optional<SetComposition> fast;
    if (img && *img == y) fast = lambda;
    if (n <= 6) {
      ensure(detail::minimal_partition_scan<M>(x, y) == fast, "connectivity classes disagree with the partition scan");
    }
    return fast;
  } else {
    check_guard(n);
    return detail::minimal_partition_scan<M>(x, y);
  }
}

/// Inclusion-minimal U with prod_{i in U} x_{Lambda_i} != x_{union}, by size.
template <LinearizedMonoid M>
QuotientHypergraph quotient_hypergraph(const typename M::element& x, const typename M::element& y,
                                       const SetComposition& lambda) {
  require_bicommutative<M>();
  require_composition(lambda, M::support(x));
  auto img = mu_delta_unchecked<M>(x, lambda.parts);
  if (!img || !(*img == y)) throw InvalidInput("Lambda is not a member of C_x^y");
  const int m = lambda.length();
  check_guard(m, "quotient vertex set");
  std::vector<typename M::element> pieces;
  for (Mask p : lambda.parts) pieces.push_back(*M::restrict(x, p));
  QuotientHypergraph h{m, {}, lambda};
  for (int size = 2; size <= m; ++size) {
    std::vector<Mask> found;
    for (Mask u = 0; u <= full_mask(m); ++u) {
      if (popcount(u) == size) {
        bool pruned = false;
        for (Mask e : h.hyperedges) pruned = pruned || is_subset(e, u);
        if (!pruned) {
          Mask merged = 0;
          std::vector<typename M::element> sel;
          for (int i : elements_of(u)) {
            merged |= lambda.parts[i];
            sel.push_back(pieces[i]);
          }
          auto whole = M::restrict(x, merged);
          if (!whole || !(mu<M>(sel) == *whole)) found.push_back(u);
        }
      }
      if (u == full_mask(m)) break;
    }
    h.hyperedges.insert(h.hyperedges.end(), found.begin(), found.end());
  }
  std::sort(h.hyperedges.begin(), h.hyperedges.end());
  return h;
}

// ---------------------------------------------------------------------------
// Orientations

/// Heads of one hyperedge in listing order: by size; singletons by
/// decreasing vertex, larger heads lexicographically.
inline std::vector<Mask> ordered_heads(Mask edge) {
  std::vector<Mask> heads;
  for_each_subset(edge, [&](Mask s) {
    if (s != 0 && s != edge) heads.push_back(s);
  });
  std::sort(heads.begin(), heads.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    if (popcount(a) == 1) return a > b;
    return elements_of(a) < elements_of(b);
  });
  return heads;
}

inline long long orientation_count(const QuotientHypergraph& h) {
  long long total = 1;
  for (Mask e : h.hyperedges) {
    const long long k = (1LL << popcount(e)) - 2;
    if (total > orientation_limit() / std::max(1LL, k)) {
      throw GuardExceeded("orientation count exceeds the configured limit");
    }
    total *= k;
  }
  return total;
}

/// Partition of the vertices generated by the heads; returned as masks
/// sorted by minimum.
inline std::vector<Mask> head_classes(int m, const HyperOrientation& o) {
  detail::Classes uf(m);
  for (auto [head, tail] : o.sides) {
    const int a = lowest_element(head);
    for (int v : elements_of(head)) uf.unite(v, a);
  }
  std::map<int, Mask> by_root;
  for (int v = 0; v < m; ++v) by_root[uf.find(v)] |= bit(v);
  std::vector<Mask> out;
  for (auto& [r, c] : by_root) out.push_back(c);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return lowest_element(a) < lowest_element(b); });
  return out;
}

namespace detail {

// Adjacency between head classes; nullopt when a tail meets its own head class.
inline std::optional<std::vector<Mask>> class_digraph(const std::vector<Mask>& classes, const HyperOrientation& o) {
  auto class_of = [&](int v) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (contains(classes[i], v)) return static_cast<int>(i);
    }
    return -1;
  };
  std::vector<Mask> out(classes.size(), 0);
  for (auto [head, tail] : o.sides) {
    const int from = class_of(lowest_element(head));
    for (int b : elements_of(tail)) {
      const int to = class_of(b);
      if (to == from) return std::nullopt;
      out[from] |= bit(to);
    }
  }
  return out;
}

}  // namespace detail

inline bool is_acyclic(int m, const HyperOrientation& o) {
  const auto classes = head_classes(m, o);
  const auto adj = detail::class_digraph(classes, o);
  if (!adj) return false;
  const int k = static_cast<int>(classes.size());
  std::vector<int> indeg(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j : elements_of((*adj)[i])) ++indeg[j];
  }
  std::vector<int> ready;
  for (int i = 0; i < k; ++i) {
    if (indeg[i] == 0) ready.push_back(i);
  }
  int seen = 0;
  while (!ready.empty()) {
    const int i = ready.back();
    ready.pop_back();
    ++seen;
    for (int j : elements_of((*adj)[i])) {
      if (--indeg[j] == 0) ready.push_back(j);
    }
  }
  return seen == k;
}

/// Calls f(orientation) for each acyclic orientation, in listing order.
template <class F>
void for_each_acyclic_orientation(const QuotientHypergraph& h, F&& f) {
  orientation_count(h);
  std::vector<std::vector<Mask>> heads;
  for (Mask e : h.hyperedges) heads.push_back(ordered_heads(e));
  HyperOrientation o;
  o.sides.resize(h.hyperedges.size());
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == h.hyperedges.size()) {
      if (is_acyclic(h.m, o)) f(static_cast<const HyperOrientation&>(o));
      return;
    }
    for (Mask head : heads[idx]) {
      o.sides[idx] = {head, h.hyperedges[idx] & ~head};
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
}

inline std::vector<HyperOrientation> enumerate_acyclic_orientations(const QuotientHypergraph& h) {
  std::vector<HyperOrientation> out;
  for_each_acyclic_orientation(h, [&](const HyperOrientation& o) { out.push_back(o); });
  return out;
}

/// Omega: each hyperedge is oriented with head = its meet with the first part
/// of A that touches it.
inline HyperOrientation orientation_of_composition(const QuotientHypergraph& h, const SetComposition& a) {
  HyperOrientation o;
  for (Mask e : h.hyperedges) {
    Mask head = 0;
    for (Mask p : a.parts) {
      if (p & e) {
        head = p & e;
        break;
      }
    }
    if (head == e) throw InvalidInput("composition does not break every hyperedge");
    o.sides.push_back({head, e & ~head});
  }
  return o;
}

/// A_O: repeatedly take the source class whose minimum is largest.
inline SetComposition orientation_composition(const QuotientHypergraph& h, const HyperOrientation& o) {
  if (o.sides.size() != h.hyperedges.size()) throw InvalidInput("orientation does not match the hypergraph");
  const auto classes = head_classes(h.m, o);
  const auto adj = detail::class_digraph(classes, o);
  if (!adj || !is_acyclic(h.m, o)) throw InvalidInput("orientation is not acyclic");
  const int k = static_cast<int>(classes.size());
  Mask remaining = full_mask(k);
  SetComposition out;
  while (remaining != 0) {
    Mask incoming = 0;
    for (int i : elements_of(remaining)) incoming |= (*adj)[i];
    int pick = -1;
    for (int i : elements_of(remaining & ~incoming)) {
      if (pick < 0 || lowest_element(classes[i]) > lowest_element(classes[pick])) pick = i;
    }
    ensure(pick >= 0, "acyclic class digraph has no source");
    out.parts.push_back(classes[pick]);
    remaining &= ~bit(pick);
  }
  ensure(orientation_of_composition(h, out) == o, "Omega(A_O) differs from O");
  return out;
}

inline std::int64_t orientation_sum(const QuotientHypergraph& h) {
  std::int64_t total = 0;
  for_each_acyclic_orientation(h, [&](const HyperOrientation& o) {
    total += (head_classes(h.m, o).size() % 2 == 0) ? 1 : -1;
  });
  return total;
}

// ---------------------------------------------------------------------------
// Coefficients

/// Signed count of acyclic orientations of the quotient hypergraph; 0 when
/// y is not of the form x_A.
template <LinearizedMonoid M>
std::int64_t coefficient_via_orientations(const typename M::element& x, const typename M::element& y) {
  auto lambda = minimal_support_partition<M>(x, y);
  if (!lambda) return 0;
  return orientation_sum(quotient_hypergraph<M>(x, y, *lambda));
}

inline Hypergraph as_hypergraph(const QuotientHypergraph& h) {
  return Hypergraph{full_mask(h.m), h.hyperedges};
}

/// Contribution of each tau in S_m to the coefficient of the edgeless
/// hypergraph, via the conflict graph of (12...m, x/y) -> (tau, empty).
inline std::vector<std::pair<LinearOrder, int>> permutation_contributions(const QuotientHypergraph& h) {
  check_guard(h.m, "permutation size");
  const Hypergraph hg = as_hypergraph(h);
  const Hypergraph empty{full_mask(h.m), {}};
  const LinearOrder id = identity_order(h.m);
  std::vector<std::pair<LinearOrder, int>> out;
  for_each_permutation(h.m, [&](const LinearOrder& tau) {
    out.emplace_back(tau, lxh_coefficient<Hypergraphs>(id, hg, tau, empty));
  });
  return out;
}

template <LinearizedMonoid M>
std::int64_t coefficient_via_permutations(const typename M::element& x, const typename M::element& y) {
  auto lambda = minimal_support_partition<M>(x, y);
  if (!lambda) return 0;
  std::int64_t total = 0;
  for (const auto& [tau, c] : permutation_contributions(quotient_hypergraph<M>(x, y, *lambda))) total += c;
  return total;
}

namespace detail {

/// Distinct x_A, found by sweeping set partitions (x_A only depends on the
/// blocks of A in a commutative monoid).
template <LinearizedMonoid M>
std::set<typename M::element> reachable_targets(const typename M::element& x) {
  std::set<typename M::element> out;
  for_each_set_partition(M::support(x), [&](const std::vector<Mask>& blocks) {
    auto img = mu_delta_unchecked<M>(x, blocks);
    if (img) out.insert(*img);
  });
  return out;
}

template <LinearizedMonoid M, class Coef>
FormalSum<typename M::element> assemble(const typename M::element& x, bool verify, Coef&& coef) {
  require_bicommutative<M>();
  M::validate(x);
  check_guard(popcount(M::support(x)));
  if (M::support(x) == 0) return FormalSum<typename M::element>(M::unit());
  FormalSum<typename M::element> out;
  for (const auto& y : reachable_targets<M>(x)) out.add(y, coef(y));
  if (verify) ensure(out == takeuchi_antipode<M>(x), "orientation antipode disagrees with Takeuchi");
  return out;
}

}  // namespace detail

template <LinearizedMonoid M>
FormalSum<typename M::element> antipode_cocommutative(const typename M::element& x, bool verify = false) {
  return detail::assemble<M>(x, verify, [&](const auto& y) { return coefficient_via_orientations<M>(x, y); });
}

template <LinearizedMonoid M>
FormalSum<typename M::element> antipode_via_permutations(const typename M::element& x, bool verify = false) {
  return detail::assemble<M>(x, verify, [&](const auto& y) { return coefficient_via_permutations<M>(x, y); });
}

inline int quotient_components(const QuotientHypergraph& h) {
  return static_cast<int>(detail::connectivity_classes(full_mask(h.m), h.hyperedges).size());
}

/// (-1)^l (-2)^k when every quotient hyperedge has even size, else 0.
inline std::int64_t hyperforest_coefficient(const Hypergraph& f, const Hypergraph& h) {
  Hyperforests::validate(f);
  Hyperforests::validate(h);
  auto lambda = minimal_support_partition<Hyperforests>(f, h);
  if (!lambda) throw InvalidInput("h is not of the form f_A");
  const QuotientHypergraph q = quotient_hypergraph<Hyperforests>(f, h, *lambda);
  for (Mask e : q.hyperedges) {
    if (popcount(e) % 2 != 0) return 0;
  }
  const int k = static_cast<int>(q.hyperedges.size());
  std::int64_t value = (quotient_components(q) % 2 == 0) ? 1 : -1;
  for (int i = 0; i < k; ++i) value = checked_mul(value, -2);
  return value;
}

}  // namespace hopf
