#pragma once

// Linearized Hopf monoids: basis-level product and restriction coproduct for
// linear orders, set partitions, the four edge families and Hadamard pairs.

#include <algorithm>
#include <concepts>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hopf/compositions.hpp"
#include "hopf/core.hpp"
#include "hopf/formal_sum.hpp"

namespace hopf {

template <class M>
concept LinearizedMonoid = requires(const typename M::element& x, Mask a, const std::vector<int>& sigma) {
  typename M::element;
  { M::name() } -> std::convertible_to<std::string>;
  { M::commutative } -> std::convertible_to<bool>;
  { M::cocommutative } -> std::convertible_to<bool>;
  { M::support(x) } -> std::same_as<Mask>;
  { M::unit() } -> std::same_as<typename M::element>;
  { M::product(x, x) } -> std::same_as<typename M::element>;
  { M::restrict(x, a) } -> std::same_as<std::optional<typename M::element>>;
  { M::relabel(x, sigma) } -> std::same_as<typename M::element>;
  { M::validate(x) };
};

namespace detail {

inline void require_disjoint(Mask a, Mask b) {
  if ((a & b) != 0) throw InvalidInput("product of elements over overlapping ground sets");
}

/// Image of a mask under an elementwise map, which must be injective on it.
inline Mask map_mask(Mask m, const std::vector<int>& sigma) {
  Mask out = 0;
  for (Mask r = m; r != 0; r &= r - 1) {
    const int i = lowest_element(r);
    if (i >= static_cast<int>(sigma.size())) throw InvalidInput("relabelling does not cover the ground set");
    const int j = sigma[i];
    if (j < 0 || j >= kMaxElements) throw InvalidInput("relabelling target out of range");
    if (contains(out, j)) throw InvalidInput("relabelling is not a bijection");
    out |= bit(j);
  }
  return out;
}

}  // namespace detail

template <LinearizedMonoid M>
std::optional<std::pair<typename M::element, typename M::element>> coproduct(
    const typename M::element& x, Mask a1, Mask a2) {
  if ((a1 & a2) != 0 || (a1 | a2) != M::support(x)) {
    throw InvalidInput("(A1, A2) is not a decomposition of the ground set");
  }
  auto l = M::restrict(x, a1);
  if (!l) return std::nullopt;
  auto r = M::restrict(x, a2);
  if (!r) return std::nullopt;
  return std::make_pair(std::move(*l), std::move(*r));
}

// ---------------------------------------------------------------------------
// Linear orders

struct Orders {
  using element = LinearOrder;
  static constexpr bool commutative = false;
  static constexpr bool cocommutative = true;
  static std::string name() { return "l"; }

  static Mask support(const element& x) { return x.support(); }
  static element unit() { return {}; }

  static void validate(const element& x) {
    Mask seen = 0;
    for (int v : x.seq) {
      if (v < 0 || v >= kMaxElements || contains(seen, v)) throw InvalidInput("linear order repeats an element");
      seen |= bit(v);
    }
  }

  static element product(const element& a, const element& b) {
    detail::require_disjoint(a.support(), b.support());
    element out = a;
    out.seq.insert(out.seq.end(), b.seq.begin(), b.seq.end());
    return out;
  }

  static std::optional<element> restrict(const element& x, Mask part) { return restrict_order(x, part); }

  static element relabel(const element& x, const std::vector<int>& sigma) {
    detail::map_mask(x.support(), sigma);
    element out;
    out.seq.reserve(x.seq.size());
    for (int v : x.seq) out.seq.push_back(sigma[v]);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Set partitions

struct Partitions {
  using element = SetPartition;
  static constexpr bool commutative = true;
  static constexpr bool cocommutative = true;
  static std::string name() { return "pi"; }

  static Mask support(const element& x) { return x.ground(); }
  static element unit() { return {}; }

  static void validate(const element& x) {
    Mask seen = 0;
    for (Mask b : x.blocks) {
      if (b == 0 || (b & seen) != 0) throw InvalidInput("set partition blocks must be nonempty and disjoint");
      seen |= b;
    }
    if (canonical_partition(x.blocks) != x) throw InvalidInput("set partition is not in canonical order");
  }

  static element product(const element& a, const element& b) {
    detail::require_disjoint(a.ground(), b.ground());
    std::vector<Mask> blocks = a.blocks;
    blocks.insert(blocks.end(), b.blocks.begin(), b.blocks.end());
    return canonical_partition(std::move(blocks));
  }

  /// Defined only when `part` is a union of blocks.
  static std::optional<element> restrict(const element& x, Mask part) {
    element out;
    for (Mask b : x.blocks) {
      const Mask inside = b & part;
      if (inside == 0) continue;
      if (inside != b) return std::nullopt;
      out.blocks.push_back(b);
    }
    return out;
  }

  static element relabel(const element& x, const std::vector<int>& sigma) {
    detail::map_mask(x.ground(), sigma);
    std::vector<Mask> blocks;
    for (Mask b : x.blocks) blocks.push_back(detail::map_mask(b, sigma));
    return canonical_partition(std::move(blocks));
  }
};

// ---------------------------------------------------------------------------
// Graphs, hypergraphs, simplicial complexes, hyperforests

/// Vertex support plus a sorted list of (hyper)edges.
struct Hypergraph {
  Mask support = 0;
  std::vector<Mask> edges;

  auto operator<=>(const Hypergraph&) const = default;
};

enum class EdgeFamily { Graph, Hyper, Simplicial, Forest };

/// Depth-first search for a closed path through pairwise distinct hyperedges
/// whose consecutive vertices differ.
inline bool has_proper_cycle(const std::vector<Mask>& edges) {
  const int k = static_cast<int>(edges.size());
  if (k < 2) return false;
  if (k > 31) throw GuardExceeded("too many hyperedges for the proper-cycle search");
  Mask verts = 0;
  for (Mask e : edges) verts |= e;
  for (Mask vs = verts; vs != 0; vs &= vs - 1) {
    const int start = lowest_element(vs);
    std::unordered_set<std::uint64_t> seen;
    auto dfs = [&](auto&& self, int at, std::uint32_t used, int steps) -> bool {
      const std::uint64_t key = (std::uint64_t{used} << 6) | static_cast<std::uint64_t>(at);
      if (!seen.insert(key).second) return false;
      for (int e = 0; e < k; ++e) {
        if ((used >> e) & 1U) continue;
        if (!contains(edges[e], at)) continue;
        for (Mask ws = edges[e] & ~bit(at); ws != 0; ws &= ws - 1) {
          const int w = lowest_element(ws);
          if (w == start) {
            if (steps + 1 >= 2) return true;
            continue;
          }
          if (self(self, w, used | (1U << e), steps + 1)) return true;
        }
      }
      return false;
    };
    if (dfs(dfs, start, 0U, 0)) return true;
  }
  return false;
}

template <EdgeFamily Family>
struct EdgeMonoid {
  using element = Hypergraph;
  static constexpr bool commutative = true;
  static constexpr bool cocommutative = true;
  static constexpr EdgeFamily family = Family;

  static std::string name() {
    switch (Family) {
      case EdgeFamily::Graph: return "g";
      case EdgeFamily::Hyper: return "hg";
      case EdgeFamily::Simplicial: return "sc";
      case EdgeFamily::Forest: return "hf";
    }
    return "?";
  }

  static Mask support(const element& x) { return x.support; }
  static element unit() { return {}; }

  /// Canonicalizes the edge list and validates family membership.
  static element make(Mask support, std::vector<Mask> edges) {
    std::sort(edges.begin(), edges.end());
    element x{support, std::move(edges)};
    validate(x);
    return x;
  }

  static void validate(const element& x) {
    for (std::size_t i = 0; i < x.edges.size(); ++i) {
      const Mask e = x.edges[i];
      if (!is_subset(e, x.support)) throw InvalidInput("edge uses a vertex outside the ground set");
      if (Family == EdgeFamily::Graph && popcount(e) != 2) throw InvalidInput("graph edges must have exactly 2 vertices");
      if (popcount(e) < 2) throw InvalidInput("hyperedges must have at least 2 vertices");
      if (i > 0 && x.edges[i - 1] >= e) throw InvalidInput("edges must be sorted and distinct");
    }
    if constexpr (Family == EdgeFamily::Simplicial) {
      for (Mask e : x.edges) {
        bool ok = true;
        for_each_subset(e, [&](Mask sub) {
          if (ok && popcount(sub) >= 2 && !std::binary_search(x.edges.begin(), x.edges.end(), sub)) ok = false;
        });
        if (!ok) throw InvalidInput("simplicial complex is not closed under taking faces");
      }
    }
    if constexpr (Family == EdgeFamily::Forest) {
      if (has_proper_cycle(x.edges)) throw InvalidInput("hypergraph contains a proper cycle");
    }
  }

  static element product(const element& a, const element& b) {
    detail::require_disjoint(a.support, b.support);
    element out;
    out.support = a.support | b.support;
    out.edges.resize(a.edges.size() + b.edges.size());
    std::merge(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(), out.edges.begin());
    if constexpr (Family == EdgeFamily::Forest) {
      if (has_proper_cycle(out.edges)) throw InvalidInput("product leaves the hyperforest family");
    }
    return out;
  }

  /// Keeps the edges lying entirely inside `part`.
  static std::optional<element> restrict(const element& x, Mask part) {
    element out;
    out.support = x.support & part;
    for (Mask e : x.edges) {
      if (is_subset(e, part)) out.edges.push_back(e);
    }
    return out;
  }

  static element relabel(const element& x, const std::vector<int>& sigma) {
    element out;
    out.support = detail::map_mask(x.support, sigma);
    for (Mask e : x.edges) out.edges.push_back(detail::map_mask(e, sigma));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
  }
};

using Graphs = EdgeMonoid<EdgeFamily::Graph>;
using Hypergraphs = EdgeMonoid<EdgeFamily::Hyper>;
using SimplicialComplexes = EdgeMonoid<EdgeFamily::Simplicial>;
using Hyperforests = EdgeMonoid<EdgeFamily::Forest>;

template <class M>
inline constexpr bool is_edge_monoid = false;
template <EdgeFamily F>
inline constexpr bool is_edge_monoid<EdgeMonoid<F>> = true;

// ---------------------------------------------------------------------------
// Hadamard product

template <LinearizedMonoid M1, LinearizedMonoid M2>
struct Hadamard {
  using first_monoid = M1;
  using second_monoid = M2;
  using element = std::pair<typename M1::element, typename M2::element>;
  static constexpr bool commutative = M1::commutative && M2::commutative;
  static constexpr bool cocommutative = M1::cocommutative && M2::cocommutative;
  static std::string name() { return M1::name() + "x" + M2::name(); }

  static Mask support(const element& x) { return M1::support(x.first); }
  static element unit() { return {M1::unit(), M2::unit()}; }

  static void validate(const element& x) {
    M1::validate(x.first);
    M2::validate(x.second);
    if (M1::support(x.first) != M2::support(x.second)) throw InvalidInput("Hadamard components over different ground sets");
  }

  static element product(const element& a, const element& b) {
    return {M1::product(a.first, b.first), M2::product(a.second, b.second)};
  }

  static std::optional<element> restrict(const element& x, Mask part) {
    auto l = M1::restrict(x.first, part);
    if (!l) return std::nullopt;
    auto r = M2::restrict(x.second, part);
    if (!r) return std::nullopt;
    return element{std::move(*l), std::move(*r)};
  }

  static element relabel(const element& x, const std::vector<int>& sigma) {
    return {M1::relabel(x.first, sigma), M2::relabel(x.second, sigma)};
  }
};

template <LinearizedMonoid H>
using LxH = Hadamard<Orders, H>;

// ---------------------------------------------------------------------------
// Iterated structure maps

/// Restrictions of x to the parts of A, or nullopt when some step vanishes.
template <LinearizedMonoid M>
std::optional<std::vector<typename M::element>> delta_pieces(const typename M::element& x,
                                                             const std::vector<Mask>& parts) {
  std::vector<typename M::element> out;
  out.reserve(parts.size());
  for (Mask p : parts) {
    auto r = M::restrict(x, p);
    if (!r) return std::nullopt;
    out.push_back(std::move(*r));
  }
  return out;
}

template <LinearizedMonoid M>
typename M::element mu(const std::vector<typename M::element>& pieces) {
  if (pieces.empty()) return M::unit();
  typename M::element acc = pieces.front();
  for (std::size_t i = 1; i < pieces.size(); ++i) acc = M::product(acc, pieces[i]);
  return acc;
}

/// x_A without validating that A is a composition of the support of x.
template <LinearizedMonoid M>
std::optional<typename M::element> mu_delta_unchecked(const typename M::element& x,
                                                      const std::vector<Mask>& parts) {
  auto pieces = delta_pieces<M>(x, parts);
  if (!pieces) return std::nullopt;
  return mu<M>(*pieces);
}

template <LinearizedMonoid M>
std::optional<typename M::element> mu_delta(const typename M::element& x, const SetComposition& a) {
  require_composition(a, M::support(x));
  return mu_delta_unchecked<M>(x, a.parts);
}

template <LinearizedMonoid M>
FormalSum<typename M::element> mu_delta(const FormalSum<typename M::element>& s, const SetComposition& a) {
  return s.map_linear([&](const typename M::element& e) { return mu_delta<M>(e, a); });
}

/// Linear extension of Delta_{A1,A2}; terms are pairs of restrictions.
template <LinearizedMonoid M>
FormalSum<std::pair<typename M::element, typename M::element>> coproduct_linear(
    const FormalSum<typename M::element>& s, Mask a1, Mask a2) {
  return s.map_linear([&](const typename M::element& e) { return coproduct<M>(e, a1, a2); });
}

/// Relabels an element on {0..q-1} by adding `offset` to every index.
template <LinearizedMonoid M>
typename M::element shift(const typename M::element& x, int offset) {
  std::vector<int> sigma(kMaxElements, -1);
  const Mask s = M::support(x);
  for (Mask r = s; r != 0; r &= r - 1) {
    const int i = lowest_element(r);
    if (i + offset >= kMaxElements) throw InvalidInput("shift exceeds the maximum ground set size");
    sigma[i] = i + offset;
  }
  return M::relabel(x, sigma);
}

/// Product in the graded algebra K(M): x on [p], y on [q] shifted by p.
template <LinearizedMonoid M>
typename M::element graded_product(const typename M::element& x, const typename M::element& y) {
  return M::product(x, shift<M>(y, popcount(M::support(x))));
}

// ---------------------------------------------------------------------------
// Element generation

template <class M>
struct ElementGen;

template <>
struct ElementGen<Orders> {
  template <class Rng>
  static LinearOrder random(Rng& rng, int n) {
    LinearOrder o = identity_order(n);
    std::shuffle(o.seq.begin(), o.seq.end(), rng);
    return o;
  }
  static std::vector<LinearOrder> all(int n) {
    std::vector<LinearOrder> out;
    for_each_permutation(n, [&](const LinearOrder& o) { out.push_back(o); });
    return out;
  }
};

template <>
struct ElementGen<Partitions> {
  template <class Rng>
  static SetPartition random(Rng& rng, int n) {
    std::uniform_int_distribution<int> pick(0, std::max(0, n - 1));
    std::vector<Mask> blocks(n, 0);
    for (int i = 0; i < n; ++i) blocks[pick(rng)] |= bit(i);
    std::erase(blocks, Mask{0});
    return canonical_partition(std::move(blocks));
  }
  static std::vector<SetPartition> all(int n) {
    std::vector<SetPartition> out;
    for_each_set_partition(full_mask(n), [&](const std::vector<Mask>& b) { out.push_back(SetPartition{b}); });
    return out;
  }
};

namespace detail {

inline std::vector<Mask> candidate_edges(int n, bool graph_only) {
  std::vector<Mask> out;
  for (Mask e = 0; e <= full_mask(n); ++e) {
    const int k = popcount(e);
    if (graph_only ? k == 2 : k >= 2) out.push_back(e);
    if (e == full_mask(n)) break;
  }
  return out;
}

inline bool union_find_forest(const std::vector<Mask>& edges) {
  // Incidence graph is a forest iff each hyperedge joins |U| distinct components.
  std::vector<int> parent(kMaxElements);
  for (int i = 0; i < kMaxElements; ++i) parent[i] = i;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Mask e : edges) {
    std::vector<int> roots;
    for (int v : elements_of(e)) roots.push_back(find(v));
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) return false;
    for (int r : roots) parent[r] = roots.front();
  }
  return true;
}

inline std::vector<Mask> downward_closure(const std::vector<Mask>& facets) {
  std::vector<Mask> out;
  for (Mask f : facets) {
    for_each_subset(f, [&](Mask s) {
      if (popcount(s) >= 2) out.push_back(s);
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

template <EdgeFamily F>
struct ElementGen<EdgeMonoid<F>> {
  using M = EdgeMonoid<F>;

  /// Random member on {0..n-1} with at most `max_edges` generating edges.
  template <class Rng>
  static Hypergraph random(Rng& rng, int n, int max_edges = 4) {
    const Mask all = full_mask(n);
    auto cands = detail::candidate_edges(n, F == EdgeFamily::Graph);
    if (cands.empty()) return Hypergraph{all, {}};
    if constexpr (F == EdgeFamily::Graph) {
      std::bernoulli_distribution coin(0.5);
      std::vector<Mask> edges;
      for (Mask e : cands) {
        if (coin(rng)) edges.push_back(e);
      }
      return M::make(all, std::move(edges));
    } else {
      std::uniform_int_distribution<int> count(0, max_edges);
      std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
      const int k = count(rng);
      std::vector<Mask> edges;
      for (int i = 0; i < k; ++i) {
        const Mask e = cands[pick(rng)];
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
        if constexpr (F == EdgeFamily::Forest) {
          auto trial = edges;
          trial.push_back(e);
          if (!detail::union_find_forest(trial)) continue;
        }
        edges.push_back(e);
      }
      if constexpr (F == EdgeFamily::Simplicial) edges = detail::downward_closure(edges);
      return M::make(all, std::move(edges));
    }
  }

  /// Every member on {0..n-1}; exponential in the number of candidate edges.
  static std::vector<Hypergraph> all(int n) {
    auto cands = detail::candidate_edges(n, F == EdgeFamily::Graph);
    if (cands.size() > 20) throw GuardExceeded("too many candidate edges for exhaustive listing");
    std::vector<Hypergraph> out;
    for (std::uint32_t pick = 0; pick < (1U << cands.size()); ++pick) {
      std::vector<Mask> edges;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        if ((pick >> i) & 1U) edges.push_back(cands[i]);
      }
      std::sort(edges.begin(), edges.end());
      Hypergraph h{full_mask(n), std::move(edges)};
      try {
        M::validate(h);
      } catch (const InvalidInput&) {
        continue;
      }
      out.push_back(std::move(h));
    }
    return out;
  }
};

template <class M1, class M2>
struct ElementGen<Hadamard<M1, M2>> {
  template <class Rng>
  static typename Hadamard<M1, M2>::element random(Rng& rng, int n) {
    return {ElementGen<M1>::random(rng, n), ElementGen<M2>::random(rng, n)};
  }
  static std::vector<typename Hadamard<M1, M2>::element> all(int n) {
    std::vector<typename Hadamard<M1, M2>::element> out;
    auto a = ElementGen<M1>::all(n);
    auto b = ElementGen<M2>::all(n);
    for (const auto& x : a) {
      for (const auto& y : b) out.emplace_back(x, y);
    }
    return out;
  }
};

}  // namespace hopf
