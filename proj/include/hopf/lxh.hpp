#pragma once

// Cancellation-free antipode of L x H: the minimal composition Lambda, the
// conflict graph on its parts, the sign-reversing involution phi and the
// resulting coefficient in {-1, 0, +1}. Also the antipode of K(L).

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf/compositions.hpp"
#include "hopf/formal_sum.hpp"
#include "hopf/monoids.hpp"
#include "hopf/takeuchi.hpp"

namespace hopf {

/// Composition of {1..m} into consecutive intervals. Bit i of `cuts` (0-based)
/// separates vertex i+1 from vertex i+2.
struct IntervalSplit {
  int m = 0;
  Mask cuts = 0;

  int length() const noexcept { return popcount(cuts) + 1; }

  /// Blocks as inclusive 1-based ranges.
  std::vector<std::pair<int, int>> blocks() const {
    std::vector<std::pair<int, int>> out;
    int lo = 1;
    for (int v = 1; v < m; ++v) {
      if (contains(cuts, v - 1)) {
        out.emplace_back(lo, v);
        lo = v + 1;
      }
    }
    if (m > 0) out.emplace_back(lo, m);
    return out;
  }

  static IntervalSplit singletons(int m) { return {m, full_mask(m - 1)}; }
  static IntervalSplit whole(int m) { return {m, 0}; }

  static IntervalSplit from_blocks(const std::vector<std::pair<int, int>>& blocks) {
    IntervalSplit s;
    s.m = blocks.empty() ? 0 : blocks.back().second;
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) s.cuts |= bit(blocks[i].second - 1);
    return s;
  }

  std::string to_string() const {
    std::string out;
    for (auto [lo, hi] : blocks()) {
      if (!out.empty()) out += ",";
      for (int v = lo; v <= hi; ++v) {
        if (v != lo && m > 9) out += " ";
        out += std::to_string(v);
      }
    }
    return out;
  }

  auto operator<=>(const IntervalSplit&) const = default;
};

/// Arc diagram on {1..m} in which no arc contains another.
struct NonNestingGraph {
  int m = 1;
  std::vector<std::pair<int, int>> arcs;  // sorted, 1-based, a < b

  static NonNestingGraph make(int m, std::vector<std::pair<int, int>> arcs) {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    NonNestingGraph g{m, std::move(arcs)};
    g.validate();
    return g;
  }

  bool has_arc(int a, int b) const { return std::binary_search(arcs.begin(), arcs.end(), std::make_pair(a, b)); }

  bool is_non_nested() const {
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      for (std::size_t j = 0; j < arcs.size(); ++j) {
        if (i == j) continue;
        auto [a, b] = arcs[i];
        auto [c, d] = arcs[j];
        if (a <= c && c <= b && !(a < c && c <= b && b < d)) return false;
      }
    }
    return true;
  }

  void validate() const {
    if (m < 1 || m > kMaxElements) throw InvalidInput("graph must have between 1 and 32 vertices");
    for (auto [a, b] : arcs) {
      if (a < 1 || b > m || a >= b) throw InvalidInput("arcs must satisfy 1 <= a < b <= m");
    }
    if (!is_non_nested()) throw InvalidInput("arc set is nested");
  }

  bool operator==(const NonNestingGraph&) const = default;
};

/// True iff no block of `a` contains both ends of an arc.
inline bool split_avoids_arcs(const NonNestingGraph& g, const IntervalSplit& a) {
  for (auto [lo, hi] : a.blocks()) {
    for (auto [x, y] : g.arcs) {
      if (lo <= x && y <= hi) return false;
    }
  }
  return true;
}

inline int c_graph_bruteforce(const NonNestingGraph& g) {
  check_guard(g.m, "conflict graph");
  int total = 0;
  for (Mask cuts = 0; cuts < (Mask{1} << (g.m - 1)); ++cuts) {
    IntervalSplit a{g.m, cuts};
    if (split_avoids_arcs(g, a)) total += (a.length() % 2 == 0) ? 1 : -1;
  }
  return total;
}

/// One step of the involution phi on C(G): the i-merge or i-split at the
/// smallest applicable i, or A itself when none applies.
inline IntervalSplit phi_step(const NonNestingGraph& g, const IntervalSplit& a) {
  if (a.m != g.m) throw InvalidInput("split and graph have different sizes");
  if (!split_avoids_arcs(g, a)) throw InvalidInput("split is not a member of C(G)");
  const auto blocks = a.blocks();
  std::vector<int> block_of(g.m + 1);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    for (int v = blocks[j].first; v <= blocks[j].second; ++v) block_of[v] = static_cast<int>(j);
  }
  for (int i = 1; i < g.m; ++i) {
    const int j = block_of[i];
    const auto [lo, hi] = blocks[j];
    if (lo == i && hi == i) {
      const auto [nlo, nhi] = blocks[j + 1];
      bool blocked = false;
      for (int r = nlo; r <= nhi && !blocked; ++r) blocked = g.has_arc(i, r);
      if (!blocked) return {a.m, a.cuts & ~bit(i - 1)};
    } else if (lo == i) {
      const bool first = (j == 0);
      const bool prev_not_singleton = !first && !(blocks[j - 1].first == i - 1 && blocks[j - 1].second == i - 1);
      if (first || prev_not_singleton || g.has_arc(i - 1, i)) return {a.m, a.cuts | bit(i - 1)};
    }
  }
  return a;
}

/// Fixed points of phi found by scanning all of C(G).
inline std::vector<IntervalSplit> phi_fixed_points(const NonNestingGraph& g) {
  check_guard(g.m, "conflict graph");
  std::vector<IntervalSplit> out;
  for (Mask cuts = 0; cuts < (Mask{1} << (g.m - 1)); ++cuts) {
    IntervalSplit a{g.m, cuts};
    if (split_avoids_arcs(g, a) && phi_step(g, a) == a) out.push_back(a);
  }
  return out;
}

namespace detail {

// Coefficient of the subgraph induced on [lo, hi].
inline int c_fast_range(const std::vector<std::pair<int, int>>& all_arcs, int lo, int hi) {
  if (lo == hi) return -1;
  std::vector<std::pair<int, int>> arcs;
  for (auto [a, b] : all_arcs) {
    if (lo <= a && b <= hi) arcs.push_back({a, b});
  }
  for (int r = lo; r < hi; ++r) {
    bool crossed = false;
    for (auto [a, b] : arcs) {
      if (a <= r && r < b) {
        crossed = true;
        break;
      }
    }
    if (!crossed) return 0;
  }
  for (auto [a, b] : arcs) {
    if (b == a + 1) return c_fast_range(all_arcs, lo, a) * c_fast_range(all_arcs, b, hi);
  }
  // Connected, no short arcs. Largest left end among arcs ending by e.
  auto last_left = [&](int e) {
    int best = 0;
    for (auto [a, b] : arcs) {
      if (b <= e) best = std::max(best, a);
    }
    return best;
  };
  // Walk singleton blocks right to left until the first block {lo} is reached.
  auto chain_reaches_start = [&](int s) {
    while (s != 0) {
      if (s == lo) return true;
      s = last_left(s - 1);
    }
    return false;
  };
  const bool even = chain_reaches_start(last_left(hi));
  const bool odd = chain_reaches_start(last_left(hi - 1));
  return (even ? 1 : 0) - (odd ? 1 : 0);
}

}  // namespace detail

/// c(G) through the disconnection and short-arc reductions and the
/// right-to-left search for the even and odd fixed points of phi.
inline int c_graph_fast(const NonNestingGraph& g) {
  g.validate();
  return detail::c_fast_range(g.arcs, 1, g.m);
}

/// Every non-nested arc set on {1..m}.
inline std::vector<NonNestingGraph> enumerate_non_nesting_graphs(int m) {
  std::vector<NonNestingGraph> out;
  std::vector<std::pair<int, int>> acc;
  auto rec = [&](auto&& self, int min_a, int min_b) -> void {
    out.push_back(NonNestingGraph{m, acc});
    for (int a = min_a; a <= m; ++a) {
      for (int b = std::max(a + 1, min_b); b <= m; ++b) {
        acc.push_back({a, b});
        self(self, a + 1, b + 1);
        acc.pop_back();
      }
    }
  };
  rec(rec, 1, 2);
  return out;
}

// ---------------------------------------------------------------------------
// L x H instances

namespace detail {

inline std::vector<Mask> split_parts(const LinearOrder& beta, Mask cuts) {
  std::vector<Mask> parts;
  Mask block = 0;
  for (int i = 0; i < beta.size(); ++i) {
    block |= bit(beta.seq[i]);
    if (i + 1 == beta.size() || contains(cuts, i)) {
      parts.push_back(block);
      block = 0;
    }
  }
  return parts;
}

}  // namespace detail

/// Finest A with (alpha_A, x_A) = (beta, y), or nullopt when no A qualifies.
template <LinearizedMonoid H>
std::optional<SetComposition> minimal_lambda(const LinearOrder& alpha, const typename H::element& x,
                                             const LinearOrder& beta, const typename H::element& y) {
  using P = LxH<H>;
  const typename P::element source{alpha, x};
  const typename P::element target{beta, y};
  P::validate(source);
  P::validate(target);
  if (P::support(source) != P::support(target)) throw InvalidInput("source and target over different ground sets");
  const int n = beta.size();
  if (n == 0) return SetComposition{};
  check_guard(n);
  std::vector<Mask> valid;
  for (Mask cuts = 0; cuts < (Mask{1} << (n - 1)); ++cuts) {
    auto img = mu_delta_unchecked<P>(source, detail::split_parts(beta, cuts));
    if (img && *img == target) valid.push_back(cuts);
  }
  if (valid.empty()) return std::nullopt;
  Mask best = valid.front();
  for (Mask c : valid) {
    if (popcount(c) > popcount(best)) best = c;
  }
  for (Mask c : valid) {
    ensure(is_subset(c, best), "no global minimum in the coefficient set");
  }
  return SetComposition{detail::split_parts(beta, best)};
}

/// Arcs (a, b) on the parts of Lambda: merging parts a..b leaves the target
/// while every merge of a..r and r..b (a < r < b) stays on it.
template <LinearizedMonoid H>
NonNestingGraph conflict_graph(const LinearOrder& alpha, const typename H::element& x, const LinearOrder& beta,
                               const typename H::element& y, const SetComposition& lambda) {
  using P = LxH<H>;
  const typename P::element source{alpha, x};
  const typename P::element target{beta, y};
  require_composition(lambda, P::support(source));
  const int m = lambda.length();
  if (m == 0) throw InvalidInput("empty Lambda");
  auto merged_valid = [&](int a, int b) {
    std::vector<Mask> parts;
    for (int i = 1; i < a; ++i) parts.push_back(lambda.parts[i - 1]);
    Mask block = 0;
    for (int i = a; i <= b; ++i) block |= lambda.parts[i - 1];
    parts.push_back(block);
    for (int i = b + 1; i <= m; ++i) parts.push_back(lambda.parts[i - 1]);
    auto img = mu_delta_unchecked<P>(source, parts);
    return img.has_value() && *img == target;
  };
  if (!merged_valid(1, 1)) throw InvalidInput("Lambda is inconsistent with the given elements");
  std::vector<std::vector<char>> valid(m + 1, std::vector<char>(m + 1, 1));
  for (int a = 1; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) valid[a][b] = merged_valid(a, b) ? 1 : 0;
  }
  std::vector<std::pair<int, int>> arcs;
  for (int a = 1; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      if (valid[a][b]) continue;
      bool inner_ok = true;
      for (int r = a + 1; r < b && inner_ok; ++r) inner_ok = valid[a][r] && valid[r][b];
      if (inner_ok) arcs.push_back({a, b});
    }
  }
  NonNestingGraph g{m, std::move(arcs)};
  ensure(g.is_non_nested(), "constructed conflict graph is nested");
  return g;
}

/// Coefficient of (beta, y) in S(alpha, x) via Lambda and the conflict graph.
template <LinearizedMonoid H>
int lxh_coefficient(const LinearOrder& alpha, const typename H::element& x, const LinearOrder& beta,
                    const typename H::element& y) {
  auto lambda = minimal_lambda<H>(alpha, x, beta, y);
  if (!lambda) return 0;
  return c_graph_fast(conflict_graph<H>(alpha, x, beta, y, *lambda));
}

/// S(alpha, x) in L x H with every coefficient read off the conflict graph.
/// The support is discovered in one sweep over compositions, and each
/// bucket's signed count is checked against the graph coefficient.
template <LinearizedMonoid H>
FormalSum<typename LxH<H>::element> antipode_lxh(const LinearOrder& alpha, const typename H::element& x) {
  using P = LxH<H>;
  using E = typename P::element;
  const E source{alpha, x};
  P::validate(source);
  const Mask ground = P::support(source);
  check_guard(popcount(ground));
  if (ground == 0) return FormalSum<E>(P::unit());
  std::map<E, std::int64_t> buckets;
  for_each_set_composition(ground, [&](const std::vector<Mask>& parts) {
    auto img = mu_delta_unchecked<P>(source, parts);
    if (!img) return;
    buckets[*img] += (parts.size() % 2 == 0) ? 1 : -1;
  });
  FormalSum<E> out;
  for (const auto& [target, signed_count] : buckets) {
    const int c = lxh_coefficient<H>(alpha, x, target.first, target.second);
    ensure(c == signed_count, "graph coefficient disagrees with the signed count");
    out.add(target, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Antipode of K(L)

/// Number of beta satisfying the three block conditions for Lambda equal to
/// the join of beta and beta o gamma.
inline std::int64_t d_count(const LinearOrder& alpha, const LinearOrder& gamma) {
  const int n = alpha.size();
  if (gamma.size() != n || !is_permutation_of(alpha, full_mask(n)) || !is_permutation_of(gamma, full_mask(n))) {
    throw InvalidInput("d_count needs two permutations of the same size");
  }
  const std::vector<int> pos = inverse_permutation(alpha.seq);
  std::int64_t count = 0;
  for_each_permutation(n, [&](const LinearOrder& beta) {
    LinearOrder bg;
    bg.seq.resize(n);
    for (int i = 0; i < n; ++i) bg.seq[i] = beta.seq[gamma.seq[i]];
    const SetComposition lambda = join_linear_orders(beta, bg);
    for (Mask block : lambda.parts) {
      int last = -1;
      for (int v : beta.seq) {
        if (!contains(block, v)) continue;
        if (v < last) return;
        last = v;
      }
      last = -1;
      for (int v : bg.seq) {
        if (!contains(block, v)) continue;
        if (pos[v] < last) return;
        last = pos[v];
      }
    }
    for (int i = 0; i + 1 < lambda.length(); ++i) {
      const Mask l = lambda.parts[i], r = lambda.parts[i + 1];
      int max_pos_l = -1, min_pos_r = n;
      for (int v : elements_of(l)) max_pos_l = std::max(max_pos_l, pos[v]);
      for (int v : elements_of(r)) min_pos_r = std::min(min_pos_r, pos[v]);
      if (!(highest_element(l) > lowest_element(r) || max_pos_l > min_pos_r)) return;
    }
    ++count;
  });
  return count;
}

inline FormalSum<LinearOrder> pr_antipode(const LinearOrder& alpha) {
  const int n = alpha.size();
  if (!is_permutation_of(alpha, full_mask(n))) throw InvalidInput("expected a permutation of {1..n}");
  check_guard(n, "permutation size");
  FormalSum<LinearOrder> out;
  if (n == 0) return FormalSum<LinearOrder>(LinearOrder{});
  const LinearOrder eps = identity_order(n);
  for_each_permutation(n, [&](const LinearOrder& gamma) {
    const std::int64_t d = d_count(alpha, gamma);
    if (d == 0) return;
    const int m = join_linear_orders(eps, gamma).length();
    out.add(gamma, (m % 2 == 0) ? d : -d);
  });
  return out;
}

}  // namespace hopf
