#pragma once

// Set compositions, set partitions, linear orders and the few lattice
// operations on them that the antipode formulas need.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <type_traits>
#include <vector>

#include "hopf/core.hpp"

namespace hopf {

/// Ordered sequence of nonempty, pairwise disjoint blocks.
struct SetComposition {
  std::vector<Mask> parts;

  int length() const noexcept { return static_cast<int>(parts.size()); }
  Mask ground() const noexcept {
    Mask g = 0;
    for (Mask p : parts) g |= p;
    return g;
  }
  auto operator<=>(const SetComposition&) const = default;
};

/// Unordered blocks, stored sorted by minimum element.
struct SetPartition {
  std::vector<Mask> blocks;

  int size() const noexcept { return static_cast<int>(blocks.size()); }
  Mask ground() const noexcept {
    Mask g = 0;
    for (Mask b : blocks) g |= b;
    return g;
  }
  auto operator<=>(const SetPartition&) const = default;
};

/// Sequence of positive integers.
using IntComposition = std::vector<int>;

/// Sequence of distinct element indices.
struct LinearOrder {
  std::vector<int> seq;

  int size() const noexcept { return static_cast<int>(seq.size()); }
  Mask support() const noexcept {
    Mask m = 0;
    for (int v : seq) m |= bit(v);
    return m;
  }
  auto operator<=>(const LinearOrder&) const = default;
};

inline bool is_valid_composition(const SetComposition& a, Mask ground) {
  Mask seen = 0;
  for (Mask p : a.parts) {
    if (p == 0 || (p & seen) != 0) return false;
    seen |= p;
  }
  return seen == ground;
}

inline void require_composition(const SetComposition& a, Mask ground) {
  if (!is_valid_composition(a, ground)) {
    throw InvalidInput("not a set composition of the ground set");
  }
}

inline SetPartition canonical_partition(std::vector<Mask> blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](Mask a, Mask b) { return lowest_element(a) < lowest_element(b); });
  return SetPartition{std::move(blocks)};
}

inline SetPartition underlying_partition(const SetComposition& a) {
  return canonical_partition(a.parts);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

template <class F>
bool compositions_rec(Mask rest, int parts_left, std::vector<Mask>& acc, F& f) {
  if (parts_left == 0) {
    if (rest != 0) return true;
    return f(static_cast<const std::vector<Mask>&>(acc));
  }
  if (popcount(rest) < parts_left) return true;
  // Nonempty subsets of rest in increasing numeric order.
  Mask sub = 0;
  do {
    sub = (sub - rest) & rest;
    if (sub == 0) break;
    if (popcount(rest & ~sub) < parts_left - 1) continue;
    acc.push_back(sub);
    bool go = compositions_rec(rest & ~sub, parts_left - 1, acc, f);
    acc.pop_back();
    if (!go) return false;
  } while (sub != rest);
  return true;
}

template <class F>
bool partitions_rec(Mask rest, std::vector<Mask>& acc, F& f) {
  if (rest == 0) return f(static_cast<const std::vector<Mask>&>(acc));
  const Mask low = bit(lowest_element(rest));
  const Mask others = rest & ~low;
  bool go = true;
  for_each_subset(others, [&](Mask sub) {
    if (!go) return;
    acc.push_back(low | sub);
    go = partitions_rec(rest & ~(low | sub), acc, f);
    acc.pop_back();
  });
  return go;
}

template <class F>
bool call_continue(F& f, const std::vector<Mask>& parts) {
  if constexpr (std::is_same_v<decltype(f(parts)), bool>) {
    return f(parts);
  } else {
    f(parts);
    return true;
  }
}

}  // namespace detail

/// Streams every set composition of `ground`, ordered by length and then
/// lexicographically by part masks. `f` receives the parts vector; it may
/// return false to stop early.
template <class F>
void for_each_set_composition(Mask ground, F&& f) {
  const int n = popcount(ground);
  check_guard(n);
  if (n == 0) return;
  std::vector<Mask> acc;
  acc.reserve(n);
  auto wrapped = [&](const std::vector<Mask>& parts) { return detail::call_continue(f, parts); };
  for (int k = 1; k <= n; ++k) {
    if (!detail::compositions_rec(ground, k, acc, wrapped)) return;
  }
}

/// Compositions of `ground` with exactly k parts, in lexicographic order.
template <class F>
void for_each_set_composition_of_length(Mask ground, int k, F&& f) {
  check_guard(popcount(ground));
  std::vector<Mask> acc;
  auto wrapped = [&](const std::vector<Mask>& parts) { return detail::call_continue(f, parts); };
  detail::compositions_rec(ground, k, acc, wrapped);
}

inline std::vector<SetComposition> enumerate_set_compositions(const GroundSet& ground) {
  if (ground.size() < 1) throw InvalidInput("ground set must be nonempty");
  std::vector<SetComposition> out;
  for_each_set_composition(ground.mask(), [&](const std::vector<Mask>& parts) {
    out.push_back(SetComposition{parts});
  });
  return out;
}

/// Streams the set partitions of `ground`, blocks sorted by minimum.
template <class F>
void for_each_set_partition(Mask ground, F&& f) {
  check_guard(popcount(ground));
  std::vector<Mask> acc;
  auto wrapped = [&](const std::vector<Mask>& blocks) { return detail::call_continue(f, blocks); };
  detail::partitions_rec(ground, acc, wrapped);
}

/// Compositions of `ground` whose parts have the prescribed sizes.
template <class F>
void for_each_composition_of_type(Mask ground, const IntComposition& type, F&& f) {
  std::vector<Mask> acc;
  auto rec = [&](auto&& self, Mask rest, std::size_t idx) -> void {
    if (idx == type.size()) {
      if (rest == 0) f(static_cast<const std::vector<Mask>&>(acc));
      return;
    }
    const int want = type[idx];
    for_each_subset(rest, [&](Mask sub) {
      if (popcount(sub) != want) return;
      acc.push_back(sub);
      self(self, rest & ~sub, idx + 1);
      acc.pop_back();
    });
  };
  int weight = 0;
  for (int p : type) {
    if (p < 1) throw InvalidInput("integer composition parts must be positive");
    weight += p;
  }
  if (weight != popcount(ground)) return;
  check_guard(popcount(ground));
  rec(rec, ground, 0);
}

// ---------------------------------------------------------------------------
// Order relations

/// True iff every part of `b` is a union of consecutive parts of `a`.
inline bool refines(const SetComposition& a, const SetComposition& b) {
  if (a.ground() != b.ground()) throw InvalidInput("compositions over different ground sets");
  std::size_t i = 0;
  for (Mask target : b.parts) {
    Mask acc = 0;
    while (acc != target) {
      if (i >= a.parts.size()) return false;
      acc |= a.parts[i++];
      if (!is_subset(acc, target)) return false;
    }
  }
  return i == a.parts.size();
}

inline IntComposition composition_type(const SetComposition& a) {
  IntComposition t;
  t.reserve(a.parts.size());
  for (Mask p : a.parts) t.push_back(popcount(p));
  return t;
}

/// Finest composition coarsening both singleton splits: a cut after position
/// i whenever the two length-i prefixes agree as sets. Blocks follow `beta`.
inline SetComposition join_linear_orders(const LinearOrder& beta, const LinearOrder& other) {
  if (beta.size() != other.size() || beta.support() != other.support()) {
    throw InvalidInput("linear orders over different ground sets");
  }
  SetComposition out;
  Mask pa = 0, pb = 0, block = 0;
  for (int i = 0; i < beta.size(); ++i) {
    pa |= bit(beta.seq[i]);
    pb |= bit(other.seq[i]);
    block |= bit(beta.seq[i]);
    if (pa == pb) {
      out.parts.push_back(block);
      block = 0;
    }
  }
  return out;
}

/// Relative-order relabelling onto 0..k-1.
inline LinearOrder standardize(const std::vector<int>& seq) {
  std::vector<int> idx(seq.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return seq[a] < seq[b]; });
  LinearOrder out;
  out.seq.assign(seq.size(), 0);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (r > 0 && seq[idx[r]] == seq[idx[r - 1]]) throw InvalidInput("standardize needs distinct entries");
    out.seq[idx[r]] = static_cast<int>(r);
  }
  return out;
}

inline LinearOrder identity_order(int n) {
  LinearOrder o;
  o.seq.resize(n);
  std::iota(o.seq.begin(), o.seq.end(), 0);
  return o;
}

inline bool is_permutation_of(const LinearOrder& o, Mask ground) {
  Mask seen = 0;
  for (int v : o.seq) {
    if (v < 0 || v >= kMaxElements || contains(seen, v)) return false;
    seen |= bit(v);
  }
  return seen == ground;
}

/// Subsequence of `o` consisting of the elements of `a`.
inline LinearOrder restrict_order(const LinearOrder& o, Mask a) {
  LinearOrder out;
  for (int v : o.seq) {
    if (contains(a, v)) out.seq.push_back(v);
  }
  return out;
}

/// Inverse of a permutation of 0..n-1 given as a sequence.
inline std::vector<int> inverse_permutation(const std::vector<int>& p) {
  std::vector<int> inv(p.size(), -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= static_cast<int>(p.size()) || inv[p[i]] != -1) {
      throw InvalidInput("not a permutation");
    }
    inv[p[i]] = static_cast<int>(i);
  }
  return inv;
}

/// Calls f(order) for every permutation of 0..n-1 in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f) {
  check_guard(n, "permutation size");
  LinearOrder o = identity_order(n);
  do {
    f(static_cast<const LinearOrder&>(o));
  } while (std::next_permutation(o.seq.begin(), o.seq.end()));
}

inline std::int64_t ordered_bell(int n) {
  std::vector<std::int64_t> a(n + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::int64_t binom = 1;
    for (int k = 1; k <= m; ++k) {
      binom = binom * (m - k + 1) / k;
      a[m] += binom * a[m - k];
    }
  }
  return a[n];
}

}  // namespace hopf
