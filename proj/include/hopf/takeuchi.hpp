#pragma once

// Antipode by direct alternating summation over all set compositions, and
// the antipode-axiom residual used to validate any candidate antipode.

#include <algorithm>
#include <mutex>
#include <thread>
#include <vector>

#include "hopf/compositions.hpp"
#include "hopf/formal_sum.hpp"
#include "hopf/monoids.hpp"

namespace hopf {

template <LinearizedMonoid M>
FormalSum<typename M::element> takeuchi_antipode(const typename M::element& x, int jobs = 1) {
  using E = typename M::element;
  const Mask ground = M::support(x);
  const int n = popcount(ground);
  check_guard(n);
  if (n == 0) return FormalSum<E>(M::unit());

  auto accumulate_first = [&](Mask first, FormalSum<E>& acc) {
    auto head = M::restrict(x, first);
    if (!head) return;
    const Mask rest = ground & ~first;
    if (rest == 0) {
      acc.add(*head, -1);
      return;
    }
    for_each_set_composition(rest, [&](const std::vector<Mask>& parts) {
      auto tail = mu_delta_unchecked<M>(x, parts);
      if (!tail) return;
      const int len = 1 + static_cast<int>(parts.size());
      acc.add(M::product(*head, *tail), (len % 2 == 0) ? 1 : -1);
    });
  };

  std::vector<Mask> firsts;
  for_each_subset(ground, [&](Mask s) {
    if (s != 0) firsts.push_back(s);
  });

  FormalSum<E> total;
  if (jobs <= 1) {
    for (Mask f : firsts) accumulate_first(f, total);
    return total;
  }
  std::mutex merge;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      FormalSum<E> local;
      for (std::size_t i = t; i < firsts.size(); i += jobs) accumulate_first(firsts[i], local);
      std::lock_guard lock(merge);
      total.add(local);
    });
  }
  for (auto& th : pool) th.join();
  return total;
}

template <LinearizedMonoid M>
FormalSum<typename M::element> takeuchi_antipode(const FormalSum<typename M::element>& s, int jobs = 1) {
  FormalSum<typename M::element> out;
  for (const auto& [e, c] : s) out.add(takeuchi_antipode<M>(e, jobs), c);
  return out;
}

/// Sum over (A1, A2) with empty parts allowed of mu(S(x|A1) (x) x|A2), where
/// `antipode_of` supplies S on each restriction. Empty iff the axiom holds.
template <LinearizedMonoid M, class F>
FormalSum<typename M::element> antipode_axiom_residual(const typename M::element& x, F&& antipode_of) {
  using E = typename M::element;
  const Mask ground = M::support(x);
  check_guard(popcount(ground));
  FormalSum<E> out;
  for_each_subset(ground, [&](Mask a1) {
    auto cp = coproduct<M>(x, a1, ground & ~a1);
    if (!cp) return;
    const FormalSum<E> s = antipode_of(cp->first);
    for (const auto& [e, c] : s) {
      if (M::support(e) != a1) throw InvalidInput("antipode term over the wrong ground set");
      out.add(M::product(e, cp->second), c);
    }
  });
  return out;
}

/// Axiom residual for a candidate S of x itself; lower degrees use Takeuchi.
template <LinearizedMonoid M>
FormalSum<typename M::element> antipode_axiom_check(const typename M::element& x,
                                                    const FormalSum<typename M::element>& s) {
  const Mask ground = M::support(x);
  for (const auto& term : s) {
    if (M::support(term.first) != ground) throw InvalidInput("candidate antipode is over the wrong ground set");
  }
  return antipode_axiom_residual<M>(x, [&](const typename M::element& piece) {
    if (M::support(piece) == ground) return s;
    return takeuchi_antipode<M>(piece);
  });
}

/// (beta, y) on [n] to H[beta^{-1}](y): the relabelling sending beta_i to i.
template <LinearizedMonoid H>
typename H::element collapse_pair(const LinearOrder& beta, const typename H::element& y) {
  std::vector<int> sigma(beta.size());
  for (int i = 0; i < beta.size(); ++i) sigma[beta.seq[i]] = i;
  return H::relabel(y, sigma);
}

/// Antipode in the graded algebra K(H) for x on {0..n-1}.
template <LinearizedMonoid H>
FormalSum<typename H::element> kh_antipode_takeuchi(const typename H::element& x, int jobs = 1) {
  const int n = popcount(H::support(x));
  if (H::support(x) != full_mask(n)) throw InvalidInput("K(H) elements must live on {1..n}");
  auto lifted = takeuchi_antipode<LxH<H>>({identity_order(n), x}, jobs);
  FormalSum<typename H::element> out;
  for (const auto& [pair, c] : lifted) out.add(collapse_pair<H>(pair.first, pair.second), c);
  return out;
}

/// Relabels x so that its support becomes {0..k-1}, keeping the order of labels.
template <LinearizedMonoid H>
typename H::element standardize_element(const typename H::element& x) {
  std::vector<int> sigma(kMaxElements, -1);
  int next = 0;
  for (int i : elements_of(H::support(x))) sigma[i] = next++;
  return H::relabel(x, sigma);
}

/// Axiom residual in K(H): sum over subsets S of [n] of
/// S(st(x|S)) . st(x|complement) with the graded product. Empty iff it holds.
template <LinearizedMonoid H>
FormalSum<typename H::element> kh_antipode_axiom_check(const typename H::element& x,
                                                       const FormalSum<typename H::element>& s) {
  using E = typename H::element;
  const Mask ground = H::support(x);
  if (ground != full_mask(popcount(ground))) throw InvalidInput("K(H) elements must live on {1..n}");
  FormalSum<E> out;
  for_each_subset(ground, [&](Mask a1) {
    auto cp = coproduct<H>(x, a1, ground & ~a1);
    if (!cp) return;
    const E left = standardize_element<H>(cp->first);
    const E right = standardize_element<H>(cp->second);
    const FormalSum<E> sl = a1 == ground ? s : (a1 == 0 ? FormalSum<E>(H::unit()) : kh_antipode_takeuchi<H>(left));
    for (const auto& [e, c] : sl) out.add(graded_product<H>(e, right), c);
  });
  return out;
}

}  // namespace hopf
