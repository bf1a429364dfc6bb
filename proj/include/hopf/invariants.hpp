#pragma once

// Characters, the morphism into quasisymmetric functions (monomial
// coordinates), chromatic polynomials in the binomial basis and the
// identities obtained by evaluating them at t = -1.

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hopf/cocommutative.hpp"
#include "hopf/compositions.hpp"
#include "hopf/formal_sum.hpp"
#include "hopf/lxh.hpp"
#include "hopf/monoids.hpp"

namespace hopf {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Multiplicative 0/1 indicator on basis elements.
template <LinearizedMonoid M>
class Character {
 public:
  using element = typename M::element;
  using Predicate = std::function<bool(const element&)>;

  /// Checks multiplicativity with respect to the graded product on 100
  /// random pairs in each degree up to 5.
  Character(std::string name, Predicate pred, unsigned seed = 7) : name_(std::move(name)), pred_(std::move(pred)) {
    if (!(*this)(M::unit())) throw InvalidInput("character '" + name_ + "' must be 1 on the unit");
    std::mt19937 rng(seed);
    for (int d = 1; d <= 5; ++d) {
      std::uniform_int_distribution<int> split(0, d);
      for (int trial = 0; trial < 100; ++trial) {
        const int p = split(rng);
        const element a = ElementGen<M>::random(rng, p);
        const element b = ElementGen<M>::random(rng, d - p);
        if ((*this)(graded_product<M>(a, b)) != ((*this)(a) && (*this)(b))) {
          throw InvalidInput("character '" + name_ + "' is not multiplicative");
        }
      }
    }
  }

  bool operator()(const element& x) const { return pred_(x); }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  Predicate pred_;
};

/// 1 exactly on elements without edges.
template <LinearizedMonoid M>
Character<M> discrete_character() {
  static_assert(is_edge_monoid<M>, "discrete character needs an edge monoid");
  return Character<M>("discrete", [](const Hypergraph& x) { return x.edges.empty(); });
}

inline bool is_increasing(const LinearOrder& o) {
  return std::is_sorted(o.seq.begin(), o.seq.end());
}

/// True iff the order standardizes to 2143...(2k)(2k-1); true when empty.
inline bool is_pattern21(const LinearOrder& o) {
  if (o.size() % 2 != 0) return false;
  const LinearOrder st = standardize(o.seq);
  for (int i = 0; i < st.size(); i += 2) {
    if (st.seq[i] != i + 1 || st.seq[i + 1] != i) return false;
  }
  return true;
}

inline LinearOrder pattern21_order(int n) {
  if (n % 2 != 0) throw InvalidInput("the 2143... pattern needs even length");
  LinearOrder o;
  for (int i = 0; i < n; i += 2) {
    o.seq.push_back(i + 1);
    o.seq.push_back(i);
  }
  return o;
}

inline Character<Orders> identity_order_character() { return Character<Orders>("identity", is_increasing); }
inline Character<Orders> pattern21_character() { return Character<Orders>("pattern21", is_pattern21); }

// ---------------------------------------------------------------------------
// Quasisymmetric image and chromatic polynomial

/// Monomial-basis coordinates.
using QSymElement = std::map<IntComposition, std::int64_t>;

template <LinearizedMonoid M>
QSymElement psi(const typename M::element& x, const Character<M>& zeta) {
  QSymElement out;
  for_each_set_composition(M::support(x), [&](const std::vector<Mask>& parts) {
    auto pieces = delta_pieces<M>(x, parts);
    if (!pieces) return;
    for (const auto& p : *pieces) {
      if (!zeta(p)) return;
    }
    IntComposition type;
    for (Mask p : parts) type.push_back(popcount(p));
    out[type] += 1;
  });
  return out;
}

inline BigInt binomial(const BigInt& t, int k) {
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= t - i;
    den *= i + 1;
  }
  return num / den;
}

/// sum_l c_l binom(t, l) with exact integer coefficients.
struct BinomialPolynomial {
  std::vector<std::int64_t> coefficients;

  BigInt evaluate(const BigInt& t) const {
    BigInt total = 0;
    for (std::size_t l = 0; l < coefficients.size(); ++l) total += BigInt(coefficients[l]) * binomial(t, static_cast<int>(l));
    return total;
  }

  std::int64_t evaluate_int(std::int64_t t) const {
    const BigInt v = evaluate(BigInt(t));
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) throw ArithmeticOverflow("polynomial value exceeds 64 bits");
    return static_cast<std::int64_t>(v);
  }

  /// Coefficients in the power basis t^0, t^1, ...
  std::vector<BigRational> monomial_coefficients() const {
    std::vector<BigRational> out(std::max<std::size_t>(coefficients.size(), 1), BigRational(0));
    for (std::size_t l = 0; l < coefficients.size(); ++l) {
      if (coefficients[l] == 0) continue;
      // t (t-1) ... (t-l+1) / l!
      std::vector<BigRational> falling{BigRational(1)};
      BigInt fact = 1;
      for (std::size_t i = 0; i < l; ++i) {
        std::vector<BigRational> next(falling.size() + 1, BigRational(0));
        for (std::size_t j = 0; j < falling.size(); ++j) {
          next[j + 1] += falling[j];
          next[j] -= falling[j] * BigRational(static_cast<long long>(i));
        }
        falling = std::move(next);
        fact *= static_cast<long long>(i + 1);
      }
      for (std::size_t j = 0; j < falling.size(); ++j) {
        out[j] += falling[j] * BigRational(coefficients[l]) / BigRational(fact);
      }
    }
    return out;
  }

  std::string monomial_string() const {
    const auto mono = monomial_coefficients();
    std::string out;
    for (std::size_t d = mono.size(); d-- > 0;) {
      const BigRational& c = mono[d];
      if (c == 0) continue;
      const bool negative = c < 0;
      const BigRational mag = negative ? BigRational(-c) : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const bool unit = (mag == 1);
      if (!unit || d == 0) out += mag.str();
      if (d >= 1) out += "t";
      if (d >= 2) out += "^" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
  }

  bool operator==(const BinomialPolynomial&) const = default;
};

inline BinomialPolynomial chromatic_from_psi(const QSymElement& q, int degree) {
  BinomialPolynomial p;
  p.coefficients.assign(degree + 1, 0);
  for (const auto& [a, c] : q) p.coefficients[a.size()] = checked_add(p.coefficients[a.size()], c);
  return p;
}

template <LinearizedMonoid M>
BinomialPolynomial chromatic_poly(const typename M::element& x, const Character<M>& zeta) {
  return chromatic_from_psi(psi<M>(x, zeta), popcount(M::support(x)));
}

/// Proper t-colorings of a graph, by exhaustion.
inline std::int64_t coloring_count_oracle(const Hypergraph& g, int t) {
  const int n = popcount(g.support);
  if (t < 0 || t > 5 || n > 7) throw GuardExceeded("coloring oracle is limited to t <= 5 and n <= 7");
  if (t == 0) return n == 0 ? 1 : 0;
  const std::vector<int> verts = elements_of(g.support);
  std::vector<int> color(kMaxElements, 0);
  std::int64_t count = 0;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == verts.size()) {
      for (Mask e : g.edges) {
        const auto ends = elements_of(e);
        bool mono = true;
        for (int v : ends) mono = mono && color[v] == color[ends.front()];
        if (mono) return;
      }
      ++count;
      return;
    }
    for (int c = 0; c < t; ++c) {
      color[verts[idx]] = c;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return count;
}

// ---------------------------------------------------------------------------
// Permutation statistics

inline std::int64_t increasing_decomposition_count(const LinearOrder& alpha, const IntComposition& a) {
  std::int64_t count = 0;
  for_each_composition_of_type(alpha.support(), a, [&](const std::vector<Mask>& parts) {
    for (Mask p : parts) {
      if (!is_increasing(restrict_order(alpha, p))) return;
    }
    ++count;
  });
  return count;
}

/// Compositions with the given (even) block sizes whose blocks all
/// standardize to 2143...
inline std::int64_t pattern21_decomposition_count(const LinearOrder& alpha, const IntComposition& sizes) {
  for (int s : sizes) {
    if (s % 2 != 0) throw InvalidInput("block sizes must be even");
  }
  std::int64_t count = 0;
  for_each_composition_of_type(alpha.support(), sizes, [&](const std::vector<Mask>& parts) {
    for (Mask p : parts) {
      if (!is_pattern21(restrict_order(alpha, p))) return;
    }
    ++count;
  });
  return count;
}

/// Incomparability graph of the poset with alpha_i below alpha_j iff i < j
/// and alpha_i < alpha_j, so values are joined when they form an inversion.
/// Its proper colorings are exactly the increasing-class colorings.
inline Hypergraph incomparability_graph(const LinearOrder& alpha) {
  std::vector<Mask> edges;
  for (int i = 0; i < alpha.size(); ++i) {
    for (int j = i + 1; j < alpha.size(); ++j) {
      if (alpha.seq[i] > alpha.seq[j]) edges.push_back(bit(alpha.seq[i]) | bit(alpha.seq[j]));
    }
  }
  return Graphs::make(alpha.support(), std::move(edges));
}

/// Acyclic orientations via inclusion-exclusion over the set of sources.
inline std::int64_t count_acyclic_orientations(const Hypergraph& g) {
  const int n = popcount(g.support);
  check_guard(n);
  const std::vector<int> verts = elements_of(g.support);
  // Work on local indices 0..n-1.
  std::vector<Mask> adj(n, 0);
  for (Mask e : g.edges) {
    if (popcount(e) != 2) throw InvalidInput("acyclic orientation count needs a graph");
    int a = -1, b = -1;
    for (int i = 0; i < n; ++i) {
      if (contains(e, verts[i])) (a < 0 ? a : b) = i;
    }
    adj[a] |= bit(b);
    adj[b] |= bit(a);
  }
  std::vector<std::int64_t> memo(std::size_t{1} << n, 0);
  memo[0] = 1;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    std::int64_t total = 0;
    for_each_subset(s, [&](Mask t) {
      if (t == 0) return;
      for (int v : elements_of(t)) {
        if (adj[v] & t) return;
      }
      total += (popcount(t) % 2 == 1 ? 1 : -1) * memo[s & ~t];
    });
    memo[s] = total;
  }
  return memo[full_mask(n)];
}

/// (chi_x(-1), zeta applied to S).
template <LinearizedMonoid M>
std::pair<std::int64_t, std::int64_t> reciprocity_check(const typename M::element& x, const Character<M>& zeta,
                                                        const FormalSum<typename M::element>& s) {
  std::int64_t rhs = 0;
  for (const auto& [y, c] : s) {
    if (zeta(y)) rhs = checked_add(rhs, c);
  }
  return {chromatic_poly<M>(x, zeta).evaluate_int(-1), rhs};
}

// ---------------------------------------------------------------------------
// Primitive elements of the graph monoid

inline FormalSum<Hypergraph> product_linear(const FormalSum<Hypergraph>& a, const FormalSum<Hypergraph>& b) {
  FormalSum<Hypergraph> out;
  for (const auto& [x, c] : a) {
    for (const auto& [y, d] : b) out.add(Graphs::product(x, y), checked_mul(c, d));
  }
  return out;
}

/// sum over set partitions Phi of (-1)^{|Phi|-1} (|Phi|-1)! x_Phi for a
/// connected x; the product over components otherwise.
inline FormalSum<Hypergraph> gbar(const Hypergraph& x) {
  Graphs::validate(x);
  check_guard(popcount(x.support));
  const auto comps = detail::connectivity_classes(x.support, x.edges);
  if (comps.size() > 1) {
    FormalSum<Hypergraph> out(Graphs::unit());
    for (Mask c : comps) out = product_linear(out, gbar(*Graphs::restrict(x, c)));
    return out;
  }
  FormalSum<Hypergraph> out;
  if (x.support == 0) return FormalSum<Hypergraph>(x);
  for_each_set_partition(x.support, [&](const std::vector<Mask>& blocks) {
    const int k = static_cast<int>(blocks.size());
    std::int64_t coef = 1;
    for (int i = 2; i < k; ++i) coef = checked_mul(coef, i);
    if ((k - 1) % 2 == 1) coef = -coef;
    out.add(*mu_delta_unchecked<Graphs>(x, blocks), coef);
  });
  return out;
}

/// True iff every nontrivial two-part coproduct of the sum vanishes.
inline bool primitivity_check(const FormalSum<Hypergraph>& xbar) {
  if (xbar.empty()) return true;
  const Mask ground = xbar.begin()->first.support;
  bool ok = true;
  for_each_subset(ground, [&](Mask a1) {
    if (!ok || a1 == 0 || a1 == ground) return;
    ok = coproduct_linear<Graphs>(xbar, a1, ground & ~a1).empty();
  });
  return ok;
}

/// (sum_a (-1)^{l(a)} c'_a(alpha), (-1)^{n/2} d_{alpha, 2143...}); (0, 0)
/// for odd n, where both sides vanish.
inline std::pair<std::int64_t, std::int64_t> psi21_identity_check(const LinearOrder& alpha) {
  const int n = alpha.size();
  if (n % 2 != 0) return {0, 0};
  std::int64_t lhs = 0;
  static const Character<Orders> zeta = pattern21_character();
  for (const auto& [a, c] : psi<Orders>(alpha, zeta)) {
    lhs += (a.size() % 2 == 0) ? c : -c;
  }
  const std::int64_t d = d_count(alpha, pattern21_order(n));
  return {lhs, ((n / 2) % 2 == 0) ? d : -d};
}

}  // namespace hopf
