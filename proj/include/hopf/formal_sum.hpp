#pragma once

// Sparse integer linear combinations of basis elements.

#include <cstdint>
#include <map>
#include <type_traits>
#include <string>

#include "hopf/core.hpp"

namespace hopf {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
  return r;
}

template <class E>
class FormalSum {
 public:
  using element_type = E;
  using map_type = std::map<E, std::int64_t>;

  FormalSum() = default;
  explicit FormalSum(const E& e, std::int64_t c = 1) { add(e, c); }

  void add(const E& e, std::int64_t c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  void add(const FormalSum& other, std::int64_t scale = 1) {
    for (const auto& [e, c] : other.terms_) add(e, checked_mul(c, scale));
  }

  FormalSum scaled(std::int64_t s) const {
    FormalSum out;
    if (s == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, checked_mul(c, s));
    return out;
  }

  std::int64_t coefficient(const E& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const map_type& terms() const noexcept { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) {
    a.add(b);
    return a;
  }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) {
    a.add(b, -1);
    return a;
  }
  bool operator==(const FormalSum&) const = default;

  /// Applies a basis-level map that may vanish (returns an optional) and
  /// extends it linearly.
  template <class F>
  auto map_linear(F&& f) const {
    using R = typename std::invoke_result_t<F, const E&>::value_type;
    FormalSum<R> out;
    for (const auto& [e, c] : terms_) {
      auto img = f(e);
      if (img) out.add(*img, c);
    }
    return out;
  }

 private:
  map_type terms_;
};

}  // namespace hopf
