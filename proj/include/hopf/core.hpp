#pragma once

// Shared primitives: subset masks, error types and the enumeration guard.

#include <atomic>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace hopf {

/// Bitset over the ambient ground set {0, ..., n-1}; bit i <=> element i.
using Mask = std::uint32_t;

inline constexpr int kMaxElements = 32;

constexpr int popcount(Mask m) noexcept { return std::popcount(m); }
constexpr int lowest_element(Mask m) noexcept { return std::countr_zero(m); }
constexpr int highest_element(Mask m) noexcept { return 31 - std::countl_zero(m); }
constexpr Mask bit(int i) noexcept { return Mask{1} << i; }
constexpr bool contains(Mask m, int i) noexcept { return (m >> i) & 1U; }
constexpr bool is_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

constexpr Mask full_mask(int n) noexcept {
  return n >= 32 ? ~Mask{0} : (bit(n) - 1);
}

inline std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  for (; m != 0; m &= m - 1) out.push_back(lowest_element(m));
  return out;
}

/// Calls f(sub) for every subset of m (including 0 and m), in increasing order.
template <class F>
void for_each_subset(Mask m, F&& f) {
  Mask sub = 0;
  while (true) {
    f(sub);
    if (sub == m) break;
    sub = (sub - m) & m;
  }
}

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or violated precondition on user-supplied data.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A computation would iterate over more objects than the configured limit.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// The requested method does not apply to the given monoid.
class MonoidMismatch : public Error {
 public:
  using Error::Error;
};

class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Never expected on valid inputs.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

// ---------------------------------------------------------------------------
// Enumeration guard

namespace detail {
inline std::atomic<int>& enumeration_limit_storage() {
  static std::atomic<int> limit{16};
  return limit;
}
inline std::atomic<long long>& orientation_limit_storage() {
  static std::atomic<long long> limit{1LL << 22};
  return limit;
}
}  // namespace detail

/// Largest ground-set size accepted by the exponential enumerators.
inline int enumeration_limit() { return detail::enumeration_limit_storage().load(); }

inline void set_enumeration_limit(int n) {
  if (n < 1 || n > kMaxElements) throw InvalidInput("enumeration limit must lie in [1, 32]");
  detail::enumeration_limit_storage().store(n);
}

/// Largest number of hyperedge orientations the orientation enumerator visits.
inline long long orientation_limit() { return detail::orientation_limit_storage().load(); }

inline void set_orientation_limit(long long count) {
  if (count < 1) throw InvalidInput("orientation limit must be positive");
  detail::orientation_limit_storage().store(count);
}

inline void check_guard(int n, const char* what = "ground set") {
  if (n > enumeration_limit()) {
    throw GuardExceeded(std::string(what) + " of size " + std::to_string(n) +
                        " exceeds the enumeration limit of " +
                        std::to_string(enumeration_limit()));
  }
}

// ---------------------------------------------------------------------------

/// A finite ground set {0, ..., n-1} with optional display labels.
class GroundSet {
 public:
  explicit GroundSet(int n, std::vector<std::string> labels = {})
      : n_(n), labels_(std::move(labels)) {
    if (n < 0 || n > kMaxElements) throw InvalidInput("ground set size must lie in [0, 32]");
    if (!labels_.empty()) {
      if (static_cast<int>(labels_.size()) != n) throw InvalidInput("label count differs from n");
      std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
      if (seen.size() != labels_.size()) throw InvalidInput("labels must be pairwise distinct");
    }
  }

  int size() const noexcept { return n_; }
  Mask mask() const noexcept { return full_mask(n_); }

  /// Display label; 1-based index when no labels were given.
  std::string label(int i) const {
    return labels_.empty() ? std::to_string(i + 1) : labels_.at(i);
  }

  int index_of(const std::string& label) const {
    for (int i = 0; i < n_; ++i) {
      if (this->label(i) == label) return i;
    }
    throw InvalidInput("unknown label '" + label + "'");
  }

 private:
  int n_;
  std::vector<std::string> labels_;
};

}  // namespace hopf
