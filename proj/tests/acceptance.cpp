// Runs the acceptance criteria and prints one line per criterion.
// Usage: hopf_acceptance [number ...]   (no arguments runs all of them)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>

#include "hopf/verify.hpp"

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    const long v = std::strtol(argv[i], &end, 10);
    if (end == argv[i] || *end != '\0') {
      std::fprintf(stderr, "not a criterion number: %s\n", argv[i]);
      return 2;
    }
    wanted.insert(static_cast<int>(v));
  }

  int failed = 0, ran = 0;
  for (const auto& c : hopf::verify::acceptance_criteria()) {
    if (!wanted.empty() && !wanted.count(c.number)) continue;
    const auto start = std::chrono::steady_clock::now();
    const auto r = hopf::verify::detail::guarded(c.title, c.run);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ++ran;
    if (!r.passed) ++failed;
    std::printf("%s  %2d. %s [exact, tolerance 0, %.2f s]: %s\n", r.passed ? "PASS" : "FAIL", c.number,
                c.title.c_str(), secs, r.detail.c_str());
  }
  if (ran == 0) {
    std::fprintf(stderr, "no matching criteria\n");
    return 2;
  }
  std::printf("%d/%d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
