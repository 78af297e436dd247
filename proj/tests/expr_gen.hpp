#pragma once

#include <random>
#include <string>

namespace exprgen {

// Random trees from the grammar, rendered by hand with redundant parentheses.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::string text(int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 9);
    switch (pick(rng_)) {
      case 0: return std::to_string(std::uniform_int_distribution<int>(0, 999)(rng_));
      case 1: return coin() ? "i" : "j";
      case 2: return "zeta(" + std::to_string(small(1, 13)) + "," + std::to_string(small(0, 20)) + ")";
      case 3: return "-" + wrap(text(depth - 1));
      case 4: return text(depth - 1) + " + " + wrap(text(depth - 1));
      case 5: return text(depth - 1) + "-" + wrap(text(depth - 1));
      case 6: return wrap(text(depth - 1)) + "*" + wrap(text(depth - 1));
      case 7: return wrap(text(depth - 1)) + "(" + text(depth - 1) + ")";
      case 8: return wrap(text(depth - 1)) + "^" + std::to_string(small(0, 5));
      default: return "(" + text(depth - 1) + ")";
    }
  }

 private:
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }
  int small(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::string wrap(const std::string& s) { return "(" + s + ")"; }

  std::mt19937_64 rng_;
};

}  // namespace exprgen
