#pragma once

// Randomized and exhaustive checks of the ring, star, divisibility and ideal
// laws. Each property runs on every element (or pair) of a small coefficient
// box plus `samples` random draws from a seeded generator, so a run is
// reproducible from (ring, samples, seed).

#include <cstdint>
#include <string>
#include <vector>

#include "starring/ring.hpp"

namespace starring::axioms {

enum class Group { Core, Star, Arith, Ideals };

std::string_view to_string(Group group);

struct Options {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  // Unary properties run over [-r, r]^rank; pairs over the same box for
  // rank <= 2; triples over [-1, 1]^rank.
  long box_radius = 3;
  std::vector<Group> groups = {Group::Core, Group::Star, Group::Arith, Group::Ideals};
};

struct PropertyResult {
  std::string name;
  Group group;
  bool passed = true;
  std::size_t checks = 0;
  std::string counterexample;  // first failure, empty when passed
};

// Groups that do not apply to the ring (Arith and Ideals outside Z, Z[i],
// Z[j]) are skipped.
std::vector<PropertyResult> run(const RingDescriptor& ring, const Options& options);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace starring::axioms
