#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "mild2/arith.hpp"
#include "mild2/linking.hpp"

namespace mild2 {

struct AugmentationResult {
  OrderedPrimeSet S;
  std::vector<OddPrime> q_aux;
  OddPrime q_last;
  std::uint64_t attempts = 0;  // candidate tuples examined, counted in search order
};

struct AugmentOptions {
  std::uint64_t bound = 1'000'000;
  // Closing primes are checked for mildness in batches of this size.
  unsigned threads = 1;
};

/// Greedy smallest-first search for q_1', ..., q_m' and q_{m+1} over the normalized seed.
/// The accepted tuple is the first in search order whose interleaved set checks as mild,
/// whatever the thread count. Throws BoundExceeded once the search space is exhausted.
AugmentationResult augment(const std::set<std::uint64_t>& seed, const AugmentOptions& options = {});

// Accepts the given tuple iff it validates and the interleaved set checks as mild.
std::optional<AugmentationResult> try_augmentation(const std::set<std::uint64_t>& seed,
                                                   const std::vector<OddPrime>& q_aux, OddPrime q_last);

}  // namespace mild2
