#pragma once

// Seeded generators for property-style tests.

#include <cstdint>
#include <random>

#include "treewalk/numeric.hpp"
#include "treewalk/recurrence.hpp"

namespace treewalk::testing {

/// p/q with |p| <= max_num and 1 <= q <= max_den.
inline Rat random_rat(std::mt19937_64& rng, int max_num = 9, int max_den = 6,
                      bool non_negative = false) {
  std::uniform_int_distribution<int> num(non_negative ? 0 : -max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rat::normalize(num(rng), den(rng));
}

/// Weight triple with non-negative entries and c2 != 0.
inline WeightConfig random_weights(std::mt19937_64& rng) {
  WeightConfig w{random_rat(rng, 5, 4, true), random_rat(rng, 5, 4, true),
                 random_rat(rng, 5, 4, true), std::nullopt};
  while (w.c2.is_zero()) w.c2 = random_rat(rng, 5, 4, true);
  return w;
}

}  // namespace treewalk::testing
