#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vinberg/nilalgebra.hpp"

namespace vinberg {

/// Coordinate ranges for random group elements. The defaults keep the
/// condition number of A . A* bounded.
struct SamplingBox {
  double diag_lo = 0.5;
  double diag_hi = 2.0;
  double offdiag_lo = -1.0;
  double offdiag_hi = 1.0;
};

TriangularMatrix sample_group_element(const AlgebraRef& algebra, std::mt19937_64& rng, const SamplingBox& box = {});

/// Same as sample_group_element but with unit diagonal (an element of G').
TriangularMatrix sample_unipotent_element(const AlgebraRef& algebra, std::mt19937_64& rng,
                                          const SamplingBox& box = {});

/// n elements drawn in order from one generator seeded with `seed`.
std::vector<TriangularMatrix> sample_group_elements(const AlgebraRef& algebra, int n, std::uint64_t seed,
                                                    const SamplingBox& box = {});

}  // namespace vinberg
