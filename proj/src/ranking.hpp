// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace levyrank {

/// Ranking permutation of a state vector.
///
/// `forward[k]` is the index of the particle holding rank k (ranks sorted
/// ascending, k = 0 is the bottom); `inverse[i]` is the rank held by
/// particle i. Ties give the smaller particle index the smaller rank, so the
/// permutation is deterministic even when jump point masses create exact
/// collisions.
struct RankPermutation {
  std::vector<std::int32_t> forward;
  std::vector<std::int32_t> inverse;

  friend bool operator==(const RankPermutation&, const RankPermutation&) = default;
};

/// Computes the ranking permutation of x. Throws std::invalid_argument on a
/// non-finite coordinate.
RankPermutation rank_permutation(std::span<const double> x);

/// Allocation-free variant for hot loops; `out` is resized as needed.
void rank_permutation_into(std::span<const double> x, RankPermutation& out);

/// Values of x in nondecreasing (ranked) order.
std::vector<double> ranked_values(std::span<const double> x);

/// Adjacent differences of the ranked values; length N-1, all >= 0.
std::vector<double> gaps(std::span<const double> x);
void gaps_into(std::span<const double> x, const RankPermutation& perm, std::span<double> out);

/// Subtracts the coordinate mean (twice, to flush the rounding residual) so
/// the result sums to zero within 1e-12.
void center_in_place(std::span<double> x);
std::vector<double> centered(std::span<const double> x);

/// u[i] = w[inverse[i]]: particle i receives the coordinate of w addressed by
/// its current rank. This is how rank-indexed increments and jump
/// displacements land on named particles.
std::vector<double> permute_by_inverse(std::span<const double> w, const RankPermutation& perm);
void permute_by_inverse_into(std::span<const double> w, const RankPermutation& perm,
                             std::span<double> out);

}  // namespace levyrank
