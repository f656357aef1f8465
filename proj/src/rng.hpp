// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace levyrank {

/// One 128-bit block of the 10-round Philox-4x32 keyed counter generator.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Purpose tags for the independent substreams a consumer may open. Distinct
/// tags give statistically independent draw sequences for the same
/// (seed, stream) pair, so e.g. inserting a jump never perturbs the Gaussian
/// increment sequence.
enum class Substream : std::uint32_t {
  gaussian_increments = 0,
  jump_epochs = 1,
  jump_displacements = 2,
  scan_directions = 3,
  generator_mc_gaussian = 4,
  generator_mc_epochs = 5,
  generator_mc_displacements = 6,
};

/// Deterministic random stream addressed by (seed, stream, substream).
///
/// Counter-based: the n-th draw is a pure function of the address and n, so
/// streams can be opened in any order, on any thread, and always replay the
/// same sequence. Replications use their index as the stream id.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint32_t stream, Substream substream);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform draw in the open interval (0, 1); safe under log().
  double next_uniform();

  /// Standard normal via Box-Muller (pair generated, one cached).
  double next_gaussian();

  /// Exponential with the given rate (mean 1/rate).
  double next_exponential(double rate);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::uint32_t stream_;
  std::uint32_t substream_;
  std::uint64_t counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  unsigned pos_ = 4;
  double spare_gaussian_ = 0;
  bool have_spare_ = false;
};

}  // namespace levyrank
