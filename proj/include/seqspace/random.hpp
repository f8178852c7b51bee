#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "seqspace/seq.hpp"

namespace seqspace {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

using Rng = std::mt19937_64;

/// Independent stream for (master seed, stream id): splitmix64 of the pair.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Nonnegative nonincreasing vector of the given length: cumulative sums of
/// |N(0,1)| increments, reversed and scaled to max 1.
std::vector<double> random_decreasing(Rng& rng, std::size_t length);

/// Length drawn log-uniformly from [1, max_length].
std::size_t random_length(Rng& rng, std::size_t max_length);

/// Entries N(0,1), with roughly a quarter of them zeroed.
std::vector<double> random_signed(Rng& rng, std::size_t length);

}  // namespace seqspace
