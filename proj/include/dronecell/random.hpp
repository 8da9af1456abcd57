#pragma once

#include <cstdint>
#include <random>

namespace dronecell {

using RandomStream = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Independent stream for one Monte Carlo trial. Depends only on
/// (master_seed, trial_index), never on which worker runs the trial.
RandomStream trial_stream(std::uint64_t master_seed, std::uint64_t trial_index);

}  // namespace dronecell
