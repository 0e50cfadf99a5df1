#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace deccs {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;
using RngEngine = std::mt19937_64;

// Derives an independent seed for a sub-stream (splitmix64 finalizer).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline RngEngine make_rng(std::uint64_t seed) { return RngEngine(seed); }

}  // namespace deccs
