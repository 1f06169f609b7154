#pragma once

// Deterministic random generation for the property suites. A master seed
// and a trial index map to a per-trial seed through a splittable 64-bit
// mix, so any single trial can be reproduced in isolation.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "qcorr/classical.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/quantum.hpp"

namespace qcorr::sampling {

// SplitMix64 of (seed + golden-gamma * (trial + 1)); documented so other
// implementations can reproduce which trials ran.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double gaussian() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }  // [0, 1)
  std::size_t index(std::size_t bound);           // uniform in [0, bound)

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

// Gaussian amplitudes, then normalized: Haar-uniform on the unit sphere.
linalg::StateVector random_state(Rng& rng, std::size_t dim);

// Orthonormalization of `rank` Gaussian vectors, summed as outer products.
// Rank is clamped to [1, dim-1] so neither the zero nor the identity
// projector is produced.
linalg::Projector random_projector(Rng& rng, std::size_t dim, std::size_t rank);
linalg::Projector random_projector(Rng& rng, std::size_t dim);  // random rank

// Two orthonormal random vectors in C^dim (dim >= 2).
std::pair<linalg::StateVector, linalg::StateVector> random_orthonormal_pair(
    Rng& rng, std::size_t dim);

// Random two-term superposition weights plus an orthonormal pair.
quantum::EntangledPairSpec random_entangled_pair(Rng& rng, std::size_t dim);

// Nonnegative table from squared Gaussians, normalized to total mass 1.
classical::JointTable random_table(Rng& rng, std::size_t rows, std::size_t cols);

}  // namespace qcorr::sampling
