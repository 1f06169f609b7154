#include "qcorr/sampling.hpp"

#include <cmath>

namespace qcorr::sampling {

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (trial_index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::size_t Rng::index(std::size_t bound) {
  std::uniform_int_distribution<std::size_t> dist(0, bound - 1);
  return dist(engine_);
}

linalg::StateVector random_state(Rng& rng, std::size_t dim) {
  std::vector<cplx> amp(dim);
  for (cplx& z : amp) z = cplx(rng.gaussian(), rng.gaussian());
  return linalg::StateVector::normalized(std::move(amp));
}

linalg::Projector random_projector(Rng& rng, std::size_t dim, std::size_t rank) {
  if (dim < 2) throw dimension_error("random_projector: need dim >= 2");
  rank = std::max<std::size_t>(1, std::min(rank, dim - 1));
  std::vector<std::vector<cplx>> span(rank, std::vector<cplx>(dim));
  for (auto& v : span)
    for (cplx& z : v) z = cplx(rng.gaussian(), rng.gaussian());
  return linalg::Projector::from_span(dim, span);
}

linalg::Projector random_projector(Rng& rng, std::size_t dim) {
  return random_projector(rng, dim, 1 + rng.index(dim - 1));
}

std::pair<linalg::StateVector, linalg::StateVector> random_orthonormal_pair(
    Rng& rng, std::size_t dim) {
  if (dim < 2) throw dimension_error("random_orthonormal_pair: need dim >= 2");
  std::vector<std::vector<cplx>> raw(2, std::vector<cplx>(dim));
  std::vector<std::vector<cplx>> basis;
  do {
    for (auto& v : raw)
      for (cplx& z : v) z = cplx(rng.gaussian(), rng.gaussian());
    basis = linalg::orthonormal_span(dim, raw);
  } while (basis.size() < 2);  // dependent draws have probability zero
  return {linalg::StateVector(basis[0]), linalg::StateVector(basis[1])};
}

quantum::EntangledPairSpec random_entangled_pair(Rng& rng, std::size_t dim) {
  // Weight |a|^2 away from the endpoints so both branches carry real mass.
  const double wa = 0.05 + 0.9 * rng.uniform();
  const double phase_a = 2.0 * M_PI * rng.uniform();
  const double phase_b = 2.0 * M_PI * rng.uniform();
  const cplx a = std::sqrt(wa) * std::polar(1.0, phase_a);
  const cplx b = std::sqrt(1.0 - wa) * std::polar(1.0, phase_b);
  auto [psi, phi] = random_orthonormal_pair(rng, dim);
  return quantum::EntangledPairSpec(a, b, std::move(psi), std::move(phi));
}

classical::JointTable random_table(Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<double> mass(rows * cols);
  double total = 0.0;
  for (double& m : mass) {
    const double g = rng.gaussian();
    m = g * g;
    total += m;
  }
  for (double& m : mass) m /= total;
  return classical::JointTable(rows, cols, std::move(mass));
}

}  // namespace qcorr::sampling
