#pragma once

// Independent cross-check formulas used only by tests. The expanded joint
// probability below evaluates the two-term superposition case through inner
// products on the factor spaces alone, never touching the composite-space
// matrices, so it is an independent route to the same number.

#include <cmath>
#include <complex>

#include "qcorr/linalg.hpp"
#include "qcorr/quantum.hpp"

namespace test_oracles {

using qcorr::cplx;
using qcorr::linalg::Operator;
using qcorr::linalg::StateVector;

// <u, M v>
inline cplx sandwich(const StateVector& u, const Operator& m, const StateVector& v) {
  const std::vector<cplx> mv = m.apply(v);
  cplx sum(0.0, 0.0);
  for (std::size_t i = 0; i < u.dim(); ++i) sum += std::conj(u[i]) * mv[i];
  return sum;
}

// Expanded joint probability for eta = a psi(x)phi + b phi(x)psi:
//   |a|^2 <psi,P psi><phi,Q phi> + conj(a) b <psi,P phi><phi,Q psi>
// + a conj(b) <phi,P psi><psi,Q phi> + |b|^2 <phi,P phi><psi,Q psi>
inline cplx expanded_joint(const qcorr::quantum::EntangledPairSpec& spec,
                           const Operator& p, const Operator& q) {
  const cplx a = spec.a;
  const cplx b = spec.b;
  return std::norm(a) * sandwich(spec.psi, p, spec.psi) * sandwich(spec.phi, q, spec.phi) +
         std::conj(a) * b * sandwich(spec.psi, p, spec.phi) * sandwich(spec.phi, q, spec.psi) +
         a * std::conj(b) * sandwich(spec.phi, p, spec.psi) * sandwich(spec.psi, q, spec.phi) +
         std::norm(b) * sandwich(spec.phi, p, spec.phi) * sandwich(spec.psi, q, spec.psi);
}

}  // namespace test_oracles
