#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qcorr/types.hpp"

namespace qcorr::linalg {

struct CompositeSpace;

// Normalized vector in C^dim. Construction checks the norm; use
// normalized() to build one from an unnormalized amplitude list.
class StateVector {
 public:
  explicit StateVector(std::vector<cplx> amplitudes);

  static StateVector basis(std::size_t dim, std::size_t index);
  static StateVector normalized(std::vector<cplx> amplitudes);

  std::size_t dim() const { return amp_.size(); }
  const cplx& operator[](std::size_t i) const { return amp_[i]; }
  const std::vector<cplx>& amplitudes() const { return amp_; }

 private:
  std::vector<cplx> amp_;
};

// <u,v>, conjugate-linear in the first argument.
cplx inner_product(const StateVector& u, const StateVector& v);

// |<u,v>|; equals 1 iff the states coincide up to a global phase.
double overlap(const StateVector& u, const StateVector& v);

// Phase-insensitive equality: |<u,v>| >= 1 - tol::phase_equal.
bool same_up_to_phase(const StateVector& u, const StateVector& v);

// Dense square complex matrix, row-major.
class Operator {
 public:
  explicit Operator(std::size_t dim);  // zero matrix
  Operator(std::size_t dim, std::vector<cplx> entries);

  static Operator identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  cplx& at(std::size_t i, std::size_t j) { return ent_[i * dim_ + j]; }
  const cplx& at(std::size_t i, std::size_t j) const { return ent_[i * dim_ + j]; }
  const std::vector<cplx>& entries() const { return ent_; }

  Operator& operator+=(const Operator& other);
  Operator& operator-=(const Operator& other);
  Operator& operator*=(cplx scale);

  Operator adjoint() const;
  double max_abs() const;  // entrywise max norm

  std::vector<cplx> apply(const std::vector<cplx>& v) const;
  std::vector<cplx> apply(const StateVector& v) const;

 private:
  std::size_t dim_;
  std::vector<cplx> ent_;
};

Operator operator+(Operator a, const Operator& b);
Operator operator-(Operator a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(cplx scale, Operator m);

// |u><u|
Operator outer(const StateVector& u);

// <psi, M psi>
cplx expectation(const StateVector& psi, const Operator& m);

struct ProjectorCheck {
  bool ok;
  double hermiticity_residual;  // max |M - M^dagger|
  double idempotency_residual;  // max |M^2 - M|
};

ProjectorCheck validate_projector(const Operator& m);

// Hermitian idempotent operator; construction enforces both residuals.
class Projector {
 public:
  explicit Projector(Operator m);

  static Projector identity(std::size_t dim);
  static Projector zero(std::size_t dim);
  static Projector onto(const StateVector& u);
  // Orthonormalizes the spanning set and sums rank-one projectors.
  // Dependent or zero vectors in the span are dropped; an empty span gives
  // the zero projector.
  static Projector from_span(std::size_t dim,
                             const std::vector<std::vector<cplx>>& span);

  std::size_t dim() const { return m_.dim(); }
  const Operator& matrix() const { return m_; }

  Projector complement() const;  // I - P

 private:
  struct trusted_tag {};
  Projector(Operator m, trusted_tag) : m_(std::move(m)) {}

  // Bypasses validation for operators that are projectors by construction
  // (complements and tensor embeddings of validated projectors).
  static Projector trusted(Operator m) { return Projector(std::move(m), trusted_tag{}); }

  friend Projector embed_first(const Projector&, const CompositeSpace&);
  friend Projector embed_second(const Projector&, const CompositeSpace&);

  Operator m_;
};

Projector complement(const Projector& p);

// Dimension pair for H1 (x) H2; basis vector (i, j) lives at flat index
// i*d2 + j, matching the Kronecker convention of tensor_operator.
struct CompositeSpace {
  std::size_t d1;
  std::size_t d2;

  CompositeSpace(std::size_t first_dim, std::size_t second_dim);

  std::size_t dim() const { return d1 * d2; }
  std::size_t flat(std::size_t i, std::size_t j) const { return i * d2 + j; }
};

StateVector tensor_state(const StateVector& u, const StateVector& v,
                         const CompositeSpace& space);
Operator tensor_operator(const Operator& a, const Operator& b,
                         const CompositeSpace& space);

Projector embed_first(const Projector& p, const CompositeSpace& space);   // P (x) I
Projector embed_second(const Projector& q, const CompositeSpace& space);  // I (x) Q

// Modified Gram-Schmidt with reorthogonalization. Returns an orthonormal
// basis of the span; dependent or zero inputs are dropped.
std::vector<std::vector<cplx>> orthonormal_span(
    std::size_t dim, const std::vector<std::vector<cplx>>& vectors);

struct EigenSystem {
  std::vector<double> values;  // ascending
  Operator vectors;            // column k is the eigenvector for values[k]
};

// Cyclic Jacobi diagonalization of a Hermitian matrix.
EigenSystem hermitian_eigensystem(const Operator& a);

// Singular values of the d1 x d2 coefficient matrix of eta, descending.
std::vector<double> schmidt_coefficients(const StateVector& eta,
                                         const CompositeSpace& space);

// Number of Schmidt coefficients above tol::rank; 1 iff product state.
std::size_t schmidt_rank(const StateVector& eta, const CompositeSpace& space);

}  // namespace qcorr::linalg
