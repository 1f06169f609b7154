#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace qcorr::linalg {

namespace {

bool all_finite(const std::vector<cplx>& values) {
  for (const cplx& z : values) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double norm_squared(const std::vector<cplx>& values) {
  double total = 0.0;
  for (const cplx& z : values) total += std::norm(z);
  return total;
}

}  // namespace

StateVector::StateVector(std::vector<cplx> amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.empty()) throw invariant_error("StateVector: dimension must be positive");
  if (!all_finite(amp_)) throw invariant_error("StateVector: non-finite amplitude");
  const double n2 = norm_squared(amp_);
  if (std::abs(n2 - 1.0) > tol::norm) {
    throw invariant_error("StateVector: norm squared " + std::to_string(n2) +
                          " deviates from 1 beyond tolerance");
  }
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (dim == 0) throw invariant_error("StateVector: dimension must be positive");
  if (index >= dim) throw dimension_error("StateVector: basis index out of range");
  std::vector<cplx> amp(dim, cplx(0.0, 0.0));
  amp[index] = cplx(1.0, 0.0);
  return StateVector(std::move(amp));
}

StateVector StateVector::normalized(std::vector<cplx> amplitudes) {
  if (amplitudes.empty()) throw invariant_error("StateVector: dimension must be positive");
  if (!all_finite(amplitudes)) throw invariant_error("StateVector: non-finite amplitude");
  const double n = std::sqrt(norm_squared(amplitudes));
  if (n <= 0.0 || !std::isfinite(n)) {
    throw invariant_error("StateVector: cannot normalize a zero vector");
  }
  for (cplx& z : amplitudes) z /= n;
  return StateVector(std::move(amplitudes));
}

cplx inner_product(const StateVector& u, const StateVector& v) {
  if (u.dim() != v.dim()) throw dimension_error("inner_product: dimension mismatch");
  cplx sum(0.0, 0.0);
  for (std::size_t i = 0; i < u.dim(); ++i) sum += std::conj(u[i]) * v[i];
  return sum;
}

double overlap(const StateVector& u, const StateVector& v) {
  return std::abs(inner_product(u, v));
}

bool same_up_to_phase(const StateVector& u, const StateVector& v) {
  return overlap(u, v) >= 1.0 - tol::phase_equal;
}

Operator::Operator(std::size_t dim) : dim_(dim), ent_(dim * dim, cplx(0.0, 0.0)) {
  if (dim == 0) throw invariant_error("Operator: dimension must be positive");
}

Operator::Operator(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), ent_(std::move(entries)) {
  if (dim == 0) throw invariant_error("Operator: dimension must be positive");
  if (ent_.size() != dim * dim) throw dimension_error("Operator: entry count != dim^2");
  if (!all_finite(ent_)) throw invariant_error("Operator: non-finite entry");
}

Operator Operator::identity(std::size_t dim) {
  Operator m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = cplx(1.0, 0.0);
  return m;
}

Operator& Operator::operator+=(const Operator& other) {
  if (dim_ != other.dim_) throw dimension_error("Operator: dimension mismatch");
  for (std::size_t k = 0; k < ent_.size(); ++k) ent_[k] += other.ent_[k];
  return *this;
}

Operator& Operator::operator-=(const Operator& other) {
  if (dim_ != other.dim_) throw dimension_error("Operator: dimension mismatch");
  for (std::size_t k = 0; k < ent_.size(); ++k) ent_[k] -= other.ent_[k];
  return *this;
}

Operator& Operator::operator*=(cplx scale) {
  for (cplx& z : ent_) z *= scale;
  return *this;
}

Operator Operator::adjoint() const {
  Operator out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out.at(j, i) = std::conj(at(i, j));
  return out;
}

double Operator::max_abs() const {
  double m = 0.0;
  for (const cplx& z : ent_) m = std::max(m, std::abs(z));
  return m;
}

std::vector<cplx> Operator::apply(const std::vector<cplx>& v) const {
  if (v.size() != dim_) throw dimension_error("Operator::apply: dimension mismatch");
  std::vector<cplx> out(dim_, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < dim_; ++i) {
    cplx sum(0.0, 0.0);
    const cplx* row = ent_.data() + i * dim_;
    for (std::size_t j = 0; j < dim_; ++j) sum += row[j] * v[j];
    out[i] = sum;
  }
  return out;
}

std::vector<cplx> Operator::apply(const StateVector& v) const {
  return apply(v.amplitudes());
}

Operator operator+(Operator a, const Operator& b) { return a += b; }
Operator operator-(Operator a, const Operator& b) { return a -= b; }

Operator operator*(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw dimension_error("Operator: dimension mismatch");
  const std::size_t n = a.dim();
  Operator out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a.at(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

Operator operator*(cplx scale, Operator m) { return m *= scale; }

Operator outer(const StateVector& u) {
  Operator out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < u.dim(); ++j) out.at(i, j) = u[i] * std::conj(u[j]);
  return out;
}

cplx expectation(const StateVector& psi, const Operator& m) {
  if (psi.dim() != m.dim()) throw dimension_error("expectation: dimension mismatch");
  const std::vector<cplx> mv = m.apply(psi);
  cplx sum(0.0, 0.0);
  for (std::size_t i = 0; i < psi.dim(); ++i) sum += std::conj(psi[i]) * mv[i];
  return sum;
}

ProjectorCheck validate_projector(const Operator& m) {
  ProjectorCheck check{};
  check.hermiticity_residual = (m - m.adjoint()).max_abs();
  check.idempotency_residual = (m * m - m).max_abs();
  check.ok = check.hermiticity_residual <= tol::structure &&
             check.idempotency_residual <= tol::structure;
  return check;
}

Projector::Projector(Operator m) : m_(std::move(m)) {
  const ProjectorCheck check = validate_projector(m_);
  if (!check.ok) {
    throw invariant_error(
        "Projector: residuals exceed tolerance (hermiticity " +
        std::to_string(check.hermiticity_residual) + ", idempotency " +
        std::to_string(check.idempotency_residual) + ")");
  }
}

Projector Projector::identity(std::size_t dim) { return Projector(Operator::identity(dim)); }

Projector Projector::zero(std::size_t dim) { return Projector(Operator(dim)); }

Projector Projector::onto(const StateVector& u) { return Projector(outer(u)); }

Projector Projector::from_span(std::size_t dim,
                               const std::vector<std::vector<cplx>>& span) {
  Operator sum(dim);
  for (const std::vector<cplx>& v : orthonormal_span(dim, span)) {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) sum.at(i, j) += v[i] * std::conj(v[j]);
  }
  return Projector(std::move(sum));
}

Projector Projector::complement() const {
  return trusted(Operator::identity(dim()) - m_);
}

Projector complement(const Projector& p) { return p.complement(); }

CompositeSpace::CompositeSpace(std::size_t first_dim, std::size_t second_dim)
    : d1(first_dim), d2(second_dim) {
  if (d1 == 0 || d2 == 0)
    throw invariant_error("CompositeSpace: dimensions must be positive");
}

StateVector tensor_state(const StateVector& u, const StateVector& v,
                         const CompositeSpace& space) {
  if (u.dim() != space.d1 || v.dim() != space.d2)
    throw dimension_error("tensor_state: dimension mismatch with composite space");
  std::vector<cplx> amp(space.dim());
  for (std::size_t i = 0; i < space.d1; ++i)
    for (std::size_t j = 0; j < space.d2; ++j) amp[space.flat(i, j)] = u[i] * v[j];
  return StateVector(std::move(amp));
}

Operator tensor_operator(const Operator& a, const Operator& b,
                         const CompositeSpace& space) {
  if (a.dim() != space.d1 || b.dim() != space.d2)
    throw dimension_error("tensor_operator: dimension mismatch with composite space");
  Operator out(space.dim());
  for (std::size_t i = 0; i < space.d1; ++i)
    for (std::size_t k = 0; k < space.d1; ++k) {
      const cplx aik = a.at(i, k);
      for (std::size_t j = 0; j < space.d2; ++j)
        for (std::size_t l = 0; l < space.d2; ++l)
          out.at(space.flat(i, j), space.flat(k, l)) = aik * b.at(j, l);
    }
  return out;
}

Projector embed_first(const Projector& p, const CompositeSpace& space) {
  if (p.dim() != space.d1)
    throw dimension_error("embed_first: projector does not act on the first factor");
  return Projector::trusted(
      tensor_operator(p.matrix(), Operator::identity(space.d2), space));
}

Projector embed_second(const Projector& q, const CompositeSpace& space) {
  if (q.dim() != space.d2)
    throw dimension_error("embed_second: projector does not act on the second factor");
  return Projector::trusted(
      tensor_operator(Operator::identity(space.d1), q.matrix(), space));
}

std::vector<std::vector<cplx>> orthonormal_span(
    std::size_t dim, const std::vector<std::vector<cplx>>& vectors) {
  std::vector<std::vector<cplx>> basis;
  for (const std::vector<cplx>& input : vectors) {
    if (input.size() != dim)
      throw dimension_error("orthonormal_span: vector length != dim");
    if (!all_finite(input))
      throw invariant_error("orthonormal_span: non-finite component");
    const double original = std::sqrt(norm_squared(input));
    if (original == 0.0) continue;
    std::vector<cplx> v = input;
    // Two projection passes keep the basis orthonormal to machine precision
    // even for nearly dependent inputs.
    for (int pass = 0; pass < 2; ++pass) {
      for (const std::vector<cplx>& b : basis) {
        cplx coeff(0.0, 0.0);
        for (std::size_t i = 0; i < dim; ++i) coeff += std::conj(b[i]) * v[i];
        for (std::size_t i = 0; i < dim; ++i) v[i] -= coeff * b[i];
      }
    }
    const double remaining = std::sqrt(norm_squared(v));
    if (remaining <= 1e-10 * original) continue;  // dependent, spans nothing new
    for (cplx& z : v) z /= remaining;
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// One cyclic Jacobi sweep target: annihilate entry (p, q) of the Hermitian
// matrix a by the unitary rotation
//   J_pp = c, J_pq = s e^{i phi}, J_qp = -s e^{-i phi}, J_qq = c,
// with phi = arg(a_pq), applied as a <- J^dagger a J.
void jacobi_rotate(Operator& a, Operator& v, std::size_t p, std::size_t q) {
  const cplx apq = a.at(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const cplx phase = apq / r;
  const double app = a.at(p, p).real();
  const double aqq = a.at(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cplx sp = s * phase;

  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {  // columns p, q of a and of v
    const cplx aip = a.at(i, p);
    const cplx aiq = a.at(i, q);
    a.at(i, p) = c * aip - std::conj(sp) * aiq;
    a.at(i, q) = sp * aip + c * aiq;
    const cplx vip = v.at(i, p);
    const cplx viq = v.at(i, q);
    v.at(i, p) = c * vip - std::conj(sp) * viq;
    v.at(i, q) = sp * vip + c * viq;
  }
  for (std::size_t j = 0; j < n; ++j) {  // rows p, q of a
    const cplx apj = a.at(p, j);
    const cplx aqj = a.at(q, j);
    a.at(p, j) = c * apj - sp * aqj;
    a.at(q, j) = std::conj(sp) * apj + c * aqj;
  }
  a.at(p, q) = cplx(0.0, 0.0);
  a.at(q, p) = cplx(0.0, 0.0);
  a.at(p, p) = cplx(a.at(p, p).real(), 0.0);
  a.at(q, q) = cplx(a.at(q, q).real(), 0.0);
}

double off_diagonal_norm(const Operator& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) sum += std::norm(a.at(i, j));
  return std::sqrt(sum);
}

}  // namespace

EigenSystem hermitian_eigensystem(const Operator& a) {
  const double herm = (a - a.adjoint()).max_abs();
  if (herm > tol::structure)
    throw invariant_error("hermitian_eigensystem: matrix is not Hermitian");

  const std::size_t n = a.dim();
  // Work on the symmetrized matrix so round-off asymmetry cannot leak in.
  Operator work(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      work.at(i, j) = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
  Operator vectors = Operator::identity(n);

  const double scale = std::max(work.max_abs(), 1.0);
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm(work) <= 1e-15 * scale * static_cast<double>(n)) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(work.at(p, q)) > 1e-300) jacobi_rotate(work, vectors, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return work.at(i, i).real() < work.at(j, j).real();
  });

  EigenSystem out{std::vector<double>(n), Operator(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = work.at(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors.at(i, k) = vectors.at(i, order[k]);
  }
  return out;
}

std::vector<double> schmidt_coefficients(const StateVector& eta,
                                         const CompositeSpace& space) {
  if (eta.dim() != space.dim())
    throw dimension_error("schmidt_coefficients: state does not live on the composite space");
  // Gram matrix C^dagger C of the d1 x d2 coefficient matrix C.
  Operator gram(space.d2);
  for (std::size_t j = 0; j < space.d2; ++j)
    for (std::size_t l = 0; l < space.d2; ++l) {
      cplx sum(0.0, 0.0);
      for (std::size_t i = 0; i < space.d1; ++i)
        sum += std::conj(eta[space.flat(i, j)]) * eta[space.flat(i, l)];
      gram.at(j, l) = sum;
    }
  std::vector<double> values = hermitian_eigensystem(gram).values;
  // Round-off in forming the Gram matrix leaves junk eigenvalues of order
  // 1e-15 * lambda_max; taking square roots would lift that noise to ~3e-8,
  // right at the rank cutoff. Flush it to zero before the sqrt.
  const double floor = 1e-13 * std::max(values.empty() ? 0.0 : values.back(), 0.0);
  std::vector<double> singular;
  singular.reserve(values.size());
  for (auto it = values.rbegin(); it != values.rend(); ++it)
    singular.push_back(*it <= floor ? 0.0 : std::sqrt(*it));
  return singular;
}

std::size_t schmidt_rank(const StateVector& eta, const CompositeSpace& space) {
  std::size_t rank = 0;
  for (double s : schmidt_coefficients(eta, space))
    if (s > tol::rank) ++rank;
  return rank;
}

}  // namespace qcorr::linalg
