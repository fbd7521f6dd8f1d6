#include "qps/pauli.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

namespace qps {

Unitary z_op(const Field& field, GfElem alpha) {
  const int dim = int(field.size());
  Unitary m = Unitary::Zero(dim, dim);
  for (GfElem k = 0; k < field.size(); ++k) {
    m(k, k) = double(field.character(field.mul(k, alpha)));
  }
  return m;
}

Unitary x_op(const Field& field, GfElem beta) {
  const int dim = int(field.size());
  Unitary m = Unitary::Zero(dim, dim);
  for (GfElem k = 0; k < field.size(); ++k) {
    m(k ^ beta, k) = 1.0;
  }
  return m;
}

Unitary displacement(const Field& field, GfElem alpha, GfElem beta) {
  // Z_a X_b without forming the product: entry (k+b, k) = chi((k+b) a).
  const int dim = int(field.size());
  Unitary m = Unitary::Zero(dim, dim);
  for (GfElem k = 0; k < field.size(); ++k) {
    m(k ^ beta, k) = double(field.character(field.mul(k ^ beta, alpha)));
  }
  return m;
}

Unitary fourier(const Field& field) {
  const int dim = int(field.size());
  const double scale = 1.0 / std::sqrt(double(dim));
  Unitary m(dim, dim);
  for (GfElem l = 0; l < field.size(); ++l) {
    for (GfElem k = 0; k < field.size(); ++k) {
      m(l, k) = scale * double(field.character(field.mul(k, l)));
    }
  }
  return m;
}

std::vector<QubitFactor> tensor_factorize(const Field& field, GfElem alpha,
                                          GfElem beta) {
  std::vector<QubitFactor> factors(field.n());
  const auto a = field.expand(alpha);
  const auto b = field.expand(beta);
  for (int i = 0; i < field.n(); ++i) factors[i] = {a[i], b[i]};
  return factors;
}

namespace {

// Index of kappa in the qubit tensor ordering (qubit 1 most significant).
int qubit_index(const Field& field, GfElem kappa) {
  int idx = 0;
  for (int i = 0; i < field.n(); ++i) {
    idx = (idx << 1) | field.trace(field.mul(kappa, field.self_dual_basis()[i]));
  }
  return idx;
}

}  // namespace

Unitary tensor_rebuild(const Field& field,
                       const std::vector<QubitFactor>& factors) {
  if (int(factors.size()) != field.n()) {
    throw DimensionMismatchError("one factor per qubit required");
  }
  Eigen::Matrix2cd sz, sx;
  sz << 1, 0, 0, -1;
  sx << 0, 1, 1, 0;

  Unitary m = Unitary::Identity(1, 1);
  for (const QubitFactor& f : factors) {
    Eigen::Matrix2cd op = Eigen::Matrix2cd::Identity();
    if (f.z_exp) op = sz * op;
    if (f.x_exp) op = op * sx;
    m = Eigen::kroneckerProduct(m, op).eval();
  }

  // Re-index from qubit coordinates to field encoding.
  const int dim = int(field.size());
  std::vector<int> q(dim);
  for (GfElem k = 0; k < field.size(); ++k) q[k] = qubit_index(field, k);
  Unitary out(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) out(r, c) = m(q[r], q[c]);
  }
  return out;
}

std::complex<double> tensor_scalar(const Field& field, GfElem alpha,
                                   GfElem beta) {
  const Unitary rebuilt = tensor_rebuild(field, tensor_factorize(field, alpha, beta));
  const Unitary direct = displacement(field, alpha, beta);
  // Both are unitary monomials with the same support; the ratio at any
  // nonzero entry is the scalar.
  for (int c = 0; c < direct.cols(); ++c) {
    for (int r = 0; r < direct.rows(); ++r) {
      if (std::abs(direct(r, c)) > 0.5) return rebuilt(r, c) / direct(r, c);
    }
  }
  throw std::logic_error("displacement matrix has no support");
}

StateVector basis_state(const Field& field, GfElem kappa) {
  StateVector v = StateVector::Zero(field.size());
  v(kappa) = 1.0;
  return v;
}

StateVector state_from_qubits(const Field& field, const std::vector<int>& bits) {
  return basis_state(field, field.from_coords(bits));
}

StateVector ghz_state(const Field& field) {
  StateVector v = StateVector::Zero(field.size());
  const double amp = 1.0 / std::sqrt(2.0);
  v(0) = amp;
  v(field.from_coords(std::vector<int>(field.n(), 1))) = amp;
  return v;
}

StateVector random_pure_state(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = std::complex<double>(gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

DensityMatrix random_density_matrix(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) g(r, c) = std::complex<double>(gauss(rng), gauss(rng));
  }
  DensityMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

double unitarity_deviation(const Unitary& u) {
  return (u * u.adjoint() - Unitary::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

double hermiticity_deviation(const Eigen::MatrixXcd& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_unitary(const Unitary& u, double tol) {
  return u.rows() == u.cols() && unitarity_deviation(u) < tol;
}

bool is_density_matrix(const DensityMatrix& rho, double tol) {
  if (rho.rows() != rho.cols()) return false;
  if (hermiticity_deviation(rho) > tol) return false;
  if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol) {
    return false;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  return es.eigenvalues().minCoeff() >= -tol;
}

}  // namespace qps
