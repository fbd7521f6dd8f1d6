// Generalized Pauli operators over GF(2^n): Z_a = sum_k chi(k a)|k><k|,
// X_b = sum_k |k+b><k|, displacement monomials Z_a X_b in that fixed order,
// the finite Fourier transform, and per-qubit tensor factorization through
// the self-dual basis.  Rows/columns are indexed by the field-element integer
// encoding.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "qps/gf.hpp"

namespace qps {

using Unitary = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using DensityMatrix = Eigen::MatrixXcd;

class DimensionMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PauliMonomial {
  GfElem alpha = 0;  // Z-part label
  GfElem beta = 0;   // X-part label
  bool operator==(const PauliMonomial&) const = default;
};

Unitary z_op(const Field& field, GfElem alpha);
Unitary x_op(const Field& field, GfElem beta);
Unitary displacement(const Field& field, GfElem alpha, GfElem beta);
// F with <l|F|k> = 2^(-n/2) chi(k l); real, symmetric, self-inverse in
// characteristic two, and F Z_a F^\dagger = X_a exactly.
Unitary fourier(const Field& field);

struct QubitFactor {
  int z_exp = 0;
  int x_exp = 0;
  bool operator==(const QubitFactor&) const = default;
};

// Per-qubit exponents a_i = tr(alpha theta_i), b_i = tr(beta theta_i).
std::vector<QubitFactor> tensor_factorize(const Field& field, GfElem alpha,
                                          GfElem beta);
// Kronecker rebuild of sigma_z^a sigma_x^b factors, re-indexed to the field
// encoding; equals displacement(alpha, beta) up to the scalar reported by
// tensor_scalar.
Unitary tensor_rebuild(const Field& field,
                       const std::vector<QubitFactor>& factors);
// Unit scalar s with tensor_rebuild == s * displacement.
std::complex<double> tensor_scalar(const Field& field, GfElem alpha,
                                   GfElem beta);

// --- dense-object helpers -------------------------------------------------

StateVector basis_state(const Field& field, GfElem kappa);
// |k_1 ... k_n> in the qubit picture, i.e. basis_state(sum k_i theta_i).
StateVector state_from_qubits(const Field& field, const std::vector<int>& bits);
// (|0...0> + |1...1>)/sqrt(2).
StateVector ghz_state(const Field& field);

StateVector random_pure_state(int dim, std::mt19937_64& rng);
// Ginibre construction: G G^dagger normalized to unit trace.
DensityMatrix random_density_matrix(int dim, std::mt19937_64& rng);

double unitarity_deviation(const Unitary& u);
double hermiticity_deviation(const Eigen::MatrixXcd& m);
bool is_unitary(const Unitary& u, double tol = 1e-10);
// Hermitian, unit trace, smallest eigenvalue >= -tol.
bool is_density_matrix(const DensityMatrix& rho, double tol = 1e-10);

}  // namespace qps
