// Symplectic rotations P_f and Q_g.  P_f is diagonal in the X-eigenbasis
// |k~> = F|k>, Q_g in the computational basis; both carry coefficient tables
// c(k) solving c(k) c(k') = chi(k' f(k)) c(k+k'), c(0) = 1.  Every solution
// on the canonical branches lies in {1, i, -1, -i}, so coefficients are kept
// exactly as powers of i.
//
// Conjugation contracts:  P_f Z_a P_f^-1 = c(a) Z_a X_f(a)
//                         Q_g X_b Q_g^-1 = c(b) chi(b g(b)) Z_g(b) X_b

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qps/linmap.hpp"
#include "qps/pauli.hpp"

namespace qps {

class InconsistentRecurrenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Seed convention for c(theta_i) = sqrt(chi(theta_i f(theta_i))): the
// principal branch takes +1 / +i, the conjugate branch +1 / -i.  Both
// satisfy the recurrence.
enum class RootBranch { principal, conjugate };

class RotationCoefficients {
 public:
  RotationCoefficients() = default;
  explicit RotationCoefficients(std::vector<std::uint8_t> ipow)
      : ipow_(std::move(ipow)) {}

  // Exponent k with c(elem) = i^k, k in 0..3.
  std::uint8_t ipow(GfElem elem) const { return ipow_[elem]; }
  std::complex<double> value(GfElem elem) const;
  std::size_t size() const { return ipow_.size(); }

 private:
  std::vector<std::uint8_t> ipow_;
};

// Seeds the self-dual basis elements, extends along the basis expansion in
// ascending index order, then verifies the recurrence on every pair with
// exact i-power arithmetic (the abelian condition makes the extension
// order-independent; this is checked, not assumed).
RotationCoefficients solve_coefficients(const Field& field,
                                        const CurveFunction& f,
                                        RootBranch branch = RootBranch::principal);

// P_f = sum_k c_k |k~><k~|.
Unitary p_op(const Field& field, const CurveFunction& f,
             RootBranch branch = RootBranch::principal);
// Q_g = sum_k c_k |k><k|.
Unitary q_op(const Field& field, const CurveFunction& g,
             RootBranch branch = RootBranch::principal);

struct ConjugationReport {
  double max_deviation = 0.0;       // ||U M U^dag - scalar * target||_max, worst label
  double max_scalar_modulus_error = 0.0;
};

// Checks P_f Z_a P_f^dag against Z_a X_f(a) (up to a unit scalar) for every a.
ConjugationReport check_p_contract(const Field& field, const CurveFunction& f,
                                   const Unitary& p);
// Checks Q_g X_b Q_g^dag against Z_g(b) X_b for every b.
ConjugationReport check_q_contract(const Field& field, const CurveFunction& g,
                                   const Unitary& q);

}  // namespace qps
