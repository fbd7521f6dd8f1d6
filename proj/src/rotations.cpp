#include "qps/rotations.hpp"

namespace qps {

std::complex<double> RotationCoefficients::value(GfElem elem) const {
  static const std::complex<double> table[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[ipow_[elem] & 3];
}

RotationCoefficients solve_coefficients(const Field& field,
                                        const CurveFunction& f,
                                        RootBranch branch) {
  const GfElem q = field.size();
  const int n = field.n();
  const auto& theta = field.self_dual_basis();

  // chi(x) = i^(2 tr(x)); dividing by chi equals multiplying since chi = +-1.
  auto chi_ipow = [&](GfElem x) -> std::uint8_t {
    return std::uint8_t(2 * field.trace(x));
  };

  std::vector<std::uint8_t> ipow(q, 0);
  for (int i = 0; i < n; ++i) {
    const int tr = field.trace(field.mul(theta[i], f(field, theta[i])));
    // principal sqrt: chi=+1 -> +1, chi=-1 -> +i; conjugate branch -> -i.
    ipow[theta[i]] = tr == 0 ? 0 : (branch == RootBranch::principal ? 1 : 3);
  }

  // Extend c over the self-dual expansion of each element, ascending index:
  // c(acc + theta_i) = c(acc) c(theta_i) chi(theta_i f(acc)).
  for (GfElem kappa = 0; kappa < q; ++kappa) {
    const auto bits = field.expand(kappa);
    GfElem acc = 0;
    std::uint8_t p = 0;
    for (int i = 0; i < n; ++i) {
      if (!bits[i]) continue;
      p = std::uint8_t((p + ipow[theta[i]] +
                        chi_ipow(field.mul(theta[i], f(field, acc)))) &
                       3);
      acc ^= theta[i];
    }
    if (acc != kappa) throw std::logic_error("self-dual expansion failed");
    ipow[kappa] = p;
  }

  // Full pairwise verification, exact in i-power arithmetic.
  for (GfElem a = 0; a < q; ++a) {
    for (GfElem b = 0; b < q; ++b) {
      const std::uint8_t lhs = std::uint8_t((ipow[a] + ipow[b]) & 3);
      const std::uint8_t rhs = std::uint8_t(
          (chi_ipow(field.mul(b, f(field, a))) + ipow[a ^ b]) & 3);
      if (lhs != rhs) {
        throw InconsistentRecurrenceError(
            "recurrence fails at kappa=" + std::to_string(a) +
            ", kappa'=" + std::to_string(b) +
            "; f is not a valid commutative-curve function");
      }
    }
  }
  return RotationCoefficients(std::move(ipow));
}

Unitary p_op(const Field& field, const CurveFunction& f, RootBranch branch) {
  const auto c = solve_coefficients(field, f, branch);
  const Unitary ft = fourier(field);
  Eigen::VectorXcd diag(field.size());
  for (GfElem k = 0; k < field.size(); ++k) diag(k) = c.value(k);
  // F is real symmetric and self-inverse, so F diag F is the X-basis form.
  return ft * diag.asDiagonal() * ft;
}

Unitary q_op(const Field& field, const CurveFunction& g, RootBranch branch) {
  const auto c = solve_coefficients(field, g, branch);
  Unitary m = Unitary::Zero(field.size(), field.size());
  for (GfElem k = 0; k < field.size(); ++k) m(k, k) = c.value(k);
  return m;
}

namespace {

// Max deviation of u * m * u^dag from target up to a unit scalar, taking the
// scalar from the largest-magnitude entry of the target.
void contract_deviation(const Unitary& conj, const Unitary& target,
                        ConjugationReport& report) {
  Eigen::Index r = 0, c = 0;
  target.cwiseAbs().maxCoeff(&r, &c);
  const std::complex<double> scalar = conj(r, c) / target(r, c);
  report.max_scalar_modulus_error =
      std::max(report.max_scalar_modulus_error, std::abs(std::abs(scalar) - 1.0));
  const double dev = (conj - scalar * target).cwiseAbs().maxCoeff();
  report.max_deviation = std::max(report.max_deviation, dev);
}

}  // namespace

ConjugationReport check_p_contract(const Field& field, const CurveFunction& f,
                                   const Unitary& p) {
  ConjugationReport report;
  for (GfElem a = 0; a < field.size(); ++a) {
    const Unitary conj = p * z_op(field, a) * p.adjoint();
    contract_deviation(conj, displacement(field, a, f(field, a)), report);
  }
  return report;
}

ConjugationReport check_q_contract(const Field& field, const CurveFunction& g,
                                   const Unitary& q) {
  ConjugationReport report;
  for (GfElem b = 0; b < field.size(); ++b) {
    const Unitary conj = q * x_op(field, b) * q.adjoint();
    contract_deviation(conj, displacement(field, g(field, b), b), report);
  }
  return report;
}

}  // namespace qps
