// Phase-point operators and discrete Wigner functions for curve bundles.
// The kernel assigns to every grid point (alpha, beta) the Hermitian operator
//   w(alpha, beta) = sum over bundle curves through the point of the
//                    associated basis projector, minus the identity,
// which reduces to the Wootters construction on the ray bundle.  Grids are
// real 2^n x 2^n tables indexed (alpha, beta).

#pragma once

#include <optional>
#include <random>

#include "qps/mubs.hpp"
#include "qps/pauli.hpp"

namespace qps {

struct WignerKernel {
  int n = 0;
  std::vector<Eigen::MatrixXcd> point_ops;  // index alpha * 2^n + beta
  std::string provenance;

  GfElem grid_size() const { return GfElem(1) << n; }
  const Eigen::MatrixXcd& at(GfElem alpha, GfElem beta) const {
    return point_ops[std::size_t(alpha) * grid_size() + beta];
  }
  Eigen::MatrixXcd& at(GfElem alpha, GfElem beta) {
    return point_ops[std::size_t(alpha) * grid_size() + beta];
  }
};

// Dense kernels are kept explicit; desk scale tops out at n = 4.
inline constexpr int kMaxKernelQubits = 4;

// Wootters kernel from the standard MUBs, via the explicit projector sum
// over rays (the bundle route must agree matrix-for-matrix).
WignerKernel kernel_standard(const Field& field);

// Kernel for any verified bundle (unbiased, striations partition the grid).
WignerKernel kernel_bundle(const MubBundle& bundle);

// P_h Q_g P_f w(alpha,beta) P_f+ Q_g+ P_h+ pointwise: unitarily transformed
// Wootters kernel, NOT the bundle kernel of the rotated set -- it loses the
// curve marginality but keeps straight-line marginals for the rotated bases.
WignerKernel kernel_transformed(const Field& field, const CurveFunction& f,
                                const CurveFunction& g, const CurveFunction& h);

using WignerGrid = Eigen::MatrixXd;  // (alpha, beta) entry

// W(alpha,beta) = Tr[rho w(alpha,beta)]; imaginary residue checked < 1e-12.
WignerGrid wigner_function(const DensityMatrix& rho, const WignerKernel& kernel);
WignerGrid wigner_function(const StateVector& psi, const WignerKernel& kernel);

double marginal_along_curve(const Field& field, const WignerGrid& grid,
                            const Curve& curve);

struct CovarianceReport {
  double max_deviation = 0.0;
  bool exhaustive = false;
  int samples = 0;
};

// max over sampled (p, p') of ||w(p+p') - D(p') w(p) D(p')+||_max; exhaustive
// when the grid has at most 4^2 points, otherwise `samples` seeded random
// quadruples.
CovarianceReport covariance_check(const Field& field, const WignerKernel& kernel,
                                  int samples = 200,
                                  std::uint64_t seed = 0x51f0a3);

struct NegativityReport {
  double min_value = 0.0;
  double negative_sum = 0.0;  // absolute sum of negative entries
};

NegativityReport negativity(const WignerGrid& grid);

// Entries with |W| above `tol`.
std::vector<Point> grid_support(const WignerGrid& grid, double tol = 1e-8);

// Detects whether the support is exactly one translated ray
// {beta = lambda alpha + gamma} or {alpha = gamma}; returns the curve if so.
std::optional<Curve> support_line(const Field& field, const WignerGrid& grid,
                                  double tol = 1e-8);

struct KernelStructureReport {
  double max_hermiticity_deviation = 0.0;
  double max_trace_deviation = 0.0;  // |Tr w - 1|
  double sum_identity_deviation = 0.0;  // ||sum w - 2^n I||_max
};

KernelStructureReport check_kernel_structure(const WignerKernel& kernel);

// max |Tr[w(p) w(p')] - 2^n delta|; measured per kernel, not asserted
// (self-duality is not guaranteed for every bundle).
double kernel_orthogonality_deviation(const WignerKernel& kernel);

// rho = 2^-n sum W(p) w(p); exact whenever the kernel passes orthogonality.
DensityMatrix reconstruct_state(const WignerGrid& grid, const WignerKernel& kernel);

}  // namespace qps
