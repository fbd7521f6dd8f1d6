#include "qps/wigner.hpp"

#include <set>

namespace qps {

namespace {

void require_kernel_scale(const Field& field) {
  if (field.n() > kMaxKernelQubits) {
    throw DimensionMismatchError("kernel construction is capped at n <= " +
                                 std::to_string(kMaxKernelQubits));
  }
}

WignerKernel empty_kernel(const Field& field, std::string provenance) {
  WignerKernel kernel;
  kernel.n = field.n();
  kernel.provenance = std::move(provenance);
  const int dim = int(field.size());
  kernel.point_ops.assign(std::size_t(field.size()) * field.size(),
                          Eigen::MatrixXcd::Zero(dim, dim));
  return kernel;
}

}  // namespace

WignerKernel kernel_standard(const Field& field) {
  require_kernel_scale(field);
  const GfElem q = field.size();
  WignerKernel kernel = empty_kernel(field, "standard");

  const Unitary ft = fourier(field);
  std::vector<Unitary> ray_states(q);
  for (GfElem lambda = 0; lambda < q; ++lambda) {
    ray_states[lambda] = p_op(field, ray_function(field, lambda));
  }

  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(q, q);
  for (GfElem alpha = 0; alpha < q; ++alpha) {
    for (GfElem beta = 0; beta < q; ++beta) {
      Eigen::MatrixXcd op = -id;
      const auto xs = ft.col(alpha);
      op += xs * xs.adjoint();
      for (GfElem lambda = 0; lambda < q; ++lambda) {
        const GfElem gamma = beta ^ field.mul(alpha, lambda);
        const auto psi = ray_states[lambda].col(gamma);
        op += psi * psi.adjoint();
      }
      kernel.at(alpha, beta) = op;
    }
  }
  return kernel;
}

WignerKernel kernel_bundle(const MubBundle& bundle) {
  const Field& field = bundle.field;
  require_kernel_scale(field);

  const auto structure = verify_bundle_structure(bundle);
  if (!structure.ok()) {
    throw NotABundleError("striations do not partition the grid or curves "
                          "cross more than once");
  }
  const auto unbias = verify_unbiased(bundle);
  if (unbias.max_cross_deviation > 1e-8 || unbias.max_intra_deviation > 1e-8) {
    throw NotABundleError("bases are not mutually unbiased");
  }

  const GfElem q = field.size();
  WignerKernel kernel = empty_kernel(field, "bundle");
  for (const MubBasis& basis : bundle.bases) {
    for (GfElem kappa = 0; kappa < q; ++kappa) {
      const auto psi = basis.states.col(kappa);
      const Eigen::MatrixXcd proj = psi * psi.adjoint();
      for (const Point& p : curve_points(field, basis.striation[kappa])) {
        kernel.at(p.first, p.second) += proj;
      }
    }
  }
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(q, q);
  for (auto& op : kernel.point_ops) op -= id;
  return kernel;
}

WignerKernel kernel_transformed(const Field& field, const CurveFunction& f,
                                const CurveFunction& g, const CurveFunction& h) {
  require_kernel_scale(field);
  const Unitary u = p_op(field, h) * q_op(field, g) * p_op(field, f);
  WignerKernel kernel = kernel_standard(field);
  kernel.provenance = "transformed";
  for (auto& op : kernel.point_ops) op = u * op * u.adjoint();
  return kernel;
}

WignerGrid wigner_function(const DensityMatrix& rho, const WignerKernel& kernel) {
  const GfElem q = kernel.grid_size();
  if (rho.rows() != int(q) || rho.cols() != int(q)) {
    throw DimensionMismatchError("state dimension does not match the kernel");
  }
  WignerGrid grid(q, q);
  for (GfElem alpha = 0; alpha < q; ++alpha) {
    for (GfElem beta = 0; beta < q; ++beta) {
      const std::complex<double> value = (rho * kernel.at(alpha, beta)).trace();
      if (std::abs(value.imag()) > 1e-12) {
        throw std::logic_error("Wigner value has imaginary residue " +
                               std::to_string(value.imag()));
      }
      grid(alpha, beta) = value.real();
    }
  }
  return grid;
}

WignerGrid wigner_function(const StateVector& psi, const WignerKernel& kernel) {
  return wigner_function(DensityMatrix(psi * psi.adjoint()), kernel);
}

double marginal_along_curve(const Field& field, const WignerGrid& grid,
                            const Curve& curve) {
  double sum = 0.0;
  for (const Point& p : curve_points(field, curve)) {
    sum += grid(p.first, p.second);
  }
  return sum;
}

CovarianceReport covariance_check(const Field& field, const WignerKernel& kernel,
                                  int samples, std::uint64_t seed) {
  const GfElem q = field.size();
  CovarianceReport report;

  auto deviation = [&](GfElem a, GfElem b, GfElem da, GfElem db) {
    const Unitary d = displacement(field, da, db);
    return (kernel.at(a ^ da, b ^ db) - d * kernel.at(a, b) * d.adjoint())
        .cwiseAbs()
        .maxCoeff();
  };

  if (q * q <= 16) {
    report.exhaustive = true;
    for (GfElem a = 0; a < q; ++a) {
      for (GfElem b = 0; b < q; ++b) {
        for (GfElem da = 0; da < q; ++da) {
          for (GfElem db = 0; db < q; ++db) {
            report.max_deviation =
                std::max(report.max_deviation, deviation(a, b, da, db));
            ++report.samples;
          }
        }
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<GfElem> pick(0, q - 1);
    report.samples = samples;
    for (int s = 0; s < samples; ++s) {
      report.max_deviation = std::max(
          report.max_deviation,
          deviation(pick(rng), pick(rng), pick(rng), pick(rng)));
    }
  }
  return report;
}

NegativityReport negativity(const WignerGrid& grid) {
  NegativityReport report;
  report.min_value = grid.minCoeff();
  report.negative_sum = (-grid.cwiseMin(0.0)).sum();
  return report;
}

std::vector<Point> grid_support(const WignerGrid& grid, double tol) {
  std::vector<Point> support;
  for (Eigen::Index a = 0; a < grid.rows(); ++a) {
    for (Eigen::Index b = 0; b < grid.cols(); ++b) {
      if (std::abs(grid(a, b)) > tol) {
        support.emplace_back(GfElem(a), GfElem(b));
      }
    }
  }
  return support;
}

std::optional<Curve> support_line(const Field& field, const WignerGrid& grid,
                                  double tol) {
  const auto support = grid_support(grid, tol);
  if (support.size() != field.size()) return std::nullopt;

  auto matches = [&](const Curve& curve) {
    auto pts = curve_points(field, curve);
    std::set<Point> expect(pts.begin(), pts.end());
    for (const Point& p : support) {
      if (!expect.count(p)) return false;
    }
    return true;
  };

  for (GfElem lambda = 0; lambda < field.size(); ++lambda) {
    for (GfElem gamma = 0; gamma < field.size(); ++gamma) {
      Curve line = translated(ray_curve(field, lambda), {0, gamma});
      if (matches(line)) return line;
    }
  }
  for (GfElem gamma = 0; gamma < field.size(); ++gamma) {
    Curve line = translated(x_axis_curve(field), {gamma, 0});
    if (matches(line)) return line;
  }
  return std::nullopt;
}

KernelStructureReport check_kernel_structure(const WignerKernel& kernel) {
  KernelStructureReport report;
  const int dim = int(kernel.grid_size());
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& op : kernel.point_ops) {
    report.max_hermiticity_deviation =
        std::max(report.max_hermiticity_deviation, hermiticity_deviation(op));
    report.max_trace_deviation =
        std::max(report.max_trace_deviation, std::abs(op.trace() - 1.0));
    sum += op;
  }
  report.sum_identity_deviation =
      (sum - double(dim) * Eigen::MatrixXcd::Identity(dim, dim))
          .cwiseAbs()
          .maxCoeff();
  return report;
}

double kernel_orthogonality_deviation(const WignerKernel& kernel) {
  const double dim = double(kernel.grid_size());
  double max_dev = 0.0;
  const std::size_t total = kernel.point_ops.size();
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = i; j < total; ++j) {
      const std::complex<double> tr =
          (kernel.point_ops[i] * kernel.point_ops[j]).trace();
      const double target = i == j ? dim : 0.0;
      max_dev = std::max(max_dev, std::abs(tr - target));
    }
  }
  return max_dev;
}

DensityMatrix reconstruct_state(const WignerGrid& grid, const WignerKernel& kernel) {
  const int dim = int(kernel.grid_size());
  DensityMatrix rho = DensityMatrix::Zero(dim, dim);
  for (GfElem alpha = 0; alpha < kernel.grid_size(); ++alpha) {
    for (GfElem beta = 0; beta < kernel.grid_size(); ++beta) {
      rho += grid(alpha, beta) * kernel.at(alpha, beta);
    }
  }
  return rho / double(dim);
}

}  // namespace qps
