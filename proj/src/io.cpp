#include "qps/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace qps {

using nlohmann::json;

json field_to_json(const Field& field, bool power_display) {
  json j;
  j["n"] = field.n();
  j["irreducible_poly"] = field.poly();
  j["self_dual_basis"] = field.self_dual_basis();
  if (power_display) j["display"] = "power";
  return j;
}

FieldSpec field_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const GfElem poly = j.at("irreducible_poly").get<GfElem>();
  FieldSpec spec{
      j.contains("self_dual_basis")
          ? Field(n, poly, j.at("self_dual_basis").get<std::vector<GfElem>>())
          : Field(n, poly),
      false};
  if (j.contains("display")) spec.power_display = j.at("display") == "power";
  return spec;
}

json curve_to_json(const Curve& curve) {
  json j;
  j["alpha_coeffs"] = curve.alpha.coeffs;
  j["beta_coeffs"] = curve.beta.coeffs;
  if (curve.has_offset()) {
    j["offset"] = {curve.offset_alpha, curve.offset_beta};
  }
  return j;
}

Curve curve_from_json(const json& j, const Field& field) {
  Curve curve{LinearizedMap{j.at("alpha_coeffs").get<std::vector<GfElem>>()},
              LinearizedMap{j.at("beta_coeffs").get<std::vector<GfElem>>()}};
  if (curve.alpha.n() != field.n() || curve.beta.n() != field.n()) {
    throw DegreeMismatchError("curve coefficient lists must have n entries");
  }
  if (j.contains("offset")) {
    const auto off = j.at("offset").get<std::vector<GfElem>>();
    if (off.size() != 2) throw DegreeMismatchError("offset must be [alpha, beta]");
    curve.offset_alpha = off[0];
    curve.offset_beta = off[1];
  }
  return curve;
}

json curves_to_json(const std::vector<Curve>& curves) {
  json arr = json::array();
  for (const Curve& c : curves) arr.push_back(curve_to_json(c));
  return json{{"curves", arr}};
}

std::vector<Curve> curves_from_json(const json& j, const Field& field) {
  std::vector<Curve> out;
  for (const auto& item : j.at("curves")) {
    out.push_back(curve_from_json(item, field));
  }
  return out;
}

json curve_function_to_json(const CurveFunction& f) {
  return json{{"coeffs", f.map.coeffs}};
}

CurveFunction curve_function_from_json(const json& j, const Field& field) {
  if (j.contains("coeffs")) {
    return curve_function_from_coeffs(field,
                                      j.at("coeffs").get<std::vector<GfElem>>());
  }
  if (j.contains("table")) {
    return curve_function_from_table(field,
                                     j.at("table").get<std::vector<GfElem>>());
  }
  throw NotAbelianError("curve function file needs 'coeffs' or 'table'");
}

namespace {

json complex_to_json(const std::complex<double>& z) {
  return json::array({z.real(), z.imag()});
}

std::complex<double> complex_from_json(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

json state_to_json(const StateVector& psi, int n) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    amps.push_back(complex_to_json(psi(i)));
  }
  return json{{"n", n}, {"kind", "pure"}, {"amplitudes", amps}};
}

json state_to_json(const DensityMatrix& rho, int n) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      row.push_back(complex_to_json(rho(r, c)));
    }
    rows.push_back(row);
  }
  return json{{"n", n}, {"kind", "mixed"}, {"matrix", rows}};
}

DensityMatrix density_from_json(const json& j, const Field& field) {
  const int dim = int(field.size());
  if (j.contains("n") && j.at("n").get<int>() != field.n()) {
    throw DimensionMismatchError("state file n does not match the field");
  }
  const std::string kind = j.value("kind", j.contains("matrix") ? "mixed" : "pure");
  if (kind == "pure") {
    const auto& amps = j.at("amplitudes");
    if (int(amps.size()) != dim) {
      throw DimensionMismatchError("amplitude count must be 2^n");
    }
    StateVector psi(dim);
    for (int i = 0; i < dim; ++i) psi(i) = complex_from_json(amps.at(i));
    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > 1e-10) {
      throw DimensionMismatchError("state vector is not normalized");
    }
    return psi * psi.adjoint();
  }
  const auto& rows = j.at("matrix");
  if (int(rows.size()) != dim) {
    throw DimensionMismatchError("matrix must be 2^n x 2^n");
  }
  DensityMatrix rho(dim, dim);
  for (int r = 0; r < dim; ++r) {
    if (int(rows.at(r).size()) != dim) {
      throw DimensionMismatchError("matrix must be 2^n x 2^n");
    }
    for (int c = 0; c < dim; ++c) rho(r, c) = complex_from_json(rows.at(r).at(c));
  }
  if (!is_density_matrix(rho)) {
    throw DimensionMismatchError(
        "matrix is not a density matrix (hermitian, unit trace, PSD)");
  }
  return rho;
}

json bundle_to_json(const MubBundle& bundle) {
  json j;
  j["n"] = bundle.field.n();
  j["irreducible_poly"] = bundle.field.poly();
  j["generators"] = {{"f", bundle.generators.f.map.coeffs},
                     {"g", bundle.generators.g.map.coeffs},
                     {"h", bundle.generators.h.map.coeffs}};
  j["signature"] = bundle.signature.counts;

  json bases = json::array();
  for (const MubBasis& basis : bundle.bases) {
    json b;
    b["x_branch"] = basis.x_branch;
    if (!basis.x_branch) b["lambda"] = basis.label;
    b["origin_curve"] = curve_to_json(basis.origin_curve);
    json striation = json::array();
    for (const Curve& c : basis.striation) striation.push_back(curve_to_json(c));
    b["striation"] = striation;
    json states = json::array();
    for (Eigen::Index col = 0; col < basis.states.cols(); ++col) {
      json st = json::array();
      for (Eigen::Index row = 0; row < basis.states.rows(); ++row) {
        st.push_back(complex_to_json(basis.states(row, col)));
      }
      states.push_back(st);
    }
    b["states"] = states;
    bases.push_back(std::move(b));
  }
  j["bases"] = std::move(bases);
  return j;
}

std::string grid_to_csv(const WignerGrid& grid) {
  std::ostringstream out;
  out << "alpha,beta,value\n";
  out << std::setprecision(12);
  for (Eigen::Index a = 0; a < grid.rows(); ++a) {
    for (Eigen::Index b = 0; b < grid.cols(); ++b) {
      out << a << "," << b << "," << grid(a, b) << "\n";
    }
  }
  return out.str();
}

json grid_to_json(const WignerGrid& grid) {
  json values = json::array();
  for (Eigen::Index a = 0; a < grid.rows(); ++a) {
    for (Eigen::Index b = 0; b < grid.cols(); ++b) {
      values.push_back(grid(a, b));
    }
  }
  return json{{"size", grid.rows()}, {"values", values}};
}

WignerGrid grid_from_json(const json& j) {
  const Eigen::Index size = j.at("size").get<Eigen::Index>();
  const auto& values = j.at("values");
  if (Eigen::Index(values.size()) != size * size) {
    throw DimensionMismatchError("grid values must have size^2 entries");
  }
  WignerGrid grid(size, size);
  Eigen::Index k = 0;
  for (Eigen::Index a = 0; a < size; ++a) {
    for (Eigen::Index b = 0; b < size; ++b) grid(a, b) = values.at(k++);
  }
  return grid;
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  json j;
  in >> j;
  return j;
}

void save_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << j.dump(2) << "\n";
}

void save_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << text;
}

}  // namespace qps
