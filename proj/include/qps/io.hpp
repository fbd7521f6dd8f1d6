// File formats.  All field elements serialize as integers in the bitmask
// encoding.
//
//   field spec    {"n": int, "irreducible_poly": int,
//                  "self_dual_basis": [int,...] optional override,
//                  "display": "power" optional}
//   curve         {"alpha_coeffs": [int,...], "beta_coeffs": [int,...],
//                  "offset": [int, int] optional}
//   bundle        {"curves": [curve,...]}
//   curve func    {"coeffs": [int,...]} or {"table": [int,...]}
//   state         {"n": int, "kind": "pure", "amplitudes": [[re,im],...]}
//                 or {"n": int, "kind": "mixed", "matrix": [[[re,im],...],...]}
//                 row-major, index = field-element encoding
//   wigner grid   CSV "alpha,beta,value" (12 significant digits) and a JSON
//                 equivalent, row-major over (alpha, beta)

#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "qps/curves.hpp"
#include "qps/mubs.hpp"
#include "qps/pauli.hpp"
#include "qps/wigner.hpp"

namespace qps {

struct FieldSpec {
  Field field;
  bool power_display = false;
};

nlohmann::json field_to_json(const Field& field, bool power_display = false);
FieldSpec field_from_json(const nlohmann::json& j);

nlohmann::json curve_to_json(const Curve& curve);
Curve curve_from_json(const nlohmann::json& j, const Field& field);

nlohmann::json curves_to_json(const std::vector<Curve>& curves);
std::vector<Curve> curves_from_json(const nlohmann::json& j, const Field& field);

nlohmann::json curve_function_to_json(const CurveFunction& f);
CurveFunction curve_function_from_json(const nlohmann::json& j, const Field& field);

nlohmann::json state_to_json(const StateVector& psi, int n);
nlohmann::json state_to_json(const DensityMatrix& rho, int n);
// Returns a density matrix either way; pure states load as projectors.
DensityMatrix density_from_json(const nlohmann::json& j, const Field& field);

nlohmann::json bundle_to_json(const MubBundle& bundle);

std::string grid_to_csv(const WignerGrid& grid);
nlohmann::json grid_to_json(const WignerGrid& grid);
WignerGrid grid_from_json(const nlohmann::json& j);

nlohmann::json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const nlohmann::json& j);
void save_text(const std::filesystem::path& path, const std::string& text);

}  // namespace qps
