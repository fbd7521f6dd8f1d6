// Complete MUB sets built from curve bundles.  The standard set pairs the
// rays {beta = lambda alpha, alpha = 0} with the bases {P_(lambda alpha)|k>}
// and the X eigenbasis; rotated sets apply U = P_h Q_g P_f to the states and
// the induced symplectic label map
//     (a, b) -> (a + g(b + f(a)), b + f(a) + h(a + g(b + f(a))))
// to the curves, which keeps the state<->curve association of the standard
// set: striation kappa of the lambda branch is the origin curve translated
// by the image of (0, kappa), the X branch by the image of (kappa, 0).

#pragma once

#include <string>
#include <vector>

#include "qps/curves.hpp"
#include "qps/rotations.hpp"

namespace qps {

class UnknownLabelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MubBasis {
  bool x_branch = false;
  GfElem label = 0;            // lambda; unused for the X branch
  Eigen::MatrixXcd states;     // column kappa = |Psi_kappa>
  Curve origin_curve;
  std::vector<Curve> striation;  // translate kappa, indexed by kappa

  // The commuting set this basis diagonalizes.
  std::vector<Point> monomials(const Field& field) const {
    return curve_points(field, origin_curve);
  }
};

struct MubGenerators {
  CurveFunction f, g, h;  // U = P_h Q_g P_f
};

// Label map of U-conjugation, split into linearized components:
// image(a, b) = (A1(a) + A2(b), B1(a) + B2(b)).
struct SymplecticLabelMap {
  LinearizedMap a_from_a, a_from_b, b_from_a, b_from_b;
  Point apply(const Field& field, Point p) const;
};

SymplecticLabelMap label_map(const Field& field, const MubGenerators& gen);

struct MubBundle {
  Field field;
  MubGenerators generators;
  std::vector<MubBasis> bases;  // lambda = 0..2^n-1, then the X branch
  BundleSignature signature;

  const MubBasis& ray_basis(GfElem lambda) const;
  const MubBasis& x_basis() const { return bases.back(); }
};

MubBundle standard_mubs(const Field& field);
MubBundle rotated_mubs(const Field& field, const CurveFunction& f,
                       const CurveFunction& g, const CurveFunction& h);

struct UnbiasednessReport {
  double max_cross_deviation = 0.0;  // max ||<a|b>|^2 - 2^-n| across bases
  double max_intra_deviation = 0.0;  // max |G - I| within a basis
};

UnbiasednessReport verify_unbiased(const MubBundle& bundle);

struct BundleStructureReport {
  bool striations_partition_grid = false;
  bool single_cross_intersections = false;
  bool ok() const { return striations_partition_grid && single_cross_intersections; }
};

BundleStructureReport verify_bundle_structure(const MubBundle& bundle);

// Translated curve associated with state kappa of the named basis.
// Use is_x_axis=true for the X branch (lambda is then ignored).
const Curve& associate_curve(const MubBundle& bundle, GfElem lambda,
                             GfElem kappa, bool is_x_axis = false);

// --- presets ---------------------------------------------------------------

enum class Preset { standard, set162, set234, set090 };

Preset preset_from_name(const std::string& name);  // UnknownLabelError
std::string preset_name(Preset p);

// standard works for any supported n; the three rotated sets are the n=3
// constructions from the four inequivalent factorization classes:
//   set162: U = P_f,        f = a + a^2 + a^4            -> (1,6,2)
//   set234: U = Q_f P_f,    f = a + a^2 + a^4 (mu = 1)   -> (2,3,4)
//   set090: U = P_f Q_f P_f, f = a + s^2 a^2 + s a^4     -> (0,9,0)
MubBundle build_preset(const Field& field, Preset preset);

}  // namespace qps
