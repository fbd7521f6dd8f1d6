#include "qps/mubs.hpp"

#include <set>

namespace qps {

Point SymplecticLabelMap::apply(const Field& field, Point p) const {
  return {a_from_a.eval(field, p.first) ^ a_from_b.eval(field, p.second),
          b_from_a.eval(field, p.first) ^ b_from_b.eval(field, p.second)};
}

SymplecticLabelMap label_map(const Field& field, const MubGenerators& gen) {
  const int n = field.n();
  const LinearizedMap id = LinearizedMap::identity(n);
  SymplecticLabelMap m;
  m.a_from_a = add(id, compose(field, gen.g.map, gen.f.map));
  m.a_from_b = gen.g.map;
  m.b_from_a = add(gen.f.map, compose(field, gen.h.map, m.a_from_a));
  m.b_from_b = add(id, compose(field, gen.h.map, m.a_from_b));
  return m;
}

const MubBasis& MubBundle::ray_basis(GfElem lambda) const {
  if (lambda >= field.size()) throw UnknownLabelError("no such ray label");
  return bases[lambda];
}

namespace {

std::vector<Curve> make_striation(const Field& field, const Curve& origin,
                                  const LinearizedMap& off_alpha,
                                  const LinearizedMap& off_beta) {
  std::vector<Curve> striation;
  striation.reserve(field.size());
  for (GfElem kappa = 0; kappa < field.size(); ++kappa) {
    striation.push_back(translated(
        origin, {off_alpha.eval(field, kappa), off_beta.eval(field, kappa)}));
  }
  return striation;
}

MubBundle build_bundle(const Field& field, const MubGenerators& gen) {
  const int n = field.n();
  const GfElem q = field.size();
  MubBundle bundle{field, gen, {}, {}};

  const Unitary u = p_op(field, gen.h) * q_op(field, gen.g) * p_op(field, gen.f);
  const SymplecticLabelMap phi = label_map(field, gen);

  bundle.bases.reserve(q + 1);
  for (GfElem lambda = 0; lambda < q; ++lambda) {
    MubBasis basis;
    basis.label = lambda;
    basis.states = u * p_op(field, ray_function(field, lambda));

    // Image of the ray (tau, lambda tau) under the label map.
    const LinearizedMap scale = LinearizedMap::scaling(n, lambda);
    basis.origin_curve = {
        add(phi.a_from_a, compose(field, phi.a_from_b, scale)),
        add(phi.b_from_a, compose(field, phi.b_from_b, scale))};
    // Translate kappa is the image of (0, kappa).
    basis.striation =
        make_striation(field, basis.origin_curve, phi.a_from_b, phi.b_from_b);
    bundle.bases.push_back(std::move(basis));
  }

  MubBasis xb;
  xb.x_branch = true;
  xb.states = u * fourier(field);
  // Image of the x-axis (0, tau); translate kappa is the image of (kappa, 0).
  xb.origin_curve = {phi.a_from_b, phi.b_from_b};
  xb.striation = make_striation(field, xb.origin_curve, phi.a_from_a, phi.b_from_a);
  bundle.bases.push_back(std::move(xb));

  std::vector<Curve> origin_curves;
  origin_curves.reserve(q + 1);
  for (const auto& b : bundle.bases) origin_curves.push_back(b.origin_curve);
  bundle.signature = bundle_signature(field, origin_curves);
  return bundle;
}

}  // namespace

MubBundle standard_mubs(const Field& field) {
  const CurveFunction zero = zero_curve_function(field);
  return build_bundle(field, {zero, zero, zero});
}

MubBundle rotated_mubs(const Field& field, const CurveFunction& f,
                       const CurveFunction& g, const CurveFunction& h) {
  return build_bundle(field, {f, g, h});
}

UnbiasednessReport verify_unbiased(const MubBundle& bundle) {
  UnbiasednessReport report;
  const double target = 1.0 / double(bundle.field.size());
  for (std::size_t i = 0; i < bundle.bases.size(); ++i) {
    const auto& a = bundle.bases[i].states;
    const Eigen::MatrixXcd gram = a.adjoint() * a;
    const double intra =
        (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols()))
            .cwiseAbs()
            .maxCoeff();
    report.max_intra_deviation = std::max(report.max_intra_deviation, intra);
    for (std::size_t j = i + 1; j < bundle.bases.size(); ++j) {
      const Eigen::MatrixXcd cross = a.adjoint() * bundle.bases[j].states;
      const double dev =
          (cross.cwiseAbs2().array() - target).abs().maxCoeff();
      report.max_cross_deviation = std::max(report.max_cross_deviation, dev);
    }
  }
  return report;
}

BundleStructureReport verify_bundle_structure(const MubBundle& bundle) {
  const Field& field = bundle.field;
  const GfElem q = field.size();
  BundleStructureReport report;

  report.striations_partition_grid = true;
  for (const auto& basis : bundle.bases) {
    std::vector<int> covered(q * q, 0);
    for (const Curve& c : basis.striation) {
      for (const Point& p : curve_points(field, c)) {
        ++covered[p.first * q + p.second];
      }
    }
    for (int count : covered) {
      if (count != 1) {
        report.striations_partition_grid = false;
        break;
      }
    }
  }

  report.single_cross_intersections = true;
  for (std::size_t i = 0; i < bundle.bases.size() && report.single_cross_intersections; ++i) {
    for (std::size_t j = i + 1; j < bundle.bases.size(); ++j) {
      bool done = false;
      for (const Curve& ci : bundle.bases[i].striation) {
        for (const Curve& cj : bundle.bases[j].striation) {
          if (intersect(field, ci, cj).size() != 1) {
            report.single_cross_intersections = false;
            done = true;
            break;
          }
        }
        if (done) break;
      }
      if (done) break;
    }
  }
  return report;
}

const Curve& associate_curve(const MubBundle& bundle, GfElem lambda,
                             GfElem kappa, bool is_x_axis) {
  if (kappa >= bundle.field.size()) throw UnknownLabelError("no such kappa");
  const MubBasis& basis =
      is_x_axis ? bundle.x_basis() : bundle.ray_basis(lambda);
  return basis.striation[kappa];
}

Preset preset_from_name(const std::string& name) {
  if (name == "standard") return Preset::standard;
  if (name == "set162") return Preset::set162;
  if (name == "set234") return Preset::set234;
  if (name == "set090") return Preset::set090;
  throw UnknownLabelError("unknown preset '" + name +
                          "' (expected standard|set162|set234|set090)");
}

std::string preset_name(Preset p) {
  switch (p) {
    case Preset::standard: return "standard";
    case Preset::set162: return "set162";
    case Preset::set234: return "set234";
    case Preset::set090: return "set090";
  }
  return "?";
}

MubBundle build_preset(const Field& field, Preset preset) {
  if (preset == Preset::standard) return standard_mubs(field);
  if (field.n() != 3) {
    throw UnknownLabelError("preset " + preset_name(preset) +
                            " is defined only for n=3");
  }
  const GfElem s = field.primitive_element();
  const CurveFunction zero = zero_curve_function(field);
  switch (preset) {
    case Preset::set162: {
      const CurveFunction f = curve_function_from_coeffs(field, {1, 1, 1});
      return rotated_mubs(field, f, zero, zero);
    }
    case Preset::set234: {
      // Two transformations Q_f P_f, f = mu a + a^2 + a^4 with mu = s^2.
      // mu = 1 degenerates to a (3,0,6) bundle; P_f Q_f also reaches (2,3,4)
      // but disagrees with the GHZ picture of the (2,3,4) set, and each mu
      // leaves exactly one ray eigenstate positive -- mu = s^2 leaves it at
      // lambda = s^2, keeping |Psi_{s;0}> negative in this set.
      const CurveFunction f = curve_function_from_coeffs(
          field, {field.mul(s, s), 1, 1});
      return rotated_mubs(field, f, f, zero);
    }
    case Preset::set090: {
      const CurveFunction f = curve_function_from_coeffs(
          field, {1, field.mul(s, s), s});
      return rotated_mubs(field, f, f, f);
    }
    default: break;
  }
  throw UnknownLabelError("unhandled preset");
}

}  // namespace qps
