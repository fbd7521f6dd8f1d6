#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qps/mubs.hpp"

using namespace qps;

namespace {

LinearizedMap random_abelian_map(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<GfElem> pick(0, f.size() - 1);
  const int n = f.n();
  LinearizedMap m = LinearizedMap::zero(n);
  m.coeffs[0] = pick(rng);
  for (int s = 1; 2 * s < n; ++s) {
    m.coeffs[s] = pick(rng);
    m.coeffs[n - s] = f.pow(m.coeffs[s], 1ull << (n - s));
  }
  if (n % 2 == 0) {
    GfElem c;
    do {
      c = pick(rng);
    } while (f.pow(c, 1ull << (n / 2)) != c);
    m.coeffs[n / 2] = c;
  }
  return m;
}

std::set<Point> point_set(const Field& f, const Curve& c) {
  const auto pts = curve_points(f, c);
  return {pts.begin(), pts.end()};
}

}  // namespace

TEST_CASE("standard bundle basics") {
  Field f8(3, 0b1011);
  const MubBundle bundle = standard_mubs(f8);
  REQUIRE(bundle.bases.size() == 9);
  CHECK(bundle.signature.to_string() == "(3,0,6)");

  // lambda = 0 basis is literally the computational basis
  CHECK((bundle.ray_basis(0).states - Eigen::MatrixXcd::Identity(8, 8))
            .cwiseAbs()
            .maxCoeff() < 1e-12);

  // striation curves are the lines beta = lambda alpha + kappa and alpha = kappa
  for (GfElem lambda = 0; lambda < 8; ++lambda) {
    for (GfElem kappa = 0; kappa < 8; ++kappa) {
      const Curve& c = associate_curve(bundle, lambda, kappa);
      for (GfElem tau = 0; tau < 8; ++tau) {
        CHECK(c.point_at(f8, tau) ==
              Point{tau, GfElem(f8.mul(lambda, tau) ^ kappa)});
      }
    }
  }
  for (GfElem kappa = 0; kappa < 8; ++kappa) {
    const Curve& c = associate_curve(bundle, 0, kappa, true);
    for (GfElem tau = 0; tau < 8; ++tau) {
      CHECK(c.point_at(f8, tau) == Point{kappa, tau});
    }
  }
  // kappa = 0 returns the origin curve of the striation
  CHECK_FALSE(associate_curve(bundle, 3, 0).has_offset());
  CHECK_THROWS_AS(associate_curve(bundle, 9, 0), UnknownLabelError);
  CHECK_THROWS_AS(associate_curve(bundle, 0, 9), UnknownLabelError);
}

TEST_CASE("standard n=2 overlaps are exactly 1/4 across bases") {
  Field f4(2, 0b111);
  const MubBundle bundle = standard_mubs(f4);
  for (std::size_t i = 0; i < bundle.bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bundle.bases.size(); ++j) {
      const Eigen::MatrixXcd cross =
          bundle.bases[i].states.adjoint() * bundle.bases[j].states;
      CHECK((cross.cwiseAbs2().array() - 0.25).abs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("identity generators reproduce the standard bundle") {
  Field f8(3, 0b1011);
  const CurveFunction zero = zero_curve_function(f8);
  const MubBundle rotated = rotated_mubs(f8, zero, zero, zero);
  const MubBundle standard = standard_mubs(f8);
  for (std::size_t b = 0; b < standard.bases.size(); ++b) {
    CHECK((rotated.bases[b].states - standard.bases[b].states)
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    for (GfElem kappa = 0; kappa < 8; ++kappa) {
      CHECK(point_set(f8, rotated.bases[b].striation[kappa]) ==
            point_set(f8, standard.bases[b].striation[kappa]));
    }
  }
}

TEST_CASE("presets") {
  Field f8(3, 0b1011);
  CHECK(build_preset(f8, Preset::standard).signature.to_string() == "(3,0,6)");
  CHECK(build_preset(f8, Preset::set162).signature.to_string() == "(1,6,2)");
  CHECK(build_preset(f8, Preset::set234).signature.to_string() == "(2,3,4)");
  CHECK(build_preset(f8, Preset::set090).signature.to_string() == "(0,9,0)");

  Field f4(2, 0b111);
  CHECK_THROWS_AS(build_preset(f4, Preset::set162), UnknownLabelError);
  CHECK(build_preset(f4, Preset::standard).signature.to_string() == "(3,2)");

  CHECK(preset_from_name("set090") == Preset::set090);
  CHECK(preset_name(Preset::set234) == "set234");
  CHECK_THROWS_AS(preset_from_name("set999"), UnknownLabelError);
}

TEST_CASE("unbiasedness verification and the repeated-basis control") {
  Field f8(3, 0b1011);
  for (Preset p : {Preset::standard, Preset::set162, Preset::set234,
                   Preset::set090}) {
    const auto report = verify_unbiased(build_preset(f8, p));
    CHECK(report.max_cross_deviation < 1e-10);
    CHECK(report.max_intra_deviation < 1e-10);
  }

  MubBundle corrupted = standard_mubs(f8);
  corrupted.bases[1].states = corrupted.bases[2].states;
  const auto report = verify_unbiased(corrupted);
  CHECK(report.max_cross_deviation ==
        doctest::Approx(1.0 - 1.0 / 8.0).epsilon(1e-9));
}

TEST_CASE("every basis diagonalizes its monomial set") {
  Field f8(3, 0b1011);
  for (Preset p : {Preset::standard, Preset::set090, Preset::set234}) {
    const MubBundle bundle = build_preset(f8, p);
    for (const MubBasis& basis : bundle.bases) {
      for (const Point& mono : basis.monomials(f8)) {
        const Unitary d = displacement(f8, mono.first, mono.second);
        for (GfElem kappa = 0; kappa < 8; ++kappa) {
          const StateVector psi = basis.states.col(kappa);
          const std::complex<double> ev = psi.adjoint() * d * psi;
          CHECK(std::abs(std::abs(ev) - 1.0) < 1e-9);
          CHECK((d * psi - ev * psi).norm() < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("kappa = 0 carries all positive eigenvalues of the phased monomials") {
  Field f8(3, 0b1011);
  for (Preset p : {Preset::standard, Preset::set090}) {
    const MubBundle bundle = build_preset(f8, p);
    const MubGenerators& gen = bundle.generators;
    const Unitary u =
        p_op(f8, gen.h) * q_op(f8, gen.g) * p_op(f8, gen.f);
    for (GfElem lambda = 0; lambda < 8; ++lambda) {
      const Unitary pl = p_op(f8, ray_function(f8, lambda));
      const StateVector psi0 = bundle.ray_basis(lambda).states.col(0);
      for (GfElem alpha = 0; alpha < 8; ++alpha) {
        const Unitary t = u * pl * z_op(f8, alpha) * pl.adjoint() * u.adjoint();
        const std::complex<double> ev = psi0.adjoint() * t * psi0;
        CHECK(ev.real() == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::abs(ev.imag()) < 1e-9);
      }
    }
  }
}

TEST_CASE("bundle structure: partitions and single crossings") {
  Field f8(3, 0b1011);
  for (Preset p : {Preset::standard, Preset::set162, Preset::set234,
                   Preset::set090}) {
    CHECK(verify_bundle_structure(build_preset(f8, p)).ok());
  }
  Field f4(2, 0b111);
  CHECK(verify_bundle_structure(standard_mubs(f4)).ok());
}

TEST_CASE("conjugation reproduces the curve labels for random triples") {
  for (int n : {2, 3}) {
    Field f = Field::with_default_poly(n);
    std::mt19937_64 rng(0xE0 + n);
    for (int trial = 0; trial < 50; ++trial) {
      const CurveFunction cf{random_abelian_map(f, rng)};
      const CurveFunction cg{random_abelian_map(f, rng)};
      const CurveFunction ch{random_abelian_map(f, rng)};
      const MubGenerators gen{cf, cg, ch};
      const SymplecticLabelMap phi = label_map(f, gen);
      const Unitary u = p_op(f, ch) * q_op(f, cg) * p_op(f, cf);
      for (GfElem lambda = 0; lambda < f.size(); ++lambda) {
        for (GfElem tau = 0; tau < f.size(); ++tau) {
          const Point src{tau, f.mul(lambda, tau)};
          const Point img = phi.apply(f, src);
          const Unitary lhs =
              u * displacement(f, src.first, src.second) * u.adjoint();
          const Unitary target = displacement(f, img.first, img.second);
          Eigen::Index r, c;
          target.cwiseAbs().maxCoeff(&r, &c);
          const std::complex<double> scalar = lhs(r, c) / target(r, c);
          CHECK(std::abs(std::abs(scalar) - 1.0) < 1e-10);
          CHECK((lhs - scalar * target).cwiseAbs().maxCoeff() < 1e-10);
        }
      }
      // x-branch labels: image of (kappa, 0) under the map, matching Z_kappa
      for (GfElem kappa = 0; kappa < f.size(); ++kappa) {
        const Point img = phi.apply(f, {kappa, 0});
        const Unitary lhs = u * z_op(f, kappa) * u.adjoint();
        const Unitary target = displacement(f, img.first, img.second);
        Eigen::Index r, c;
        target.cwiseAbs().maxCoeff(&r, &c);
        const std::complex<double> scalar = lhs(r, c) / target(r, c);
        CHECK(std::abs(std::abs(scalar) - 1.0) < 1e-10);
        CHECK((lhs - scalar * target).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
}

TEST_CASE("eigenstates of nonintersecting curves are unbiased") {
  Field f8(3, 0b1011);
  std::mt19937_64 rng(0xBEEF);
  int checked = 0;
  while (checked < 8) {
    const CurveFunction f1{random_abelian_map(f8, rng)};
    const CurveFunction g1{random_abelian_map(f8, rng)};
    const CurveFunction h1{random_abelian_map(f8, rng)};
    const CurveFunction f2{random_abelian_map(f8, rng)};
    const CurveFunction g2{random_abelian_map(f8, rng)};
    const CurveFunction h2{random_abelian_map(f8, rng)};
    const MubBundle b1 = rotated_mubs(f8, f1, g1, h1);
    const MubBundle b2 = rotated_mubs(f8, f2, g2, h2);
    std::uniform_int_distribution<std::size_t> pick(0, 8);
    const MubBasis& basis1 = b1.bases[pick(rng)];
    const MubBasis& basis2 = b2.bases[pick(rng)];
    const auto common =
        intersect(f8, basis1.origin_curve, basis2.origin_curve);
    if (common.size() != 1) continue;
    ++checked;
    const Eigen::MatrixXcd cross = basis1.states.adjoint() * basis2.states;
    CHECK((cross.cwiseAbs2().array() - 1.0 / 8.0).abs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("rotated striations translate by the mapped shift labels") {
  Field f8(3, 0b1011);
  const MubBundle bundle = build_preset(f8, Preset::set090);
  const SymplecticLabelMap phi = label_map(f8, bundle.generators);
  for (GfElem lambda = 0; lambda < 8; ++lambda) {
    for (GfElem kappa = 0; kappa < 8; ++kappa) {
      const Curve& curve = bundle.ray_basis(lambda).striation[kappa];
      const Point off = phi.apply(f8, {0, kappa});
      CHECK(Point{curve.offset_alpha, curve.offset_beta} == off);
    }
  }
  for (GfElem kappa = 0; kappa < 8; ++kappa) {
    const Curve& curve = bundle.x_basis().striation[kappa];
    const Point off = phi.apply(f8, {kappa, 0});
    CHECK(Point{curve.offset_alpha, curve.offset_beta} == off);
  }
}
