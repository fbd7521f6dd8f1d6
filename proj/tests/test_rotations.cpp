#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qps/rotations.hpp"

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

}  // namespace

TEST_CASE("coefficients for the zero function are all one") {
  Field f8(3, 0b1011);
  const auto c = solve_coefficients(f8, zero_curve_function(f8));
  for (GfElem k = 0; k < 8; ++k) {
    CHECK(c.ipow(k) == 0);
    CHECK(c.value(k) == std::complex<double>(1, 0));
  }
}

TEST_CASE("seeds follow the principal square root of chi(theta f(theta))") {
  Field f8(3, 0b1011);
  for (GfElem lambda = 0; lambda < 8; ++lambda) {
    const CurveFunction f = ray_function(f8, lambda);
    const auto c = solve_coefficients(f8, f);
    for (GfElem theta : f8.self_dual_basis()) {
      const int tr = f8.trace(f8.mul(lambda, f8.mul(theta, theta)));
      CHECK(c.ipow(theta) == (tr ? 1 : 0));  // +1 or +i
    }
    // conjugate branch flips the imaginary seeds
    const auto cc = solve_coefficients(f8, f, RootBranch::conjugate);
    for (GfElem theta : f8.self_dual_basis()) {
      CHECK(((c.ipow(theta) == 0 && cc.ipow(theta) == 0) ||
             (c.ipow(theta) == 1 && cc.ipow(theta) == 3)));
    }
  }
}

TEST_CASE("recurrence holds on every pair, exactly and in complex arithmetic") {
  Field f8(3, 0b1011);
  const CurveFunction f = curve_function_from_coeffs(
      f8, {1, f8.sigma_pow(2), f8.primitive_element()});
  for (RootBranch branch : {RootBranch::principal, RootBranch::conjugate}) {
    const auto c = solve_coefficients(f8, f, branch);
    for (GfElem a = 0; a < 8; ++a) {
      for (GfElem b = 0; b < 8; ++b) {
        const int chi = f8.character(f8.mul(b, f(f8, a)));
        CHECK((c.ipow(a) + c.ipow(b)) % 4 ==
              (c.ipow(a ^ b) + (chi == -1 ? 2 : 0)) % 4);
        const auto lhs = c.value(a) * c.value(b);
        const auto rhs = double(chi) * c.value(a ^ b);
        CHECK(std::abs(lhs - rhs) == 0.0);
      }
    }
  }
}

TEST_CASE("a non-abelian map fails the recurrence") {
  Field f8(3, 0b1011);
  // bypass the validating factory on purpose
  const CurveFunction bad{LinearizedMap{{0, 1, 0}}};
  CHECK_THROWS_AS(solve_coefficients(f8, bad), InconsistentRecurrenceError);
}

TEST_CASE("P and Q for the zero function are the identity") {
  Field f8(3, 0b1011);
  const CurveFunction zero = zero_curve_function(f8);
  CHECK((p_op(f8, zero) - Unitary::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((q_op(f8, zero) - Unitary::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Q is diagonal with unit-modulus entries") {
  Field f8(3, 0b1011);
  const CurveFunction f = curve_function_from_coeffs(f8, {1, 1, 1});
  const Unitary q = q_op(f8, f);
  for (GfElem r = 0; r < 8; ++r) {
    CHECK(std::abs(std::abs(q(r, r)) - 1.0) < 1e-12);
    for (GfElem c = 0; c < 8; ++c) {
      if (r != c) CHECK(std::abs(q(r, c)) < 1e-15);
    }
  }
}

TEST_CASE("conjugation contracts, exhaustive over labels") {
  Field f8(3, 0b1011);
  const CurveFunction f = curve_function_from_coeffs(
      f8, {1, f8.sigma_pow(2), f8.primitive_element()});
  const Unitary p = p_op(f8, f);
  CHECK(unitarity_deviation(p) < 1e-12);
  const auto prep = check_p_contract(f8, f, p);
  CHECK(prep.max_deviation < 1e-10);
  CHECK(prep.max_scalar_modulus_error < 1e-10);

  Field f4(2, 0b111);
  const CurveFunction g = curve_function_from_coeffs(f4, {3, 1});
  const Unitary q = q_op(f4, g);
  CHECK(unitarity_deviation(q) < 1e-12);
  const auto qrep = check_q_contract(f4, g, q);
  CHECK(qrep.max_deviation < 1e-10);
  CHECK(qrep.max_scalar_modulus_error < 1e-10);
}

TEST_CASE("contracts hold for 50 seeded linearized functions per field") {
  for (int n : {2, 3}) {
    Field f = Field::with_default_poly(n);
    std::mt19937_64 rng(0x51f0a3 + n);
    for (int trial = 0; trial < 50; ++trial) {
      const CurveFunction fn{random_abelian_map(f, rng)};
      REQUIRE(satisfies_abelian_condition(f, fn.map));
      const auto prep = check_p_contract(f, fn, p_op(f, fn));
      CHECK(prep.max_deviation < 1e-10);
      CHECK(prep.max_scalar_modulus_error < 1e-10);
      const auto qrep = check_q_contract(f, fn, q_op(f, fn));
      CHECK(qrep.max_deviation < 1e-10);
      CHECK(qrep.max_scalar_modulus_error < 1e-10);
    }
  }
}

TEST_CASE("extension is order-independent: table values satisfy c(k)^2 = chi(k f(k))") {
  Field f8(3, 0b1011);
  const CurveFunction f = curve_function_from_coeffs(f8, {1, 1, 1});
  const auto c = solve_coefficients(f8, f);
  for (GfElem k = 0; k < 8; ++k) {
    const int chi = f8.character(f8.mul(k, f(f8, k)));
    CHECK((2 * c.ipow(k)) % 4 == (chi == -1 ? 2 : 0));
  }
}
