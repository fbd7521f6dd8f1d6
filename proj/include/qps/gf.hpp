// Exact arithmetic in GF(2^n): field construction over a verified irreducible
// polynomial, traces, additive characters, and self-dual basis management.
//
// Elements are encoded as n-bit coefficient vectors in the polynomial basis
// (bit r = coefficient of x^r), stored in a GfElem integer.  The all-zero
// vector is the field zero.  Addition is XOR; multiplication is carry-less
// polynomial multiplication reduced modulo the irreducible polynomial.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qps {

using GfElem = std::uint32_t;

class ReduciblePolynomialError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegreeMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InverseOfZeroError : public std::domain_error {
 public:
  InverseOfZeroError() : std::domain_error("inverse of the zero element") {}
};

// Must never fire for binary fields; a throw means an internal failure.
class NoSelfDualBasisError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Trial division over GF(2) by every polynomial of degree 1..deg/2.
bool poly_is_irreducible(GfElem poly, int degree);

class Field {
 public:
  // Verifies the polynomial, finds the primitive element (smallest by
  // integer encoding) and the self-dual basis (lexicographically smallest
  // valid tuple), and memoizes trace/log tables.
  Field(int n, GfElem irreducible_poly);

  // Same, but with a caller-supplied self-dual basis (validated against
  // tr(theta_i theta_j) = delta_ij).
  Field(int n, GfElem irreducible_poly, std::vector<GfElem> self_dual_basis);

  // Default polynomials: n=2: x^2+x+1, n=3: x^3+x+1, n=4: x^4+x+1.
  // Other degrees must be user-supplied.
  static Field with_default_poly(int n);
  static GfElem default_poly(int n);

  int n() const { return n_; }
  GfElem size() const { return GfElem(1) << n_; }
  GfElem poly() const { return poly_; }
  GfElem primitive_element() const { return sigma_; }
  const std::vector<GfElem>& self_dual_basis() const { return theta_; }

  GfElem add(GfElem a, GfElem b) const { return a ^ b; }
  GfElem mul(GfElem a, GfElem b) const;
  GfElem pow(GfElem a, std::uint64_t e) const;
  GfElem inverse(GfElem a) const;  // throws InverseOfZeroError

  // tr(a) = a + a^2 + ... + a^(2^(n-1)), always 0 or 1.
  int trace(GfElem a) const { return trace_[a]; }
  // chi(a) = (-1)^tr(a).
  int character(GfElem a) const { return trace_[a] ? -1 : 1; }

  // Coefficients of a in the self-dual basis: a_i = tr(a * theta_i).
  std::vector<int> expand(GfElem a) const;
  // Inverse of expand: sum of k_i * theta_i.
  GfElem from_coords(const std::vector<int>& bits) const;

  // Discrete log base sigma; a must be nonzero.
  int log(GfElem a) const;
  // Power of sigma, exponent taken mod 2^n-1.
  GfElem sigma_pow(int k) const;

  // "0", "1", "s", "s^2", ... in power style; decimal integer otherwise.
  std::string format(GfElem a, bool power_style) const;

  bool operator==(const Field& other) const {
    return n_ == other.n_ && poly_ == other.poly_ && theta_ == other.theta_;
  }

 private:
  GfElem mul_slow(GfElem a, GfElem b) const;  // carry-less, pre-table path
  int trace_slow(GfElem a) const;             // repeated squaring
  void find_primitive_element();
  void find_self_dual_basis();

  int n_ = 0;
  GfElem poly_ = 0;
  GfElem sigma_ = 0;
  std::vector<GfElem> theta_;
  std::vector<int> trace_;
  std::vector<int> log_;
  std::vector<GfElem> exp_;
};

}  // namespace qps
