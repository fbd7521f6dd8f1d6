// Stabilizer curves in the 2^n x 2^n phase-space grid: parametric point sets
// (alpha(tau), beta(tau)) built from linearized coordinate maps, optionally
// translated by an offset point.  Validation, regular/degenerate
// classification, factorization partitions, and bundle signatures.
//
// Validation applies to the linear part of a curve: striation members carry
// offsets that translate the support without changing the underlying
// commuting set.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qps/linmap.hpp"

namespace qps {

using Point = std::pair<GfElem, GfElem>;

struct Curve {
  LinearizedMap alpha;
  LinearizedMap beta;
  GfElem offset_alpha = 0;
  GfElem offset_beta = 0;

  bool has_offset() const { return offset_alpha != 0 || offset_beta != 0; }
  Point point_at(const Field& field, GfElem tau) const {
    return {alpha.eval(field, tau) ^ offset_alpha,
            beta.eval(field, tau) ^ offset_beta};
  }
};

Curve ray_curve(const Field& field, GfElem lambda);  // beta = lambda alpha
Curve x_axis_curve(const Field& field);              // alpha = 0
Curve translated(Curve curve, Point offset);

// All 2^n points, ordered by the integer encoding of tau.
std::vector<Point> curve_points(const Field& field, const Curve& curve);

struct CurveReport {
  bool commuting = false;  // all monomial pairs of the linear part commute
  bool origin = false;     // passes through (0,0) modulo offset
  bool injective = false;  // 2^n distinct points
  bool valid() const { return commuting && origin && injective; }
};

CurveReport is_stabilizer_curve(const Field& field, const Curve& curve);

// The paper's coefficient condition with cyclic index wrapping; equivalent
// to pairwise commutation for linearized curves and kept as a cross-check
// against the authoritative oracle above.
bool curve_coefficient_condition(const Field& field, const Curve& curve);

enum class Regularity { regular_beta_of_alpha, regular_alpha_of_beta, degenerate };
std::string to_string(Regularity r);

Regularity classify_regularity(const Field& field, const Curve& curve);

struct FactorizationPartition {
  std::vector<int> blocks;                     // sorted ascending, sums to n
  std::vector<std::vector<int>> block_members; // qubit indices per block
  bool operator==(const FactorizationPartition& o) const {
    return blocks == o.blocks;
  }
};

class NoCommutingPartitionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class AmbiguousFactorizationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Finest partition of qubit positions such that the restricted symplectic
// form vanishes blockwise for every pair of curve monomials.  Brute force
// over all set partitions; uniqueness of the finest one is asserted.
FactorizationPartition factorization(const Field& field, const Curve& curve);

// Integer partitions of n in canonical order: most blocks first, ties broken
// lexicographically on the ascending block lists.
std::vector<std::vector<int>> canonical_partitions(int n);

struct BundleSignature {
  std::vector<int> counts;  // one per canonical partition of n
  std::string to_string() const;
  bool operator==(const BundleSignature&) const = default;
};

class NotABundleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Tallies factorization partitions over 2^n+1 curves that pairwise intersect
// only at the origin (verified; NotABundleError otherwise).
BundleSignature bundle_signature(const Field& field,
                                 const std::vector<Curve>& curves);

std::vector<Point> intersect(const Field& field, const Curve& a, const Curve& b);

}  // namespace qps
