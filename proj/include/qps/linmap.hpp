// Linearized (additive) maps on GF(2^n): f(x) = sum_r c_r x^(2^r) with
// coefficients indexed by the Frobenius power r = 0..n-1.  These represent
// curve coordinate functions.  Composition wraps exponents mod n since
// x^(2^n) = x on the field.

#pragma once

#include <vector>

#include "qps/gf.hpp"

namespace qps {

struct LinearizedMap {
  std::vector<GfElem> coeffs;  // size n

  int n() const { return int(coeffs.size()); }
  bool is_zero() const;

  static LinearizedMap zero(int n) { return {std::vector<GfElem>(n, 0)}; }
  static LinearizedMap identity(int n);
  // x -> lambda * x
  static LinearizedMap scaling(int n, GfElem lambda);

  GfElem eval(const Field& field, GfElem x) const;
  std::vector<GfElem> table(const Field& field) const;

  bool operator==(const LinearizedMap&) const = default;
};

LinearizedMap add(const LinearizedMap& a, const LinearizedMap& b);
// outer(inner(x)); coefficients w_t = sum_{r+s = t mod n} outer_r * inner_s^(2^r).
LinearizedMap compose(const Field& field, const LinearizedMap& outer,
                      const LinearizedMap& inner);

class NotAdditiveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAbelianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Recovers coefficients from a full value table by solving the Moore system
// on sigma^0..sigma^(n-1), then verifies the whole table.  Throws
// NotAdditiveError when the table is not an additive map.
LinearizedMap linearized_from_table(const Field& field,
                                    const std::vector<GfElem>& table);

// tr(k' f(k)) == tr(k f(k')) for all pairs; the condition every curve
// coordinate function must satisfy.  Checked on basis pairs (the form is
// biadditive).
bool satisfies_abelian_condition(const Field& field, const LinearizedMap& f);

// Curve coordinate function, abelian-verified at construction.  Accepts
// either coefficient lists or full value tables; a table passing the abelian
// check is necessarily additive (the trace form is nondegenerate), so both
// inputs normalize to coefficients.
struct CurveFunction {
  LinearizedMap map;

  GfElem operator()(const Field& field, GfElem x) const {
    return map.eval(field, x);
  }
  bool is_zero() const { return map.is_zero(); }
};

CurveFunction curve_function_from_coeffs(const Field& field,
                                         std::vector<GfElem> coeffs);
CurveFunction curve_function_from_table(const Field& field,
                                        const std::vector<GfElem>& table);
CurveFunction zero_curve_function(const Field& field);
// f(x) = lambda x, the ray functions of the standard bundle.
CurveFunction ray_function(const Field& field, GfElem lambda);

}  // namespace qps
