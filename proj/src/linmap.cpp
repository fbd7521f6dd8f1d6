#include "qps/linmap.hpp"

namespace qps {

bool LinearizedMap::is_zero() const {
  for (GfElem c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

LinearizedMap LinearizedMap::identity(int n) {
  LinearizedMap m = zero(n);
  m.coeffs[0] = 1;
  return m;
}

LinearizedMap LinearizedMap::scaling(int n, GfElem lambda) {
  LinearizedMap m = zero(n);
  m.coeffs[0] = lambda;
  return m;
}

GfElem LinearizedMap::eval(const Field& field, GfElem x) const {
  GfElem acc = 0;
  GfElem p = x;  // x^(2^r)
  for (int r = 0; r < n(); ++r) {
    acc ^= field.mul(coeffs[r], p);
    p = field.mul(p, p);
  }
  return acc;
}

std::vector<GfElem> LinearizedMap::table(const Field& field) const {
  std::vector<GfElem> t(field.size());
  for (GfElem x = 0; x < field.size(); ++x) t[x] = eval(field, x);
  return t;
}

LinearizedMap add(const LinearizedMap& a, const LinearizedMap& b) {
  LinearizedMap out = a;
  for (int r = 0; r < out.n(); ++r) out.coeffs[r] ^= b.coeffs[r];
  return out;
}

LinearizedMap compose(const Field& field, const LinearizedMap& outer,
                      const LinearizedMap& inner) {
  const int n = field.n();
  LinearizedMap out = LinearizedMap::zero(n);
  for (int r = 0; r < n; ++r) {
    if (outer.coeffs[r] == 0) continue;
    for (int s = 0; s < n; ++s) {
      if (inner.coeffs[s] == 0) continue;
      const int t = (r + s) % n;
      out.coeffs[t] ^= field.mul(outer.coeffs[r],
                                 field.pow(inner.coeffs[s], 1ull << r));
    }
  }
  return out;
}

LinearizedMap linearized_from_table(const Field& field,
                                    const std::vector<GfElem>& table) {
  const int n = field.n();
  if (table.size() != field.size()) {
    throw NotAdditiveError("value table must have 2^n entries");
  }
  if (table[0] != 0) {
    throw NotAdditiveError("additive map must send 0 to 0");
  }

  // Moore system on the points sigma^0..sigma^(n-1): M[j][r] = e_j^(2^r),
  // unknowns c_r, right-hand side table[e_j].  Gaussian elimination over the
  // field.
  std::vector<std::vector<GfElem>> m(n, std::vector<GfElem>(n + 1));
  for (int j = 0; j < n; ++j) {
    const GfElem e = field.sigma_pow(j);
    for (int r = 0; r < n; ++r) m[j][r] = field.pow(e, 1ull << r);
    m[j][n] = table[e];
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) throw NotAdditiveError("singular Moore system");
    std::swap(m[col], m[pivot]);
    const GfElem inv = field.inverse(m[col][col]);
    for (int k = col; k <= n; ++k) m[col][k] = field.mul(m[col][k], inv);
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const GfElem factor = m[row][col];
      for (int k = col; k <= n; ++k) {
        m[row][k] ^= field.mul(factor, m[col][k]);
      }
    }
  }
  LinearizedMap out = LinearizedMap::zero(n);
  for (int r = 0; r < n; ++r) out.coeffs[r] = m[r][n];

  for (GfElem x = 0; x < field.size(); ++x) {
    if (out.eval(field, x) != table[x]) {
      throw NotAdditiveError("value table is not an additive map");
    }
  }
  return out;
}

bool satisfies_abelian_condition(const Field& field, const LinearizedMap& f) {
  // Biadditive in both slots, so basis pairs suffice; elements 2^i form a
  // GF(2)-basis in the polynomial encoding.
  for (int i = 0; i < field.n(); ++i) {
    const GfElem a = GfElem(1) << i;
    for (int j = i + 1; j < field.n(); ++j) {
      const GfElem b = GfElem(1) << j;
      if (field.trace(field.mul(b, f.eval(field, a))) !=
          field.trace(field.mul(a, f.eval(field, b)))) {
        return false;
      }
    }
  }
  return true;
}

CurveFunction curve_function_from_coeffs(const Field& field,
                                         std::vector<GfElem> coeffs) {
  if (int(coeffs.size()) != field.n()) {
    throw DegreeMismatchError("coefficient list must have n entries");
  }
  LinearizedMap m{std::move(coeffs)};
  if (!satisfies_abelian_condition(field, m)) {
    throw NotAbelianError("tr(k' f(k)) != tr(k f(k')) for some pair");
  }
  return {std::move(m)};
}

CurveFunction curve_function_from_table(const Field& field,
                                        const std::vector<GfElem>& table) {
  LinearizedMap m = linearized_from_table(field, table);
  if (!satisfies_abelian_condition(field, m)) {
    throw NotAbelianError("tr(k' f(k)) != tr(k f(k')) for some pair");
  }
  return {std::move(m)};
}

CurveFunction zero_curve_function(const Field& field) {
  return {LinearizedMap::zero(field.n())};
}

CurveFunction ray_function(const Field& field, GfElem lambda) {
  return {LinearizedMap::scaling(field.n(), lambda)};
}

}  // namespace qps
