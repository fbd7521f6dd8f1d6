#include "qps/gf.hpp"

#include <bit>

namespace qps {

namespace {

int poly_degree(GfElem p) {
  if (p == 0) return -1;
  return std::bit_width(p) - 1;
}

// Carry-less product of two GF(2) polynomials (no reduction).
std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    a <<= 1;
    b >>= 1;
  }
  return acc;
}

// Remainder of polynomial division over GF(2); degree comparison, not
// integer comparison.
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = 63 - std::countl_zero(m);
  while (a != 0) {
    const int da = 63 - std::countl_zero(a);
    if (da < dm) break;
    a ^= m << (da - dm);
  }
  return a;
}

}  // namespace

bool poly_is_irreducible(GfElem poly, int degree) {
  if (degree < 1 || poly_degree(poly) != degree) return false;
  if ((poly & 1) == 0) return false;  // x divides
  for (GfElem d = 2; poly_degree(d) <= degree / 2; ++d) {
    if (poly_mod(poly, d) == 0) return false;
  }
  return true;
}

Field::Field(int n, GfElem irreducible_poly) : n_(n), poly_(irreducible_poly) {
  if (n < 2 || n > 6) {
    throw DegreeMismatchError("qubit count must satisfy 2 <= n <= 6, got " +
                              std::to_string(n));
  }
  if (poly_degree(irreducible_poly) != n) {
    throw DegreeMismatchError("polynomial degree must equal n=" +
                              std::to_string(n));
  }
  if (!poly_is_irreducible(irreducible_poly, n)) {
    throw ReduciblePolynomialError("polynomial 0x" + std::to_string(irreducible_poly) +
                                   " is reducible over GF(2)");
  }

  find_primitive_element();

  // log/exp tables from the primitive element.
  const GfElem q = size();
  log_.assign(q, -1);
  exp_.assign(2 * (q - 1), 0);
  GfElem acc = 1;
  for (GfElem k = 0; k < q - 1; ++k) {
    exp_[k] = acc;
    exp_[k + q - 1] = acc;
    log_[acc] = int(k);
    acc = mul_slow(acc, sigma_);
  }

  trace_.resize(q);
  for (GfElem a = 0; a < q; ++a) trace_[a] = trace_slow(a);

  find_self_dual_basis();
}

Field::Field(int n, GfElem irreducible_poly, std::vector<GfElem> self_dual_basis)
    : Field(n, irreducible_poly) {
  if (int(self_dual_basis.size()) != n) {
    throw DegreeMismatchError("self-dual basis must have n elements");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int expect = i == j ? 1 : 0;
      if (trace_[mul(self_dual_basis[i], self_dual_basis[j])] != expect) {
        throw NoSelfDualBasisError(
            "supplied basis fails tr(theta_i theta_j) = delta_ij");
      }
    }
  }
  theta_ = std::move(self_dual_basis);
}

GfElem Field::default_poly(int n) {
  switch (n) {
    case 2: return 0b111;     // x^2+x+1
    case 3: return 0b1011;    // x^3+x+1 (the paper's sigma^3+sigma+1 = 0)
    case 4: return 0b10011;   // x^4+x+1
    default:
      throw DegreeMismatchError("no default polynomial for n=" +
                                std::to_string(n) + "; supply one explicitly");
  }
}

Field Field::with_default_poly(int n) { return Field(n, default_poly(n)); }

GfElem Field::mul_slow(GfElem a, GfElem b) const {
  return GfElem(poly_mod(clmul(a, b), poly_));
}

GfElem Field::mul(GfElem a, GfElem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

GfElem Field::pow(GfElem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const std::uint64_t m = size() - 1;
  return exp_[(std::uint64_t(log_[a]) * (e % m)) % m];
}

GfElem Field::inverse(GfElem a) const {
  if (a == 0) throw InverseOfZeroError();
  const GfElem m = size() - 1;
  return exp_[(m - GfElem(log_[a])) % m];
}

int Field::trace_slow(GfElem a) const {
  GfElem s = a;
  GfElem acc = a;
  for (int r = 1; r < n_; ++r) {
    s = mul_slow(s, s);
    acc ^= s;
  }
  // The trace lies in the prime field for every element.
  if (acc > 1) throw std::logic_error("trace fell outside GF(2)");
  return int(acc);
}

void Field::find_primitive_element() {
  const GfElem q = size();
  for (GfElem a = 2; a < q; ++a) {
    GfElem acc = a;
    GfElem ord = 1;
    while (acc != 1) {
      acc = mul_slow(acc, a);
      ++ord;
    }
    if (ord == q - 1) {
      sigma_ = a;
      return;
    }
  }
  throw std::logic_error("no primitive element found");
}

void Field::find_self_dual_basis() {
  // Exhaustive DFS over increasing tuples so the lexicographically smallest
  // valid tuple is returned.  tr(theta^2) = tr(theta), so every candidate
  // must have trace one; pairwise products must have trace zero.  The Gram
  // condition already forces linear independence over GF(2).
  const GfElem q = size();
  std::vector<GfElem> tuple;
  tuple.reserve(n_);

  auto dfs = [&](auto&& self, GfElem start) -> bool {
    if (int(tuple.size()) == n_) return true;
    for (GfElem c = start; c < q; ++c) {
      if (trace_[c] != 1) continue;
      bool ok = true;
      for (GfElem t : tuple) {
        if (trace_[mul(t, c)] != 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      tuple.push_back(c);
      if (self(self, c + 1)) return true;
      tuple.pop_back();
    }
    return false;
  };

  if (!dfs(dfs, 1)) {
    throw NoSelfDualBasisError("no self-dual basis found for n=" +
                               std::to_string(n_));
  }
  theta_ = tuple;
}

std::vector<int> Field::expand(GfElem a) const {
  std::vector<int> bits(n_);
  for (int i = 0; i < n_; ++i) bits[i] = trace_[mul(a, theta_[i])];
  return bits;
}

GfElem Field::from_coords(const std::vector<int>& bits) const {
  if (int(bits.size()) != n_) {
    throw DegreeMismatchError("coordinate vector must have n entries");
  }
  GfElem a = 0;
  for (int i = 0; i < n_; ++i) {
    if (bits[i]) a ^= theta_[i];
  }
  return a;
}

int Field::log(GfElem a) const {
  if (a == 0) throw InverseOfZeroError();
  return log_[a];
}

GfElem Field::sigma_pow(int k) const {
  const int m = int(size()) - 1;
  return exp_[GfElem(((k % m) + m) % m)];
}

std::string Field::format(GfElem a, bool power_style) const {
  if (!power_style) return std::to_string(a);
  if (a == 0) return "0";
  const int k = log_[a];
  if (k == 0) return "1";
  if (k == 1) return "s";
  return "s^" + std::to_string(k);
}

}  // namespace qps
