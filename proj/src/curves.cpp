#include "qps/curves.hpp"

#include <algorithm>
#include <set>

namespace qps {

Curve ray_curve(const Field& field, GfElem lambda) {
  return {LinearizedMap::identity(field.n()),
          LinearizedMap::scaling(field.n(), lambda)};
}

Curve x_axis_curve(const Field& field) {
  return {LinearizedMap::zero(field.n()), LinearizedMap::identity(field.n())};
}

Curve translated(Curve curve, Point offset) {
  curve.offset_alpha ^= offset.first;
  curve.offset_beta ^= offset.second;
  return curve;
}

std::vector<Point> curve_points(const Field& field, const Curve& curve) {
  std::vector<Point> pts;
  pts.reserve(field.size());
  for (GfElem tau = 0; tau < field.size(); ++tau) {
    pts.push_back(curve.point_at(field, tau));
  }
  return pts;
}

namespace {

// tr(a b' + a' b) over the linear part.
int symplectic_form(const Field& field, Point p, Point q) {
  return field.trace(field.mul(p.first, q.second)) ^
         field.trace(field.mul(q.first, p.second));
}

std::vector<Point> linear_points(const Field& field, const Curve& curve) {
  std::vector<Point> pts;
  pts.reserve(field.size());
  for (GfElem tau = 0; tau < field.size(); ++tau) {
    pts.emplace_back(curve.alpha.eval(field, tau), curve.beta.eval(field, tau));
  }
  return pts;
}

}  // namespace

CurveReport is_stabilizer_curve(const Field& field, const Curve& curve) {
  CurveReport report;
  const auto pts = linear_points(field, curve);

  report.origin = pts[0] == Point{0, 0};

  report.commuting = true;
  for (std::size_t i = 0; i < pts.size() && report.commuting; ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (symplectic_form(field, pts[i], pts[j]) != 0) {
        report.commuting = false;
        break;
      }
    }
  }

  std::set<Point> distinct(pts.begin(), pts.end());
  report.injective = distinct.size() == pts.size();
  return report;
}

bool curve_coefficient_condition(const Field& field, const Curve& curve) {
  // C_d = sum_r (alpha_r beta_{r+d})^(2^(n-r)) must satisfy C_d = C_{n-d}^(2^d)
  // for every d (cyclic indices), the coefficient form of pairwise
  // commutation.
  const int n = field.n();
  std::vector<GfElem> c(n, 0);
  for (int d = 0; d < n; ++d) {
    GfElem acc = 0;
    for (int r = 0; r < n; ++r) {
      const GfElem prod =
          field.mul(curve.alpha.coeffs[r], curve.beta.coeffs[(r + d) % n]);
      acc ^= field.pow(prod, 1ull << ((n - r) % n));
    }
    c[d] = acc;
  }
  for (int d = 0; d < n; ++d) {
    if (c[d] != field.pow(c[(n - d) % n], 1ull << d)) return false;
  }
  return true;
}

std::string to_string(Regularity r) {
  switch (r) {
    case Regularity::regular_beta_of_alpha: return "regular_beta_of_alpha";
    case Regularity::regular_alpha_of_beta: return "regular_alpha_of_beta";
    case Regularity::degenerate: return "degenerate";
  }
  return "?";
}

Regularity classify_regularity(const Field& field, const Curve& curve) {
  auto bijective = [&](const LinearizedMap& m) {
    std::set<GfElem> seen;
    for (GfElem tau = 0; tau < field.size(); ++tau) seen.insert(m.eval(field, tau));
    return seen.size() == field.size();
  };
  if (bijective(curve.alpha)) return Regularity::regular_beta_of_alpha;
  if (bijective(curve.beta)) return Regularity::regular_alpha_of_beta;
  return Regularity::degenerate;
}

namespace {

// All set partitions of {0..n-1} as block-member lists.
void enumerate_partitions(int n, std::vector<std::vector<std::vector<int>>>& out) {
  std::vector<int> assign(n, 0);
  auto rec = [&](auto&& self, int idx, int max_block) -> void {
    if (idx == n) {
      std::vector<std::vector<int>> blocks(max_block);
      for (int i = 0; i < n; ++i) blocks[assign[i]].push_back(i);
      out.push_back(std::move(blocks));
      return;
    }
    for (int b = 0; b <= max_block; ++b) {
      assign[idx] = b;
      self(self, idx + 1, std::max(max_block, b + 1));
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

FactorizationPartition factorization(const Field& field, const Curve& curve) {
  const int n = field.n();
  const auto pts = linear_points(field, curve);

  // Per-qubit exponent bits of each monomial.
  std::vector<std::vector<int>> a(pts.size()), b(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    a[k] = field.expand(pts[k].first);
    b[k] = field.expand(pts[k].second);
  }

  auto block_commutes = [&](const std::vector<int>& members) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        int form = 0;
        for (int q : members) form ^= (a[i][q] & b[j][q]) ^ (a[j][q] & b[i][q]);
        if (form) return false;
      }
    }
    return true;
  };

  std::vector<std::vector<std::vector<int>>> partitions;
  enumerate_partitions(n, partitions);

  std::vector<const std::vector<std::vector<int>>*> best;
  std::size_t best_blocks = 0;
  for (const auto& p : partitions) {
    bool ok = true;
    for (const auto& block : p) {
      if (!block_commutes(block)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (p.size() > best_blocks) {
      best_blocks = p.size();
      best.clear();
    }
    if (p.size() == best_blocks) best.push_back(&p);
  }

  if (best.empty()) {
    // Unreachable: the single-block partition always commutes for a
    // commuting curve, and even for non-commuting input the form over all
    // qubits may be nonzero -- report it.
    throw NoCommutingPartitionError("no commuting partition found");
  }
  if (best.size() > 1) {
    throw AmbiguousFactorizationError(
        "two distinct finest commuting partitions found (" +
        std::to_string(best.size()) + " candidates with " +
        std::to_string(best_blocks) + " blocks)");
  }

  FactorizationPartition out;
  out.block_members = *best.front();
  for (const auto& block : out.block_members) out.blocks.push_back(int(block.size()));
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

std::vector<std::vector<int>> canonical_partitions(int n) {
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    if (remaining == 0) {
      all.push_back(cur);
      return;
    }
    for (int p = min_part; p <= remaining; ++p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, 1);
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  });
  return all;
}

std::string BundleSignature::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(counts[i]);
  }
  return s + ")";
}

BundleSignature bundle_signature(const Field& field,
                                 const std::vector<Curve>& curves) {
  if (curves.size() != field.size() + 1) {
    throw NotABundleError("a bundle has 2^n + 1 curves");
  }
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      const auto common = intersect(field, curves[i], curves[j]);
      if (common.size() != 1 || common[0] != Point{0, 0}) {
        throw NotABundleError("curves " + std::to_string(i) + " and " +
                              std::to_string(j) +
                              " do not intersect only at the origin");
      }
    }
  }

  const auto order = canonical_partitions(field.n());
  BundleSignature sig;
  sig.counts.assign(order.size(), 0);
  for (const Curve& c : curves) {
    const auto fact = factorization(field, c);
    const auto it = std::find(order.begin(), order.end(), fact.blocks);
    if (it == order.end()) throw std::logic_error("partition not in canonical order");
    ++sig.counts[std::size_t(it - order.begin())];
  }
  return sig;
}

std::vector<Point> intersect(const Field& field, const Curve& a, const Curve& b) {
  const auto pa = curve_points(field, a);
  const auto pb = curve_points(field, b);
  std::set<Point> sa(pa.begin(), pa.end());
  std::set<Point> common;
  for (const Point& p : pb) {
    if (sa.count(p)) common.insert(p);
  }
  return {common.begin(), common.end()};
}

}  // namespace qps
