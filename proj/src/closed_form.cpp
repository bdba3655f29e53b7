#include "strtop/closed_form.hpp"

#include <stdexcept>

namespace strtop {

namespace {

// invariant-factor chain of an explicit direct sum of cyclic groups
std::vector<Int> chain_of(std::vector<Int> f) {
  std::erase_if(f, [](const Int& d) { return d <= 1; });
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        Int g = gcd_int(f[i], f[j]);
        if (g != f[i] && g != f[j]) {
          Int l = f[i] / g * f[j];
          f[i] = g;
          f[j] = l;
          changed = true;
        }
      }
  }
  std::sort(f.begin(), f.end());
  std::erase_if(f, [](const Int& d) { return d == 1; });
  return f;
}

GroupDescriptor circle_group(const SphereContext& ctx, long i) {
  const long w = ctx.winding_cutoff;
  GroupDescriptor g;
  if (i == 0) {
    // one free summand per winding number (truncated)
    g.rank = std::size_t(2 * w + 1);
    g.annotation.push_back("e(a⊗x^w), |w| ≤ " + std::to_string(w));
    return g;
  }
  if (i % 2 == 1) {
    // ⊕_{w≠0} ZZ_|w| ⊕ ZZ, truncated
    g.rank = 1;
    std::vector<Int> factors;
    for (long v = 2; v <= w; ++v) {
      g.torsion_order *= Int(v) * Int(v);
      factors.push_back(v);
      factors.push_back(v);
    }
    g.refinement = chain_of(factors);
    g.annotation.push_back("1⊗x^w classes, |w| ≤ " + std::to_string(w));
    return g;
  }
  g.rank = 1;  // the classifying-space tower
  g.annotation.push_back("γ_" + std::to_string(i / 2));
  return g;
}

GroupDescriptor odd_group(const SphereContext& ctx, long i) {
  const long step = ctx.n - 1;
  GroupDescriptor g;
  if (i == 0) {
    g.rank = 1;
    g.annotation.push_back("e(a⊗1)");
    return g;
  }
  if (i % 2 == 0) {
    g.rank = (i % step == 0) ? 2 : 1;
    g.annotation.push_back("γ_" + std::to_string(i / 2));
    if (i % step == 0) g.annotation.push_back("e(a⊗u^" + std::to_string(i / step) + ")");
    return g;
  }
  // odd degree: torsion of order k! for the block k containing the degree
  long k = (i - 1) / step;
  g.torsion_order = factorial_int(k);
  if (g.torsion_order == 2) g.refinement = {2};
  if (g.torsion_order == 6) g.refinement = {6};  // abelian of squarefree order is cyclic
  g.annotation.push_back("t_" + std::to_string(k));
  return g;
}

GroupDescriptor even_group(const SphereContext& ctx, long i) {
  const long period = 2 * ctx.n - 2;
  GroupDescriptor g;
  if (i == 0) {
    g.rank = 1;
    g.annotation.push_back("e(a)");
    return g;
  }
  if (i % 2 == 1) {
    // ZZ e(bv^k) in degrees k(2n-2)+n-1, zero otherwise
    if ((i - (ctx.n - 1)) % period == 0) {
      g.rank = 1;
      g.annotation.push_back("e(bv^" + std::to_string((i - ctx.n + 1) / period) + ")");
    }
    return g;
  }
  // even degrees: one free class from the classifying-space tower, a ZZ_2
  // for every e(av^j) with j(2n-2) <= i, and ZZ_{2j+1} for every e(v^j)
  // with j(2n-2)+n <= i
  g.rank = 1;
  long alpha = i / period;
  long beta = (i >= ctx.n) ? (i - ctx.n) / period : 0;
  for (long j = 1; j <= alpha; ++j) {
    g.torsion_order *= 2;
    g.refinement.push_back(2);
  }
  for (long j = 1; j <= beta; ++j) g.torsion_order *= Int(2 * j + 1);
  g.annotation.push_back("γ_" + std::to_string(i / 2));
  return g;
}

}  // namespace

GroupDescriptor theorem_group(const SphereContext& ctx, long degree) {
  if (degree < 0) throw std::invalid_argument("theorem_group: degree must be >= 0");
  switch (ctx.family()) {
    case SphereFamily::circle:
      return circle_group(ctx, degree);
    case SphereFamily::odd:
      return odd_group(ctx, degree);
    case SphereFamily::even:
      return even_group(ctx, degree);
  }
  return {};
}

BracketFormula theorem_bracket(const SphereContext& ctx, long p1, long p2) {
  BracketFormula f;
  switch (ctx.family()) {
    case SphereFamily::circle: {
      // [e(a⊗x^p), e(a⊗x^q)] = -pq (1⊗x^{p+q}), target order |p+q| (0 = ZZ)
      f.coefficient = -Int(p1) * Int(p2);
      f.target_order = abs_int(Int(p1) + Int(p2));
      break;
    }
    case SphereFamily::odd: {
      if (p1 < 1 || p2 < 1) throw std::invalid_argument("odd bracket parameters must be >= 1");
      // [e(a⊗u^i), e(a⊗u^j)] = ij e(1⊗u^{i+j-2}) of order i+j-1
      f.coefficient = Int(p1) * Int(p2);
      f.target_order = Int(p1 + p2 - 1);
      break;
    }
    case SphereFamily::even: {
      if (p1 < 0 || p2 < 0) throw std::invalid_argument("even bracket parameters must be >= 0");
      // [e(bv^k), e(bv^l)] = -(4kl+2k+2l+1) e(v^{k+l}) of order 2(k+l)+1
      f.coefficient = -(Int(4) * p1 * p2 + 2 * p1 + 2 * p2 + 1);
      f.target_order = Int(2 * (p1 + p2) + 1);
      break;
    }
  }
  f.vanishes = (f.target_order == 0) ? (f.coefficient == 0)
                                     : (mod_floor(f.coefficient, f.target_order) == 0);
  return f;
}

}  // namespace strtop
