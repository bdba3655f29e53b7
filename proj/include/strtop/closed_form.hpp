#pragma once

// Closed-form tables for the equivariant homology of LSⁿ and the string
// bracket, evaluated directly from block arithmetic. Serves as the
// independent oracle the Gysin solver is checked against.

#include <string>
#include <vector>

#include "strtop/integers.hpp"
#include "strtop/loop_algebra.hpp"

namespace strtop {

struct GroupDescriptor {
  std::size_t rank = 0;
  Int torsion_order = 1;
  // invariant factors where the closed form pins them (e.g. the ZZ_2 tower
  // of even spheres); may cover only part of torsion_order
  std::vector<Int> refinement;
  std::vector<std::string> annotation;
};

GroupDescriptor theorem_group(const SphereContext& ctx, long degree);

struct BracketFormula {
  Int coefficient;
  Int target_order;  // 0 = infinite
  bool vanishes;
};

// Parameters index the marked generator families:
//   circle:  windings (p, q) of e(a⊗x^p), e(a⊗x^q)
//   odd:     exponents (i, j) >= 1 of e(a⊗u^i), e(a⊗u^j)
//   even:    exponents (k, l) >= 0 of e(bv^k), e(bv^l)
BracketFormula theorem_bracket(const SphereContext& ctx, long p1, long p2);

}  // namespace strtop
