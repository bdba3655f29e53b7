#pragma once

// Loop homology of spheres as an explicit graded ring in the geometric
// (shifted) grading, together with the degree +1 BV operator. Three
// families:
//   n = 1        Λ[a] ⊗ ZZ[x,x⁻¹]           |a| = -1, |x| = 0
//   n odd >= 3   Λ[a] ⊗ ZZ[u]               |a| = -n, |u| = n-1
//   n even       Λ(b) ⊗ ZZ[a,v]/(a²,ab,2av)  |a| = -n, |b| = -1, |v| = 2n-2
// For n = 1 the Laurent ring itself is untruncated; the winding cutoff
// only bounds basis enumeration (and hence solver tables).

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "strtop/integers.hpp"
#include "strtop/zlinalg.hpp"

namespace strtop {

enum class SphereFamily { circle, odd, even };

struct SphereContext {
  int n = 3;
  long winding_cutoff = 0;  // used only when n = 1

  static SphereContext make(int n, long winding_cutoff = 0);
  SphereFamily family() const {
    return n == 1 ? SphereFamily::circle : (n % 2 ? SphereFamily::odd : SphereFamily::even);
  }
  bool operator==(const SphereContext&) const = default;
};

// a^ea b^eb t^e where t is x (circle), u (odd) or v (even); b occurs only in
// the even family. ea, eb ∈ {0,1}; e ∈ ZZ for the circle, e >= 0 otherwise.
struct LoopMonomial {
  int ea = 0;
  int eb = 0;
  long e = 0;
  auto operator<=>(const LoopMonomial&) const = default;
};

long monomial_hdeg(const SphereContext& ctx, const LoopMonomial& m);
// 0 = infinite order; 2 for a·v^k with k >= 1 (relation 2av)
Int monomial_annihilator(const SphereContext& ctx, const LoopMonomial& m);
std::string monomial_label(const SphereContext& ctx, const LoopMonomial& m, bool ascii = false);

// Homogeneous integer combination of basis monomials. The degree stays
// meaningful on the zero class so exact-sequence bookkeeping can keep
// track of where a vanished class lives.
struct LoopClass {
  SphereContext ctx;
  long degree = 0;
  std::map<LoopMonomial, Int> terms;

  static LoopClass zero(const SphereContext& ctx, long degree);
  static LoopClass monomial(const SphereContext& ctx, const LoopMonomial& m, const Int& coeff = 1);

  bool is_zero() const { return terms.empty(); }
  void add_term(const LoopMonomial& m, const Int& c);

  LoopClass operator+(const LoopClass& o) const;
  LoopClass operator-() const;
  LoopClass operator-(const LoopClass& o) const;
  LoopClass scaled(const Int& c) const;
  bool operator==(const LoopClass& o) const;
};

std::string class_label(const LoopClass& x, bool ascii = false);

// All monomials of the given geometric degree, in lexicographic order on
// (ea, eb, e). For the circle the enumeration is restricted to |e| <= W.
std::vector<LoopMonomial> loop_basis(const SphereContext& ctx, long hdeg);

// The same degree as an abelian group (free summands plus ZZ_2 for each
// 2-torsion monomial), coordinates aligned with loop_basis.
FgAbelianGroup loop_group(const SphereContext& ctx, long hdeg);

// Coordinates of x in loop_basis(ctx, x.degree); throws std::out_of_range
// when a term falls outside the enumerated basis (circle cutoff).
std::vector<Int> loop_coords(const SphereContext& ctx, const LoopClass& x);
LoopClass class_from_coords(const SphereContext& ctx, long hdeg, const std::vector<Int>& coords);

LoopClass loop_product(const LoopClass& x, const LoopClass& y);
LoopClass bv_delta(const LoopClass& x);

}  // namespace strtop
