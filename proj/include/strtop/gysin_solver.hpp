#pragma once

// Degree-by-degree computation of the S¹-equivariant homology of LSⁿ from
// the Gysin sequence of the circle bundle,
//
//   ⋯ → ℍ_{i-n} --e--> H_i --cap--> H_{i-2} --M--> ℍ_{i-n-1} → ⋯
//
// At each degree the group is the middle of a short exact sequence: the
// image of the erasing map (a cokernel of the previous marking image)
// under the kernel of the marking map two degrees down. Marking values
// are assigned by rule: erased classes carry Δ of their representative,
// lifts of classifying-space classes carry zero, and finite-order classes
// mapping into torsion-free targets are forced to zero. Anything else is
// refused rather than guessed.

#include <stdexcept>
#include <string>
#include <vector>

#include "strtop/loop_algebra.hpp"
#include "strtop/zlinalg.hpp"

namespace strtop {

struct AmbiguousMarking : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ExactnessAuditFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ProvenanceKind { erased, cap_lift };

struct EqGenerator {
  std::string label;
  std::string base_label;          // label without lift decorations
  int lift_depth = 0;              // how many cap lifts away from base
  ProvenanceKind kind = ProvenanceKind::erased;
  LoopClass erased_from;           // erased: representative class in ℍ_{deg-n}
  std::vector<Int> parent_coords;  // cap_lift: coordinates over the parent node's gens
  Int order = 0;                   // 0 = infinite
  LoopClass m_value;               // value of M, a class in ℍ_{deg-n+1}
  bool gamma_type = false;         // lift chain rooted at the point class
};

// Element of a node: integer coordinates over the node's live generators.
struct EqClass {
  long degree = 0;
  std::vector<Int> coords;
};

struct GysinNode {
  long degree = 0;
  // Reported group (what the table prints): resolved summands or an
  // order-only torsion lump when the extension is not forced.
  FgAbelianGroup group;
  // Live generators supporting exact class arithmetic: the erased part
  // (always a genuine subgroup with exact orders) plus free lifts. Torsion
  // lifts of unresolved extensions live only in the lump.
  std::vector<EqGenerator> gens;
  IntMatrix erase_proj;  // ℍ_{deg-n} coords -> live coords (zero on lifts)
  IntMatrix cap_matrix;  // live coords -> live coords of node deg-2
  // recorded at build time, re-derived by the audit:
  FgAbelianGroup ime_group;  // image of the erasing map
  FgAbelianGroup k_group;    // kernel of M at deg-2 (incl. lump pass-through)
};

struct GroupTable {
  SphereContext ctx;
  long max_degree = 0;
  std::vector<GysinNode> nodes;
  std::vector<std::string> notes;  // e.g. truncation annotations

  bool in_range(long i) const { return i >= 0 && i <= max_degree; }
  const GysinNode& node(long i) const { return nodes.at(std::size_t(i)); }
  GysinNode& node(long i) { return nodes.at(std::size_t(i)); }
  FgAbelianGroup live_view(long i) const;  // live generators as a group
};

GroupTable solve(const SphereContext& ctx, long max_degree);

// e(x): x must be homogeneous with hdeg(x) + n within the table range.
EqClass erase_class(const GroupTable& t, const LoopClass& x);

// M on a class at degree i, landing in ℍ-degree i - n + 1.
LoopClass marking(const GroupTable& t, const EqClass& c);

// M at one node as a homomorphism from the live generators.
Homomorphism marking_hom(const GroupTable& t, long degree);

// class arithmetic over a node's live generators
EqClass eq_zero(const GroupTable& t, long degree);
EqClass eq_generator(const GroupTable& t, long degree, std::size_t index);
EqClass eq_add(const GroupTable& t, const EqClass& a, const EqClass& b);
EqClass eq_scale(const GroupTable& t, const EqClass& a, const Int& k);
bool eq_is_zero(const GroupTable& t, const EqClass& c);
bool eq_equal(const GroupTable& t, const EqClass& a, const EqClass& b);
Int eq_order(const GroupTable& t, const EqClass& c);  // 0 = infinite

struct AuditReport {
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

// Re-derives exactness data from the stored marking values and checks it
// against what the solver recorded: M∘e = Δ on every feeding basis class,
// e∘M = 0 on every generator, kernels and images match the recorded
// subquotients, and orders multiply along each short exact sequence.
AuditReport exactness_audit(const GroupTable& t);

}  // namespace strtop
