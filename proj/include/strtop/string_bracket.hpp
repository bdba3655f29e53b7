#pragma once

// String bracket on solved tables: [α,β] = (-1)^{|α|-d} e(M(α) • M(β)),
// bracket tables over the marked generator pairs, and the Lie-level audit
// (degree law, bilinearity, the antisymmetry the definition satisfies, and
// the vanishing of all nested brackets).

#include <string>
#include <vector>

#include "strtop/gysin_solver.hpp"

namespace strtop {

struct BracketEntry {
  long left_degree = 0;
  std::size_t left_index = 0;
  std::string left_label;
  long right_degree = 0;
  std::size_t right_index = 0;
  std::string right_label;
  long target_degree = 0;
  EqClass result;
  Int coefficient;      // signed coefficient of the product class before reduction
  Int target_order;     // order of the erased target generator; 0 = infinite
  bool vanishes = true;
  int sign_exponent = 0;  // |left| - n reduced mod 2
};

EqClass string_bracket(const GroupTable& t, const EqClass& a, const EqClass& b);

// One entry per unordered pair of generators with nonzero marking value,
// both degrees and the target degree within [0, max_degree]; deterministic
// order by (degree, index).
std::vector<BracketEntry> bracket_table(const GroupTable& t, long max_degree);

AuditReport lie_audit(const GroupTable& t, const std::vector<BracketEntry>& entries);

}  // namespace strtop
