#include "strtop/string_bracket.hpp"

namespace strtop {

EqClass string_bracket(const GroupTable& t, const EqClass& a, const EqClass& b) {
  LoopClass prod = loop_product(marking(t, a), marking(t, b));
  if ((a.degree - t.ctx.n) % 2 != 0) prod = -prod;  // (-1)^{|α|-d}
  long target = a.degree + b.degree + 2 - t.ctx.n;
  if (!t.in_range(target)) throw std::out_of_range("string_bracket: target degree outside table");
  if (prod.is_zero()) return eq_zero(t, target);
  return erase_class(t, prod);
}

std::vector<BracketEntry> bracket_table(const GroupTable& t, long max_degree) {
  struct Marked {
    long degree;
    std::size_t index;
  };
  std::vector<Marked> marked;
  for (long d = 0; d <= std::min(max_degree, t.max_degree); ++d) {
    const GysinNode& nd = t.node(d);
    for (std::size_t j = 0; j < nd.gens.size(); ++j)
      if (!nd.gens[j].m_value.is_zero()) marked.push_back({d, j});
  }

  std::vector<BracketEntry> entries;
  for (std::size_t x = 0; x < marked.size(); ++x)
    for (std::size_t y = x; y < marked.size(); ++y) {
      const Marked& l = marked[x];
      const Marked& r = marked[y];
      long target = l.degree + r.degree + 2 - t.ctx.n;
      if (target < 0 || target > std::min(max_degree, t.max_degree)) continue;

      BracketEntry e;
      e.left_degree = l.degree;
      e.left_index = l.index;
      e.left_label = t.node(l.degree).gens[l.index].label;
      e.right_degree = r.degree;
      e.right_index = r.index;
      e.right_label = t.node(r.degree).gens[r.index].label;
      e.target_degree = target;
      e.sign_exponent = int(((l.degree - t.ctx.n) % 2 + 2) % 2);

      LoopClass prod = loop_product(marking(t, eq_generator(t, l.degree, l.index)),
                                    marking(t, eq_generator(t, r.degree, r.index)));
      if (e.sign_exponent) prod = -prod;
      // generator pairs in these rings produce single-monomial products
      if (prod.terms.size() > 1)
        throw ExactnessAuditFailure("bracket of generators is not a single monomial");
      if (prod.is_zero()) {
        e.coefficient = 0;
        e.target_order = 1;
        e.result = eq_zero(t, target);
        e.vanishes = true;
      } else {
        const auto& [mono, coeff] = *prod.terms.begin();
        e.coefficient = coeff;
        try {
          e.result = erase_class(t, prod);
        } catch (const std::out_of_range&) {
          continue;  // truncated circle table cannot express this product
        }
        EqClass unit = erase_class(t, LoopClass::monomial(t.ctx, mono));
        e.target_order = eq_order(t, unit);
        e.vanishes = eq_is_zero(t, e.result);
      }
      entries.push_back(std::move(e));
    }
  return entries;
}

AuditReport lie_audit(const GroupTable& t, const std::vector<BracketEntry>& entries) {
  AuditReport rep;
  auto fail = [&rep](const BracketEntry& e, const std::string& what) {
    rep.violations.push_back("[" + e.left_label + ", " + e.right_label + "]: " + what);
  };

  for (const BracketEntry& e : entries) {
    // (a) degree law i + j + 2 - d
    if (e.target_degree != e.left_degree + e.right_degree + 2 - t.ctx.n)
      fail(e, "target degree violates the degree law");
    if (e.result.degree != e.target_degree) fail(e, "result stored at the wrong degree");

    // (c) [α,β] = (-1)^{|α|-|β|} [β,α], recomputed from scratch
    EqClass lhs = e.result;
    EqClass rev = string_bracket(t, eq_generator(t, e.right_degree, e.right_index),
                                 eq_generator(t, e.left_degree, e.left_index));
    if ((e.left_degree - e.right_degree) % 2 != 0) rev = eq_scale(t, rev, -1);
    if (!eq_equal(t, lhs, rev)) fail(e, "antisymmetry check failed");

    // (d) every bracket output is annihilated by M, so nested brackets and
    // hence every Jacobi term vanish identically
    if (!marking(t, e.result).is_zero()) fail(e, "bracket output has nonzero marking");
  }

  // (b) bilinearity on small integer combinations within the left node
  int budget = 12;
  for (const BracketEntry& e : entries) {
    if (budget <= 0) break;
    const GysinNode& nd = t.node(e.left_degree);
    if (nd.gens.size() < 2) continue;
    std::size_t other = (e.left_index + 1) % nd.gens.size();
    EqClass g1 = eq_generator(t, e.left_degree, e.left_index);
    EqClass g2 = eq_generator(t, e.left_degree, other);
    EqClass h = eq_generator(t, e.right_degree, e.right_index);
    try {
      EqClass lhs = string_bracket(t, eq_add(t, g1, eq_scale(t, g2, 2)), h);
      EqClass rhs = eq_add(t, string_bracket(t, g1, h), eq_scale(t, string_bracket(t, g2, h), 2));
      if (!eq_equal(t, lhs, rhs))
        rep.violations.push_back("bilinearity failed on [" + e.left_label + "+2·" +
                                 nd.gens[other].label + ", " + e.right_label + "]");
      --budget;
    } catch (const std::out_of_range&) {
      // probe falls outside a truncated table; try another entry
    }
  }
  return rep;
}

}  // namespace strtop
