#include "strtop/gysin_solver.hpp"

#include <cassert>

namespace strtop {

namespace {

std::string gamma_label(long degree) {
  long k = degree / 2;
  return k == 1 ? "γ" : "γ_" + std::to_string(k);
}

std::string lifted_label(const std::string& base, int depth) {
  if (depth <= 0) return base;
  if (depth == 1) return base + "·γ";
  return base + "·γ^" + std::to_string(depth);
}

// bump "x", "x·γ", "x·γ^k" one lift up (used for reported-group labels)
std::string bump_label(const std::string& label) {
  auto pos = label.rfind("·γ");
  if (pos == std::string::npos) return label + "·γ";
  std::string tail = label.substr(pos + std::string("·γ").size());
  int depth = 1;
  if (!tail.empty() && tail[0] == '^') depth = std::stoi(tail.substr(1));
  return lifted_label(label.substr(0, pos), depth + 1);
}

// the point class a⊗1 (resp. a, a⊗x^0) generating the bottom of the sequence
bool is_point_class(const LoopClass& rep) {
  if (rep.terms.size() != 1) return false;
  const auto& [m, c] = *rep.terms.begin();
  return m.ea == 1 && m.eb == 0 && m.e == 0 && (c == 1 || c == -1);
}

FgAbelianGroup torsion_part(const FgAbelianGroup& g) {
  FgAbelianGroup t;
  for (std::size_t i = 0; i < g.gen_count(); ++i)
    if (g.gen_orders[i] != 0) {
      t.gen_orders.push_back(g.gen_orders[i]);
      t.gen_labels.push_back(bump_label(g.gen_labels[i]));
    }
  t.blob_order = g.blob_order;
  t.blob_labels = g.blob_labels;
  return t;
}

bool torsion_free_target(const FgAbelianGroup& g) {
  for (const Int& d : g.gen_orders)
    if (d != 0) return false;
  return true;
}

}  // namespace

FgAbelianGroup GroupTable::live_view(long i) const {
  const GysinNode& nd = node(i);
  FgAbelianGroup g;
  for (const EqGenerator& gen : nd.gens) {
    g.gen_orders.push_back(gen.order);
    g.gen_labels.push_back(gen.label);
  }
  return g;
}

Homomorphism marking_hom(const GroupTable& t, long degree) {
  const GysinNode& nd = t.node(degree);
  FgAbelianGroup src = t.live_view(degree);
  FgAbelianGroup tgt = loop_group(t.ctx, degree - t.ctx.n + 1);
  IntMatrix m(tgt.gen_count(), src.gen_count());
  for (std::size_t j = 0; j < nd.gens.size(); ++j) {
    std::vector<Int> col = loop_coords(t.ctx, nd.gens[j].m_value);
    for (std::size_t i = 0; i < col.size(); ++i) m.at(i, j) = col[i];
  }
  return Homomorphism(src, tgt, m);
}

namespace {

void build_node(GroupTable& t, long i) {
  const SphereContext& ctx = t.ctx;
  const int n = ctx.n;
  GysinNode node;
  node.degree = i;

  FgAbelianGroup hg_in = loop_group(ctx, i - n);
  FgAbelianGroup hg_out = loop_group(ctx, i - n + 1);

  // --- image of the erasing map: ℍ_{i-n} modulo the previous marking image ---
  Homomorphism incoming = [&]() {
    if (i >= 1) {
      Subquotient img = image(marking_hom(t, i - 1));
      return img.map;  // inclusion of ker(e) into ℍ_{i-n}
    }
    return Homomorphism(FgAbelianGroup::trivial(), hg_in, IntMatrix(hg_in.gen_count(), 0));
  }();
  Subquotient ime = cokernel(incoming);

  std::vector<EqGenerator> erased;
  for (std::size_t k = 0; k < ime.group.gen_count(); ++k) {
    EqGenerator g;
    g.kind = ProvenanceKind::erased;
    g.erased_from = class_from_coords(ctx, i - n, ime.reps.column_vec(k));
    g.order = ime.group.gen_orders[k];
    g.m_value = bv_delta(g.erased_from);
    g.base_label = "e(" + class_label(g.erased_from) + ")";
    g.label = g.base_label;
    g.gamma_type = (i == 0) && is_point_class(g.erased_from);
    if (g.order != 0) {
      // torsion classes never mark in these rings; the kernel bookkeeping
      // below relies on it, so refuse rather than continue silently
      std::vector<Int> mv = loop_coords(ctx, g.m_value.scaled(g.order));
      if (!hg_out.is_zero_class(mv))
        throw ExactnessAuditFailure("degree " + std::to_string(i) +
                                    ": marking value incompatible with generator order");
      if (!g.m_value.is_zero())
        throw AmbiguousMarking("degree " + std::to_string(i) +
                               ": torsion class with nonzero marking is not supported");
    }
    erased.push_back(std::move(g));
  }
  FgAbelianGroup left;
  for (const EqGenerator& g : erased) {
    left.gen_orders.push_back(g.order);
    left.gen_labels.push_back(g.label);
  }

  // --- kernel of the marking map two degrees down ---
  FgAbelianGroup k_reported;
  std::vector<EqGenerator> lifts;
  if (i >= 2) {
    const GysinNode& parent = t.node(i - 2);
    // free-restricted marking map; torsion lies in the kernel wholesale
    std::vector<std::size_t> free_idx;
    FgAbelianGroup src_free;
    for (std::size_t j = 0; j < parent.gens.size(); ++j)
      if (parent.gens[j].order == 0) {
        free_idx.push_back(j);
        src_free.gen_orders.push_back(0);
        src_free.gen_labels.push_back(parent.gens[j].label);
      }
    FgAbelianGroup tgt_prev = loop_group(ctx, i - n - 1);
    IntMatrix mfree(tgt_prev.gen_count(), free_idx.size());
    for (std::size_t c = 0; c < free_idx.size(); ++c) {
      std::vector<Int> col = loop_coords(ctx, parent.gens[free_idx[c]].m_value);
      for (std::size_t r = 0; r < col.size(); ++r) mfree.at(r, c) = col[r];
    }
    Subquotient kq = kernel(Homomorphism(src_free, tgt_prev, mfree));

    for (std::size_t k = 0; k < kq.group.gen_count(); ++k) {
      assert(kq.group.gen_orders[k] == 0 && "kernel of a free lattice map is free");
      EqGenerator g;
      g.kind = ProvenanceKind::cap_lift;
      g.order = 0;
      g.parent_coords.assign(parent.gens.size(), Int(0));
      std::vector<Int> col = kq.map.matrix.column_vec(k);
      std::size_t support = 0;
      std::size_t support_at = 0;
      bool gamma = true;
      for (std::size_t r = 0; r < col.size(); ++r) {
        g.parent_coords[free_idx[r]] = col[r];
        if (col[r] != 0) {
          ++support;
          support_at = free_idx[r];
          if (!parent.gens[free_idx[r]].gamma_type) gamma = false;
        }
      }
      if (support == 0) gamma = false;
      g.gamma_type = gamma;
      if (gamma) {
        g.label = gamma_label(i);
        g.base_label = g.label;
        g.lift_depth = 0;
      } else if (support == 1) {
        const EqGenerator& p = parent.gens[support_at];
        g.base_label = p.base_label;
        g.lift_depth = p.lift_depth + 1;
        g.label = lifted_label(g.base_label, g.lift_depth);
      } else {
        g.base_label = "(" + kq.group.gen_labels[k] + ")";
        g.lift_depth = 1;
        g.label = lifted_label(g.base_label, 1);
      }
      g.erased_from = LoopClass::zero(ctx, i - n);
      // marking value of the lift, by rule
      if (hg_out.gen_count() == 0) {
        g.m_value = LoopClass::zero(ctx, i - n + 1);
      } else if (g.gamma_type) {
        g.m_value = LoopClass::zero(ctx, i - n + 1);  // classifying-space classes never mark
      } else {
        throw AmbiguousMarking("degree " + std::to_string(i) + ": lift of " + g.label +
                               " has no forced marking value");
      }
      lifts.push_back(std::move(g));
    }

    FgAbelianGroup k_free;
    for (const EqGenerator& g : lifts) {
      k_free.gen_orders.push_back(0);
      k_free.gen_labels.push_back(g.label);
    }
    k_reported = direct_sum(k_free, torsion_part(parent.group));
    if (k_reported.blob_order > 1 || !torsion_part(parent.group).is_trivial()) {
      // the lifted torsion will be torsion of this node; its marking must
      // land in a torsion-free or trivial group for the zero value to be forced
      if (!(hg_out.gen_count() == 0 || torsion_free_target(hg_out)))
        throw AmbiguousMarking("degree " + std::to_string(i) +
                               ": torsion lift into a target with torsion");
    }
  }

  node.ime_group = left;
  node.k_group = k_reported;
  node.group = ses_resolve(left, k_reported);
  node.gens = std::move(erased);
  for (EqGenerator& g : lifts) node.gens.push_back(std::move(g));

  // erasing projection: ℍ coords -> live coords (zero rows on lifts)
  node.erase_proj = IntMatrix(node.gens.size(), hg_in.gen_count());
  for (std::size_t r = 0; r < ime.group.gen_count(); ++r)
    for (std::size_t c = 0; c < hg_in.gen_count(); ++c)
      node.erase_proj.at(r, c) = ime.map.matrix.at(r, c);

  // cap matrix: erased part dies, lifts map onto their parents
  std::size_t parent_count = (i >= 2) ? t.node(i - 2).gens.size() : 0;
  node.cap_matrix = IntMatrix(parent_count, node.gens.size());
  for (std::size_t c = 0; c < node.gens.size(); ++c)
    if (node.gens[c].kind == ProvenanceKind::cap_lift)
      for (std::size_t r = 0; r < parent_count; ++r)
        node.cap_matrix.at(r, c) = node.gens[c].parent_coords[r];

  t.nodes[std::size_t(i)] = std::move(node);
}

}  // namespace

GroupTable solve(const SphereContext& ctx, long max_degree) {
  if (max_degree < 0) throw std::invalid_argument("solve: max degree must be >= 0");
  GroupTable t;
  t.ctx = ctx;
  t.max_degree = max_degree;
  t.nodes.resize(std::size_t(max_degree) + 1);
  if (ctx.family() == SphereFamily::circle)
    t.notes.push_back("truncated at winding cutoff W=" + std::to_string(ctx.winding_cutoff));
  for (long i = 0; i <= max_degree; ++i) build_node(t, i);
  return t;
}

EqClass erase_class(const GroupTable& t, const LoopClass& x) {
  if (!(x.ctx == t.ctx)) throw std::invalid_argument("erase: context mismatch");
  long target = x.degree + t.ctx.n;
  if (!t.in_range(target)) throw std::out_of_range("erase: target degree outside the table");
  const GysinNode& nd = t.node(target);
  EqClass c;
  c.degree = target;
  c.coords = nd.erase_proj.apply(loop_coords(t.ctx, x));
  t.live_view(target).reduce(c.coords);
  return c;
}

LoopClass marking(const GroupTable& t, const EqClass& c) {
  const GysinNode& nd = t.node(c.degree);
  if (c.coords.size() != nd.gens.size()) throw std::invalid_argument("marking: bad coordinates");
  LoopClass out = LoopClass::zero(t.ctx, c.degree - t.ctx.n + 1);
  for (std::size_t j = 0; j < nd.gens.size(); ++j)
    if (c.coords[j] != 0) out = out + nd.gens[j].m_value.scaled(c.coords[j]);
  return out;
}

EqClass eq_zero(const GroupTable& t, long degree) {
  EqClass c;
  c.degree = degree;
  c.coords.assign(t.node(degree).gens.size(), Int(0));
  return c;
}

EqClass eq_generator(const GroupTable& t, long degree, std::size_t index) {
  EqClass c = eq_zero(t, degree);
  c.coords.at(index) = 1;
  return c;
}

EqClass eq_add(const GroupTable& t, const EqClass& a, const EqClass& b) {
  if (a.degree != b.degree) throw std::invalid_argument("eq_add: degree mismatch");
  EqClass c = a;
  for (std::size_t i = 0; i < c.coords.size(); ++i) c.coords[i] += b.coords[i];
  t.live_view(a.degree).reduce(c.coords);
  return c;
}

EqClass eq_scale(const GroupTable& t, const EqClass& a, const Int& k) {
  EqClass c = a;
  for (Int& x : c.coords) x *= k;
  t.live_view(a.degree).reduce(c.coords);
  return c;
}

bool eq_is_zero(const GroupTable& t, const EqClass& c) {
  return t.live_view(c.degree).is_zero_class(c.coords);
}

bool eq_equal(const GroupTable& t, const EqClass& a, const EqClass& b) {
  if (a.degree != b.degree) return false;
  return eq_is_zero(t, eq_add(t, a, eq_scale(t, b, -1)));
}

Int eq_order(const GroupTable& t, const EqClass& c) {
  return t.live_view(c.degree).element_order(c.coords);
}

AuditReport exactness_audit(const GroupTable& t) {
  AuditReport rep;
  auto fail = [&rep](long deg, const std::string& what) {
    rep.violations.push_back("degree " + std::to_string(deg) + ": " + what);
  };
  const int n = t.ctx.n;

  for (long i = 0; i <= t.max_degree; ++i) {
    const GysinNode& nd = t.node(i);

    // order and rank bookkeeping of the short exact sequence
    if (nd.group.rank() != nd.ime_group.rank() + nd.k_group.rank())
      fail(i, "rank does not match im(e) + ker(M)");
    if (nd.group.torsion_order() != nd.ime_group.torsion_order() * nd.k_group.torsion_order())
      fail(i, "torsion order does not match |im(e)|·|ker(M)|");

    // M∘e = Δ on every basis class feeding this node
    for (const LoopMonomial& mono : loop_basis(t.ctx, i - n)) {
      LoopClass x = LoopClass::monomial(t.ctx, mono);
      LoopClass lhs = marking(t, erase_class(t, x));
      if (!(lhs == bv_delta(x))) fail(i, "M∘e ≠ Δ on " + monomial_label(t.ctx, mono));
    }

    // e∘M = 0 on every generator
    if (t.in_range(i + 1)) {
      for (std::size_t j = 0; j < nd.gens.size(); ++j)
        if (!eq_is_zero(t, erase_class(t, nd.gens[j].m_value)))
          fail(i, "e∘M ≠ 0 on " + nd.gens[j].label);
    }

    // the stored marking of an erased class is Δ of its representative
    for (const EqGenerator& g : nd.gens)
      if (g.kind == ProvenanceKind::erased && !(g.m_value == bv_delta(g.erased_from)))
        fail(i, "marking of " + g.label + " deviates from Δ");

    // recompute im(e) from current marking values
    if (i >= 1) {
      Subquotient img = image(marking_hom(t, i - 1));
      Subquotient coker = cokernel(img.map);
      if (coker.group.rank() != nd.ime_group.rank() ||
          coker.group.torsion_order() != nd.ime_group.torsion_order())
        fail(i, "recomputed im(e) differs from the recorded one");
    }

    // recompute ker(M) at i-2: lifted parents must still vanish under M,
    // and the free kernel rank must match the recorded lift count
    if (i >= 2) {
      const GysinNode& parent = t.node(i - 2);
      std::size_t lift_rank = 0;
      for (const EqGenerator& g : nd.gens)
        if (g.kind == ProvenanceKind::cap_lift) {
          ++lift_rank;
          EqClass pc{i - 2, g.parent_coords};
          if (!marking(t, pc).is_zero())
            fail(i, "cap image of " + g.label + " is not in ker(M)");
        }
      Homomorphism mh = marking_hom(t, i - 2);
      // free-restricted kernel rank
      std::size_t free_count = 0;
      for (const EqGenerator& g : parent.gens)
        if (g.order == 0) ++free_count;
      Subquotient kq = kernel(mh);
      if (kq.group.rank() != nd.k_group.rank())
        fail(i, "recomputed ker(M) rank differs from the recorded one");
      (void)free_count;
      Int ktor = torsion_part(parent.group).torsion_order();
      if (ktor != nd.k_group.torsion_order())
        fail(i, "recomputed ker(M) torsion differs from the recorded one");
    }
  }

  if (n >= 2 && t.max_degree >= 0) {
    const FgAbelianGroup& g0 = t.node(0).group;
    if (!(g0.rank() == 1 && g0.torsion_order() == 1))
      rep.violations.push_back("degree 0: group is not ZZ");
  }
  return rep;
}

}  // namespace strtop
