#include <doctest.h>

#include "strtop/closed_form.hpp"
#include "strtop/gysin_solver.hpp"

using namespace strtop;

namespace {

LoopClass mono(const SphereContext& ctx, int ea, int eb, long e, long coeff = 1) {
  return LoopClass::monomial(ctx, {ea, eb, e}, coeff);
}

// find the live generator with the given label
int find_gen(const GroupTable& t, long degree, const std::string& label) {
  const GysinNode& nd = t.node(degree);
  for (std::size_t j = 0; j < nd.gens.size(); ++j)
    if (nd.gens[j].label == label) return int(j);
  return -1;
}

}  // namespace

TEST_CASE("solve: S³ table through degree 6") {
  GroupTable t = solve(SphereContext::make(3), 6);
  // ZZ, 0, ZZ², 0, ZZ², ZZ_2, ZZ²
  std::size_t ranks[] = {1, 0, 2, 0, 2, 0, 2};
  Int tors[] = {1, 1, 1, 1, 1, 2, 1};
  for (long i = 0; i <= 6; ++i) {
    CHECK(t.node(i).group.rank() == ranks[i]);
    CHECK(t.node(i).group.torsion_order() == tors[i]);
    CHECK(t.node(i).group.resolved());
  }
  CHECK(t.node(5).group.invariant_factors() == std::vector<Int>{2});
  CHECK(find_gen(t, 5, "e(1⊗u)") >= 0);
  CHECK(find_gen(t, 2, "γ") >= 0);
  CHECK(find_gen(t, 4, "γ_2") >= 0);
}

TEST_CASE("solve: S³ deeper torsion, resolved when forced, opaque otherwise") {
  GroupTable t = solve(SphereContext::make(3), 11);
  // degree 7: t_3 of order 3! = 6, forced split ZZ_6
  CHECK(t.node(7).group.torsion_order() == 6);
  CHECK(t.node(7).group.resolved());
  CHECK(t.node(7).group.invariant_factors() == std::vector<Int>{6});
  // degree 9: t_4 of order 4! = 24, extension not forced
  CHECK(t.node(9).group.torsion_order() == 24);
  CHECK_FALSE(t.node(9).group.resolved());
  CHECK(t.node(9).group.rank() == 0);
  // degree 11: t_5 of order 5! = 120
  CHECK(t.node(11).group.torsion_order() == 120);
}

TEST_CASE("solve: bottom of the sequence") {
  GroupTable t = solve(SphereContext::make(3), 0);
  CHECK(t.node(0).group.rank() == 1);
  CHECK(t.node(0).group.torsion_order() == 1);
  CHECK(t.node(0).gens.size() == 1);
  CHECK(t.node(0).gens[0].label == "e(a⊗1)");
  CHECK(t.node(0).gens[0].gamma_type);
}

TEST_CASE("solve: even sphere spot values") {
  GroupTable t = solve(SphereContext::make(4), 16);
  // degree n-1 = 3: ZZ generated by e(b)
  CHECK(t.node(3).group.rank() == 1);
  CHECK(t.node(3).group.torsion_order() == 1);
  CHECK(find_gen(t, 3, "e(b)") >= 0);
  // degree 2n-2 = 6: ZZ_2 e(av) ⊕ ZZ γ_3
  CHECK(t.node(6).group.rank() == 1);
  CHECK(t.node(6).group.torsion_order() == 2);
  CHECK(find_gen(t, 6, "e(av)") >= 0);
  // degree k(2n-2)+n-1 = 9: ZZ e(bv)
  CHECK(t.node(9).group.rank() == 1);
  CHECK(find_gen(t, 9, "e(bv)") >= 0);
  // degree 10: e(v) of order 3 appears
  CHECK(t.node(10).group.torsion_order() == 6);
  int ev = find_gen(t, 10, "e(v)");
  REQUIRE(ev >= 0);
  CHECK(t.node(10).gens[ev].order == 3);
  // odd degrees vanish away from the bv ladder
  for (long i : {1, 5, 7, 11, 13}) {
    CHECK(t.node(i).group.rank() == 0);
    CHECK(t.node(i).group.torsion_order() == 1);
  }
}

TEST_CASE("solve: circle with cutoff") {
  GroupTable t = solve(SphereContext::make(1, 3), 6);
  // degree 0: ZZ⁷ on e(a⊗x^w), |w| <= 3
  CHECK(t.node(0).group.rank() == 7);
  for (long w = -3; w <= 3; ++w) {
    std::string lbl = w == 0 ? "e(a⊗1)" : (w == 1 ? "e(a⊗x)" : "e(a⊗x^" + std::to_string(w) + ")");
    CHECK(find_gen(t, 0, lbl) >= 0);
  }
  // degree 1: ⊕_{w≠0} ZZ_|w| ⊕ ZZ, truncated: torsion (2·3)² = 36, rank 1
  CHECK(t.node(1).group.rank() == 1);
  CHECK(t.node(1).group.torsion_order() == 36);
  CHECK(t.node(1).group.resolved());
  // stability upward
  for (long i = 3; i <= 5; i += 2) {
    CHECK(t.node(i).group.rank() == 1);
    CHECK(t.node(i).group.torsion_order() == 36);
  }
  for (long i = 2; i <= 6; i += 2) {
    CHECK(t.node(i).group.rank() == 1);
    CHECK(t.node(i).group.torsion_order() == 1);
  }
  CHECK(!t.notes.empty());
}

TEST_CASE("marking: rule values") {
  SphereContext s3 = SphereContext::make(3);
  GroupTable t = solve(s3, 8);
  // M(e(a⊗u²)) = 2(1⊗u) at degree 4
  int g = find_gen(t, 4, "e(a⊗u^2)");
  REQUIRE(g >= 0);
  CHECK(marking(t, eq_generator(t, 4, std::size_t(g))) == mono(s3, 0, 0, 1, 2));
  // M(γ_j) = 0
  for (long d : {2, 4, 6}) {
    int gi = find_gen(t, d, d == 2 ? "γ" : "γ_" + std::to_string(d / 2));
    REQUIRE(gi >= 0);
    CHECK(marking(t, eq_generator(t, d, std::size_t(gi))).is_zero());
    CHECK(t.node(d).gens[std::size_t(gi)].gamma_type);
  }

  // M(e(bv^k)) = (2k+1) v^k
  SphereContext s2 = SphereContext::make(2);
  GroupTable te = solve(s2, 9);
  int b0 = find_gen(te, 1, "e(b)");
  int b1 = find_gen(te, 3, "e(bv)");
  int b2 = find_gen(te, 5, "e(bv^2)");
  REQUIRE(b0 >= 0);
  REQUIRE(b1 >= 0);
  REQUIRE(b2 >= 0);
  CHECK(marking(te, eq_generator(te, 1, std::size_t(b0))) == mono(s2, 0, 0, 0, 1));
  CHECK(marking(te, eq_generator(te, 3, std::size_t(b1))) == mono(s2, 0, 0, 1, 3));
  CHECK(marking(te, eq_generator(te, 5, std::size_t(b2))) == mono(s2, 0, 0, 2, 5));
}

TEST_CASE("erase: linearity and the killed unit") {
  SphereContext s3 = SphereContext::make(3);
  GroupTable t = solve(s3, 8);
  // e(a⊗1) generates H_0
  EqClass e0 = erase_class(t, mono(s3, 1, 0, 0));
  CHECK(eq_order(t, e0) == 0);
  CHECK_FALSE(eq_is_zero(t, e0));
  // the erasing map ℍ_0 -> H_3 is zero
  CHECK(eq_is_zero(t, erase_class(t, mono(s3, 0, 0, 0))));
  // e(0) = 0
  CHECK(eq_is_zero(t, erase_class(t, LoopClass::zero(s3, 1))));
  // e(2(1⊗u)) dies in H_5 ≅ ZZ_2 while e(1⊗u) generates it
  CHECK(eq_is_zero(t, erase_class(t, mono(s3, 0, 0, 1, 2))));
  CHECK_FALSE(eq_is_zero(t, erase_class(t, mono(s3, 0, 0, 1))));
  // out of range
  CHECK_THROWS_AS(erase_class(t, mono(s3, 0, 0, 4)), std::out_of_range);
}

TEST_CASE("solver agrees with the closed form at small scale") {
  for (int n : {2, 3, 4, 5, 6, 7}) {
    SphereContext ctx = SphereContext::make(n);
    GroupTable t = solve(ctx, 40);
    for (long i = 0; i <= 40; ++i) {
      GroupDescriptor th = theorem_group(ctx, i);
      INFO("n=", n, " degree=", i);
      CHECK(t.node(i).group.rank() == th.rank);
      CHECK(t.node(i).group.torsion_order() == th.torsion_order);
    }
  }
  SphereContext c = SphereContext::make(1, 6);
  GroupTable t = solve(c, 12);
  for (long i = 0; i <= 12; ++i) {
    GroupDescriptor th = theorem_group(c, i);
    CHECK(t.node(i).group.rank() == th.rank);
    CHECK(t.node(i).group.torsion_order() == th.torsion_order);
  }
}

TEST_CASE("stability: groups repeat along the cap tower in the gaps") {
  GroupTable t = solve(SphereContext::make(6), 40);
  for (long k = 0; k * 10 + 6 + 2 <= 40; ++k) {
    // even degrees between k(2n-2)+n and (k+1)(2n-2) repeat
    for (long i = k * 10 + 6 + 2; i <= std::min<long>(40, (k + 1) * 10); i += 2) {
      CHECK(t.node(i).group.rank() == t.node(i - 2).group.rank());
      CHECK(t.node(i).group.torsion_order() == t.node(i - 2).group.torsion_order());
    }
  }
  GroupTable t7 = solve(SphereContext::make(7), 40);
  for (long i = 2; i <= 40; i += 2) {
    bool fresh = (i % 6 == 0);
    if (!fresh) {
      CHECK(t7.node(i).group.rank() == t7.node(i - 2).group.rank());
    }
  }
}

TEST_CASE("exactness_audit: clean tables pass") {
  CHECK(exactness_audit(solve(SphereContext::make(3), 20)).passed());
  CHECK(exactness_audit(solve(SphereContext::make(2), 16)).passed());
  CHECK(exactness_audit(solve(SphereContext::make(4), 16)).passed());
  CHECK(exactness_audit(solve(SphereContext::make(1, 4), 8)).passed());
  // empty-ish table
  CHECK(exactness_audit(solve(SphereContext::make(5), 0)).passed());
}

TEST_CASE("exactness_audit: corrupting a marking value is detected and named") {
  GroupTable t = solve(SphereContext::make(3), 8);
  int g = find_gen(t, 4, "e(a⊗u^2)");
  REQUIRE(g >= 0);
  t.node(4).gens[std::size_t(g)].m_value = mono(t.ctx, 0, 0, 1, 3);  // was 2(1⊗u)
  AuditReport rep = exactness_audit(t);
  CHECK_FALSE(rep.passed());
  bool names_degree = false;
  for (const std::string& v : rep.violations)
    if (v.find("degree 4") != std::string::npos || v.find("degree 5") != std::string::npos ||
        v.find("degree 6") != std::string::npos)
      names_degree = true;
  CHECK(names_degree);
}

TEST_CASE("exactness_audit: corrupting a lift marking is detected") {
  GroupTable t = solve(SphereContext::make(3), 8);
  int g = find_gen(t, 4, "γ_2");
  REQUIRE(g >= 0);
  t.node(4).gens[std::size_t(g)].m_value = mono(t.ctx, 0, 0, 1, 1);
  CHECK_FALSE(exactness_audit(t).passed());
}
