#include <doctest.h>

#include <random>

#include "strtop/loop_algebra.hpp"

using namespace strtop;

namespace {

LoopClass mono(const SphereContext& ctx, int ea, int eb, long e, long coeff = 1) {
  return LoopClass::monomial(ctx, {ea, eb, e}, coeff);
}

}  // namespace

TEST_CASE("loop_basis: odd sphere degrees") {
  SphereContext s3 = SphereContext::make(3);
  // degree 0 holds the unit, degree -1 holds a⊗u (= 2 - 3)
  auto b0 = loop_basis(s3, 0);
  REQUIRE(b0.size() == 1);
  CHECK(monomial_label(s3, b0[0]) == "1⊗1");
  auto bm1 = loop_basis(s3, -1);
  REQUIRE(bm1.size() == 1);
  CHECK(monomial_label(s3, bm1[0]) == "a⊗u");
  CHECK(loop_basis(s3, -2).empty());
  CHECK(loop_basis(s3, -3).size() == 1);  // a⊗1
}

TEST_CASE("loop_basis: even sphere has the 2-torsion class av") {
  for (int n : {2, 4, 6}) {
    SphereContext ctx = SphereContext::make(n);
    auto b = loop_basis(ctx, n - 2);
    bool found = false;
    for (const LoopMonomial& m : b)
      if (m.ea == 1 && m.e == 1) {
        found = true;
        CHECK(monomial_annihilator(ctx, m) == 2);
        CHECK(monomial_label(ctx, m) == "av");
      }
    CHECK(found);
  }
  // a itself is infinite order
  SphereContext s4 = SphereContext::make(4);
  CHECK(monomial_annihilator(s4, {1, 0, 0}) == 0);
}

TEST_CASE("loop_basis: circle truncation") {
  SphereContext s1 = SphereContext::make(1, 2);
  auto b = loop_basis(s1, 0);
  CHECK(b.size() == 5);  // 1⊗x^w, |w| <= 2
  for (const LoopMonomial& m : b) CHECK(m.ea == 0);
  CHECK(loop_basis(s1, -1).size() == 5);
  CHECK(loop_basis(s1, 1).empty());
}

TEST_CASE("loop_product: ring relations") {
  SphereContext s3 = SphereContext::make(3);
  // (a⊗u^i)·(1⊗u^j) = a⊗u^{i+j}
  LoopClass p = loop_product(mono(s3, 1, 0, 2), mono(s3, 0, 0, 3));
  CHECK(p == mono(s3, 1, 0, 5));
  // a·a = 0
  CHECK(loop_product(mono(s3, 1, 0, 0), mono(s3, 1, 0, 1)).is_zero());

  SphereContext s4 = SphereContext::make(4);
  // a·b = 0
  CHECK(loop_product(mono(s4, 1, 0, 0), mono(s4, 0, 1, 0)).is_zero());
  // b·b = 0
  CHECK(loop_product(mono(s4, 0, 1, 1), mono(s4, 0, 1, 2)).is_zero());
  // 2·av^k = 0
  CHECK(mono(s4, 1, 0, 3, 2).is_zero());
  CHECK(loop_product(mono(s4, 1, 0, 1), mono(s4, 0, 0, 1, 5)) == mono(s4, 1, 0, 2));

  SphereContext s1 = SphereContext::make(1, 4);
  // Laurent multiplication
  CHECK(loop_product(mono(s1, 0, 0, 3), mono(s1, 0, 0, -5)) == mono(s1, 0, 0, -2));
}

TEST_CASE("bv_delta: family rules") {
  SphereContext s3 = SphereContext::make(3);
  CHECK(bv_delta(mono(s3, 1, 0, 3)) == mono(s3, 0, 0, 2, 3));  // Δ(a⊗u³) = 3(1⊗u²)
  CHECK(bv_delta(mono(s3, 0, 0, 5)).is_zero());
  CHECK(bv_delta(mono(s3, 1, 0, 0)).is_zero());  // Δ(a⊗1) = 0

  SphereContext s4 = SphereContext::make(4);
  for (long k = 0; k <= 5; ++k) {
    CHECK(bv_delta(mono(s4, 0, 0, k)).is_zero());              // Δ(v^k) = 0
    CHECK(bv_delta(mono(s4, 1, 0, k)).is_zero());              // Δ(av^k) = 0
    CHECK(bv_delta(mono(s4, 0, 1, k)) == mono(s4, 0, 0, k, 2 * k + 1));  // Δ(bv^k)
  }

  SphereContext s1 = SphereContext::make(1, 4);
  CHECK(bv_delta(mono(s1, 1, 0, -2)) == mono(s1, 0, 0, -2, -2));  // Δ(a⊗x⁻²) = -2(1⊗x⁻²)
  CHECK(bv_delta(mono(s1, 0, 0, 7)).is_zero());
}

TEST_CASE("bv_delta: degree bump and Δ∘Δ = 0 on all basis monomials") {
  for (int n : {1, 2, 3, 4, 5, 6, 7}) {
    SphereContext ctx = SphereContext::make(n, n == 1 ? 10 : 0);
    for (long d = -n - 1; d <= 60; ++d) {
      for (const LoopMonomial& m : loop_basis(ctx, d)) {
        LoopClass x = LoopClass::monomial(ctx, m);
        LoopClass dx = bv_delta(x);
        CHECK(dx.degree == d + 1);
        CHECK(bv_delta(dx).is_zero());
      }
    }
  }
}

TEST_CASE("loop_product: associativity, unit, degree additivity") {
  std::mt19937 rng(41);
  for (int n : {1, 3, 4}) {
    SphereContext ctx = SphereContext::make(n, n == 1 ? 6 : 0);
    std::uniform_int_distribution<long> ex(n == 1 ? -6 : 0, 6);
    std::uniform_int_distribution<int> bit(0, 1), coeff(-4, 4);
    LoopClass unit = mono(ctx, 0, 0, 0);
    for (int iter = 0; iter < 200; ++iter) {
      auto rnd_mono = [&]() -> LoopClass {
        int ea = bit(rng);
        int eb = (n % 2 == 0 && n > 1 && !ea) ? bit(rng) : 0;
        long c = coeff(rng);
        return mono(ctx, ea, eb, ex(rng), c == 0 ? 1 : c);
      };
      LoopClass x = rnd_mono(), y = rnd_mono(), z = rnd_mono();
      LoopClass xy = loop_product(x, y);
      CHECK(loop_product(xy, z) == loop_product(x, loop_product(y, z)));
      CHECK(loop_product(unit, x) == x);
      CHECK(loop_product(x, unit) == x);
      if (!xy.is_zero()) CHECK(xy.degree == x.degree + y.degree);
      // Δ is degree +1 on random sums too
      LoopClass s = x.degree == y.degree ? x + y : x;
      CHECK(bv_delta(bv_delta(s)).is_zero());
    }
  }
}

TEST_CASE("even family: products with a vanish against b and a, coefficients stay reduced") {
  SphereContext s6 = SphereContext::make(6);
  for (long k = 0; k <= 6; ++k) {
    CHECK(loop_product(mono(s6, 1, 0, k), mono(s6, 1, 0, 0)).is_zero());
    CHECK(loop_product(mono(s6, 1, 0, k), mono(s6, 0, 1, 1)).is_zero());
    LoopClass doubled = mono(s6, 1, 0, k, 7);
    if (k >= 1) {
      REQUIRE(doubled.terms.size() == 1);
      CHECK(doubled.terms.begin()->second == 1);  // reduced mod 2
    }
  }
}

TEST_CASE("loop_group and coordinates") {
  SphereContext s2 = SphereContext::make(2);
  // ℍ_0(LS²) = ZZ(1) ⊕ ZZ_2(av)
  FgAbelianGroup g = loop_group(s2, 0);
  REQUIRE(g.gen_count() == 2);
  CHECK(g.gen_orders[0] == 0);
  CHECK(g.gen_orders[1] == 2);
  LoopClass x = mono(s2, 0, 0, 0, 3) + mono(s2, 1, 0, 1, 1);
  std::vector<Int> c = loop_coords(s2, x);
  CHECK(c[0] == 3);
  CHECK(c[1] == 1);
  CHECK(class_from_coords(s2, 0, c) == x);

  SphereContext s1 = SphereContext::make(1, 2);
  CHECK_THROWS_AS(loop_coords(s1, mono(s1, 0, 0, 5)), std::out_of_range);
}
