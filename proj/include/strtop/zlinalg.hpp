#pragma once

// Exact linear algebra over the integers: matrices, Smith normal form,
// finitely generated abelian groups presented by generators and relations,
// homomorphisms with kernel/image/cokernel, and the resolution policy for
// short exact sequences (split when forced, order-only lump otherwise).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "strtop/integers.hpp"

namespace strtop {

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> entries;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  static IntMatrix identity(std::size_t n);

  Int& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  bool is_zero() const;
  bool operator==(const IntMatrix& o) const = default;

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transposed() const;
  std::vector<Int> apply(const std::vector<Int>& x) const;  // this * x

  IntMatrix column(std::size_t j) const;
  std::vector<Int> column_vec(std::size_t j) const;
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Int>>& cols);
  static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
};

// Exact determinant (Bareiss fraction-free elimination); square input.
Int det(const IntMatrix& m);

struct SmithNormalForm {
  IntMatrix u, s, v;          // s = u * m * v, u and v unimodular
  IntMatrix u_inv, v_inv;     // m = u_inv * s * v_inv
  std::size_t rank = 0;       // nonzero diagonal entries of s
};

// Diagonalizes m by unimodular row/column operations. The diagonal is
// non-negative and satisfies d1 | d2 | ... ; pivots are chosen by minimal
// absolute value to limit coefficient growth.
SmithNormalForm smith_normal_form(const IntMatrix& m);

// Basis (as columns) of { x : m x = 0 }.
IntMatrix kernel_lattice(const IntMatrix& m);

// Exact integer solve m x = b; returns false when no integer solution exists.
bool solve_exact(const IntMatrix& m, const std::vector<Int>& b, std::vector<Int>& x);

// Finitely generated abelian group as an explicit direct sum of cyclic
// summands, one generator per summand (order 0 = infinite, otherwise >= 2),
// plus at most one unresolved torsion lump known only by its total order.
// Coordinates of an element are integer coefficients over the generators;
// torsion coordinates are understood modulo the generator order.
struct FgAbelianGroup {
  std::vector<Int> gen_orders;
  std::vector<std::string> gen_labels;
  Int blob_order = 1;                     // > 1 iff unresolved torsion present
  std::vector<std::string> blob_labels;   // provenance of the swallowed summands

  static FgAbelianGroup trivial() { return {}; }
  static FgAbelianGroup free_group(std::vector<std::string> labels);
  static FgAbelianGroup cyclic(const Int& order, std::string label);

  std::size_t gen_count() const { return gen_orders.size(); }
  std::size_t rank() const;
  bool resolved() const { return blob_order == 1; }
  bool is_trivial() const { return gen_orders.empty() && blob_order == 1; }
  bool is_finite() const { return rank() == 0; }
  bool is_free() const;
  Int torsion_order() const;   // includes the lump
  Int order() const;           // 0 = infinite
  Int exponent() const;        // lcm of resolved torsion orders (resolved only)
  std::vector<Int> invariant_factors() const;  // canonical chain of the resolved torsion

  void reduce(std::vector<Int>& coords) const;
  bool is_zero_class(const std::vector<Int>& coords) const;
  Int element_order(const std::vector<Int>& coords) const;  // 0 = infinite
};

// Direct sum; generators of a first, then b.
FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

struct Homomorphism {
  FgAbelianGroup source, target;
  IntMatrix matrix;  // target coords x source generators

  Homomorphism(FgAbelianGroup src, FgAbelianGroup tgt, IntMatrix m);
  std::vector<Int> apply(const std::vector<Int>& x) const;
};

// Quotient of ZZ^g by the row span of `relations` in invariant-factor form.
// New generator labels are recomputed as integer combinations of the input
// labels; the change of basis is returned so callers can convert cosets.
struct Presentation {
  FgAbelianGroup group;
  IntMatrix gens_in_ambient;   // ambient coords x group generators
  IntMatrix project_ambient;   // group generators x ambient coords
};

Presentation group_from_presentation(const std::vector<std::string>& gen_labels,
                                     const IntMatrix& relations);

struct Subquotient {
  FgAbelianGroup group;
  Homomorphism map;  // inclusion into source/target, or projection from target
  IntMatrix reps;    // ambient coords x generators: representatives of the generators
};

Subquotient kernel(const Homomorphism& h);
Subquotient image(const Homomorphism& h);
Subquotient cokernel(const Homomorphism& h);

// Middle term of 0 -> left -> G -> right -> 0. Splits when the quotient is
// free or when both torsion parts are resolved with coprime exponents; a free
// quotient summand always splits off. Everything else collapses to an
// order-only lump. An infinite subgroup under a torsion quotient has no
// forced answer and is rejected.
FgAbelianGroup ses_resolve(const FgAbelianGroup& left, const FgAbelianGroup& right);

// Pretty-printer for integer combinations of labeled generators, e.g.
// "e(a)+2·γ". Skips zero coefficients; returns "0" for the zero combination.
std::string combo_label(const std::vector<std::string>& labels, const std::vector<Int>& coeffs);

}  // namespace strtop
