#include "strtop/zlinalg.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace strtop {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& e : entries)
    if (e != 0) return false;
  return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  assert(cols == o.rows);
  IntMatrix r(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
  assert(x.size() == cols);
  std::vector<Int> y(rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (at(i, j) != 0) y[i] += at(i, j) * x[j];
  return y;
}

IntMatrix IntMatrix::column(std::size_t j) const {
  IntMatrix c(rows, 1);
  for (std::size_t i = 0; i < rows; ++i) c.at(i, 0) = at(i, j);
  return c;
}

std::vector<Int> IntMatrix::column_vec(std::size_t j) const {
  std::vector<Int> c(rows);
  for (std::size_t i = 0; i < rows; ++i) c[i] = at(i, j);
  return c;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Int>>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    assert(cols[j].size() == rows);
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows == 0) return b;
  if (b.rows == 0) return a;
  assert(a.cols == b.cols);
  IntMatrix m(a.rows + b.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j) m.at(a.rows + i, j) = b.at(i, j);
  return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols == 0) return b;
  if (b.cols == 0) return a;
  assert(a.rows == b.rows);
  IntMatrix m(a.rows, a.cols + b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols; ++j) m.at(i, a.cols + j) = b.at(i, j);
  }
  return m;
}

Int det(const IntMatrix& m) {
  assert(m.rows == m.cols);
  std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
        // Bareiss: division by the previous pivot is exact
        a.at(i, j) = num / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

// Elementary operations applied simultaneously to s, the transforms and
// their tracked inverses, preserving s = u*m*v, u*u_inv = v*v_inv = I.
struct SnfWork {
  IntMatrix s, u, ui, v, vi;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < s.cols; ++c) std::swap(s.at(i, c), s.at(j, c));
    for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    for (std::size_t r = 0; r < ui.rows; ++r) std::swap(ui.at(r, i), ui.at(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < s.rows; ++r) std::swap(s.at(r, i), s.at(r, j));
    for (std::size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    for (std::size_t c = 0; c < vi.cols; ++c) std::swap(vi.at(i, c), vi.at(j, c));
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < s.cols; ++c) s.at(i, c) = -s.at(i, c);
    for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    for (std::size_t r = 0; r < ui.rows; ++r) ui.at(r, i) = -ui.at(r, i);
  }
  // row i += c * row j
  void row_addmul(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < s.cols; ++k) s.at(i, k) += c * s.at(j, k);
    for (std::size_t k = 0; k < u.cols; ++k) u.at(i, k) += c * u.at(j, k);
    for (std::size_t r = 0; r < ui.rows; ++r) ui.at(r, j) -= c * ui.at(r, i);
  }
  // col i += c * col j
  void col_addmul(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < s.rows; ++k) s.at(k, i) += c * s.at(k, j);
    for (std::size_t k = 0; k < v.rows; ++k) v.at(k, i) += c * v.at(k, j);
    for (std::size_t c2 = 0; c2 < vi.cols; ++c2) vi.at(j, c2) -= c * vi.at(i, c2);
  }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  SnfWork w;
  w.s = m;
  w.u = IntMatrix::identity(m.rows);
  w.ui = IntMatrix::identity(m.rows);
  w.v = IntMatrix::identity(m.cols);
  w.vi = IntMatrix::identity(m.cols);

  std::size_t t = 0;
  std::size_t bound = std::min(m.rows, m.cols);
  while (t < bound) {
    // minimal-absolute-value nonzero pivot in the trailing submatrix
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best;
    for (std::size_t i = t; i < m.rows; ++i)
      for (std::size_t j = t; j < m.cols; ++j) {
        const Int& e = w.s.at(i, j);
        if (e == 0) continue;
        Int a = abs_int(e);
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      bool dirty = false;
      // clear column t
      for (std::size_t i = t + 1; i < m.rows; ++i) {
        if (w.s.at(i, t) == 0) continue;
        Int q = div_round_nearest(w.s.at(i, t), w.s.at(t, t));
        w.row_addmul(i, t, -q);
        if (w.s.at(i, t) != 0) {
          // remainder is strictly smaller; make it the pivot and restart
          w.swap_rows(t, i);
          dirty = true;
        }
      }
      if (dirty) continue;
      // clear row t
      for (std::size_t j = t + 1; j < m.cols; ++j) {
        if (w.s.at(t, j) == 0) continue;
        Int q = div_round_nearest(w.s.at(t, j), w.s.at(t, t));
        w.col_addmul(j, t, -q);
        if (w.s.at(t, j) != 0) {
          w.swap_cols(t, j);
          dirty = true;
          break;  // column t may be dirty again
        }
      }
      if (dirty) continue;
      // pivot must divide every remaining entry, else absorb the offending
      // row and keep reducing
      bool fixed = false;
      for (std::size_t i = t + 1; i < m.rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < m.cols && !fixed; ++j)
          if (!divides(w.s.at(t, t), w.s.at(i, j))) {
            w.row_addmul(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (w.s.at(t, t) < 0) w.negate_row(t);
    ++t;
  }

  SmithNormalForm out;
  out.u = std::move(w.u);
  out.u_inv = std::move(w.ui);
  out.v = std::move(w.v);
  out.v_inv = std::move(w.vi);
  out.s = std::move(w.s);
  out.rank = t;
  return out;
}

IntMatrix kernel_lattice(const IntMatrix& m) {
  if (m.cols == 0) return IntMatrix(0, 0);
  if (m.rows == 0) return IntMatrix::identity(m.cols);
  SmithNormalForm f = smith_normal_form(m);
  IntMatrix basis(m.cols, m.cols - f.rank);
  for (std::size_t j = f.rank; j < m.cols; ++j)
    for (std::size_t i = 0; i < m.cols; ++i) basis.at(i, j - f.rank) = f.v.at(i, j);
  return basis;
}

bool solve_exact(const IntMatrix& m, const std::vector<Int>& b, std::vector<Int>& x) {
  assert(b.size() == m.rows);
  SmithNormalForm f = smith_normal_form(m);
  std::vector<Int> ub = f.u.apply(b);
  std::vector<Int> y(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (i < f.rank) {
      if (!divides(f.s.at(i, i), ub[i])) return false;
      if (i < m.cols) y[i] = ub[i] / f.s.at(i, i);
    } else if (ub[i] != 0) {
      return false;
    }
  }
  x = f.v.apply(y);
  return true;
}

FgAbelianGroup FgAbelianGroup::free_group(std::vector<std::string> labels) {
  FgAbelianGroup g;
  g.gen_orders.assign(labels.size(), Int(0));
  g.gen_labels = std::move(labels);
  return g;
}

FgAbelianGroup FgAbelianGroup::cyclic(const Int& order, std::string label) {
  assert(order == 0 || order >= 2);
  FgAbelianGroup g;
  g.gen_orders.push_back(order);
  g.gen_labels.push_back(std::move(label));
  return g;
}

std::size_t FgAbelianGroup::rank() const {
  std::size_t r = 0;
  for (const Int& d : gen_orders)
    if (d == 0) ++r;
  return r;
}

bool FgAbelianGroup::is_free() const {
  if (blob_order != 1) return false;
  for (const Int& d : gen_orders)
    if (d != 0) return false;
  return true;
}

Int FgAbelianGroup::torsion_order() const {
  Int t = blob_order;
  for (const Int& d : gen_orders)
    if (d != 0) t *= d;
  return t;
}

Int FgAbelianGroup::order() const {
  if (rank() > 0) return 0;
  return torsion_order();
}

Int FgAbelianGroup::exponent() const {
  assert(resolved());
  Int e = 1;
  for (const Int& d : gen_orders)
    if (d != 0) e = lcm_int(e, d);
  return e;
}

std::vector<Int> FgAbelianGroup::invariant_factors() const {
  std::vector<Int> f;
  for (const Int& d : gen_orders)
    if (d != 0) f.push_back(d);
  // pairwise gcd/lcm normalization converges to the divisibility chain
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

void FgAbelianGroup::reduce(std::vector<Int>& coords) const {
  assert(coords.size() == gen_orders.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (gen_orders[i] != 0) coords[i] = mod_floor(coords[i], gen_orders[i]);
}

bool FgAbelianGroup::is_zero_class(const std::vector<Int>& coords) const {
  assert(coords.size() == gen_orders.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (gen_orders[i] == 0) {
      if (coords[i] != 0) return false;
    } else if (mod_floor(coords[i], gen_orders[i]) != 0) {
      return false;
    }
  }
  return true;
}

Int FgAbelianGroup::element_order(const std::vector<Int>& coords) const {
  assert(coords.size() == gen_orders.size());
  Int ord = 1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (gen_orders[i] == 0) {
      if (coords[i] != 0) return 0;
    } else {
      Int c = mod_floor(coords[i], gen_orders[i]);
      if (c != 0) ord = lcm_int(ord, gen_orders[i] / gcd_int(c, gen_orders[i]));
    }
  }
  return ord;
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  FgAbelianGroup g = a;
  g.gen_orders.insert(g.gen_orders.end(), b.gen_orders.begin(), b.gen_orders.end());
  g.gen_labels.insert(g.gen_labels.end(), b.gen_labels.begin(), b.gen_labels.end());
  g.blob_order *= b.blob_order;
  g.blob_labels.insert(g.blob_labels.end(), b.blob_labels.begin(), b.blob_labels.end());
  return g;
}

Homomorphism::Homomorphism(FgAbelianGroup src, FgAbelianGroup tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
  if (matrix.rows != target.gen_count() || matrix.cols != source.gen_count())
    throw std::invalid_argument("Homomorphism: matrix shape does not match groups");
  // finite-order generators must map to classes of compatible order
  for (std::size_t j = 0; j < source.gen_count(); ++j) {
    if (source.gen_orders[j] == 0) continue;
    std::vector<Int> img(matrix.rows);
    for (std::size_t i = 0; i < matrix.rows; ++i) img[i] = source.gen_orders[j] * matrix.at(i, j);
    if (!target.is_zero_class(img))
      throw std::invalid_argument("Homomorphism: map does not respect torsion relations");
  }
}

std::vector<Int> Homomorphism::apply(const std::vector<Int>& x) const {
  std::vector<Int> y = matrix.apply(x);
  target.reduce(y);
  return y;
}

std::string combo_label(const std::vector<std::string>& labels, const std::vector<Int>& coeffs) {
  assert(labels.size() == coeffs.size());
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Int c = coeffs[i];
    if (out.empty()) {
      if (c == -1)
        out += "-";
      else if (c != 1)
        out += to_string(c) + "·";
    } else {
      if (c == -1) {
        out += "-";
      } else if (c < 0) {
        out += "-" + to_string(-c) + "·";
      } else if (c == 1) {
        out += "+";
      } else {
        out += "+" + to_string(c) + "·";
      }
    }
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

Presentation group_from_presentation(const std::vector<std::string>& gen_labels,
                                     const IntMatrix& relations) {
  std::size_t g = gen_labels.size();
  if (relations.cols != g && relations.rows != 0)
    throw std::invalid_argument("group_from_presentation: relation width != generator count");

  // columns of b generate the relation lattice in ZZ^g
  IntMatrix b = relations.transposed();
  if (b.rows == 0) b = IntMatrix(g, 0);
  SmithNormalForm f = smith_normal_form(b);

  Presentation out;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < g; ++i) {
    Int ord = (i < f.rank) ? f.s.at(i, i) : Int(0);
    if (ord == 1) continue;
    kept.push_back(i);
    out.group.gen_orders.push_back(ord);
    out.group.gen_labels.push_back(combo_label(gen_labels, f.u_inv.column_vec(i)));
  }
  out.gens_in_ambient = IntMatrix(g, kept.size());
  out.project_ambient = IntMatrix(kept.size(), g);
  for (std::size_t k = 0; k < kept.size(); ++k)
    for (std::size_t i = 0; i < g; ++i) {
      out.gens_in_ambient.at(i, k) = f.u_inv.at(i, kept[k]);
      out.project_ambient.at(k, i) = f.u.at(kept[k], i);
    }
  return out;
}

namespace {

// relation columns of the standard presentation ZZ^n -> G
IntMatrix relation_columns(const FgAbelianGroup& g) {
  std::size_t n = g.gen_count();
  std::vector<std::vector<Int>> cols;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.gen_orders[i] == 0) continue;
    std::vector<Int> c(n);
    c[i] = g.gen_orders[i];
    cols.push_back(std::move(c));
  }
  return IntMatrix::from_columns(n, cols);
}

// Lattice basis (columns) of { x : h(x) = 0 in target }, i.e. the preimage
// of the target relation lattice. Contains the source relation lattice.
IntMatrix kernel_preimage_lattice(const Homomorphism& h) {
  IntMatrix rel_t = relation_columns(h.target);
  IntMatrix b = IntMatrix::hstack(h.matrix, rel_t);
  if (b.rows == 0) return IntMatrix::identity(h.source.gen_count());
  IntMatrix full = kernel_lattice(b);
  std::size_t n = h.source.gen_count();
  IntMatrix top(n, full.cols);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < full.cols; ++j) top.at(i, j) = full.at(i, j);
  // column-reduce to an independent basis of the projected lattice
  SmithNormalForm f = smith_normal_form(top);
  IntMatrix us = f.u_inv * f.s;
  IntMatrix basis(n, f.rank);
  for (std::size_t j = 0; j < f.rank; ++j)
    for (std::size_t i = 0; i < n; ++i) basis.at(i, j) = us.at(i, j);
  return basis;
}

}  // namespace

Subquotient kernel(const Homomorphism& h) {
  assert(h.source.resolved() && h.target.resolved());
  std::size_t n = h.source.gen_count();
  IntMatrix kb = kernel_preimage_lattice(h);

  // relations: source relation lattice written in the kb basis
  IntMatrix rels(0, kb.cols);
  for (std::size_t i = 0; i < n; ++i) {
    if (h.source.gen_orders[i] == 0) continue;
    std::vector<Int> rhs(n);
    rhs[i] = h.source.gen_orders[i];
    std::vector<Int> c;
    bool ok = solve_exact(kb, rhs, c);
    assert(ok && "source relations must lie in the kernel lattice");
    (void)ok;
    IntMatrix row(1, kb.cols);
    for (std::size_t j = 0; j < kb.cols; ++j) row.at(0, j) = c[j];
    rels = IntMatrix::vstack(rels, row);
  }

  std::vector<std::string> kb_labels;
  for (std::size_t j = 0; j < kb.cols; ++j)
    kb_labels.push_back(combo_label(h.source.gen_labels, kb.column_vec(j)));
  Presentation p = group_from_presentation(kb_labels, rels);

  IntMatrix incl = kb * p.gens_in_ambient;  // source coords x kernel gens
  return Subquotient{p.group, Homomorphism(p.group, h.source, incl), incl};
}

Subquotient image(const Homomorphism& h) {
  assert(h.source.resolved() && h.target.resolved());
  IntMatrix kb = kernel_preimage_lattice(h);
  // image ≅ source lattice / preimage lattice
  IntMatrix rels = kb.transposed();
  // label image generators by their value in the target
  Presentation p0 = group_from_presentation(
      std::vector<std::string>(h.source.gen_count(), std::string()), rels);
  IntMatrix incl = h.matrix * p0.gens_in_ambient;  // target coords x image gens
  FgAbelianGroup grp = p0.group;
  for (std::size_t k = 0; k < grp.gen_count(); ++k) {
    std::vector<Int> tv = incl.column_vec(k);
    h.target.reduce(tv);
    grp.gen_labels[k] = combo_label(h.target.gen_labels, tv);
  }
  return Subquotient{grp, Homomorphism(grp, h.target, incl), incl};
}

Subquotient cokernel(const Homomorphism& h) {
  assert(h.source.resolved() && h.target.resolved());
  IntMatrix rels = IntMatrix::vstack(h.matrix.transposed(), relation_columns(h.target).transposed());
  Presentation p = group_from_presentation(h.target.gen_labels, rels);
  return Subquotient{p.group, Homomorphism(h.target, p.group, p.project_ambient), p.gens_in_ambient};
}

FgAbelianGroup ses_resolve(const FgAbelianGroup& left, const FgAbelianGroup& right) {
  if (left.is_trivial()) return right;
  if (right.is_trivial()) return left;
  if (right.is_free()) return direct_sum(left, right);  // splits: quotient is free

  // quotient carries torsion; a free subgroup summand would make the
  // extension genuinely ambiguous (e.g. 0 -> Z -> G -> Z_2 -> 0)
  if (left.rank() > 0)
    throw std::invalid_argument("ses_resolve: infinite subgroup under torsion quotient");

  if (left.resolved() && right.resolved()) {
    Int re = 1;
    for (const Int& d : right.gen_orders)
      if (d != 0) re = lcm_int(re, d);
    if (gcd_int(left.exponent(), re) == 1)
      return direct_sum(left, right);  // coprime exponents: extension group vanishes
  }

  // order-only lump: free quotient summands still split off
  FgAbelianGroup out;
  out.blob_order = left.torsion_order() * right.torsion_order();
  auto swallow = [&out](const FgAbelianGroup& g) {
    for (std::size_t i = 0; i < g.gen_count(); ++i) {
      if (g.gen_orders[i] != 0)
        out.blob_labels.push_back(g.gen_labels[i]);
      else {
        out.gen_orders.push_back(0);
        out.gen_labels.push_back(g.gen_labels[i]);
      }
    }
    out.blob_labels.insert(out.blob_labels.end(), g.blob_labels.begin(), g.blob_labels.end());
  };
  swallow(left);
  swallow(right);
  return out;
}

}  // namespace strtop
