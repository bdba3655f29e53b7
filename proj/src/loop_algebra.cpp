#include "strtop/loop_algebra.hpp"

#include <stdexcept>

namespace strtop {

SphereContext SphereContext::make(int n, long winding_cutoff) {
  if (n < 1) throw std::invalid_argument("sphere dimension must be >= 1");
  if (n == 1 && winding_cutoff < 0) throw std::invalid_argument("winding cutoff must be >= 0");
  SphereContext ctx;
  ctx.n = n;
  ctx.winding_cutoff = (n == 1) ? winding_cutoff : 0;
  return ctx;
}

long monomial_hdeg(const SphereContext& ctx, const LoopMonomial& m) {
  switch (ctx.family()) {
    case SphereFamily::circle:
      return -m.ea;  // |a| = -1, |x| = 0
    case SphereFamily::odd:
      return -long(ctx.n) * m.ea + long(ctx.n - 1) * m.e;
    case SphereFamily::even:
      return -long(ctx.n) * m.ea - m.eb + long(2 * ctx.n - 2) * m.e;
  }
  return 0;
}

Int monomial_annihilator(const SphereContext& ctx, const LoopMonomial& m) {
  if (ctx.family() == SphereFamily::even && m.ea == 1 && m.e >= 1) return 2;
  return 0;
}

std::string monomial_label(const SphereContext& ctx, const LoopMonomial& m, bool ascii) {
  auto power = [](const std::string& base, long e) -> std::string {
    if (e == 0) return "1";
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
  };
  const std::string tensor = ascii ? "(x)" : "⊗";
  switch (ctx.family()) {
    case SphereFamily::circle:
      return (m.ea ? "a" : "1") + tensor + power("x", m.e);
    case SphereFamily::odd:
      return (m.ea ? "a" : "1") + tensor + power("u", m.e);
    case SphereFamily::even: {
      std::string head = (m.ea ? "a" : "");
      if (m.eb) head += "b";
      if (m.e == 0) return head.empty() ? "1" : head;
      return head + (m.e == 1 ? "v" : "v^" + std::to_string(m.e));
    }
  }
  return "?";
}

LoopClass LoopClass::zero(const SphereContext& ctx, long degree) {
  LoopClass x;
  x.ctx = ctx;
  x.degree = degree;
  return x;
}

LoopClass LoopClass::monomial(const SphereContext& ctx, const LoopMonomial& m, const Int& coeff) {
  LoopClass x = zero(ctx, monomial_hdeg(ctx, m));
  x.add_term(m, coeff);
  return x;
}

void LoopClass::add_term(const LoopMonomial& m, const Int& c) {
  if (c == 0) return;
  Int& slot = terms[m];
  slot += c;
  Int ann = monomial_annihilator(ctx, m);
  if (ann != 0) slot = mod_floor(slot, ann);
  if (slot == 0) terms.erase(m);
}

LoopClass LoopClass::operator+(const LoopClass& o) const {
  if (!(ctx == o.ctx)) throw std::invalid_argument("loop class context mismatch");
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (degree != o.degree) throw std::invalid_argument("loop classes must be homogeneous of equal degree");
  LoopClass r = *this;
  for (const auto& [m, c] : o.terms) r.add_term(m, c);
  return r;
}

LoopClass LoopClass::operator-() const { return scaled(-1); }

LoopClass LoopClass::operator-(const LoopClass& o) const { return *this + (-o); }

LoopClass LoopClass::scaled(const Int& c) const {
  LoopClass r = zero(ctx, degree);
  if (c == 0) return r;
  for (const auto& [m, coeff] : terms) r.add_term(m, coeff * c);
  return r;
}

bool LoopClass::operator==(const LoopClass& o) const {
  if (!(ctx == o.ctx)) return false;
  if (is_zero() && o.is_zero()) return true;
  return degree == o.degree && terms == o.terms;
}

std::string class_label(const LoopClass& x, bool ascii) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms) {
    std::string mono = monomial_label(x.ctx, m, ascii);
    std::string term;
    if (c == 1)
      term = mono;
    else if (c == -1)
      term = "-(" + mono + ")";
    else
      term = to_string(c) + "(" + mono + ")";
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

std::vector<LoopMonomial> loop_basis(const SphereContext& ctx, long hdeg) {
  std::vector<LoopMonomial> basis;
  switch (ctx.family()) {
    case SphereFamily::circle: {
      if (hdeg != 0 && hdeg != -1) break;
      int ea = (hdeg == -1) ? 1 : 0;
      for (long w = -ctx.winding_cutoff; w <= ctx.winding_cutoff; ++w)
        basis.push_back({ea, 0, w});
      break;
    }
    case SphereFamily::odd: {
      long step = ctx.n - 1;
      if (hdeg >= 0 && hdeg % step == 0) basis.push_back({0, 0, hdeg / step});
      long shifted = hdeg + ctx.n;
      if (shifted >= 0 && shifted % step == 0) basis.push_back({1, 0, shifted / step});
      break;
    }
    case SphereFamily::even: {
      long step = 2 * ctx.n - 2;
      if (hdeg >= 0 && hdeg % step == 0) basis.push_back({0, 0, hdeg / step});
      if (hdeg + 1 >= 0 && (hdeg + 1) % step == 0) basis.push_back({0, 1, (hdeg + 1) / step});
      if (hdeg + ctx.n >= 0 && (hdeg + ctx.n) % step == 0)
        basis.push_back({1, 0, (hdeg + ctx.n) / step});
      break;
    }
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

FgAbelianGroup loop_group(const SphereContext& ctx, long hdeg) {
  FgAbelianGroup g;
  for (const LoopMonomial& m : loop_basis(ctx, hdeg)) {
    g.gen_orders.push_back(monomial_annihilator(ctx, m));
    g.gen_labels.push_back(monomial_label(ctx, m));
  }
  return g;
}

std::vector<Int> loop_coords(const SphereContext& ctx, const LoopClass& x) {
  std::vector<LoopMonomial> basis = loop_basis(ctx, x.degree);
  std::vector<Int> coords(basis.size());
  for (const auto& [m, c] : x.terms) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || !(*it == m))
      throw std::out_of_range("loop class term outside the enumerated basis");
    coords[it - basis.begin()] = c;
  }
  return coords;
}

LoopClass class_from_coords(const SphereContext& ctx, long hdeg, const std::vector<Int>& coords) {
  std::vector<LoopMonomial> basis = loop_basis(ctx, hdeg);
  if (coords.size() != basis.size())
    throw std::invalid_argument("coordinate vector does not match basis size");
  LoopClass x = LoopClass::zero(ctx, hdeg);
  for (std::size_t i = 0; i < basis.size(); ++i) x.add_term(basis[i], coords[i]);
  return x;
}

LoopClass loop_product(const LoopClass& x, const LoopClass& y) {
  if (!(x.ctx == y.ctx)) throw std::invalid_argument("loop product context mismatch");
  const bool even = x.ctx.family() == SphereFamily::even;
  LoopClass r = LoopClass::zero(x.ctx, x.degree + y.degree);
  for (const auto& [m1, c1] : x.terms)
    for (const auto& [m2, c2] : y.terms) {
      int ea = m1.ea + m2.ea;
      int eb = m1.eb + m2.eb;
      if (ea > 1 || eb > 1) continue;          // a² = 0, b² = 0
      if (even && ea == 1 && eb == 1) continue;  // ab = 0
      r.add_term({ea, eb, m1.e + m2.e}, c1 * c2);
    }
  return r;
}

LoopClass bv_delta(const LoopClass& x) {
  LoopClass r = LoopClass::zero(x.ctx, x.degree + 1);
  for (const auto& [m, c] : x.terms) {
    switch (x.ctx.family()) {
      case SphereFamily::circle:
        // Δ(a⊗x^w) = w(1⊗x^w)
        if (m.ea == 1) r.add_term({0, 0, m.e}, c * Int(m.e));
        break;
      case SphereFamily::odd:
        // Δ(a⊗u^i) = i(1⊗u^{i-1})
        if (m.ea == 1 && m.e >= 1) r.add_term({0, 0, m.e - 1}, c * Int(m.e));
        break;
      case SphereFamily::even:
        // Δ(bv^k) = (2k+1)v^k, Δ(v^k) = Δ(av^k) = 0
        if (m.eb == 1 && m.ea == 0) r.add_term({0, 0, m.e}, c * Int(2 * m.e + 1));
        break;
    }
  }
  return r;
}

}  // namespace strtop
