#include "schubert/structconst.hpp"

#include <algorithm>

#include "schubert/textio.hpp"

namespace schubert {

Rat DList::off_coeff(int l, int k) const {
  auto it = off.find({l, k});
  return it == off.end() ? Rat(0) : it->second;
}

DList bs_dlist(const BSWord& bs) {
  const CartanMatrix& cm = bs.cartan();
  VarSpace vs = alpha_space(cm.rank);
  DList dl;
  dl.size = bs.size();
  dl.vs = vs;
  for (int k = 1; k <= dl.size; ++k) {
    dl.diag.push_back(Poly::variable(vs, bs.letters[k - 1]));
    for (int l = 1; l < k; ++l) {
      long v = -cm.entry(bs.letters[l - 1], bs.letters[k - 1]);
      if (v != 0) dl.off[{l, k}] = Rat(v);
    }
  }
  return dl;
}

XPoly xpoly_monomial(const DList& dl, const Mask& eps) {
  XExpo e(dl.size, 0);
  for (int i : eps.support()) e[i - 1] = 1;
  XPoly p;
  p.emplace(e, Poly::constant(dl.coeff_space(), 1));
  return p;
}

namespace {

void xpoly_accum(XPoly& p, const XExpo& e, const Poly& c) {
  if (c.is_zero()) return;
  auto it = p.find(e);
  if (it == p.end()) {
    p.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

}  // namespace

XPoly xpoly_mul(const XPoly& a, const XPoly& b) {
  XPoly out;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) {
      XExpo e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      xpoly_accum(out, e, ca * cb);
    }
  return out;
}

XPoly xpoly_add(XPoly a, const XPoly& b) {
  for (auto& [e, c] : b) xpoly_accum(a, e, c);
  return a;
}

ADElement normal_form(const DList& dl, const XPoly& p) {
  XPoly work = p;
  ADElement out;
  while (!work.empty()) {
    // Highest monomial first keeps the rewriting strictly decreasing in the
    // top-down exponent order.
    auto it = std::prev(work.end());
    XExpo e = it->first;
    Poly c = it->second;
    work.erase(it);
    int k = 0;
    for (int i = dl.size; i >= 1; --i)
      if (e[i - 1] >= 2) {
        k = i;
        break;
      }
    if (k == 0) {
      Mask eps = Mask::empty(dl.size);
      for (int i = 1; i <= dl.size; ++i)
        if (e[i - 1] == 1) eps.bits |= 1u << (i - 1);
      auto [pos, fresh] = out.try_emplace(eps, c);
      if (!fresh) {
        pos->second += c;
        if (pos->second.is_zero()) out.erase(pos);
      }
      continue;
    }
    // x_k^s -> (d_{kk} + sum_{l<k} d_{lk} x_l)^{s-1} x_k times the rest.
    int s = e[k - 1];
    XPoly expansion;
    XExpo rest = e;
    rest[k - 1] = 1;
    expansion.emplace(rest, c);
    XPoly bracket;
    bracket.emplace(XExpo(dl.size, 0), dl.diag[k - 1]);
    for (int l = 1; l < k; ++l) {
      Rat d = dl.off_coeff(l, k);
      if (d == 0) continue;
      XExpo el(dl.size, 0);
      el[l - 1] = 1;
      bracket.emplace(el, Poly::constant(dl.coeff_space(), d));
    }
    for (int t = 0; t < s - 1; ++t) expansion = xpoly_mul(expansion, bracket);
    work = xpoly_add(std::move(work), expansion);
  }
  return out;
}

Poly t_eps(const DList& dl, const XPoly& p, const Mask& eps) {
  VarSpace vs = dl.coeff_space();
  if (eps.n != dl.size) throw error("mask size mismatch");
  std::vector<int> support = eps.support();
  if (support.empty()) {
    // Only the constant monomial survives.
    auto it = p.find(XExpo(dl.size, 0));
    return it == p.end() ? Poly(vs) : it->second;
  }
  int top = support.back();
  // Keep monomials inside the support variables with x_top present, grouped
  // by the exponent of x_top.
  std::map<int, XPoly> groups;
  for (auto& [e, c] : p) {
    bool outside = false;
    for (int i = 1; i <= dl.size; ++i)
      if (e[i - 1] > 0 && !eps.get(i)) {
        outside = true;
        break;
      }
    if (outside) continue;
    int s = e[top - 1];
    if (s == 0) continue;
    XExpo stripped = e;
    stripped[top - 1] = 0;
    xpoly_accum(groups[s], stripped, c);
  }
  Poly total(vs);
  if (groups.empty()) return total;
  // Substitution bracket d_{top,top} + sum over lower support positions.
  XPoly bracket;
  bracket.emplace(XExpo(dl.size, 0), dl.diag[top - 1]);
  for (int j : support) {
    if (j >= top) break;
    Rat d = dl.off_coeff(j, top);
    if (d == 0) continue;
    XExpo ej(dl.size, 0);
    ej[j - 1] = 1;
    bracket.emplace(ej, Poly::constant(vs, d));
  }
  Mask lower = eps.minus_index(top);
  for (auto& [s, q] : groups) {
    XPoly arg = q;
    for (int t = 0; t < s - 1; ++t) arg = xpoly_mul(arg, bracket);
    total += t_eps(dl, arg, lower);
  }
  return total;
}

Poly struct_const(const CartanMatrix& cm, const WeylElement& u, const WeylElement& v,
                  const Word& w_word) {
  VarSpace vs = alpha_space(cm.rank);
  BSWord bs(cm, w_word);
  std::vector<Mask> mu = pullback_xi(bs, u);
  std::vector<Mask> mv = pullback_xi(bs, v);
  if (mu.empty() || mv.empty()) return Poly(vs);
  DList dl = bs_dlist(bs);
  XPoly su, sv;
  for (const Mask& e : mu) su = xpoly_add(std::move(su), xpoly_monomial(dl, e));
  for (const Mask& e : mv) sv = xpoly_add(std::move(sv), xpoly_monomial(dl, e));
  return t_eps(dl, xpoly_mul(su, sv), Mask::full(bs.size()));
}

std::map<WeylElement, Poly> product_in_basis(const CartanMatrix& cm, const WeylElement& u,
                                             const WeylElement& v, const Word& w0_word) {
  BSWord bs(cm, w0_word);
  std::vector<Mask> mu = pullback_xi(bs, u);
  std::vector<Mask> mv = pullback_xi(bs, v);
  if (mu.empty() || mv.empty())
    throw error("word does not dominate the factors");
  DList dl = bs_dlist(bs);
  XPoly su, sv;
  for (const Mask& e : mu) su = xpoly_add(std::move(su), xpoly_monomial(dl, e));
  for (const Mask& e : mv) sv = xpoly_add(std::move(sv), xpoly_monomial(dl, e));
  ADElement expansion = normal_form(dl, xpoly_mul(su, sv));
  // Read the coefficients off the reduced cells; non-reduced cells must not
  // carry anything because the product lies in the pulled-back subalgebra.
  std::map<WeylElement, Poly> out;
  for (auto& [eps, coeff] : expansion) {
    if (coeff.is_zero()) continue;
    WeylElement w = v_full(bs, eps);
    if (w.length() != eps.length())
      throw error("product expansion escaped the pulled-back subalgebra");
    auto [pos, fresh] = out.try_emplace(w, coeff);
    if (!fresh && !(pos->second == coeff))
      throw error("inconsistent coefficients across cells of one Schubert class");
  }
  return out;
}

std::map<WeylElement, Poly> product_in_basis(const CartanMatrix& cm, const WeylElement& u,
                                             const WeylElement& v) {
  return product_in_basis(cm, u, v, longest_element(cm).reduced_word());
}

}  // namespace schubert
