#include "schubert/bottsamelson.hpp"

namespace schubert {

BSWord::BSWord(const CartanMatrix& c, Word w) : cm(&c), letters(std::move(w)) {
  for (int i : letters)
    if (i < 1 || i > c.rank) throw error("word letter out of range");
}

BottTowerSpec induced_list(const BSWord& bs) {
  const CartanMatrix& cm = bs.cartan();
  BottTowerSpec spec;
  spec.size = bs.size();
  for (int i = 1; i <= spec.size; ++i)
    for (int j = i + 1; j <= spec.size; ++j)
      spec.set(i, j, cm.entry(bs.letters[i - 1], bs.letters[j - 1]));
  return spec;
}

WeylElement v_range(const BSWord& bs, const Mask& eps, int i, int j) {
  if (i < 1 || j > bs.size() || i > j + 1) throw error("word range out of bounds");
  WeylElement w = WeylElement::identity(bs.cartan());
  for (int k = i; k <= j; ++k)
    if (eps.get(k)) w = w.times_simple(bs.letters[k - 1]);
  return w;
}

WeylElement v_eps(const BSWord& bs, const Mask& eps, int i) { return v_range(bs, eps, 1, i); }

WeylElement v_full(const BSWord& bs, const Mask& eps) { return v_range(bs, eps, 1, bs.size()); }

WeylElement demazure_v(const BSWord& bs, const Mask& eps) {
  WeylElement w = WeylElement::identity(bs.cartan());
  for (int k = 1; k <= bs.size(); ++k)
    if (eps.get(k)) w = demazure_mult(w, bs.letters[k - 1]);
  return w;
}

RootVector alpha_eps(const BSWord& bs, const Mask& eps, int i) {
  return v_eps(bs, eps, i).apply(simple_root(bs.cartan(), bs.letters[i - 1]));
}

Coords alpha_eps_vec(const BSWord& bs, const Mask& eps, int i) {
  return alpha_eps(bs, eps, i).coords;
}

bool tau_consistency(const BSWord& bs, const Mask& eps, int i) {
  const CartanMatrix& cm = bs.cartan();
  Coords lam = lambda_weight_vec(induced_list(bs), eps, i);
  Coords tau(cm.rank, 0);
  for (int k = 1; k <= bs.size(); ++k) {
    if (lam[k - 1] == 0) continue;
    tau[bs.letters[k - 1] - 1] += lam[k - 1];
  }
  return coords_add(tau, alpha_eps_vec(bs, eps, i)) == Coords(cm.rank, 0);
}

Poly sigma_T(const BSWord& bs, const Mask& eps, const Mask& at) {
  const CartanMatrix& cm = bs.cartan();
  VarSpace vs = alpha_space(cm.rank);
  if (eps.n != bs.size() || at.n != bs.size()) throw error("mask size mismatch");
  if (!eps.leq(at)) return Poly(vs);
  Poly out = Poly::constant(vs, eps.length() % 2 ? -1 : 1);
  for (int i : eps.support()) out *= Poly::linear(vs, alpha_eps_vec(bs, at, i));
  return out;
}

Char mu_T(const BSWord& bs, const Mask& eps, const Mask& at) {
  const CartanMatrix& cm = bs.cartan();
  VarSpace vs = alpha_space(cm.rank);
  if (eps.n != bs.size() || at.n != bs.size()) throw error("mask size mismatch");
  if (!eps.leq(at)) return Char(vs);
  Coords shift(cm.rank, 0);
  for (int i : at.support()) shift = coords_add(shift, alpha_eps_vec(bs, at, i));
  Char out = Char::exponential(vs, shift);
  for (int i : eps.support()) {
    Char factor(vs);
    factor.add_term(coords_neg(alpha_eps_vec(bs, at, i)), 1);
    factor.add_term(Coords(cm.rank, 0), -1);
    out *= factor;
  }
  return out;
}

std::vector<Mask> pullback_xi(const BSWord& bs, const WeylElement& w) {
  std::vector<Mask> out;
  for (const Mask& eps : all_masks(bs.size())) {
    if (eps.length() != w.length()) continue;
    if (v_full(bs, eps) == w) out.push_back(eps);
  }
  return out;
}

std::vector<Mask> pullback_psi(const BSWord& bs, const WeylElement& w) {
  std::vector<Mask> out;
  for (const Mask& eps : all_masks(bs.size())) {
    if (eps.length() < w.length()) continue;
    if (demazure_v(bs, eps) == w) out.push_back(eps);
  }
  return out;
}

}  // namespace schubert
