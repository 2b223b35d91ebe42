#pragma once

#include <vector>

#include "schubert/botttower.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// A word of simple roots mu_1, ..., mu_N defining a Bott-Samelson variety.
struct BSWord {
  const CartanMatrix* cm = nullptr;
  Word letters;  // 1-based simple-root indices

  BSWord(const CartanMatrix& c, Word w);
  int size() const { return (int)letters.size(); }
  const CartanMatrix& cartan() const { return *cm; }
};

// The induced Bott-tower list b_{i,j} = mu_j(mu_i^vee).
BottTowerSpec induced_list(const BSWord& bs);

// v_i(eps): ordered product of s_{mu_k} over k <= i in the support of eps.
WeylElement v_eps(const BSWord& bs, const Mask& eps, int i);
// v_i^j(eps): same with i <= k <= j.
WeylElement v_range(const BSWord& bs, const Mask& eps, int i, int j);
// v(eps) = v_N(eps).
WeylElement v_full(const BSWord& bs, const Mask& eps);
// Demazure-monoid product over the support of eps.
WeylElement demazure_v(const BSWord& bs, const Mask& eps);

// alpha_i(eps) = v_i(eps) applied to mu_i.
RootVector alpha_eps(const BSWord& bs, const Mask& eps, int i);
Coords alpha_eps_vec(const BSWord& bs, const Mask& eps, int i);

// Checks alpha_i(eps) = -tau(lambda_i(eps)) where tau sends the k-th fiber
// weight of the induced list to mu_k.
bool tau_consistency(const BSWord& bs, const Mask& eps, int i);

// T-equivariant fixed-point restrictions: signed products of the alpha_i.
Poly sigma_T(const BSWord& bs, const Mask& eps, const Mask& at);
Char mu_T(const BSWord& bs, const Mask& eps, const Mask& at);

// Cells whose class pulls back from the flag-variety Schubert class of w:
// reduced subwords (cohomology) resp. Demazure-product fibers (K-theory).
std::vector<Mask> pullback_xi(const BSWord& bs, const WeylElement& w);
std::vector<Mask> pullback_psi(const BSWord& bs, const WeylElement& w);

}  // namespace schubert
