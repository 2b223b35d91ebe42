#pragma once

#include <map>
#include <vector>

#include "schubert/bottsamelson.hpp"
#include "schubert/flagcoh.hpp"

namespace schubert {

// Coefficient data of the quotient algebra A[X_1..X_N]/<Q_k>, with
// Q_k = X_k^2 - d_{k,k} X_k - sum_{l<k} d_{l,k} X_l X_k.  Diagonal entries
// have degree <= 1, off-diagonal entries are scalars.
struct DList {
  int size = 0;
  VarSpace vs;                       // base coefficient ring
  std::vector<Poly> diag;            // d_{k,k}, index k-1
  std::map<std::pair<int, int>, Rat> off;  // (l, k) with l < k -> d_{l,k}

  Rat off_coeff(int l, int k) const;
  VarSpace coeff_space() const { return vs; }
};

// The Bott-Samelson instantiation: d_{k,k} = mu_k, d_{l,k} = -mu_k(mu_l^vee).
DList bs_dlist(const BSWord& bs);

// Polynomial in x_1..x_N with coefficients in the base ring.
using XExpo = std::vector<int>;
using XPoly = std::map<XExpo, Poly>;

XPoly xpoly_monomial(const DList& dl, const Mask& eps);
XPoly xpoly_mul(const XPoly& a, const XPoly& b);
XPoly xpoly_add(XPoly a, const XPoly& b);

// Element of the quotient algebra in the square-free basis x^eps.
using ADElement = std::map<Mask, Poly>;

// Rewrites to the square-free basis, reducing the highest-index squared
// variable first via x_k^s = (d_{kk} + sum_{l<k} d_{lk} x_l)^{s-1} x_k.
ADElement normal_form(const DList& dl, const XPoly& p);

// The coefficient-extraction functional T^eps, evaluated by its recursive
// rules; agrees with the eps-coefficient of normal_form.
Poly t_eps(const DList& dl, const XPoly& p, const Mask& eps);

// Equivariant Schubert structure constant p_{u,v}^w through the
// Bott-Samelson model on the given word for w.
Poly struct_const(const CartanMatrix& cm, const WeylElement& u, const WeylElement& v,
                  const Word& w_word);

// All p_{u,v}^w at once by expanding the product inside the Bott-Samelson
// model of a dominating word (defaults to a reduced word of the longest
// element; finite type).
std::map<WeylElement, Poly> product_in_basis(const CartanMatrix& cm, const WeylElement& u,
                                             const WeylElement& v, const Word& w0_word);
std::map<WeylElement, Poly> product_in_basis(const CartanMatrix& cm, const WeylElement& u,
                                             const WeylElement& v);

}  // namespace schubert
