#pragma once

#include <map>
#include <vector>

#include "schubert/bottsamelson.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// Fixed-point restriction psi^w(v) of the Kostant-Kumar K-theory basis:
// e^{rho - v rho} times the sum over subwords of v_word with Demazure
// product w of the products (e^{-beta_j} - 1).  Any word for v works.
Char psi(const CartanMatrix& cm, const WeylElement& w, const Word& v_word);

// Memoizing evaluator for psi^w(v).
class KRestriction {
 public:
  explicit KRestriction(const CartanMatrix& cm) : cm_(&cm) {}
  const Char& value(const WeylElement& w, const WeylElement& v);

 private:
  const CartanMatrix* cm_;
  std::map<std::pair<WeylElement, WeylElement>, Char> memo_;
};

using KTable = std::map<WeylElement, Char>;

// Demazure operator (D_i f)(v) = (f(v) - f(v s_i) e^{-v alpha_i}) /
// (1 - e^{-v alpha_i}); the numerator must divide exactly.
KTable demazure_D(const CartanMatrix& cm, int i, const KTable& f,
                  const std::vector<WeylElement>& domain);

struct Report {
  long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Checks D_v(psi^w)(1) = delta_{v,w}, plus support, diagonal, recursion and
// psi^1 values, over the whole group (finite type) or up to a length bound.
Report verify_psi_characterization(const CartanMatrix& cm, int length_bound = -1);

// The base-change coefficient b^v (finite type): localization sum over the
// subwords of v_word with trivial product, empty subword included.
Char base_change_b(const CartanMatrix& cm, const Word& v_word);

// Expansion of the dual structure-sheaf class of the Schubert variety of w
// in the psi basis; coefficient on v is b^{Demazure(v, reverse word of w)}.
std::map<WeylElement, Char> change_of_basis(const CartanMatrix& cm, const WeylElement& w);

// Hecke algebra with idempotent generators over a commutative coefficient
// ring; elements are finitely supported in the u_w basis, multiplied through
// the monoid relation u_w u_v = u_{Demazure(w, v)}.
template <class Coeff>
struct HeckeElement {
  std::map<WeylElement, Coeff> coeffs;

  void add(const WeylElement& w, const Coeff& c) {
    auto it = coeffs.find(w);
    if (it == coeffs.end()) {
      if (!c.is_zero()) coeffs.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs.erase(it);
    }
  }
  // Right multiplication by h_i(x) = 1 + (x - 1) u_i.
  void mult_h(int i, const Coeff& x, const Coeff& one) {
    std::map<WeylElement, Coeff> next = coeffs;
    HeckeElement tmp{std::move(next)};
    for (auto& [w, c] : coeffs) tmp.add(demazure_mult(w, i), c * (x - one));
    coeffs = std::move(tmp.coeffs);
  }
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;
};

// The element h_i(x) = 1 + (x - 1) u_i.
template <class Coeff>
HeckeElement<Coeff> hecke_h(const CartanMatrix& cm, int i, const Coeff& x, const Coeff& one) {
  HeckeElement<Coeff> h;
  h.add(WeylElement::identity(cm), one);
  h.add(WeylElement::simple(cm, i), x - one);
  return h;
}

template <class Coeff>
HeckeElement<Coeff> hecke_mult(const HeckeElement<Coeff>& a, const HeckeElement<Coeff>& b) {
  HeckeElement<Coeff> out;
  for (auto& [w, cw] : a.coeffs)
    for (auto& [v, cv] : b.coeffs) {
      WeylElement prod = w;
      for (int i : v.reduced_word()) prod = demazure_mult(prod, i);
      out.add(prod, cw * cv);
    }
  return out;
}

// Order of s_i s_j read off the Cartan matrix; 0 means infinity.
int coxeter_m(const CartanMatrix& cm, int i, int j);

// Verifies the braid-type identity satisfied by h_i, h_j over the polynomial
// ring in two auxiliary variables, for m(i,j) in {2, 3, 4, 6}.
Report verify_yang_baxter(const CartanMatrix& cm, int i, int j);
Report verify_yang_baxter_all(const CartanMatrix& cm);

// psi^w(v) recovered as the u_w coefficient of the Hecke product
// prod_j h_{i_j}(e^{-beta_j}) times e^{rho - v rho}; v_word must be reduced.
Char psi_via_hecke(const CartanMatrix& cm, const WeylElement& w, const Word& v_word);

// Tables gamma^w of dual structure-sheaf restrictions over a finite group,
// generated from gamma^1 by Demazure recursion.
std::map<WeylElement, KTable> gamma_tables(const CartanMatrix& cm);

}  // namespace schubert
