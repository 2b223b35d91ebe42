#pragma once

#include <map>
#include <vector>

#include "schubert/bottsamelson.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// Billey's restriction formula: xi^w(v) as a sum over the reduced subwords
// of v_word equal to w of products of prefix-reflected simple roots.  The
// word may be non-reduced; the value depends only on its product.
Poly billey(const CartanMatrix& cm, const WeylElement& w, const Word& v_word);

// The same restriction computed through the Bott-Samelson cell decomposition
// (sum of sigma_T over the pullback cells, evaluated at the top fixed point).
// Kept as an independent route for cross-checks.
Poly billey_via_bs(const CartanMatrix& cm, const WeylElement& w, const Word& v_word);

// Memoizing fixed-point evaluator for xi^w(v); fills are idempotent.
class CohRestriction {
 public:
  explicit CohRestriction(const CartanMatrix& cm) : cm_(&cm) {}
  const Poly& value(const WeylElement& w, const WeylElement& v);

 private:
  const CartanMatrix* cm_;
  std::map<std::pair<WeylElement, WeylElement>, Poly> memo_;
};

using CohTable = std::map<WeylElement, Poly>;

// Divided difference A_i(f)(u) = (f(u s_i) - f(u)) / (u alpha_i), evaluated
// pointwise on the domain; f must also be defined on domain * s_i.
CohTable demazure_A(const CartanMatrix& cm, int i, const CohTable& f,
                    const std::vector<WeylElement>& domain);

// Equivariant structure constant p_{u,v}^w by the operator-string formula:
// over each reduced subword of w_word equal to u, replace those divided
// differences by point translations and evaluate the composite on xi^v at 1.
Poly kk_structconst(const CartanMatrix& cm, const WeylElement& u, const WeylElement& v,
                    const Word& w_word);
Poly kk_structconst(const CartanMatrix& cm, const WeylElement& u, const WeylElement& v,
                    const Word& w_word, CohRestriction& xi);

// Pieri-Chevalley rule: coefficients of xi^{s_i} * xi^v on v itself and on
// the Bruhat covers of v.
std::map<WeylElement, Poly> pieri_chevalley(const CartanMatrix& cm, int i,
                                            const WeylElement& v, long height_bound = 0);

}  // namespace schubert
