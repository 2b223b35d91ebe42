#pragma once

#include <string>
#include <vector>

#include "schubert/flagk.hpp"

namespace schubert {

struct SuiteResult {
  std::string name;
  long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Kronecker-delta identities of the localization integral against the sigma
// basis, over random integer lists with entries in [-3, 3].
SuiteResult verify_localization_delta(int max_size, int lists, unsigned seed);
// Same for the Euler characteristic against the mu basis.
SuiteResult verify_euler_delta(int max_size, int lists, unsigned seed);

// alpha_i(eps) = -tau(lambda_i(eps)) for every word up to max_len.
SuiteResult verify_tau(const CartanMatrix& cm, int max_len);

// billey, psi and struct_const agree across all reduced words (finite type).
SuiteResult verify_word_independence(const CartanMatrix& cm);

// The psi-basis axioms (support, diagonal, recursion, delta pairing).
SuiteResult verify_psi_axioms(const CartanMatrix& cm, int length_bound = -1);

// struct_const against the operator-string formula on all (u, v, w) with
// l(w) <= max_lw (negative: all of a finite group).
SuiteResult verify_kk_vs_t(const CartanMatrix& cm, int max_lw = -1);

// All rank-2 braid identities with m in {2, 3, 4, 6} present in cm.
SuiteResult verify_yang_baxter_suite(const CartanMatrix& cm);

// Evaluation at 0 of p_{u,v}^w on length-additive triples against the
// operator-string value at 0.
SuiteResult verify_duan_at_zero(const CartanMatrix& cm, int max_lw = -1);

// Graham positivity observation: nonnegative coefficients of every computed
// p_{u,v}^w.  Violations are reported as flags, not failures.
SuiteResult observe_graham_positivity(const CartanMatrix& cm, int max_lw,
                                      std::vector<std::string>& flags);

}  // namespace schubert
