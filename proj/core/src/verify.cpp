#include "schubert/verify.hpp"

#include <functional>
#include <random>

#include "schubert/flagcoh.hpp"
#include "schubert/structconst.hpp"
#include "schubert/textio.hpp"

namespace schubert {

namespace {

BottTowerSpec random_spec(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  BottTowerSpec spec;
  spec.size = n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) spec.set(i, j, entry(rng));
  return spec;
}

}  // namespace

SuiteResult verify_localization_delta(int max_size, int lists, unsigned seed) {
  SuiteResult res{"localization-delta"};
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < lists; ++trial) {
    int n = 1 + (int)(rng() % (unsigned)max_size);
    BottTowerSpec spec = random_spec(n, rng);
    for (const Mask& basis : all_masks(n)) {
      FixedPointPolyTable table = sigma_table(spec, basis, Mask::full(n));
      for (const Mask& domain : all_masks(n)) {
        Poly got = integrate(spec, table, domain);
        Poly want = basis == domain ? Poly::constant(spec.weights(), 1) : Poly(spec.weights());
        ++res.checked;
        if (!(got == want))
          res.failures.push_back("integral delta failed at (" + basis.to_string() + ", " +
                                 domain.to_string() + ") trial " + std::to_string(trial));
      }
    }
  }
  return res;
}

SuiteResult verify_euler_delta(int max_size, int lists, unsigned seed) {
  SuiteResult res{"euler-delta"};
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < lists; ++trial) {
    int n = 1 + (int)(rng() % (unsigned)max_size);
    BottTowerSpec spec = random_spec(n, rng);
    for (const Mask& basis : all_masks(n)) {
      FixedPointCharTable table = mu_table(spec, basis, Mask::full(n));
      for (const Mask& domain : all_masks(n)) {
        Char got = euler_char(spec, table, domain);
        Char want = basis == domain ? Char::constant(spec.weights(), 1) : Char(spec.weights());
        ++res.checked;
        if (!(got == want))
          res.failures.push_back("Euler delta failed at (" + basis.to_string() + ", " +
                                 domain.to_string() + ") trial " + std::to_string(trial));
      }
    }
  }
  return res;
}

SuiteResult verify_tau(const CartanMatrix& cm, int max_len) {
  SuiteResult res{"tau"};
  Word word;
  std::function<void()> recurse = [&]() {
    if (!word.empty()) {
      BSWord bs(cm, word);
      int n = bs.size();
      for (const Mask& eps : all_masks(n))
        for (int i = 1; i <= n; ++i) {
          ++res.checked;
          if (!tau_consistency(bs, eps, i))
            res.failures.push_back("tau failed for word " + format_word(word) + " at (" +
                                   eps.to_string() + ", " + std::to_string(i) + ")");
        }
    }
    if ((int)word.size() >= max_len) return;
    for (int i = 1; i <= cm.rank; ++i) {
      word.push_back(i);
      recurse();
      word.pop_back();
    }
  };
  recurse();
  return res;
}

SuiteResult verify_word_independence(const CartanMatrix& cm) {
  SuiteResult res{"word-independence"};
  std::vector<WeylElement> group = all_elements(cm);
  // billey and psi across all reduced words of the argument.
  for (const WeylElement& v : group) {
    std::vector<Word> words = all_reduced_words(v);
    for (const WeylElement& w : group) {
      if (!bruhat_leq(w, v)) continue;
      Poly xi0 = billey(cm, w, words[0]);
      Char psi0 = psi(cm, w, words[0]);
      for (size_t k = 1; k < words.size(); ++k) {
        ++res.checked;
        if (!(billey(cm, w, words[k]) == xi0))
          res.failures.push_back("billey depends on the word of " +
                                 format_word(words[k]));
        ++res.checked;
        if (!(psi(cm, w, words[k]) == psi0))
          res.failures.push_back("psi depends on the word of " + format_word(words[k]));
      }
    }
  }
  // struct_const across all reduced words of w.
  for (const WeylElement& w : group) {
    std::vector<Word> words = all_reduced_words(w);
    if (words.size() < 2) continue;
    for (const WeylElement& u : group) {
      if (!bruhat_leq(u, w)) continue;
      for (const WeylElement& v : group) {
        if (!bruhat_leq(v, w)) continue;
        Poly p0 = struct_const(cm, u, v, words[0]);
        for (size_t k = 1; k < words.size(); ++k) {
          ++res.checked;
          if (!(struct_const(cm, u, v, words[k]) == p0))
            res.failures.push_back("struct_const depends on the word of " +
                                   format_word(words[k]));
        }
      }
    }
  }
  return res;
}

SuiteResult verify_psi_axioms(const CartanMatrix& cm, int length_bound) {
  SuiteResult res{"psi-axioms"};
  Report rep = verify_psi_characterization(cm, length_bound);
  res.checked = rep.checked;
  res.failures = rep.failures;
  return res;
}

SuiteResult verify_kk_vs_t(const CartanMatrix& cm, int max_lw) {
  SuiteResult res{"kk-vs-t"};
  std::vector<WeylElement> group = all_elements(cm);
  CohRestriction xi(cm);
  for (const WeylElement& w : group) {
    if (max_lw >= 0 && w.length() > max_lw) continue;
    Word w_word = w.reduced_word();
    for (const WeylElement& u : group) {
      for (const WeylElement& v : group) {
        Poly a = struct_const(cm, u, v, w_word);
        Poly b = kk_structconst(cm, u, v, w_word, xi);
        ++res.checked;
        if (!(a == b))
          res.failures.push_back("struct_const != kk at (" + format_word(u.reduced_word()) +
                                 "; " + format_word(v.reduced_word()) + "; " +
                                 format_word(w_word) + ")");
        if ((!bruhat_leq(u, w) || !bruhat_leq(v, w)) && !a.is_zero())
          res.failures.push_back("nonzero constant outside the Bruhat cone at (" +
                                 format_word(u.reduced_word()) + "; " +
                                 format_word(v.reduced_word()) + "; " + format_word(w_word) +
                                 ")");
      }
    }
  }
  return res;
}

SuiteResult verify_yang_baxter_suite(const CartanMatrix& cm) {
  SuiteResult res{"yang-baxter"};
  Report rep = verify_yang_baxter_all(cm);
  res.checked = rep.checked;
  res.failures = rep.failures;
  return res;
}

SuiteResult verify_duan_at_zero(const CartanMatrix& cm, int max_lw) {
  SuiteResult res{"duan-at-zero"};
  std::vector<WeylElement> group = all_elements(cm);
  CohRestriction xi(cm);
  for (const WeylElement& w : group) {
    if (max_lw >= 0 && w.length() > max_lw) continue;
    Word w_word = w.reduced_word();
    for (const WeylElement& u : group) {
      for (const WeylElement& v : group) {
        if (u.length() + v.length() != w.length()) continue;
        Rat a = struct_const(cm, u, v, w_word).eval_zero();
        Rat b = kk_structconst(cm, u, v, w_word, xi).eval_zero();
        ++res.checked;
        if (a != b)
          res.failures.push_back("degree-0 values differ at (" +
                                 format_word(u.reduced_word()) + "; " +
                                 format_word(v.reduced_word()) + "; " + format_word(w_word) +
                                 ")");
      }
    }
  }
  return res;
}

SuiteResult observe_graham_positivity(const CartanMatrix& cm, int max_lw,
                                      std::vector<std::string>& flags) {
  SuiteResult res{"graham-positivity"};
  std::vector<WeylElement> group = all_elements(cm);
  for (const WeylElement& w : group) {
    if (max_lw >= 0 && w.length() > max_lw) continue;
    Word w_word = w.reduced_word();
    for (const WeylElement& u : group) {
      if (!bruhat_leq(u, w)) continue;
      for (const WeylElement& v : group) {
        if (!bruhat_leq(v, w)) continue;
        Poly p = struct_const(cm, u, v, w_word);
        ++res.checked;
        for (auto& [e, c] : p.terms())
          if (c < 0)
            flags.push_back("negative coefficient observed at (" +
                            format_word(u.reduced_word()) + "; " +
                            format_word(v.reduced_word()) + "; " + format_word(w_word) + ")");
      }
    }
  }
  return res;
}

}  // namespace schubert
