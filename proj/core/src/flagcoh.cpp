#include "schubert/flagcoh.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace schubert {

Poly billey(const CartanMatrix& cm, const WeylElement& w, const Word& v_word) {
  VarSpace vs = alpha_space(cm.rank);
  const int m = w.length();
  // DP over positions: state = (partial product, letters chosen), value =
  // accumulated sum of beta products.  beta_j is the j-th prefix-reflected
  // letter of the full word, independent of the selection.
  std::map<std::pair<WeylElement, int>, Poly> state;
  state.emplace(std::make_pair(WeylElement::identity(cm), 0), Poly::constant(vs, 1));
  WeylElement prefix = WeylElement::identity(cm);
  for (int j : v_word) {
    if (j < 1 || j > cm.rank) throw error("word letter out of range");
    Poly beta = Poly::linear(vs, prefix.apply(simple_root(cm, j)).coords);
    std::map<std::pair<WeylElement, int>, Poly> next = state;
    for (auto& [key, val] : state) {
      if (key.second >= m) continue;  // longer subwords cannot reach length m
      auto nk = std::make_pair(key.first.times_simple(j), key.second + 1);
      auto it = next.find(nk);
      if (it == next.end())
        next.emplace(nk, val * beta);
      else
        it->second += val * beta;
    }
    state = std::move(next);
    prefix = prefix.times_simple(j);
  }
  auto it = state.find(std::make_pair(w, m));
  return it == state.end() ? Poly(vs) : it->second;
}

Poly billey_via_bs(const CartanMatrix& cm, const WeylElement& w, const Word& v_word) {
  BSWord bs(cm, v_word);
  Mask top = Mask::full(bs.size());
  Poly out(alpha_space(cm.rank));
  for (const Mask& eps : pullback_xi(bs, w)) out += sigma_T(bs, eps, top);
  return out;
}

const Poly& CohRestriction::value(const WeylElement& w, const WeylElement& v) {
  auto key = std::make_pair(w, v);
  auto it = memo_.find(key);
  if (it == memo_.end())
    it = memo_.emplace(key, billey(*cm_, w, v.reduced_word())).first;
  return it->second;
}

CohTable demazure_A(const CartanMatrix& cm, int i, const CohTable& f,
                    const std::vector<WeylElement>& domain) {
  VarSpace vs = alpha_space(cm.rank);
  CohTable out;
  for (const WeylElement& u : domain) {
    auto fu = f.find(u);
    auto fus = f.find(u.times_simple(i));
    if (fu == f.end() || fus == f.end())
      throw error("divided difference needs values on domain and its s_i translate");
    Poly diff = fus->second - fu->second;
    Poly denom = Poly::linear(vs, u.apply(simple_root(cm, i)).coords);
    out.emplace(u, diff.is_zero() ? diff : divide_linear(diff, denom));
  }
  return out;
}

namespace {

// Left-to-right growth of the evaluation domains E_k of an operator string:
// E_1 = {1}, E_{k+1} = E_k union E_k s_{i_k}.
std::vector<std::vector<WeylElement>> operator_domains(const CartanMatrix& cm,
                                                       const Word& w_word) {
  std::vector<std::vector<WeylElement>> domains(w_word.size() + 1);
  std::set<WeylElement> cur{WeylElement::identity(cm)};
  domains[0].assign(cur.begin(), cur.end());
  for (size_t k = 0; k < w_word.size(); ++k) {
    std::set<WeylElement> next = cur;
    for (const WeylElement& u : cur) next.insert(u.times_simple(w_word[k]));
    cur = std::move(next);
    domains[k + 1].assign(cur.begin(), cur.end());
  }
  return domains;
}

}  // namespace

Poly kk_structconst(const CartanMatrix& cm, const WeylElement& u, const WeylElement& v,
                    const Word& w_word, CohRestriction& xi) {
  if ((int)w_word.size() != WeylElement::from_word(cm, w_word).length())
    throw error("operator-string formula needs a reduced word");
  VarSpace vs = alpha_space(cm.rank);
  const int n = (int)w_word.size();
  const int m = u.length();
  auto domains = operator_domains(cm, w_word);

  // Enumerate reduced subwords of w_word equal to u.
  std::vector<std::vector<int>> subwords;
  std::vector<int> positions;
  std::function<void(int, WeylElement)> rec = [&](int pos, WeylElement prod) {
    if ((int)positions.size() == m) {
      if (prod == u) subwords.push_back(positions);
      return;
    }
    if (pos >= n || (int)positions.size() + (n - pos) < m) return;
    positions.push_back(pos);
    rec(pos + 1, prod.times_simple(w_word[pos]));
    positions.pop_back();
    rec(pos + 1, prod);
  };
  rec(0, WeylElement::identity(cm));

  Poly total(vs);
  for (const auto& sub : subwords) {
    // Seed with xi^v on the innermost domain, then apply operators from the
    // right end of the string to the left.
    CohTable table;
    for (const WeylElement& x : domains[n]) table.emplace(x, xi.value(v, x));
    for (int k = n - 1; k >= 0; --k) {
      int letter = w_word[k];
      bool translate = std::find(sub.begin(), sub.end(), k) != sub.end();
      CohTable next;
      for (const WeylElement& x : domains[k]) {
        const Poly& fx = table.at(x);
        const Poly& fxs = table.at(x.times_simple(letter));
        if (translate) {
          next.emplace(x, fxs);
        } else {
          Poly diff = fxs - fx;
          Poly denom = Poly::linear(vs, x.apply(simple_root(cm, letter)).coords);
          next.emplace(x, diff.is_zero() ? diff : divide_linear(diff, denom));
        }
      }
      table = std::move(next);
    }
    total += table.at(WeylElement::identity(cm));
  }
  return total;
}

Poly kk_structconst(const CartanMatrix& cm, const WeylElement& u, const WeylElement& v,
                    const Word& w_word) {
  CohRestriction xi(cm);
  return kk_structconst(cm, u, v, w_word, xi);
}

std::map<WeylElement, Poly> pieri_chevalley(const CartanMatrix& cm, int i,
                                            const WeylElement& v, long height_bound) {
  VarSpace vs = alpha_space(cm.rank);
  std::map<WeylElement, Poly> out;
  WeylElement si = WeylElement::simple(cm, i);
  Poly diag = billey(cm, si, v.reduced_word());
  if (!diag.is_zero()) out.emplace(v, diag);
  for (const BruhatCover& cov : bruhat_covers_up(v, height_bound)) {
    long c = cov.coroot.coords[i - 1];  // rho_i(beta^vee)
    if (c != 0) out.emplace(cov.w, Poly::constant(vs, Rat(c)));
  }
  return out;
}

}  // namespace schubert
