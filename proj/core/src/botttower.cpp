#include "schubert/botttower.hpp"

#include <algorithm>
#include <functional>

namespace schubert {

Mask Mask::unit(int n, int i) {
  if (i < 1 || i > n) throw error("mask index out of range");
  return {1u << (i - 1), n};
}

std::vector<int> Mask::support() const {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (get(i)) out.push_back(i);
  return out;
}

std::string Mask::to_string() const {
  std::string s(n, '0');
  for (int i = 1; i <= n; ++i)
    if (get(i)) s[i - 1] = '1';
  return s;
}

Mask Mask::parse(const std::string& s) {
  Mask m{0u, (int)s.size()};
  if (s.empty() || s.size() > 31) throw error("bad mask string");
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      m.bits |= 1u << i;
    else if (s[i] != '0')
      throw error("bad mask string '" + s + "'");
  }
  return m;
}

std::vector<Mask> all_masks(int n) {
  if (n < 0 || n > 25) throw error("mask size out of range");
  std::vector<Mask> out;
  out.reserve(1u << n);
  for (unsigned b = 0; b < (1u << n); ++b) out.push_back({b, n});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> submasks(const Mask& eps) {
  std::vector<Mask> out;
  unsigned b = eps.bits;
  unsigned sub = b;
  while (true) {
    out.push_back({sub, eps.n});
    if (sub == 0) break;
    sub = (sub - 1) & b;
  }
  std::sort(out.begin(), out.end());
  return out;
}

long BottTowerSpec::coeff(int i, int j) const {
  auto it = c.find({i, j});
  return it == c.end() ? 0 : it->second;
}

void BottTowerSpec::set(int i, int j, long value) {
  if (!(1 <= i && i < j && j <= size)) throw error("Bott list index out of range");
  if (value == 0)
    c.erase({i, j});
  else
    c[{i, j}] = value;
}

long chain_coeff(const BottTowerSpec& spec, const Mask& eps, int k, int l) {
  if (!(1 <= k && k < l && l <= spec.size)) throw error("chain index out of range");
  // g[j] = signed chain sum from k to j; intermediates run over the support.
  std::vector<long> g(spec.size + 1, 0);
  for (int j = k + 1; j <= l; ++j) {
    long total = -spec.coeff(k, j);
    for (int m = k + 1; m < j; ++m) {
      if (!eps.get(m) || g[m] == 0) continue;
      total -= g[m] * spec.coeff(m, j);
    }
    g[j] = total;
  }
  return g[l];
}

Coords lambda_weight_vec(const BottTowerSpec& spec, const Mask& eps, int i) {
  if (i < 1 || i > spec.size) throw error("weight index out of range");
  Coords v(spec.size, 0);
  v[i - 1] = 1;
  for (int j = 1; j < i; ++j)
    if (eps.get(j)) v[j - 1] = chain_coeff(spec, eps, j, i);
  if (!eps.get(i))
    for (auto& x : v) x = -x;
  return v;
}

Poly lambda_weight(const BottTowerSpec& spec, const Mask& eps, int i) {
  return Poly::linear(spec.weights(), lambda_weight_vec(spec, eps, i));
}

Poly sigma_D(const BottTowerSpec& spec, const Mask& eps, const Mask& at) {
  if (eps.n != spec.size || at.n != spec.size) throw error("mask size mismatch");
  if (!eps.leq(at)) return Poly(spec.weights());
  Poly out = Poly::constant(spec.weights(), 1);
  for (int i : eps.support()) out *= lambda_weight(spec, at, i);
  return out;
}

Char mu_D(const BottTowerSpec& spec, const Mask& eps, const Mask& at) {
  if (eps.n != spec.size || at.n != spec.size) throw error("mask size mismatch");
  if (!eps.leq(at)) return Char(spec.weights());
  Coords shift(spec.size, 0);
  for (int i : at.support()) shift = coords_sub(shift, lambda_weight_vec(spec, at, i));
  Char out = Char::exponential(spec.weights(), shift);
  for (int i : eps.support()) {
    Char factor(spec.weights());
    factor.add_term(lambda_weight_vec(spec, at, i), 1);
    factor.add_term(Coords(spec.size, 0), -1);
    out *= factor;
  }
  return out;
}

FixedPointPolyTable sigma_table(const BottTowerSpec& spec, const Mask& eps, const Mask& domain) {
  FixedPointPolyTable t;
  for (const Mask& at : submasks(domain)) t.emplace(at, sigma_D(spec, eps, at));
  return t;
}

FixedPointCharTable mu_table(const BottTowerSpec& spec, const Mask& eps, const Mask& domain) {
  FixedPointCharTable t;
  for (const Mask& at : submasks(domain)) t.emplace(at, mu_D(spec, eps, at));
  return t;
}

namespace {

// Balanced summation over the sub-cells of eps.  The innermost merges pair
// fixed points differing only in the highest index, whose weights differ
// only by that sign; such pair sums collapse, level by level, so the
// intermediate fractions stay small.
template <class Fraction, class Term>
Fraction localize(unsigned free_bits, unsigned base, const Term& term) {
  if (free_bits == 0) return term(base);
  unsigned low = free_bits & (~free_bits + 1u);
  unsigned rest = free_bits & ~low;
  return localize<Fraction>(rest, base, term) + localize<Fraction>(rest, base | low, term);
}

}  // namespace

Poly integrate(const BottTowerSpec& spec, const FixedPointPolyTable& table, const Mask& eps) {
  auto term = [&](unsigned bits) {
    Mask at{bits, eps.n};
    auto it = table.find(at);
    if (it == table.end()) throw error("localization table is missing a fixed point");
    if (it->second.is_zero()) return PolyFraction();
    std::vector<Poly> denom;
    for (int i : eps.support()) denom.push_back(lambda_weight(spec, at, i));
    return PolyFraction(it->second, denom);
  };
  return localize<PolyFraction>(eps.bits, 0u, term).finalize();
}

Char euler_char(const BottTowerSpec& spec, const FixedPointCharTable& table, const Mask& eps) {
  auto term = [&](unsigned bits) {
    Mask at{bits, eps.n};
    auto it = table.find(at);
    if (it == table.end()) throw error("localization table is missing a fixed point");
    if (it->second.is_zero()) return CharFraction();
    std::vector<Coords> denom;
    for (int i : eps.support()) denom.push_back(lambda_weight_vec(spec, at, i));
    return CharFraction(it->second, denom);
  };
  return localize<CharFraction>(eps.bits, 0u, term).finalize();
}

std::map<Mask, Poly> expand_in_basis(
    int n, const std::function<Poly(const Mask&)>& values,
    const std::function<Poly(const Mask&, const Mask&)>& basis,
    const std::function<std::vector<Poly>(const Mask&)>& diagonal_factors) {
  std::map<Mask, Poly> coeffs;
  for (const Mask& eps : all_masks(n)) {
    Poly rhs = values(eps);
    for (auto& [prev, c] : coeffs) {
      if (c.is_zero() || !prev.leq(eps) || prev == eps) continue;
      rhs -= c * basis(prev, eps);
    }
    for (const Poly& f : diagonal_factors(eps)) rhs = divide_linear(rhs, f);
    if (!rhs.is_zero()) coeffs.emplace(eps, std::move(rhs));
  }
  return coeffs;
}

std::map<Mask, Poly> hd_product(const BottTowerSpec& spec, const Mask& e1, const Mask& e2) {
  const int n = spec.size;
  return expand_in_basis(
      n,
      [&](const Mask& at) { return sigma_D(spec, e1, at) * sigma_D(spec, e2, at); },
      [&](const Mask& eps, const Mask& at) { return sigma_D(spec, eps, at); },
      [&](const Mask& eps) {
        std::vector<Poly> fs;
        for (int i : eps.support()) fs.push_back(lambda_weight(spec, eps, i));
        return fs;
      });
}

}  // namespace schubert
