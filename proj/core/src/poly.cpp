#include "schubert/poly.hpp"

#include <algorithm>

namespace schubert {

Poly Poly::constant(VarSpace vs, Rat c) {
  Poly p(vs);
  p.add_term(Expo(vs.count, 0), c);
  return p;
}

Poly Poly::variable(VarSpace vs, int i) {
  if (i < 1 || i > vs.count) throw error("variable index out of range");
  Poly p(vs);
  Expo e(vs.count, 0);
  e[i - 1] = 1;
  p.add_term(e, 1);
  return p;
}

Poly Poly::linear(VarSpace vs, const Coords& coords) {
  if ((int)coords.size() != vs.count) throw error("linear form rank mismatch");
  Poly p(vs);
  for (int i = 0; i < vs.count; ++i) {
    if (coords[i] == 0) continue;
    Expo e(vs.count, 0);
    e[i] = 1;
    p.add_term(e, Rat(coords[i]));
  }
  return p;
}

void Poly::add_term(const Expo& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::total_degree() const {
  int d = -1;
  for (auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

bool Poly::is_homogeneous(int degree) const {
  for (auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    if (s != degree) return false;
  }
  return true;
}

Rat Poly::eval_zero() const {
  auto it = terms_.find(Expo(vs_.count, 0));
  return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<Rat> Poly::linear_coefficients() const {
  if (!is_homogeneous(1)) throw error("not a homogeneous linear form");
  std::vector<Rat> out(vs_.count, Rat(0));
  for (auto& [e, c] : terms_) {
    for (int i = 0; i < vs_.count; ++i)
      if (e[i] == 1) out[i] = c;
  }
  return out;
}

void Poly::check_space(const Poly& o) const {
  if (!(vs_ == o.vs_)) throw error("polynomial varspace mismatch");
}

Poly Poly::operator-() const {
  Poly r(vs_);
  for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (terms_.empty() && vs_.count == 0) vs_ = o.vs_;
  check_space(o);
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (terms_.empty() && vs_.count == 0) vs_ = o.vs_;
  check_space(o);
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_space(b);
  Poly r(a.vs_);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      Expo e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r(vs_);
  if (c == 0) return r;
  for (auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if ((int)images.size() != vs_.count) throw error("substitution arity mismatch");
  VarSpace target = images.empty() ? vs_ : images[0].varspace();
  Poly out(target);
  for (auto& [e, c] : terms_) {
    Poly term = Poly::constant(target, c);
    for (int i = 0; i < vs_.count; ++i)
      for (int k = 0; k < e[i]; ++k) term *= images[i];
    out += term;
  }
  return out;
}

std::optional<Poly> try_divide_linear(const Poly& p, const Poly& ell) {
  if (!ell.is_homogeneous(1) || ell.is_zero())
    throw error("divisor must be a nonzero homogeneous linear form");
  if (!(p.varspace() == ell.varspace())) throw error("polynomial varspace mismatch");
  const int n = p.varspace().count;
  // Pivot: the largest-index variable occurring in ell.
  auto cs = ell.linear_coefficients();
  int pivot = -1;
  for (int i = n - 1; i >= 0; --i)
    if (cs[i] != 0) {
      pivot = i;
      break;
    }
  Rat lead = cs[pivot];
  Poly rest = ell - Poly::variable(p.varspace(), pivot + 1) * lead;  // ell minus pivot term

  // Slice p by the pivot exponent, then run synthetic division downward.
  std::map<int, Poly> slices;
  int dmax = 0;
  for (auto& [e, c] : p.terms()) {
    int d = e[pivot];
    dmax = std::max(dmax, d);
    auto it = slices.find(d);
    if (it == slices.end()) it = slices.emplace(d, Poly(p.varspace())).first;
    Expo stripped = e;
    stripped[pivot] = 0;
    it->second.add_term(stripped, c);
  }
  Poly quotient(p.varspace());
  Poly carry(p.varspace());  // Q_d from the previous (higher) slice
  for (int d = dmax; d >= 1; --d) {
    Poly pd = slices.count(d) ? slices.at(d) : Poly(p.varspace());
    Poly qd = (pd - carry * rest) * (Rat(1) / lead);
    // qd multiplies pivot^(d-1)
    Poly shifted(p.varspace());
    for (auto& [e, c] : qd.terms()) {
      Expo e2 = e;
      e2[pivot] += d - 1;
      shifted.add_term(e2, c);
    }
    quotient += shifted;
    carry = qd;
  }
  Poly p0 = slices.count(0) ? slices.at(0) : Poly(p.varspace());
  Poly remainder = p0 - carry * rest;
  if (!remainder.is_zero()) return std::nullopt;
  return quotient;
}

Poly divide_linear(const Poly& p, const Poly& ell) {
  auto q = try_divide_linear(p, ell);
  if (!q) throw error("inexact division by linear form");
  return *q;
}

namespace {

// Monic normalization of a homogeneous linear factor; returns the scale that
// was divided out.
std::pair<std::vector<Rat>, Rat> monic_factor(const Poly& f) {
  auto cs = f.linear_coefficients();
  int pivot = -1;
  for (int i = (int)cs.size() - 1; i >= 0; --i)
    if (cs[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot < 0) throw error("zero linear factor in denominator");
  Rat lead = cs[pivot];
  for (auto& c : cs) c /= lead;
  return {cs, lead};
}

Poly factor_to_poly(VarSpace vs, const std::vector<Rat>& cs) {
  Poly f(vs);
  for (int i = 0; i < vs.count; ++i) {
    if (cs[i] == 0) continue;
    Expo e(vs.count, 0);
    e[i] = 1;
    f.add_term(e, cs[i]);
  }
  return f;
}

}  // namespace

PolyFraction::PolyFraction(Poly num, const std::vector<Poly>& denom_factors)
    : num_(std::move(num)) {
  Rat scale(1);
  for (const Poly& f : denom_factors) {
    auto [key, lead] = monic_factor(f);
    scale *= lead;
    denom_[key]++;
  }
  num_ = num_ * (Rat(1) / scale);
  reduce();
}

void PolyFraction::reduce() {
  if (num_.is_zero()) {
    denom_.clear();
    return;
  }
  for (auto it = denom_.begin(); it != denom_.end();) {
    while (it->second > 0) {
      auto q = try_divide_linear(num_, factor_to_poly(num_.varspace(), it->first));
      if (!q) break;
      num_ = *q;
      --it->second;
    }
    it = it->second == 0 ? denom_.erase(it) : std::next(it);
  }
}

PolyFraction operator+(const PolyFraction& a, const PolyFraction& b) {
  if (a.num_.is_zero()) return b;
  if (b.num_.is_zero()) return a;
  PolyFraction r;
  // lcm of the factor multisets
  r.denom_ = a.denom_;
  for (auto& [f, m] : b.denom_) {
    auto& cur = r.denom_[f];
    cur = std::max(cur, m);
  }
  VarSpace vs = a.num_.varspace();
  Poly na = a.num_, nb = b.num_;
  for (auto& [f, m] : r.denom_) {
    auto ita = a.denom_.find(f);
    auto itb = b.denom_.find(f);
    int ma = ita == a.denom_.end() ? 0 : ita->second;
    int mb = itb == b.denom_.end() ? 0 : itb->second;
    Poly fp = factor_to_poly(vs, f);
    for (int k = ma; k < m; ++k) na *= fp;
    for (int k = mb; k < m; ++k) nb *= fp;
  }
  r.num_ = na + nb;
  r.reduce();
  return r;
}

Poly PolyFraction::finalize() const {
  if (!denom_.empty() && !num_.is_zero())
    throw error("localization sum is not a polynomial");
  return num_;
}

}  // namespace schubert
