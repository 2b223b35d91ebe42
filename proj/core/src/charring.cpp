#include "schubert/charring.hpp"

#include <algorithm>

namespace schubert {

Char Char::constant(VarSpace vs, Rat c) {
  Char r(vs);
  r.add_term(Coords(vs.count, 0), c);
  return r;
}

Char Char::exponential(VarSpace vs, const Coords& mu) {
  if ((int)mu.size() != vs.count) throw error("character rank mismatch");
  Char r(vs);
  r.add_term(mu, 1);
  return r;
}

Char Char::one_minus_exp_neg(VarSpace vs, const Coords& mu) {
  Char r = Char::constant(vs, 1);
  r.add_term(coords_neg(mu), -1);
  return r;
}

void Char::add_term(const Coords& mu, const Rat& c) {
  if (c == 0) return;
  if ((int)mu.size() != vs_.count) throw error("character rank mismatch");
  auto it = terms_.find(mu);
  if (it == terms_.end()) {
    terms_.emplace(mu, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Char::check_space(const Char& o) const {
  if (!(vs_ == o.vs_)) throw error("character varspace mismatch");
}

Char Char::operator-() const {
  Char r(vs_);
  for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Char& Char::operator+=(const Char& o) {
  if (terms_.empty() && vs_.count == 0) vs_ = o.vs_;
  check_space(o);
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Char& Char::operator-=(const Char& o) {
  if (terms_.empty() && vs_.count == 0) vs_ = o.vs_;
  check_space(o);
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Char operator*(const Char& a, const Char& b) {
  a.check_space(b);
  Char r(a.vs_);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) r.add_term(coords_add(ea, eb), ca * cb);
  return r;
}

Char Char::operator*(const Rat& c) const {
  Char r(vs_);
  if (c == 0) return r;
  for (auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
  return r;
}

Char Char::star() const {
  Char r(vs_);
  for (auto& [e, c] : terms_) r.terms_.emplace(coords_neg(e), c);
  return r;
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::optional<Char> try_divide_euler(const Char& c, const Coords& beta) {
  if (coords_zero(beta)) throw error("zero weight in Euler factor");
  if ((int)beta.size() != c.varspace().count) throw error("character rank mismatch");
  // q * (1 - e^{gamma}) = c with gamma = -beta decomposes along cosets of
  // Z*gamma: within a coset, q_k - q_{k-1} = c_k, so q is the prefix sum and
  // the quotient is finitely supported exactly when the coset sums vanish.
  Coords gamma = coords_neg(beta);
  int pivot = 0;
  while (gamma[pivot] == 0) ++pivot;
  struct CosetData {
    std::map<long, Rat> slices;  // k -> coefficient
  };
  std::map<Coords, CosetData> cosets;
  for (auto& [mu, coeff] : c.terms()) {
    long k = floor_div(mu[pivot], gamma[pivot]);
    Coords rep(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) rep[i] = mu[i] - k * gamma[i];
    cosets[rep].slices[k] += coeff;
  }
  Char q(c.varspace());
  for (auto& [rep, data] : cosets) {
    Rat acc(0);
    for (auto& [k, coeff] : data.slices) acc += coeff;
    if (acc != 0) return std::nullopt;
    acc = 0;
    auto it = data.slices.begin();
    if (it == data.slices.end()) continue;
    long kmin = it->first;
    long kmax = data.slices.rbegin()->first;
    for (long k = kmin; k < kmax; ++k) {
      auto f = data.slices.find(k);
      if (f != data.slices.end()) acc += f->second;
      if (acc == 0) continue;
      Coords mu(rep.size());
      for (size_t i = 0; i < mu.size(); ++i) mu[i] = rep[i] + k * gamma[i];
      q.add_term(mu, acc);
    }
  }
  return q;
}

CharFraction::CharFraction(Char num, const std::vector<Coords>& denom_betas)
    : num_(std::move(num)) {
  for (const Coords& b : denom_betas) denom_[b]++;
  reduce();
}

void CharFraction::reduce() {
  if (num_.is_zero()) {
    denom_.clear();
    return;
  }
  for (auto it = denom_.begin(); it != denom_.end();) {
    while (it->second > 0) {
      auto q = try_divide_euler(num_, it->first);
      if (!q) break;
      num_ = *q;
      --it->second;
    }
    it = it->second == 0 ? denom_.erase(it) : std::next(it);
  }
}

CharFraction operator+(const CharFraction& a, const CharFraction& b) {
  if (a.num_.is_zero()) return b;
  if (b.num_.is_zero()) return a;
  CharFraction r;
  r.denom_ = a.denom_;
  for (auto& [f, m] : b.denom_) {
    auto& cur = r.denom_[f];
    cur = std::max(cur, m);
  }
  VarSpace vs = a.num_.varspace();
  Char na = a.num_, nb = b.num_;
  for (auto& [f, m] : r.denom_) {
    auto ita = a.denom_.find(f);
    auto itb = b.denom_.find(f);
    int ma = ita == a.denom_.end() ? 0 : ita->second;
    int mb = itb == b.denom_.end() ? 0 : itb->second;
    Char fc = Char::one_minus_exp_neg(vs, f);
    for (int k = ma; k < m; ++k) na *= fc;
    for (int k = mb; k < m; ++k) nb *= fc;
  }
  r.num_ = na + nb;
  r.reduce();
  return r;
}

Char CharFraction::finalize() const {
  if (!denom_.empty() && !num_.is_zero())
    throw error("Euler characteristic sum is not a Laurent polynomial");
  return num_;
}

}  // namespace schubert
