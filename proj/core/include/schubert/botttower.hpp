#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "schubert/charring.hpp"
#include "schubert/poly.hpp"

namespace schubert {

// Cell / fixed-point index of a Bott tower of dimension n: an element of
// {0,1}^n with the support order, group addition, and length = popcount.
struct Mask {
  unsigned bits = 0;
  int n = 0;

  static Mask empty(int n) { return {0u, n}; }
  static Mask full(int n) { return {n >= 32 ? ~0u : ((1u << n) - 1), n}; }
  static Mask unit(int n, int i);

  bool get(int i) const { return (bits >> (i - 1)) & 1u; }  // 1-based
  int length() const { return __builtin_popcount(bits); }
  bool leq(const Mask& o) const { return (bits & ~o.bits) == 0; }
  Mask plus(const Mask& o) const { return {bits ^ o.bits, n}; }
  Mask minus_index(int i) const { return {bits & ~(1u << (i - 1)), n}; }
  std::vector<int> support() const;

  std::string to_string() const;
  static Mask parse(const std::string& s);

  friend bool operator==(const Mask&, const Mask&) = default;
  // Canonical order: by length, then by bit pattern.
  friend bool operator<(const Mask& a, const Mask& b) {
    int la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a.bits < b.bits;
  }
};

// All masks of size n in canonical order.
std::vector<Mask> all_masks(int n);
// All masks <= eps in canonical order.
std::vector<Mask> submasks(const Mask& eps);

// Integer list C = {c_{i,j}} defining a Bott tower of dimension size.
struct BottTowerSpec {
  int size = 0;
  std::map<std::pair<int, int>, long> c;

  long coeff(int i, int j) const;
  void set(int i, int j, long value);
  VarSpace weights() const { return lambda_space(size); }
};

// Signed sum over strictly increasing chains k = i_0 < ... < i_m = l whose
// intermediate indices lie in the support of eps (endpoints unconstrained).
long chain_coeff(const BottTowerSpec& spec, const Mask& eps, int k, int l);

// The tangent weight lambda_i(eps) as an integer vector / degree-1 form.
Coords lambda_weight_vec(const BottTowerSpec& spec, const Mask& eps, int i);
Poly lambda_weight(const BottTowerSpec& spec, const Mask& eps, int i);

// Fixed-point restrictions of the cohomology basis class of cell eps.
Poly sigma_D(const BottTowerSpec& spec, const Mask& eps, const Mask& at);
// Fixed-point restrictions of the K-theory basis class of cell eps.
Char mu_D(const BottTowerSpec& spec, const Mask& eps, const Mask& at);

using FixedPointPolyTable = std::map<Mask, Poly>;
using FixedPointCharTable = std::map<Mask, Char>;

FixedPointPolyTable sigma_table(const BottTowerSpec& spec, const Mask& eps, const Mask& domain);
FixedPointCharTable mu_table(const BottTowerSpec& spec, const Mask& eps, const Mask& domain);

// Integration over the cell closure of eps by fixed-point localization; the
// summands live in a fraction field, the total must be a polynomial.
Poly integrate(const BottTowerSpec& spec, const FixedPointPolyTable& table, const Mask& eps);

// Equivariant Euler characteristic over the cell closure of eps.
Char euler_char(const BottTowerSpec& spec, const FixedPointCharTable& table, const Mask& eps);

// Coefficients of sigma_{e1} * sigma_{e2} in the sigma basis, recovered by
// upper-triangular solve against the restriction matrix.
std::map<Mask, Poly> hd_product(const BottTowerSpec& spec, const Mask& e1, const Mask& e2);

// Triangular expansion of a pointwise table against a support-triangular
// basis: values(eps') = sum_{eps <= eps'} coeff(eps) * basis(eps, eps').
// basis(eps, eps) must be a product of the supplied linear factors.
std::map<Mask, Poly> expand_in_basis(
    int n, const std::function<Poly(const Mask&)>& values,
    const std::function<Poly(const Mask&, const Mask&)>& basis,
    const std::function<std::vector<Poly>(const Mask&)>& diagonal_factors);

}  // namespace schubert
