#pragma once

#include <map>
#include <optional>
#include <vector>

#include "schubert/common.hpp"

namespace schubert {

// Tags the ambient variable space of a polynomial value so that values living
// over different tori cannot be mixed silently.  'a' = simple roots a1..ar,
// 'l' = fiber weights l1..lN of a Bott tower, anything else = auxiliary
// symbols (two-variable Hecke identity checks, symbolic d-lists).
struct VarSpace {
  char tag = 'a';
  int count = 0;
  friend bool operator==(const VarSpace&, const VarSpace&) = default;
  friend auto operator<=>(const VarSpace&, const VarSpace&) = default;
};

inline VarSpace alpha_space(int rank) { return VarSpace{'a', rank}; }
inline VarSpace lambda_space(int n) { return VarSpace{'l', n}; }

using Expo = std::vector<int>;

// Sparse multivariate polynomial over exact rationals.  No zero coefficient
// is ever stored; exponent vectors all have length varspace().count.
class Poly {
 public:
  Poly() = default;
  explicit Poly(VarSpace vs) : vs_(vs) {}

  static Poly constant(VarSpace vs, Rat c);
  static Poly variable(VarSpace vs, int i);  // 1-based
  // Homogeneous linear form with the given integer coordinates.
  static Poly linear(VarSpace vs, const Coords& coords);

  const VarSpace& varspace() const { return vs_; }
  const std::map<Expo, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous(int degree) const;

  // Constant term, i.e. evaluation at the origin.
  Rat eval_zero() const;

  // Coefficient vector of a homogeneous linear form (throws otherwise).
  std::vector<Rat> linear_coefficients() const;

  void add_term(const Expo& e, const Rat& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator*(const Rat& c) const;
  // Mathematical equality: every zero is equal regardless of how the value
  // was produced (empty localization sums carry no variable space).
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.vs_ == b.vs_ && a.terms_ == b.terms_;
  }

  // Substitutes variable i by images[i-1]; the images fix the target space.
  Poly substitute(const std::vector<Poly>& images) const;

 private:
  void check_space(const Poly& o) const;
  VarSpace vs_;
  std::map<Expo, Rat> terms_;
};

// Exact quotient p / ell for a nonzero homogeneous linear form ell, by
// synthetic division in the largest-index variable of ell.  Throws on a
// nonzero remainder; a failure here means a divisibility theorem was
// violated upstream.
Poly divide_linear(const Poly& p, const Poly& ell);
std::optional<Poly> try_divide_linear(const Poly& p, const Poly& ell);

// Fraction whose denominator is a multiset of homogeneous linear forms,
// enough structure for equivariant localization sums.  Factors are kept
// monic; the scalar moved out multiplies the numerator.
class PolyFraction {
 public:
  PolyFraction() = default;
  explicit PolyFraction(Poly num) : num_(std::move(num)) {}
  PolyFraction(Poly num, const std::vector<Poly>& denom_factors);

  const Poly& numerator() const { return num_; }

  friend PolyFraction operator+(const PolyFraction& a, const PolyFraction& b);

  // Exact division of the numerator by the remaining factors; throws if the
  // value is not a polynomial.
  Poly finalize() const;

 private:
  void reduce();
  Poly num_;
  std::map<std::vector<Rat>, int> denom_;  // monic linear form -> multiplicity
};

}  // namespace schubert
