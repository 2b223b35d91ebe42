#pragma once

#include <map>
#include <optional>
#include <vector>

#include "schubert/poly.hpp"

namespace schubert {

// Laurent polynomial in lattice characters: a finite sum of terms c * e^mu
// with mu an integer vector over the same variable spaces Poly uses.
class Char {
 public:
  Char() = default;
  explicit Char(VarSpace vs) : vs_(vs) {}

  static Char constant(VarSpace vs, Rat c);
  // The character e^mu.
  static Char exponential(VarSpace vs, const Coords& mu);
  // 1 - e^{-mu}, the Euler factor of a weight.
  static Char one_minus_exp_neg(VarSpace vs, const Coords& mu);

  const VarSpace& varspace() const { return vs_; }
  const std::map<Coords, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Coords& mu, const Rat& c);

  Char operator-() const;
  Char& operator+=(const Char& o);
  Char& operator-=(const Char& o);
  friend Char operator+(Char a, const Char& b) { return a += b; }
  friend Char operator-(Char a, const Char& b) { return a -= b; }
  friend Char operator*(const Char& a, const Char& b);
  Char& operator*=(const Char& o) { return *this = *this * o; }
  Char operator*(const Rat& c) const;
  friend bool operator==(const Char& a, const Char& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.vs_ == b.vs_ && a.terms_ == b.terms_;
  }

  // The involution e^mu -> e^{-mu}.
  Char star() const;

 private:
  void check_space(const Char& o) const;
  VarSpace vs_;
  std::map<Coords, Rat> terms_;
};

// Exact quotient c / (1 - e^{-beta}) in the group ring, or nullopt when the
// quotient is not a Laurent polynomial.  Works coset by coset along the line
// Z*beta, so exactness is detected precisely.
std::optional<Char> try_divide_euler(const Char& c, const Coords& beta);

// Fraction with denominator a multiset of Euler factors (1 - e^{-beta}).
// Supports the localization sums whose totals are genuine characters.
class CharFraction {
 public:
  CharFraction() = default;
  explicit CharFraction(Char num) : num_(std::move(num)) {}
  CharFraction(Char num, const std::vector<Coords>& denom_betas);

  const Char& numerator() const { return num_; }

  friend CharFraction operator+(const CharFraction& a, const CharFraction& b);

  // Exact division by the remaining factors; throws when the sum is not a
  // Laurent polynomial.
  Char finalize() const;

 private:
  void reduce();
  Char num_;
  std::map<Coords, int> denom_;  // beta -> multiplicity of (1 - e^{-beta})
};

}  // namespace schubert
