#pragma once

#include <compare>
#include <vector>

#include "schubert/rootdata.hpp"
#include "schubert/textio.hpp"

namespace schubert {

// Weyl-group element, canonically the matrix of its action on the root
// lattice (column j = coordinates of w(alpha_j) in the simple-root basis).
// Faithful for every generalized Cartan matrix, so equality testing is
// uniform across finite and infinite type.  Length is cached at construction.
class WeylElement {
 public:
  static WeylElement identity(const CartanMatrix& cm);
  static WeylElement simple(const CartanMatrix& cm, int i);
  static WeylElement from_word(const CartanMatrix& cm, const Word& word);
  // The reflection s_beta for a positive real root with known coroot.
  static WeylElement reflection(const CartanMatrix& cm, const RootVector& beta,
                                const CorootVector& coroot);

  const CartanMatrix& cartan() const { return *cm_; }
  int length() const { return len_; }
  bool is_identity() const;

  RootVector apply(const RootVector& v) const;
  CorootVector apply(const CorootVector& h) const;

  bool is_right_descent(int i) const;  // w(alpha_i) < 0
  // Smallest-descent normal form; deterministic.
  Word reduced_word() const;

  WeylElement operator*(const WeylElement& o) const;
  // Right multiplication by s_i; length moves by exactly one.
  WeylElement times_simple(int i) const;
  WeylElement inverse() const;

  friend bool operator==(const WeylElement& x, const WeylElement& y) {
    return x.mat_ == y.mat_;
  }
  friend auto operator<=>(const WeylElement& x, const WeylElement& y) {
    if (auto c = x.len_ <=> y.len_; c != 0) return c;
    return x.mat_ <=> y.mat_;
  }

 private:
  WeylElement(const CartanMatrix& cm, std::vector<long> mat, int len)
      : cm_(&cm), mat_(std::move(mat)), len_(len) {}
  long at(int row, int col) const { return mat_[row * cm_->rank + col]; }
  static int reduce_length(const CartanMatrix& cm, std::vector<long> mat);

  const CartanMatrix* cm_ = nullptr;
  std::vector<long> mat_;  // row-major rank x rank
  int len_ = 0;
};

bool bruhat_leq(const WeylElement& u, const WeylElement& v);

// Fold of a word through the monoid relations s_i^2 = s_i + braid.
WeylElement demazure_product(const CartanMatrix& cm, const Word& word);
WeylElement demazure_mult(const WeylElement& w, int i);

// The l(w) positive roots inverted by w, sorted by height then lex.
std::vector<RootVector> inversion_set(const WeylElement& w);

struct BruhatCover {
  WeylElement w;
  RootVector beta;
  CorootVector coroot;
};

// All covers v -> w = v s_beta with l(w) = l(v) + 1.  height_bound = 0 means
// finite type (full positive-root enumeration); otherwise only reflections in
// roots of height <= height_bound are considered.
std::vector<BruhatCover> bruhat_covers_up(const WeylElement& v, long height_bound = 0);

// Longest element of a finite-type Weyl group.
WeylElement longest_element(const CartanMatrix& cm);

std::vector<Word> all_reduced_words(const WeylElement& w);

// All group elements (finite type), sorted by (length, matrix).
std::vector<WeylElement> all_elements(const CartanMatrix& cm, size_t guard = 2000000);

}  // namespace schubert
