#pragma once

#include <string>
#include <vector>

#include "schubert/common.hpp"

namespace schubert {

// Generalized Cartan matrix.  Entries follow a[i][j] = <alpha_j, h_i>, so the
// pairing of the j-th simple root against the i-th simple coroot sits at
// row i, column j (1-based in the API, 0-based in storage).
struct CartanMatrix {
  int rank = 0;
  std::vector<std::vector<long>> a;

  long entry(int i, int j) const { return a[i - 1][j - 1]; }
  void validate() const;
  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;
};

// Standard finite families.  Conventions are pinned by the worked rank-2
// examples: G2 has a[1][2] = -1, a[2][1] = -3 and B2 has a[1][2] = -2,
// a[2][1] = -1, so that the Bott-Samelson relations x3^2 = a1*x3 + 3x2x3
// - 2x1x3 (G2, word 1,2,1,2) and x2^2 = a2*x2 + 2x1x2 (B2, word 1,2,1,2)
// come out as stated.  C is the transpose of B.
CartanMatrix builtin_cartan(char family, int rank);
// Parses "A4", "B2", "G2", "F4", "D4", ...
CartanMatrix cartan_from_string(const std::string& name);

struct RootVector {
  Coords coords;  // in the simple-root basis
  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

struct CorootVector {
  Coords coords;  // in the simple-coroot basis
  friend bool operator==(const CorootVector&, const CorootVector&) = default;
  friend auto operator<=>(const CorootVector&, const CorootVector&) = default;
};

RootVector simple_root(const CartanMatrix& cm, int i);
CorootVector simple_coroot(const CartanMatrix& cm, int i);

// Bilinear extension of alpha_j(h_i) = a[i][j].
long pairing(const CartanMatrix& cm, const RootVector& lambda, const CorootVector& h);

struct RootCorootPair {
  RootVector root;
  CorootVector coroot;
};

// All positive real roots with their coroots, by reflection-orbit closure.
// Finite type is detected by termination under the guard; exceeding the
// guard signals a non-finite matrix.  Sorted by height then lexicographically.
std::vector<RootCorootPair> positive_roots(const CartanMatrix& cm, size_t guard = 10000);

// Positive real roots of height <= max_height (usable in any type; the set is
// finite because coordinates are nonnegative and bounded by the height).
std::vector<RootCorootPair> positive_roots_bounded(const CartanMatrix& cm, long max_height,
                                                   size_t guard = 100000);

}  // namespace schubert
