#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace schubert {

// Exact rational coefficients. Every ring computed here (S(h*), R[T], the
// quotient algebras) sits over these; intermediate localization sums have
// denominators even when the final answers are integral.
using Rat = mpq_class;

// Integer coordinate vector in a fixed basis (simple roots, simple coroots,
// or the weight lattice of the torus D).
using Coords = std::vector<long>;

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline Coords coords_add(const Coords& a, const Coords& b) {
  if (a.size() != b.size()) throw error("coordinate rank mismatch");
  Coords r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Coords coords_sub(const Coords& a, const Coords& b) {
  if (a.size() != b.size()) throw error("coordinate rank mismatch");
  Coords r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Coords coords_neg(const Coords& a) {
  Coords r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline bool coords_zero(const Coords& a) {
  for (long v : a)
    if (v != 0) return false;
  return true;
}

inline long coords_height(const Coords& a) {
  long h = 0;
  for (long v : a) h += v;
  return h;
}

}  // namespace schubert
