#include "schubert/rootdata.hpp"

#include <algorithm>
#include <set>

namespace schubert {

void CartanMatrix::validate() const {
  if (rank <= 0) throw error("Cartan matrix rank must be positive");
  if ((int)a.size() != rank) throw error("Cartan matrix has wrong number of rows");
  for (auto& row : a)
    if ((int)row.size() != rank) throw error("Cartan matrix has wrong number of columns");
  for (int i = 0; i < rank; ++i) {
    if (a[i][i] != 2) throw error("Cartan matrix diagonal entries must be 2");
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw error("Cartan matrix off-diagonal entries must be <= 0");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw error("Cartan matrix vanishing pattern must be symmetric");
    }
  }
}

namespace {

CartanMatrix chain(int rank) {
  CartanMatrix cm;
  cm.rank = rank;
  cm.a.assign(rank, std::vector<long>(rank, 0));
  for (int i = 0; i < rank; ++i) cm.a[i][i] = 2;
  for (int i = 0; i + 1 < rank; ++i) cm.a[i][i + 1] = cm.a[i + 1][i] = -1;
  return cm;
}

}  // namespace

CartanMatrix builtin_cartan(char family, int rank) {
  switch (family) {
    case 'A': {
      if (rank < 1) throw error("type A needs rank >= 1");
      return chain(rank);
    }
    case 'B': {
      if (rank < 2) throw error("type B needs rank >= 2");
      CartanMatrix cm = chain(rank);
      cm.a[rank - 2][rank - 1] = -2;
      cm.a[rank - 1][rank - 2] = -1;
      return cm;
    }
    case 'C': {
      if (rank < 2) throw error("type C needs rank >= 2");
      CartanMatrix cm = chain(rank);
      cm.a[rank - 2][rank - 1] = -1;
      cm.a[rank - 1][rank - 2] = -2;
      return cm;
    }
    case 'D': {
      if (rank < 3) throw error("type D needs rank >= 3");
      CartanMatrix cm = chain(rank - 1);
      cm.rank = rank;
      for (auto& row : cm.a) row.push_back(0);
      cm.a.push_back(std::vector<long>(rank, 0));
      cm.a[rank - 1][rank - 1] = 2;
      cm.a[rank - 3][rank - 1] = cm.a[rank - 1][rank - 3] = -1;
      return cm;
    }
    case 'G': {
      if (rank != 2) throw error("type G needs rank 2");
      CartanMatrix cm = chain(2);
      cm.a[0][1] = -1;
      cm.a[1][0] = -3;
      return cm;
    }
    case 'F': {
      if (rank != 4) throw error("type F needs rank 4");
      CartanMatrix cm = chain(4);
      cm.a[1][2] = -2;
      cm.a[2][1] = -1;
      return cm;
    }
    default:
      throw error(std::string("unknown family '") + family + "'");
  }
}

CartanMatrix cartan_from_string(const std::string& name) {
  if (name.size() < 2) throw error("bad Cartan type '" + name + "'");
  char fam = name[0];
  int rank = 0;
  try {
    rank = std::stoi(name.substr(1));
  } catch (...) {
    throw error("bad Cartan type '" + name + "'");
  }
  return builtin_cartan(fam, rank);
}

RootVector simple_root(const CartanMatrix& cm, int i) {
  if (i < 1 || i > cm.rank) throw error("simple root index out of range");
  Coords c(cm.rank, 0);
  c[i - 1] = 1;
  return RootVector{c};
}

CorootVector simple_coroot(const CartanMatrix& cm, int i) {
  if (i < 1 || i > cm.rank) throw error("simple coroot index out of range");
  Coords c(cm.rank, 0);
  c[i - 1] = 1;
  return CorootVector{c};
}

long pairing(const CartanMatrix& cm, const RootVector& lambda, const CorootVector& h) {
  if ((int)lambda.coords.size() != cm.rank || (int)h.coords.size() != cm.rank)
    throw error("pairing rank mismatch");
  long total = 0;
  for (int i = 0; i < cm.rank; ++i) {
    if (h.coords[i] == 0) continue;
    for (int j = 0; j < cm.rank; ++j) {
      if (lambda.coords[j] == 0) continue;
      total += h.coords[i] * lambda.coords[j] * cm.a[i][j];
    }
  }
  return total;
}

namespace {

std::vector<RootCorootPair> orbit_closure(const CartanMatrix& cm, long max_height,
                                          size_t guard) {
  cm.validate();
  const int r = cm.rank;
  std::set<Coords> seen;
  std::vector<RootCorootPair> out;
  std::vector<RootCorootPair> frontier;
  for (int i = 1; i <= r; ++i) frontier.push_back({simple_root(cm, i), simple_coroot(cm, i)});
  while (!frontier.empty()) {
    std::vector<RootCorootPair> next;
    for (auto& p : frontier) {
      if (coords_height(p.root.coords) > max_height && max_height > 0) continue;
      if (!seen.insert(p.root.coords).second) continue;
      out.push_back(p);
      if (out.size() > guard)
        throw error("positive-root enumeration exceeded guard (non-finite type?)");
      for (int i = 1; i <= r; ++i) {
        // s_i(beta) = beta - <beta, h_i> alpha_i, and the matching coroot.
        long pr = 0, pc = 0;
        for (int j = 0; j < r; ++j) pr += p.root.coords[j] * cm.a[i - 1][j];
        for (int j = 0; j < r; ++j) pc += p.coroot.coords[j] * cm.a[j][i - 1];
        RootCorootPair q = p;
        q.root.coords[i - 1] -= pr;
        q.coroot.coords[i - 1] -= pc;
        bool positive = true;
        for (long v : q.root.coords) positive &= v >= 0;
        if (positive && !seen.count(q.root.coords)) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const RootCorootPair& x, const RootCorootPair& y) {
    long hx = coords_height(x.root.coords), hy = coords_height(y.root.coords);
    if (hx != hy) return hx < hy;
    return x.root.coords < y.root.coords;
  });
  return out;
}

}  // namespace

std::vector<RootCorootPair> positive_roots(const CartanMatrix& cm, size_t guard) {
  return orbit_closure(cm, 0, guard);
}

std::vector<RootCorootPair> positive_roots_bounded(const CartanMatrix& cm, long max_height,
                                                   size_t guard) {
  if (max_height <= 0) throw error("root height bound must be positive");
  return orbit_closure(cm, max_height, guard);
}

}  // namespace schubert
