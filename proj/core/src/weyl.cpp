#include "schubert/weyl.hpp"

#include <algorithm>
#include <set>

namespace schubert {

namespace {

std::vector<long> identity_matrix(int r) {
  std::vector<long> m(r * r, 0);
  for (int i = 0; i < r; ++i) m[i * r + i] = 1;
  return m;
}

// In-place right multiplication by s_i: col_j -= a[i][j] * col_i for all j,
// running col_i last (its update is col_i -> -col_i).
void mult_simple_right(const CartanMatrix& cm, std::vector<long>& mat, int i) {
  const int r = cm.rank;
  for (int j = 0; j < r; ++j) {
    if (j == i - 1) continue;
    long aij = cm.a[i - 1][j];
    if (aij == 0) continue;
    for (int k = 0; k < r; ++k) mat[k * r + j] -= aij * mat[k * r + (i - 1)];
  }
  for (int k = 0; k < r; ++k) mat[k * r + (i - 1)] = -mat[k * r + (i - 1)];
}

bool column_nonpositive(const std::vector<long>& mat, int r, int col) {
  for (int k = 0; k < r; ++k)
    if (mat[k * r + col] > 0) return false;
  return true;
}

}  // namespace

int WeylElement::reduce_length(const CartanMatrix& cm, std::vector<long> mat) {
  const int r = cm.rank;
  const std::vector<long> id = identity_matrix(r);
  int len = 0;
  while (mat != id) {
    int descent = -1;
    for (int i = 1; i <= r; ++i) {
      if (column_nonpositive(mat, r, i - 1)) {
        descent = i;
        break;
      }
    }
    if (descent < 0) throw error("matrix is not a Weyl group element");
    mult_simple_right(cm, mat, descent);
    ++len;
    if (len > 1000000) throw error("length reduction did not terminate");
  }
  return len;
}

WeylElement WeylElement::identity(const CartanMatrix& cm) {
  return WeylElement(cm, identity_matrix(cm.rank), 0);
}

WeylElement WeylElement::simple(const CartanMatrix& cm, int i) {
  if (i < 1 || i > cm.rank) throw error("simple reflection index out of range");
  auto m = identity_matrix(cm.rank);
  mult_simple_right(cm, m, i);
  return WeylElement(cm, std::move(m), 1);
}

WeylElement WeylElement::from_word(const CartanMatrix& cm, const Word& word) {
  WeylElement w = identity(cm);
  for (int i : word) w = w.times_simple(i);
  return w;
}

WeylElement WeylElement::reflection(const CartanMatrix& cm, const RootVector& beta,
                                    const CorootVector& coroot) {
  const int r = cm.rank;
  std::vector<long> m = identity_matrix(r);
  // column j = alpha_j - alpha_j(beta^vee) * beta
  for (int j = 0; j < r; ++j) {
    long p = 0;
    for (int i = 0; i < r; ++i) p += coroot.coords[i] * cm.a[i][j];
    for (int k = 0; k < r; ++k) m[k * r + j] -= p * beta.coords[k];
  }
  int len = reduce_length(cm, m);
  return WeylElement(cm, std::move(m), len);
}

bool WeylElement::is_identity() const { return len_ == 0; }

RootVector WeylElement::apply(const RootVector& v) const {
  const int r = cm_->rank;
  if ((int)v.coords.size() != r) throw error("apply rank mismatch");
  Coords out(r, 0);
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < r; ++j) out[k] += at(k, j) * v.coords[j];
  return RootVector{out};
}

CorootVector WeylElement::apply(const CorootVector& h) const {
  // Dual action via a reduced word: s_i(h) = h - alpha_i(h) h_i.
  Coords c = h.coords;
  if ((int)c.size() != cm_->rank) throw error("apply rank mismatch");
  Word rw = reduced_word();
  for (auto it = rw.rbegin(); it != rw.rend(); ++it) {
    int i = *it;
    long p = 0;
    for (int j = 0; j < cm_->rank; ++j) p += c[j] * cm_->a[j][i - 1];
    c[i - 1] -= p;
  }
  return CorootVector{c};
}

bool WeylElement::is_right_descent(int i) const {
  if (i < 1 || i > cm_->rank) throw error("descent index out of range");
  return column_nonpositive(mat_, cm_->rank, i - 1);
}

Word WeylElement::reduced_word() const {
  Word out;
  std::vector<long> m = mat_;
  const int r = cm_->rank;
  const std::vector<long> id = identity_matrix(r);
  while (m != id) {
    int descent = -1;
    for (int i = 1; i <= r; ++i)
      if (column_nonpositive(m, r, i - 1)) {
        descent = i;
        break;
      }
    if (descent < 0) throw error("matrix is not a Weyl group element");
    mult_simple_right(*cm_, m, descent);
    out.push_back(descent);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (!(*cm_ == *o.cm_)) throw error("mixing Weyl elements over different Cartan matrices");
  const int r = cm_->rank;
  std::vector<long> m(r * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      long v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < r; ++j) m[i * r + j] += v * o.at(k, j);
    }
  int len = reduce_length(*cm_, m);
  return WeylElement(*cm_, std::move(m), len);
}

WeylElement WeylElement::times_simple(int i) const {
  std::vector<long> m = mat_;
  bool descent = is_right_descent(i);
  mult_simple_right(*cm_, m, i);
  return WeylElement(*cm_, std::move(m), len_ + (descent ? -1 : 1));
}

WeylElement WeylElement::inverse() const {
  Word rw = reduced_word();
  std::reverse(rw.begin(), rw.end());
  return from_word(*cm_, rw);
}

bool bruhat_leq(const WeylElement& u, const WeylElement& v) {
  // Lifting property: for a right descent i of v,
  //   u <= v  <=>  (us_i <= vs_i  if us_i < u)  and  (u <= vs_i  otherwise).
  WeylElement a = u, b = v;
  while (true) {
    if (a.length() > b.length()) return false;
    if (b.length() == 0) return a.length() == 0;
    int i = 0;
    for (int k = 1; k <= b.cartan().rank; ++k)
      if (b.is_right_descent(k)) {
        i = k;
        break;
      }
    b = b.times_simple(i);
    if (a.is_right_descent(i)) a = a.times_simple(i);
  }
}

WeylElement demazure_mult(const WeylElement& w, int i) {
  return w.is_right_descent(i) ? w : w.times_simple(i);
}

WeylElement demazure_product(const CartanMatrix& cm, const Word& word) {
  WeylElement w = WeylElement::identity(cm);
  for (int i : word) w = demazure_mult(w, i);
  return w;
}

std::vector<RootVector> inversion_set(const WeylElement& w) {
  const CartanMatrix& cm = w.cartan();
  // Delta(w) = {beta_j} for a reduced word of w^{-1}; the reversed reduced
  // word of w is one.
  Word rw = w.reduced_word();
  std::reverse(rw.begin(), rw.end());
  std::vector<RootVector> out;
  WeylElement prefix = WeylElement::identity(cm);
  for (int j : rw) {
    out.push_back(prefix.apply(simple_root(cm, j)));
    prefix = prefix.times_simple(j);
  }
  std::sort(out.begin(), out.end(), [](const RootVector& x, const RootVector& y) {
    long hx = coords_height(x.coords), hy = coords_height(y.coords);
    if (hx != hy) return hx < hy;
    return x.coords < y.coords;
  });
  return out;
}

std::vector<BruhatCover> bruhat_covers_up(const WeylElement& v, long height_bound) {
  const CartanMatrix& cm = v.cartan();
  std::vector<RootCorootPair> roots =
      height_bound > 0 ? positive_roots_bounded(cm, height_bound) : positive_roots(cm);
  std::vector<BruhatCover> out;
  for (auto& p : roots) {
    WeylElement w = v * WeylElement::reflection(cm, p.root, p.coroot);
    if (w.length() == v.length() + 1) out.push_back({w, p.root, p.coroot});
  }
  return out;
}

WeylElement longest_element(const CartanMatrix& cm) {
  WeylElement w = WeylElement::identity(cm);
  size_t steps = 0;
  while (true) {
    int up = -1;
    for (int i = 1; i <= cm.rank; ++i)
      if (!w.is_right_descent(i)) {
        up = i;
        break;
      }
    if (up < 0) return w;
    w = w.times_simple(up);
    if (++steps > 100000) throw error("no longest element (non-finite type?)");
  }
}

std::vector<Word> all_reduced_words(const WeylElement& w) {
  if (w.length() == 0) return {Word{}};
  std::vector<Word> out;
  for (int i = 1; i <= w.cartan().rank; ++i) {
    if (!w.is_right_descent(i)) continue;
    for (Word prefix : all_reduced_words(w.times_simple(i))) {
      prefix.push_back(i);
      out.push_back(std::move(prefix));
    }
  }
  return out;
}

std::vector<WeylElement> all_elements(const CartanMatrix& cm, size_t guard) {
  std::set<WeylElement> seen;
  std::vector<WeylElement> frontier{WeylElement::identity(cm)};
  seen.insert(frontier[0]);
  size_t head = 0;
  while (head < frontier.size()) {
    WeylElement w = frontier[head++];
    for (int i = 1; i <= cm.rank; ++i) {
      WeylElement x = w.times_simple(i);
      if (seen.insert(x).second) {
        frontier.push_back(x);
        if (seen.size() > guard) throw error("group enumeration exceeded guard");
      }
    }
  }
  std::vector<WeylElement> out(seen.begin(), seen.end());
  return out;
}

}  // namespace schubert
