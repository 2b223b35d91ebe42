#include <doctest.h>

#include "test_util.hpp"

using namespace schubert;
using namespace schubert::testutil;

namespace {

XPoly monomial(const DList& dl, const XExpo& e) {
  XPoly p;
  p.emplace(e, Poly::constant(dl.coeff_space(), 1));
  return p;
}

}  // namespace

TEST_CASE("normal form squares") {
  auto a2 = cartan_from_string("A2");
  VarSpace V2 = alpha_space(2);
  DList dl = bs_dlist(BSWord(a2, {1, 2, 1}));
  // x1^2 = a1 x1
  auto nf1 = normal_form(dl, monomial(dl, {2, 0, 0}));
  REQUIRE(nf1.size() == 1);
  CHECK(nf1.at(Mask::parse("100")) == P("a1", V2));
  // x3^2 = a1 x3 + x2 x3 - 2 x1 x3
  auto nf3 = normal_form(dl, monomial(dl, {0, 0, 2}));
  REQUIRE(nf3.size() == 3);
  CHECK(nf3.at(Mask::parse("001")) == P("a1", V2));
  CHECK(nf3.at(Mask::parse("011")) == Poly::constant(V2, 1));
  CHECK(nf3.at(Mask::parse("101")) == Poly::constant(V2, -2));
  // Square-free input passes through.
  auto nfsf = normal_form(dl, monomial(dl, {1, 1, 0}));
  REQUIRE(nfsf.size() == 1);
  CHECK(nfsf.at(Mask::parse("110")) == Poly::constant(V2, 1));
}

TEST_CASE("the B2 and A3 relation lists") {
  auto b2 = cartan_from_string("B2");
  VarSpace V2 = alpha_space(2);
  DList dl = bs_dlist(BSWord(b2, {1, 2, 1, 2}));
  auto nf2 = normal_form(dl, monomial(dl, {0, 2, 0, 0}));
  CHECK(nf2.at(Mask::parse("0100")) == P("a2", V2));
  CHECK(nf2.at(Mask::parse("1100")) == Poly::constant(V2, 2));
  auto nf4 = normal_form(dl, monomial(dl, {0, 0, 0, 2}));
  CHECK(nf4.at(Mask::parse("0001")) == P("a2", V2));
  CHECK(nf4.at(Mask::parse("0011")) == Poly::constant(V2, 2));
  CHECK(nf4.at(Mask::parse("0101")) == Poly::constant(V2, -2));
  CHECK(nf4.at(Mask::parse("1001")) == Poly::constant(V2, 2));

  auto a3 = cartan_from_string("A3");
  VarSpace V3 = alpha_space(3);
  DList dl6 = bs_dlist(BSWord(a3, {3, 2, 1, 3, 2, 3}));
  auto nf5 = normal_form(dl6, monomial(dl6, {0, 0, 0, 0, 2, 0}));
  CHECK(nf5.at(Mask::parse("000010")) == P("a2", V3));
  CHECK(nf5.at(Mask::parse("000110")) == Poly::constant(V3, 1));
  CHECK(nf5.at(Mask::parse("001010")) == Poly::constant(V3, 1));
  CHECK(nf5.at(Mask::parse("010010")) == Poly::constant(V3, -2));
  CHECK(nf5.at(Mask::parse("100010")) == Poly::constant(V3, 1));
  auto nf6 = normal_form(dl6, monomial(dl6, {0, 0, 0, 0, 0, 2}));
  CHECK(nf6.at(Mask::parse("000001")) == P("a3", V3));
  CHECK(nf6.at(Mask::parse("000011")) == Poly::constant(V3, 1));
  CHECK(nf6.at(Mask::parse("000101")) == Poly::constant(V3, -2));
  CHECK(nf6.count(Mask::parse("001001")) == 0);
  CHECK(nf6.at(Mask::parse("010001")) == Poly::constant(V3, 1));
  CHECK(nf6.at(Mask::parse("100001")) == Poly::constant(V3, -2));
}

TEST_CASE("coefficient extraction on a symbolic rank-2 list") {
  // T^{(1,1)}(x1^s x2^t) = d11^{s-1} (d11 + d22)^{t-1} when d12 = 1.
  VarSpace D{'d', 2};
  DList dl;
  dl.size = 2;
  dl.vs = D;
  dl.diag = {Poly::variable(D, 1), Poly::variable(D, 2)};
  dl.off[{1, 2}] = 1;
  Poly d1 = Poly::variable(D, 1), d2 = Poly::variable(D, 2);
  for (int s = 1; s <= 3; ++s)
    for (int t = 1; t <= 3; ++t) {
      Poly want = Poly::constant(D, 1);
      for (int k = 0; k < s - 1; ++k) want *= d1;
      for (int k = 0; k < t - 1; ++k) want *= d1 + d2;
      XExpo e{s, t};
      CHECK(t_eps(dl, monomial(dl, e), Mask::parse("11")) == want);
    }
  // T^{(1)}(x1^s) = d11^{s-1}.
  for (int s = 1; s <= 4; ++s) {
    Poly want = Poly::constant(D, 1);
    for (int k = 0; k < s - 1; ++k) want *= d1;
    CHECK(t_eps(dl, monomial(dl, {s, 0}), Mask::parse("10")) == want);
  }
  // The top variable must occur.
  CHECK(t_eps(dl, monomial(dl, {3, 0}), Mask::parse("11")).is_zero());
  CHECK(t_eps(dl, monomial(dl, {0, 1}), Mask::parse("10")).is_zero());
}

TEST_CASE("extraction matches the normal-form coefficients") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> expo(0, 4);
  std::uniform_int_distribution<int> letter(1, 2);
  auto a2 = cartan_from_string("A2");
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + (int)(rng() % 3);  // 3..5
    Word word;
    for (int k = 0; k < n; ++k) word.push_back(letter(rng));
    DList dl = bs_dlist(BSWord(a2, word));
    XPoly p;
    for (int t = 0; t < 3; ++t) {
      XExpo e(n, 0);
      int budget = 4;
      for (int i = 0; i < n && budget > 0; ++i) {
        e[i] = std::min(expo(rng), budget);
        budget -= e[i];
      }
      p = xpoly_add(std::move(p), monomial(dl, e));
    }
    ADElement nf = normal_form(dl, p);
    for (const Mask& eps : all_masks(n)) {
      auto it = nf.find(eps);
      Poly want = it == nf.end() ? Poly(alpha_space(2)) : it->second;
      CHECK(t_eps(dl, p, eps) == want);
    }
  }
}

TEST_CASE("structure constant golden values") {
  VarSpace V2 = alpha_space(2);
  auto a5 = cartan_from_string("A5");
  CHECK(struct_const(a5, el(a5, {5, 2}), el(a5, {4, 5, 3, 4}), {4, 5, 2, 3, 4}) ==
        P("a4 + a5", alpha_space(5)));
  auto g2 = cartan_from_string("G2");
  CHECK(struct_const(g2, el(g2, {2, 1, 2}), el(g2, {1, 2, 1}), {1, 2, 1, 2}) ==
        P("2*a1^2 + 5*a1*a2 + 3*a2^2", V2));
  auto a6 = cartan_from_string("A6");
  CHECK(struct_const(a6, el(a6, {1, 3, 5, 6}), el(a6, {2, 5, 6}), {1, 2, 3, 4, 5, 6}) ==
        P("a1 + a2 + a3 + a4 + 2*a5 + a6", alpha_space(6)));
  auto a2 = cartan_from_string("A2");
  CHECK(struct_const(a2, el(a2, {2}), el(a2, {1, 2}), {2, 1, 2}).is_zero());
  CHECK(struct_const(a2, el(a2, {2}), el(a2, {1, 2}), {1, 2, 1}).is_zero());
}

TEST_CASE("vanishing outside the Bruhat cone") {
  auto b2 = cartan_from_string("B2");
  auto group = all_elements(b2);
  for (const WeylElement& w : group) {
    Word w_word = w.reduced_word();
    for (const WeylElement& u : group)
      for (const WeylElement& v : group) {
        if (bruhat_leq(u, w) && bruhat_leq(v, w)) continue;
        CHECK(struct_const(b2, u, v, w_word).is_zero());
      }
  }
}

TEST_CASE("full product expansions") {
  auto b2 = cartan_from_string("B2");
  VarSpace V2 = alpha_space(2);
  auto res = product_in_basis(b2, el(b2, {1, 2}), el(b2, {2, 1}), {1, 2, 1, 2});
  REQUIRE(res.size() == 3);
  CHECK(res.at(el(b2, {1, 2, 1})) == P("2*a1 + a2", V2));
  CHECK(res.at(el(b2, {2, 1, 2})) == P("a1 + a2", V2));
  CHECK(res.at(el(b2, {1, 2, 1, 2})) == Poly::constant(V2, 1));

  auto a3 = cartan_from_string("A3");
  VarSpace V3 = alpha_space(3);
  auto res3 =
      product_in_basis(a3, el(a3, {3, 2, 1}), el(a3, {3, 2}), {3, 2, 1, 3, 2, 3});
  REQUIRE(res3.size() == 3);
  CHECK(res3.at(el(a3, {3, 2, 1})) == P("a3^2 + a2*a3", V3));
  CHECK(res3.at(el(a3, {3, 2, 1, 2})) == P("a3", V3));
  CHECK(res3.at(el(a3, {3, 2, 1, 3, 2})) == Poly::constant(V3, 1));

  // The unit acts as the identity.
  for (const WeylElement& v : all_elements(b2)) {
    auto unit = product_in_basis(b2, WeylElement::identity(b2), v);
    REQUIRE(unit.size() == 1);
    CHECK(unit.at(v) == Poly::constant(V2, 1));
  }
  // Default word and explicit word agree.
  auto def = product_in_basis(b2, el(b2, {1, 2}), el(b2, {2, 1}));
  CHECK(def == res);
  CHECK_THROWS_AS(product_in_basis(b2, el(b2, {1, 2}), el(b2, {2, 1}), {1, 2}), error);
}

TEST_CASE("expansion coefficients match single extractions") {
  auto b2 = cartan_from_string("B2");
  auto group = all_elements(b2);
  Word w0 = longest_element(b2).reduced_word();
  for (const WeylElement& u : group)
    for (const WeylElement& v : group) {
      auto rows = product_in_basis(b2, u, v);
      for (const WeylElement& w : group) {
        Poly p = struct_const(b2, u, v, w.reduced_word());
        auto it = rows.find(w);
        CHECK(p == (it == rows.end() ? Poly(alpha_space(2)) : it->second));
      }
    }
}

TEST_CASE("degree-zero specialization and positivity observation") {
  auto a2 = cartan_from_string("A2");
  SuiteResult duan = verify_duan_at_zero(a2);
  CHECK(duan.ok());
  CHECK(duan.checked > 0);
  std::vector<std::string> flags;
  SuiteResult graham = observe_graham_positivity(a2, -1, flags);
  CHECK(graham.checked > 0);
  CHECK(flags.empty());
}
