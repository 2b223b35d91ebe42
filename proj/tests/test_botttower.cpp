#include <doctest.h>

#include "test_util.hpp"

using namespace schubert;
using namespace schubert::testutil;

namespace {

// The rank-3 list with c12 = c23 = -1, c13 = 2 used throughout.
BottTowerSpec list_a2() {
  BottTowerSpec s;
  s.size = 3;
  s.set(1, 2, -1);
  s.set(2, 3, -1);
  s.set(1, 3, 2);
  return s;
}

BottTowerSpec hirzebruch() {
  BottTowerSpec s;
  s.size = 2;
  s.set(1, 2, -1);
  return s;
}

BottTowerSpec random_list(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  BottTowerSpec s;
  s.size = n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) s.set(i, j, entry(rng));
  return s;
}

}  // namespace

TEST_CASE("chain coefficients") {
  auto spec = list_a2();
  CHECK(chain_coeff(spec, Mask::parse("111"), 1, 3) == -1);
  CHECK(chain_coeff(spec, Mask::parse("101"), 1, 3) == -2);
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = random_list(5, rng);
    for (const Mask& eps : all_masks(5))
      for (int k = 1; k < 5; ++k) CHECK(chain_coeff(s, eps, k, k + 1) == -s.coeff(k, k + 1));
  }
  CHECK_THROWS_AS(chain_coeff(spec, Mask::parse("111"), 2, 2), error);
}

TEST_CASE("fiber weights") {
  auto spec = list_a2();
  VarSpace L = spec.weights();
  // No earlier support: the weight is the bare fiber weight.
  CHECK(lambda_weight(spec, Mask::parse("011"), 2) == P("l2", L));
  CHECK(lambda_weight(spec, Mask::parse("111"), 3) == P("-l1 + l2 + l3", L));
  BottTowerSpec two;
  two.size = 2;
  two.set(1, 2, -1);
  CHECK(lambda_weight(two, Mask::parse("11"), 2) == parse_poly("l1 + l2", two.weights()));
  // Zero bit flips the sign.
  CHECK(lambda_weight(two, Mask::parse("00"), 1) == parse_poly("-l1", two.weights()));
}

TEST_CASE("sigma restrictions") {
  auto spec = hirzebruch();
  VarSpace L = spec.weights();
  for (const Mask& at : all_masks(2))
    CHECK(sigma_D(spec, Mask::empty(2), at) == Poly::constant(L, 1));
  CHECK(sigma_D(spec, Mask::parse("01"), Mask::parse("11")) == P("l1 + l2", L));
  // Support and degree.
  std::mt19937 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    auto s = random_list(5, rng);
    for (const Mask& eps : all_masks(5))
      for (const Mask& at : all_masks(5)) {
        Poly v = sigma_D(s, eps, at);
        if (!eps.leq(at)) {
          CHECK(v.is_zero());
        } else {
          CHECK(v.is_homogeneous(eps.length()));
          CHECK(!v.is_zero());
        }
      }
  }
}

TEST_CASE("mu restrictions reproduce the Hirzebruch table") {
  auto spec = hirzebruch();
  VarSpace L = spec.weights();
  auto M = [&](const char* e, const char* at) {
    return to_string(mu_D(spec, Mask::parse(e), Mask::parse(at)));
  };
  CHECK(M("00", "00") == "1");
  CHECK(M("00", "10") == "e^{-l1}");
  CHECK(M("00", "01") == "e^{-l2}");
  CHECK(M("00", "11") == "e^{-2l1-l2}");
  CHECK(M("10", "10") == "1 - e^{-l1}");
  CHECK(M("10", "01") == "0");
  CHECK(mu_D(spec, Mask::parse("10"), Mask::parse("11")) ==
        C("e^{-l1-l2} - e^{-2l1-l2}", L));
  CHECK(mu_D(spec, Mask::parse("01"), Mask::parse("11")) == C("e^{-l1} - e^{-2l1-l2}", L));
  CHECK(mu_D(spec, Mask::parse("11"), Mask::parse("11")) ==
        Char::one_minus_exp_neg(L, {1, 0}) * Char::one_minus_exp_neg(L, {1, 1}));
  CHECK(M("11", "10") == "0");
  CHECK(M("01", "00") == "0");
}

TEST_CASE("mu restrictions vanish outside the cell order") {
  std::mt19937 rng(24);
  for (int trial = 0; trial < 5; ++trial) {
    auto s = random_list(5, rng);
    for (const Mask& eps : all_masks(5))
      for (const Mask& at : all_masks(5)) {
        Char v = mu_D(s, eps, at);
        if (!eps.leq(at))
          CHECK(v.is_zero());
        else
          CHECK(!v.is_zero());
      }
  }
}

TEST_CASE("localization integral") {
  auto spec = list_a2();
  VarSpace L = spec.weights();
  // Integrating the basis table gives the Kronecker delta.
  for (const Mask& basis : all_masks(3)) {
    auto table = sigma_table(spec, basis, Mask::full(3));
    for (const Mask& domain : all_masks(3)) {
      Poly got = integrate(spec, table, domain);
      CHECK(got == (basis == domain ? Poly::constant(L, 1) : Poly(L)));
    }
  }
  // Constant 1 over a one-dimensional cell closure vanishes by degree.
  FixedPointPolyTable ones;
  for (const Mask& m : all_masks(3)) ones.emplace(m, Poly::constant(L, 1));
  for (int i = 1; i <= 3; ++i)
    CHECK(integrate(spec, ones, Mask::unit(3, i)).is_zero());
}

TEST_CASE("Euler characteristics") {
  auto spec = list_a2();
  VarSpace L = spec.weights();
  for (const Mask& basis : all_masks(3)) {
    auto table = mu_table(spec, basis, Mask::full(3));
    for (const Mask& domain : all_masks(3)) {
      Char got = euler_char(spec, table, domain);
      CHECK(got == (basis == domain ? Char::constant(L, 1) : Char(L)));
    }
  }
  FixedPointCharTable ones;
  for (const Mask& m : all_masks(3)) ones.emplace(m, Char::constant(L, 1));
  for (int i = 1; i <= 3; ++i)
    CHECK(euler_char(spec, ones, Mask::unit(3, i)) == Char::constant(L, 1));
  // A single point integrates to its own value.
  auto table = mu_table(spec, Mask::empty(3), Mask::full(3));
  CHECK(euler_char(spec, table, Mask::empty(3)) == table.at(Mask::empty(3)));
}

TEST_CASE("products in the sigma basis") {
  BottTowerSpec two = hirzebruch();
  VarSpace L = two.weights();
  // Disjoint supports multiply to the union cell.
  auto disjoint = hd_product(two, Mask::parse("10"), Mask::parse("01"));
  REQUIRE(disjoint.size() == 1);
  CHECK(disjoint.at(Mask::parse("11")) == Poly::constant(L, 1));
  // Squares.
  auto sq1 = hd_product(two, Mask::parse("10"), Mask::parse("10"));
  REQUIRE(sq1.size() == 1);
  CHECK(sq1.at(Mask::parse("10")) == P("l1", L));
  auto sq2 = hd_product(two, Mask::parse("01"), Mask::parse("01"));
  REQUIRE(sq2.size() == 2);
  CHECK(sq2.at(Mask::parse("01")) == P("l2", L));
  CHECK(sq2.at(Mask::parse("11")) == Poly::constant(L, 1));
}

TEST_CASE("product expansions contract back to pointwise products") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    auto spec = random_list(4, rng);
    for (const Mask& e1 : all_masks(4))
      for (const Mask& e2 : all_masks(4)) {
        auto coeffs = hd_product(spec, e1, e2);
        for (const Mask& at : all_masks(4)) {
          Poly lhs = sigma_D(spec, e1, at) * sigma_D(spec, e2, at);
          Poly rhs(spec.weights());
          for (auto& [eps, c] : coeffs) rhs += c * sigma_D(spec, eps, at);
          CHECK(lhs == rhs);
        }
      }
  }
}
