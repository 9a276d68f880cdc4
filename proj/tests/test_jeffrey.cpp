#include <doctest.h>

#include "wrt/jeffrey.hpp"
#include "wrt/rep.hpp"

#include <random>

using namespace wrt;

TEST_CASE("R(S) is the closed form for psi(S-hat)") {
  for (int p : {4, 6, 8, 10, 14}) {
    const std::int64_t r = p / 2, n = 8 * r;
    RepMatrix js = jeffrey_matrix(p, Mat2Z::S());
    REQUIRE(js.order() == n);
    // eta [lj] under psi: (-i / sqrt(2r)) (alpha^{2lj} - alpha^{-2lj}), alpha = zeta_n^2
    CycNum coef = CycNum::root_of_unity(n, 3 * n / 4) * sqrt_integer(2 * r) * mpq_class(1, 2 * r);
    for (std::int64_t j = 1; j < r; ++j)
      for (std::int64_t l = 1; l < r; ++l) {
        CycNum expect = coef * (CycNum::root_of_unity(n, 4 * l * j) - CycNum::root_of_unity(n, -4 * l * j));
        CHECK(js(j - 1, l - 1) == expect);
      }
    Theory th = make_theory(p);
    CHECK(js == s_matrix(th, Basis::kSigned));
  }
}

TEST_CASE("T path") {
  for (int p : {6, 10}) {
    const std::int64_t r = p / 2, n = 8 * r;
    CHECK(jeffrey_t_power(p, 0).is_identity());
    RepMatrix t1 = jeffrey_t_power(p, 1);
    for (std::int64_t l = 1; l < r; ++l) CHECK(t1(l - 1, l - 1) == CycNum::root_of_unity(n, 2 * l * l - r));
    CHECK(jeffrey_t_power(p, 7) == jeffrey_t_power(p, 3) * jeffrey_t_power(p, 4));
    CHECK(jeffrey_t_power(p, -5) * jeffrey_t_power(p, 5) == jeffrey_t_power(p, 0));
    // R(T) = alpha zeta_8^-1 T-hat
    Theory th = make_theory(p);
    CHECK(t1 == t_matrix(th, Basis::kSigned).scaled(CycNum::root_of_unity(n, 2 - r)));
  }
  CHECK_THROWS_AS(jeffrey_t_power(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(jeffrey_matrix(6, Mat2Z::T(3)), std::invalid_argument);
}

TEST_CASE("negative c uses zeta_{-t} = zeta_t^-1") {
  // (a b; c d) and (-a -b; -c -d) differ by S^2, which acts as a scalar-free sign
  Mat2Z u(2, 1, 1, 1);
  Mat2Z v(-2, -1, -1, -1);
  RepMatrix s = jeffrey_matrix(6, Mat2Z::S());
  CHECK(jeffrey(6, v) == (s * s).lifted(jeffrey_order(6, u)) * jeffrey(6, u));
}

TEST_CASE("R is a genuine representation on sampled pairs") {
  std::mt19937_64 rng(11);
  for (int p : {6, 8}) {
    for (int i = 0; i < 15; ++i) {
      Mat2Z x = sample_matrix(rng, 8, 30), y = sample_matrix(rng, 8, 30);
      RepMatrix jx = jeffrey(p, x), jy = jeffrey(p, y), jxy = jeffrey(p, x * y);
      const std::int64_t m = nt::lcm(nt::lcm(jx.order(), jy.order()), jxy.order());
      CHECK(jx.lifted(m) * jy.lifted(m) == jxy.lifted(m));
    }
  }
}

TEST_CASE("compare against the word evaluation") {
  Theory th = make_theory(6);
  Comparison s = compare(th, Mat2Z::S());
  CHECK(s.match);
  CHECK(s.scalar->is_one());
  Comparison ts = compare(th, Mat2Z::T() * Mat2Z::S());
  CHECK(ts.match);
  CHECK(ts.closed_form);
  CHECK(ts.exponent == 23);  // alpha zeta_8^-1 = zeta_24^-1 at order 24
  std::mt19937_64 rng(3);
  for (int p : {6, 10}) {
    Theory t = make_theory(p);
    for (int i = 0; i < 10; ++i) {
      Mat2Z u = sample_matrix(rng, 12, 200, true);
      Comparison c = compare(t, u);
      CAPTURE(to_string(u));
      CHECK(c.match);
      CHECK(c.scalar.has_value());
      CHECK(root_of_unity_order(*c.scalar).has_value());
    }
  }
}

TEST_CASE("integrality ladder") {
  std::mt19937_64 rng(17);
  for (int p : {6, 8, 10}) {
    Theory th = make_theory(p);
    for (int i = 0; i < 8; ++i) {
      Mat2Z u = sample_matrix(rng, 10, 60, true);
      CAPTURE(to_string(u));
      Ladder l = integrality_ladder(th, u);
      CHECK(l.c_side);
      CHECK(l.combined);
      CHECK(l.pass());
      if (u.a() != 0) CHECK(l.factorization);
    }
  }
  Ladder s = integrality_ladder(make_theory(6), Mat2Z::S());
  CHECK(s.a_side_skipped);
  CHECK(s.pass());
  // R(S) itself is not integral after scaling by 1: sqrt(2r) still divides
  CHECK_FALSE(integral_in_subfield(jeffrey_matrix(6, Mat2Z::S()), 24));
}
