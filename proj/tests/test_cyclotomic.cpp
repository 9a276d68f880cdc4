#include <doctest.h>

#include "wrt/cyclotomic.hpp"
#include "wrt/theory.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace wrt;

namespace {

// Bounded-height random element as a sum of monomials.
CycNum random_element(std::mt19937_64& rng, std::int64_t n, int terms = 6, int height = 5) {
  std::vector<std::pair<std::int64_t, mpz_class>> t;
  for (int i = 0; i < terms; ++i)
    t.emplace_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n)),
                   static_cast<long>(rng() % (2 * height + 1)) - height);
  return CycNum::from_exponents(n, t, 1 + rng() % 4);
}

std::complex<double> zeta(std::int64_t n, std::int64_t k) {
  return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

}  // namespace

TEST_CASE("roots of unity") {
  CycNum i = CycNum::root_of_unity(4, 1);
  CHECK(i.coords() == std::vector<mpq_class>{0, 1});
  CHECK(CycNum::root_of_unity(6, 6).is_one());
  CHECK(CycNum::root_of_unity(3, 2) == CycNum::from_rational(3, -1) - CycNum::root_of_unity(3, 1));
  CHECK(CycNum::root_of_unity(12, -1) == CycNum::root_of_unity(12, 11));
  for (std::int64_t n : {1, 2, 5, 8, 12, 15, 24, 30, 36, 105}) {
    CycNum z = CycNum::root_of_unity(n, 1);
    CHECK(z.pow(n).is_one());
    // Phi_n(zeta) = 0 via the field's own polynomial
    const auto& poly = CyclotomicField::get(n)->polynomial();
    CycNum acc(n);
    for (std::size_t k = 0; k < poly.size(); ++k) acc += z.pow(static_cast<std::int64_t>(k)) * mpq_class(poly[k]);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("arithmetic examples") {
  CHECK(CycNum::root_of_unity(8, 1) * CycNum::root_of_unity(8, 1) == CycNum::root_of_unity(8, 2));
  CycNum one_plus_i = CycNum::one(4) + CycNum::root_of_unity(4, 1);
  CHECK(one_plus_i.inverse() == (CycNum::one(4) - CycNum::root_of_unity(4, 1)) * mpq_class(1, 2));
  CHECK(CycNum::root_of_unity(5, 1).conj() == CycNum::root_of_unity(5, 4));
  CHECK_THROWS_AS(CycNum(7).inverse(), std::domain_error);
  CHECK_THROWS(CycNum::one(4) + CycNum::one(8));
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937_64 rng(1);
  for (std::int64_t n : {7, 12, 20, 35, 48, 63}) {
    for (int i = 0; i < 25; ++i) {
      CycNum x = random_element(rng, n), y = random_element(rng, n), z = random_element(rng, n);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + y == y + x);
      CHECK(x - x == CycNum(n));
      if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
      CHECK(x.conj().conj() == x);
      CHECK((x * y).conj() == x.conj() * y.conj());
    }
  }
}

TEST_CASE("lift") {
  CHECK(lift(CycNum::root_of_unity(4, 1), 8) == CycNum::root_of_unity(8, 2));
  CHECK(lift(CycNum::one(3), 12).is_one());
  CHECK(lift(CycNum::root_of_unity(6, 1), 12) == CycNum::root_of_unity(12, 2));
  CHECK_THROWS_AS(lift(CycNum::one(5), 12), std::invalid_argument);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    CycNum x = random_element(rng, 15), y = random_element(rng, 15);
    CHECK(lift(x * y, 60) == lift(x, 60) * lift(y, 60));
    CHECK(in_subfield(lift(x, 60), 15));
    CHECK(extract_subfield(lift(x, 60), 15) == x);
  }
}

TEST_CASE("galois") {
  CHECK(galois(CycNum::root_of_unity(5, 1), 2) == CycNum::root_of_unity(5, 2));
  CHECK(galois(CycNum::from_rational(9, mpq_class(3, 7)), 4) == CycNum::from_rational(9, mpq_class(3, 7)));
  CHECK_THROWS_AS(galois(CycNum::root_of_unity(10, 1), 5), std::invalid_argument);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    CycNum x = random_element(rng, 35);
    CHECK(galois(galois(x, 2), 3) == galois(x, 6));
    CHECK(galois(x, 34) == x.conj());
  }
}

TEST_CASE("subfields") {
  CHECK(in_subfield(CycNum::root_of_unity(8, 2), 4));
  CHECK_FALSE(in_subfield(CycNum::root_of_unity(8, 1), 4));
  CycNum sqrt2 = CycNum::root_of_unity(8, 1) - CycNum::root_of_unity(8, 3);
  CHECK(sqrt2 * sqrt2 == CycNum::from_rational(8, 2));
  CHECK(in_subfield(sqrt2, 8));
  CHECK_FALSE(in_subfield(sqrt2, 4));
  CHECK_FALSE(extract_subfield(sqrt2, 4).has_value());
  // sqrt 3 = zeta_12 + zeta_12^-1 lies in Q(zeta_12) but not Q(zeta_4) nor Q(zeta_3)
  CycNum sqrt3 = CycNum::root_of_unity(12, 1) + CycNum::root_of_unity(12, -1);
  CHECK(sqrt3 * sqrt3 == CycNum::from_rational(12, 3));
  CHECK_FALSE(in_subfield(sqrt3, 4));
  CHECK_FALSE(in_subfield(sqrt3, 3));
  // i sqrt 3 does lie in Q(zeta_3)
  CycNum isqrt3 = lift(CycNum::root_of_unity(3, 1) - CycNum::root_of_unity(3, 2), 12);
  auto e = extract_subfield(isqrt3, 3);
  REQUIRE(e);
  CHECK(lift(*e, 12) == isqrt3);
}

TEST_CASE("denominator bound") {
  CHECK(denominator_bound(CycNum::from_rational(5, mpq_class(1, 2))) == 2);
  CHECK(denominator_bound(CycNum::root_of_unity(8, 1) * mpq_class(1, 3) + CycNum::from_rational(8, 5)) == 3);
  CHECK(denominator_bound(CycNum::root_of_unity(9, 4)) == 1);
  Theory th = make_theory(6);
  mpz_class b = denominator_bound(th.eta);
  CHECK(mpz_divisible_p(mpz_class(6).get_mpz_t(), b.get_mpz_t()));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    CycNum x = random_element(rng, 24), y = random_element(rng, 24);
    mpz_class bx = denominator_bound(x), by = denominator_bound(y);
    mpz_class l = lcm(bx, by), bs = denominator_bound(x + y), bp = denominator_bound(x * y);
    CHECK(mpz_divisible_p(l.get_mpz_t(), bs.get_mpz_t()));
    mpz_class prod = bx * by;
    CHECK(mpz_divisible_p(prod.get_mpz_t(), bp.get_mpz_t()));
  }
}

TEST_CASE("sqrt via Gauss sums") {
  CHECK(sqrt_integer(1).is_one());
  CHECK(sqrt_integer(4) == CycNum::from_rational(16, 2));
  for (std::int64_t t = 1; t <= 50; ++t) {
    CAPTURE(t);
    CycNum x = sqrt_integer(t);
    CHECK(x.order() == 4 * t);
    CHECK(x * x == CycNum::from_rational(4 * t, t));
    CHECK(denominator_bound(x) == 1);
    // floating oracle: the closed form itself, summed numerically
    std::complex<double> g = 0;
    for (std::int64_t j = 0; j < 4 * t; ++j) g += zeta(4 * t, j * j % (4 * t));
    std::complex<double> f = std::complex<double>(1, -1) / 4.0 * g;
    CHECK(std::abs(f - std::sqrt(static_cast<double>(t))) < 1e-9);
    CHECK(std::abs(embed_complex(x) - std::sqrt(static_cast<double>(t))) < 1e-9);
  }
  CHECK(std::abs(embed_complex(sqrt_integer(2)).real() - 1.41421356) < 1e-8);
}

TEST_CASE("complex embedding") {
  CHECK(std::abs(embed_complex(CycNum::one(4) + CycNum::root_of_unity(4, 1)) - std::complex<double>(1, 1)) < 1e-12);
  CHECK(std::abs(embed_complex(sqrt_integer(9)) - 3.0) < 1e-9);
  CHECK(std::abs(embed_complex(CycNum::root_of_unity(5, 1), 2) - zeta(5, 2)) < 1e-12);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    CycNum x = random_element(rng, 40), y = random_element(rng, 40);
    for (std::int64_t k : {1, 3, 7}) {
      CHECK(std::abs(embed_complex(x * y, k) - embed_complex(x, k) * embed_complex(y, k)) < 1e-9);
      CHECK(std::abs(embed_complex(x + y, k) - embed_complex(x, k) - embed_complex(y, k)) < 1e-9);
      CHECK(std::abs(embed_complex(galois(x, k)) - embed_complex(x, k)) < 1e-9);
    }
  }
  Theory th = make_theory(10);
  std::complex<double> alpha = zeta(20, 1);
  std::complex<double> expected = std::complex<double>(0, -1) * (alpha * alpha - 1.0 / (alpha * alpha)) / std::sqrt(10.0);
  CHECK(std::abs(embed_complex(th.eta) - expected) < 1e-12);
}

TEST_CASE("root of unity recognition") {
  CHECK(root_of_unity_order(CycNum::root_of_unity(24, 4)) == 6);
  CHECK(root_of_unity_order(CycNum::from_rational(5, -1)) == 2);
  CHECK(root_of_unity_exponent(CycNum::root_of_unity(5, 3)) == 6);  // zeta_5^3 = zeta_10^6
  CHECK_FALSE(root_of_unity_order(CycNum::from_rational(8, 2)).has_value());
  CHECK_FALSE(root_of_unity_order(CycNum::one(8) + CycNum::root_of_unity(8, 1)).has_value());
}

TEST_CASE("number theory helpers") {
  CHECK(nt::euler_phi(36) == 12);
  CHECK(nt::radical(72) == 6);
  CHECK(nt::prime_factors(360) == std::vector<std::int64_t>{2, 3, 5});
  CHECK(nt::mod(-7, 5) == 3);
  CHECK(nt::lcm(8, 12) == 24);
}
