#include <doctest.h>

#include "wrt/sl2z.hpp"

#include <random>

using namespace wrt;

namespace {

// ((x)) for x = num/den
mpq_class sawtooth(const mpz_class& num, const mpz_class& den) {
  mpq_class x(num, den);
  x.canonicalize();
  if (x.get_den() == 1) return 0;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - fl - mpq_class(1, 2);
}

mpq_class dedekind_brute(long h, long k) {
  mpq_class s = 0;
  for (long i = 1; i < k; ++i) s += sawtooth(i, k) * sawtooth(h * i, k);
  return s;
}

}  // namespace

TEST_CASE("Mat2Z basics") {
  CHECK_THROWS_AS(Mat2Z(1, 1, 1, 1), std::invalid_argument);
  CHECK(Mat2Z::S() * Mat2Z::S() * Mat2Z::S() * Mat2Z::S() == Mat2Z::identity());
  Mat2Z st = Mat2Z::S() * Mat2Z::T();
  CHECK(st * st * st == Mat2Z::S() * Mat2Z::S());
  CHECK(Mat2Z(2, 1, 1, 1) * Mat2Z(2, 1, 1, 1).inverse() == Mat2Z::identity());
  CHECK(Mat2Z(5, -7, -2, 3).height() == 7);
}

TEST_CASE("parsing") {
  CHECK(parse_mat2z("2,1;1,1") == Mat2Z(2, 1, 1, 1));
  CHECK(parse_mat2z(" 1 , 0 ; 0 , 1 ") == Mat2Z::identity());
  CHECK(parse_mat2z("123456789012345678901,1;123456789012345678900,1").a() == mpz_class("123456789012345678901"));
  CHECK_THROWS_AS(parse_mat2z("1,1;1,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_mat2z("1,0,0,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_mat2z("1,x;0,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_mat2z(""), std::invalid_argument);
  CHECK(to_string(Mat2Z(2, 1, 1, 1)) == "2,1;1,1");
}

TEST_CASE("decompose") {
  CHECK(decompose(Mat2Z::T()) == GenWord{Token::t(1)});
  CHECK(decompose(Mat2Z::S()) == GenWord{Token::s()});
  CHECK(decompose(Mat2Z::identity()).empty());
  CHECK(evaluate(decompose(Mat2Z(2, 1, 1, 1))) == Mat2Z(2, 1, 1, 1));
  CHECK(evaluate(decompose(Mat2Z(-1, 0, 0, -1))) == Mat2Z(-1, 0, 0, -1));
  CHECK(evaluate(decompose(Mat2Z(-1, 5, 0, -1))) == Mat2Z(-1, 5, 0, -1));
}

TEST_CASE("decompose round trip on 1000 random matrices") {
  std::mt19937_64 rng(123);
  const mpz_class bound = 1000000;
  int checked = 0;
  while (checked < 1000) {
    Mat2Z m = sample_matrix(rng, 40, bound);
    for (Reduction how : {Reduction::kRightFloor, Reduction::kLeftNearest}) {
      GenWord w = decompose(m, how);
      CHECK(evaluate(w) == m);
      // Euclid: at most ~2 log_phi(height) + 4 tokens
      CHECK(w.size() <= 80);
    }
    ++checked;
  }
  // large entries keep short words
  Mat2Z big = parse_mat2z("1346269,832040;832040,514229");
  CHECK(evaluate(decompose(big)) == big);
}

TEST_CASE("sampling is seeded and respects its filters") {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 20; ++i) {
    Mat2Z x = sample_matrix(a, 20, 50, true), y = sample_matrix(b, 20, 50, true);
    CHECK(x == y);
    CHECK(x.c() != 0);
    CHECK(x.height() <= 50);
  }
}

TEST_CASE("dedekind sums") {
  CHECK(dedekind_sum(1, 2) == 0);
  CHECK(dedekind_sum(1, 3) == mpq_class(1, 18));
  CHECK(dedekind_sum(0, 1) == 0);
  CHECK_THROWS_AS(dedekind_sum(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(dedekind_sum(1, 0), std::invalid_argument);
  for (long k = 1; k <= 50; ++k)
    for (long h = -k; h <= 2 * k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      CHECK(dedekind_sum(h, k) == dedekind_brute(h, k));
    }
}

TEST_CASE("dedekind reciprocity, brute force on both sides") {
  for (long k = 2; k <= 50; ++k)
    for (long h = 1; h < k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      mpq_class hq(h), kq(k);
      mpq_class rhs = mpq_class(-1, 4) + (hq / kq + kq / hq + 1 / (hq * kq)) / 12;
      CHECK(dedekind_brute(h, k) + dedekind_brute(k, h) == rhs);
    }
}

TEST_CASE("rademacher phi") {
  CHECK(rademacher_phi(Mat2Z::T()) == 1);
  CHECK(rademacher_phi(Mat2Z::T(-4)) == -4);
  CHECK(rademacher_phi(Mat2Z::S()) == 0);
  CHECK(rademacher_phi(Mat2Z(-1, 3, 0, -1)) == -3);
  std::mt19937_64 rng(77);
  int tested = 0;
  while (tested < 500) {
    Mat2Z a = sample_matrix(rng, 12, 10000), b = sample_matrix(rng, 12, 10000);
    Mat2Z ab = a * b;
    if (a.c() == 0 || b.c() == 0 || ab.c() == 0) continue;
    CHECK(rademacher_phi(ab) == rademacher_phi(a) + rademacher_phi(b) - 3 * sign(a.c() * b.c() * ab.c()));
    ++tested;
  }
}

TEST_CASE("uniform_below") {
  std::mt19937_64 rng(1);
  std::vector<int> hist(3);
  for (int i = 0; i < 3000; ++i) ++hist[uniform_below(rng, 3)];
  for (int h : hist) CHECK(h > 800);
  CHECK(uniform_below(rng, 1) == 0);
}
