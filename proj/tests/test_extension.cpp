#include <doctest.h>

#include "wrt/extension.hpp"

#include <random>

using namespace wrt;

namespace {

LagLine random_line(std::mt19937_64& rng) {
  for (;;) {
    long x = static_cast<long>(uniform_below(rng, 21)) - 10, y = static_cast<long>(uniform_below(rng, 21)) - 10;
    if (x != 0 || y != 0) return {x, y};
  }
}

WeightedClass random_class(std::mt19937_64& rng) {
  return {sample_matrix(rng, 10, 1000), static_cast<long>(uniform_below(rng, 11)) - 5};
}

}  // namespace

TEST_CASE("lagrangian lines") {
  CHECK(LagLine(-2, -4) == LagLine(1, 2));
  CHECK(LagLine(0, -3) == LagLine::longitude());
  CHECK(LagLine(6, -9) == LagLine(-2, 3));
  CHECK(LagLine(-2, 3).x() == 2);
  CHECK_THROWS_AS(LagLine(0, 0), std::invalid_argument);
  CHECK(act(Mat2Z::S(), LagLine::meridian()) == LagLine::longitude());
  CHECK(act(Mat2Z::T(), LagLine::longitude()) == LagLine(1, 1));
  CHECK(act(Mat2Z::identity(), LagLine(3, 5)) == LagLine(3, 5));
  CHECK(act(Mat2Z::T(7), LagLine::meridian()) == LagLine::meridian());
}

TEST_CASE("wall sigma") {
  // frozen sign convention
  CHECK(wall_sigma({1, 0}, {0, 1}, {1, 1}) == 1);
  CHECK(wall_sigma({1, 0}, {1, 1}, {0, 1}) == -1);
  CHECK(wall_sigma({1, 0}, {0, 1}, {1, 0}) == 0);
  CHECK(wall_sigma({2, 1}, {2, 1}, {2, 1}) == 0);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    LagLine a = random_line(rng), b = random_line(rng), c = random_line(rng);
    int s = wall_sigma(a, b, c);
    CHECK(s >= -1);
    CHECK(s <= 1);
    CHECK(wall_sigma(a, a, c) == 0);
    CHECK(wall_sigma(a, b, b) == 0);
    CHECK(wall_sigma(a, b, a) == 0);
    // alternating and cyclic
    CHECK(wall_sigma(b, a, c) == -s);
    CHECK(wall_sigma(a, c, b) == -s);
    CHECK(wall_sigma(b, c, a) == s);
    // invariant under the symplectic group
    Mat2Z f = sample_matrix(rng, 8, 100);
    CHECK(wall_sigma(act(f, a), act(f, b), act(f, c)) == s);
    // brute oracle: sign of omega12 omega23 omega31
    auto om = [](const LagLine& u, const LagLine& v) { return sign(omega(u.x(), u.y(), v.x(), v.y())); };
    CHECK(s == om(a, b) * om(b, c) * om(c, a));
  }
}

TEST_CASE("composition") {
  WeightedClass s{Mat2Z::S(), 0};
  WeightedClass ss = compose(s, s);
  CHECK(ss.f == Mat2Z(-1, 0, 0, -1));
  CHECK(ss.n == 0);
  std::mt19937_64 rng(10);
  for (int i = 0; i < 50; ++i) {
    WeightedClass w = random_class(rng);
    CHECK(compose(WeightedClass{}, w) == w);
    CHECK(compose(w, WeightedClass{}) == w);
    // central kernel
    WeightedClass z{Mat2Z::identity(), 4};
    CHECK(compose(z, w) == compose(w, z));
    CHECK(compose(z, w).n == w.n + 4);
  }
  // (T,0)^k = (T^k, 0) with the meridian fixed
  WeightedClass t{Mat2Z::T(), 0}, acc;
  for (int k = 1; k <= 6; ++k) {
    acc = compose(t, acc);
    CHECK(acc == WeightedClass{Mat2Z::T(k), 0});
  }
}

TEST_CASE("associativity on 1000 random triples") {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 1000; ++i) {
    WeightedClass a = random_class(rng), b = random_class(rng), c = random_class(rng);
    CHECK(compose(c, compose(b, a)) == compose(compose(c, b), a));
  }
  // also with a non-default Lagrangian
  LagLine ell(2, 3);
  for (int i = 0; i < 200; ++i) {
    WeightedClass a = random_class(rng), b = random_class(rng), c = random_class(rng);
    CHECK(compose(c, compose(b, a, ell), ell) == compose(compose(c, b, ell), a, ell));
  }
}
