#include <doctest.h>

#include "wrt/theory.hpp"

#include <cmath>
#include <complex>

using namespace wrt;

TEST_CASE("colors and dimensions") {
  CHECK(make_theory(6).colors == std::vector<int>{0, 1});
  CHECK(make_theory(5).colors == std::vector<int>{0, 2});
  CHECK(make_theory(3).dim() == 1);
  CHECK(make_theory(4).dim() == 1);
  CHECK(make_theory(20).dim() == 9);
  CHECK(make_theory(21).dim() == 10);
  CHECK_THROWS_AS(make_theory(2), std::invalid_argument);
}

TEST_CASE("host order and target subring") {
  CHECK(make_theory(6).order == 24);
  CHECK(make_theory(5).order == 40);
  CHECK(make_theory(8).order == 32);
  CHECK(make_theory(8).s == 16);   // r = 4 even
  CHECK(make_theory(10).s == 40);  // r = 5 odd
  CHECK(make_theory(7).s == 0);
}

TEST_CASE("u and eta identities hold for 3 <= p <= 40") {
  for (int p = 3; p <= 40; ++p) {
    CAPTURE(p);
    Theory th = make_theory(p);
    CHECK(u_square_holds(th));
    CHECK(eta_square_holds(th));
    if (th.even) CHECK(eta_embedding_holds(th));
    CHECK(denominator_bound(th.eta * mpq_class(p)) == 1);
  }
}

TEST_CASE("u exponent is frozen") {
  // even levels are pinned to zeta_8^3 alpha^-3; odd levels solved by sign of eta
  const int expected[] = {4, 3, 2, 3, 0, 3, 6, 3, 4, 3, 2, 3, 0, 3, 6, 3, 4, 3};
  for (int p = 3; p <= 20; ++p) CHECK(make_theory(p).u_exponent == expected[p - 3]);
}

TEST_CASE("eta is positive and matches its floating closed form") {
  for (int p = 4; p <= 20; p += 2) {
    Theory th = make_theory(p);
    const double r = p / 2;
    std::complex<double> e = embed_complex(th.eta);
    double expected = 2 * std::sin(2 * M_PI / p) / std::sqrt(2 * r);
    CHECK(std::abs(e - expected) < 1e-12);
  }
}

TEST_CASE("quantum integers") {
  Theory th = make_theory(7);
  CHECK(quantum_integer(th, 0).is_zero());
  CHECK(quantum_integer(th, 1).is_one());
  CHECK(quantum_integer(th, -3) == -quantum_integer(th, 3));
  // [2] = A^2 + A^-2
  CHECK(quantum_integer(th, 2) == th.A.pow(2) + th.A.pow(-2));
  // division oracle: [n] (A^2 - A^-2) == A^2n - A^-2n
  CycNum d = th.A.pow(2) - th.A.pow(-2);
  for (int n = -9; n <= 30; ++n) CHECK(quantum_integer(th, n) * d == th.A.pow(2 * n) - th.A.pow(-2 * n));
}

TEST_CASE("generator matrices") {
  Theory th = make_theory(6);
  RepMatrix t = t_matrix(th, Basis::kColored);
  CHECK(t(0, 0).is_one());
  CHECK(t(1, 1) == (-th.A).pow(3));

  RepMatrix ts = t_matrix(th, Basis::kSigned);
  CHECK(ts(0, 0).is_one());
  CHECK(ts(1, 1) == -th.A.pow(3));

  RepMatrix s = s_matrix(th, Basis::kSigned);
  CHECK(s(0, 0) == th.eta * quantum_integer(th, 1));
  CHECK(s(0, 1) == th.eta * quantum_integer(th, 2));
  CHECK(s(1, 1) == th.eta * quantum_integer(th, 4));

  Theory t5 = make_theory(5);
  CHECK(s_matrix(t5, Basis::kColored)(0, 1) == t5.eta * quantum_integer(t5, 3));
  CHECK_THROWS_AS(s_matrix(t5, Basis::kSigned), std::invalid_argument);
  CHECK_THROWS_AS(t_matrix(t5, Basis::kSigned), std::invalid_argument);
}

TEST_CASE("signed basis is the colored basis conjugated by alternating signs") {
  for (int p = 4; p <= 12; p += 2) {
    Theory th = make_theory(p);
    std::vector<CycNum> signs;
    for (std::size_t i = 0; i < th.dim(); ++i) signs.push_back(CycNum::from_rational(th.order, i % 2 ? -1 : 1));
    RepMatrix dm = RepMatrix::diagonal(p, Basis::kColored, signs);
    CHECK((dm * s_matrix(th, Basis::kColored) * dm).entries() == s_matrix(th, Basis::kSigned).entries());
    CHECK(t_matrix(th, Basis::kColored).entries() == t_matrix(th, Basis::kSigned).entries());
  }
}

TEST_CASE("unitarity and modular relations") {
  for (int p = 3; p <= 16; ++p) {
    CAPTURE(p);
    Theory th = make_theory(p);
    for (Basis b : {Basis::kColored, Basis::kSigned}) {
      if (b == Basis::kSigned && !th.even) continue;
      RepMatrix s = s_matrix(th, b), t = t_matrix(th, b);
      CHECK(s.is_symmetric());
      CHECK((s * s.conj_transpose()).is_identity());
      CHECK((t * t.conj_transpose()).is_identity());
      CHECK((s * s).is_identity());
      // at weight 0 the braid relation only holds up to a root of unity
      RepMatrix st = s * t;
      auto xi = (st * st * st).scalar_value();
      REQUIRE(xi.has_value());
      CHECK(root_of_unity_order(*xi).has_value());
    }
  }
}
