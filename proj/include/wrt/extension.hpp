#pragma once

// The genus-one central extension of the mapping class group.  H_1 of the
// torus is Z^2 in (meridian, longitude) coordinates with omega(e1, e2) = +1;
// every Lagrangian subspace is a primitive line.

#include <gmpxx.h>

#include <string>

#include "wrt/sl2z.hpp"

namespace wrt {

/// Primitive integer vector modulo sign, normalized so the first nonzero
/// coordinate is positive.
class LagLine {
public:
  /// Any nonzero vector; it is divided by its content and sign-normalized.
  LagLine(mpz_class x, mpz_class y);

  static LagLine meridian() { return {1, 0}; }
  static LagLine longitude() { return {0, 1}; }

  const mpz_class& x() const { return x_; }
  const mpz_class& y() const { return y_; }

  friend bool operator==(const LagLine&, const LagLine&) = default;

private:
  mpz_class x_, y_;
};

std::string to_string(const LagLine& l);

/// Image line f(l).
LagLine act(const Mat2Z& f, const LagLine& l);

/// Intersection form on Z^2.
mpz_class omega(const mpz_class& u1, const mpz_class& u2, const mpz_class& v1, const mpz_class& v2);

/// Wall's non-additivity: signature of the form B(x, y) = omega(x1, y2) on
/// W = {(x1, x2, x3) in l1 + l2 + l3 : x1 + x2 + x3 = 0}.  Always in {-1, 0, 1}.
int wall_sigma(const LagLine& l1, const LagLine& l2, const LagLine& l3);

struct WeightedClass {
  Mat2Z f = Mat2Z::identity();
  mpz_class n = 0;

  friend bool operator==(const WeightedClass&, const WeightedClass&) = default;
};

/// (f2, n2) o (f1, n1) = (f2 f1, n1 + n2 + sigma(f2 f1 l, f2 l, l)).
WeightedClass compose(const WeightedClass& w2, const WeightedClass& w1,
                      const LagLine& ell = LagLine::meridian());

}  // namespace wrt
