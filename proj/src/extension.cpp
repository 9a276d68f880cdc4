#include "wrt/extension.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace wrt {

LagLine::LagLine(mpz_class x, mpz_class y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_ == 0 && y_ == 0) throw std::invalid_argument("Lagrangian line needs a nonzero vector");
  mpz_class g = gcd(x_, y_);
  x_ /= g;
  y_ /= g;
  if (x_ < 0 || (x_ == 0 && y_ < 0)) {
    x_ = -x_;
    y_ = -y_;
  }
}

std::string to_string(const LagLine& l) { return "(" + l.x().get_str() + "," + l.y().get_str() + ")"; }

LagLine act(const Mat2Z& f, const LagLine& l) {
  return {f.a() * l.x() + f.b() * l.y(), f.c() * l.x() + f.d() * l.y()};
}

mpz_class omega(const mpz_class& u1, const mpz_class& u2, const mpz_class& v1, const mpz_class& v2) {
  return u1 * v2 - u2 * v1;
}

namespace {

using Vec3 = std::array<mpz_class, 3>;

// Integer basis of the kernel of the 2x3 matrix [v1 v2 v3] (columns vi).
std::vector<Vec3> kernel(const std::array<LagLine, 3>& v) {
  // Rows of the system a v1 + b v2 + c v3 = 0.
  Vec3 r0{v[0].x(), v[1].x(), v[2].x()};
  Vec3 r1{v[0].y(), v[1].y(), v[2].y()};
  Vec3 cross{r0[1] * r1[2] - r0[2] * r1[1], r0[2] * r1[0] - r0[0] * r1[2],
             r0[0] * r1[1] - r0[1] * r1[0]};
  if (cross[0] != 0 || cross[1] != 0 || cross[2] != 0) return {cross};
  // Rank one (all three lines coincide, since each column is nonzero): the
  // kernel is the plane orthogonal to a nonzero row.
  const Vec3& r = (r0[0] != 0 || r0[1] != 0 || r0[2] != 0) ? r0 : r1;
  std::vector<Vec3> out;
  if (r[0] != 0) {
    out.push_back({-r[1], r[0], 0});
    out.push_back({-r[2], 0, r[0]});
  } else if (r[1] != 0) {
    out.push_back({1, 0, 0});
    out.push_back({0, -r[2], r[1]});
  } else {
    out.push_back({1, 0, 0});
    out.push_back({0, 1, 0});
  }
  return out;
}

}  // namespace

int wall_sigma(const LagLine& l1, const LagLine& l2, const LagLine& l3) {
  const std::array<LagLine, 3> v{l1, l2, l3};
  auto basis = kernel(v);
  // B(x, y) = omega(x1, y2) with x1 = a v1, y2 = b' v2; symmetrize for the Gram matrix.
  auto form = [&](const Vec3& x, const Vec3& y) -> mpz_class {
    return x[0] * y[1] * omega(v[0].x(), v[0].y(), v[1].x(), v[1].y());
  };
  const std::size_t k = basis.size();
  std::vector<std::vector<mpq_class>> g(k, std::vector<mpq_class>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      g[i][j] = mpq_class(form(basis[i], basis[j]) + form(basis[j], basis[i]), 2);
      g[i][j].canonicalize();
    }
  if (k == 1) return sgn(g[0][0]);
  // 2x2 symmetric: signature from determinant and trace.
  mpq_class det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  mpq_class tr = g[0][0] + g[1][1];
  if (det < 0) return 0;
  if (det > 0) return tr > 0 ? 2 : -2;
  return sgn(tr);
}

WeightedClass compose(const WeightedClass& w2, const WeightedClass& w1, const LagLine& ell) {
  Mat2Z f = w2.f * w1.f;
  int s = wall_sigma(act(f, ell), act(w2.f, ell), ell);
  return {f, w1.n + w2.n + s};
}

}  // namespace wrt
