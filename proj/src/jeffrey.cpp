#include "wrt/jeffrey.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wrt/rep.hpp"

namespace wrt {

namespace {

int half_level(int p) {
  if (p < 4 || p % 2 != 0) throw std::invalid_argument("Jeffrey's formula needs even p >= 4 (got " + std::to_string(p) + ")");
  return p / 2;
}

std::int64_t mod_mpz(const mpz_class& k, std::int64_t n) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(n));
  return r.get_si();
}

std::int64_t abs_c(const Mat2Z& u) {
  mpz_class c = abs(u.c());
  if (!c.fits_slong_p()) throw std::overflow_error("|c| too large for the closed formula");
  return c.get_si();
}

}  // namespace

std::int64_t jeffrey_order(int p, const Mat2Z& u) {
  const int r = half_level(p);
  if (u.c() == 0) return 8 * r;
  return 8 * r * abs_c(u);
}

RepMatrix jeffrey_matrix(int p, const Mat2Z& u) {
  const std::int64_t r = half_level(p);
  if (u.c() == 0) throw std::invalid_argument("closed formula requires c != 0; use jeffrey_t_power");
  const std::int64_t c = abs_c(u);
  const int sc = sign(u.c());
  const std::int64_t n = 8 * r * c;  // zeta_{4rc} = zeta_n^(2 sc), zeta_{2rc} = zeta_n^(4 sc)
  const std::int64_t t = 2 * r * c;
  const CycNum root = sqrt_integer(t);

  const std::int64_t phi = mod_mpz(rademacher_phi(u), 8);
  const std::int64_t a = mod_mpz(u.a(), n), d = mod_mpz(u.d(), n);
  const mpq_class scale(sc, t);  // sign(c) / sqrt(t) = sign(c) sqrt(t) / t

  RepMatrix out(p, Basis::kSigned, n, static_cast<std::size_t>(r - 1));
  std::vector<std::pair<std::int64_t, mpz_class>> terms;
  for (std::int64_t j = 1; j < r; ++j) {
    for (std::int64_t l = 1; l < r; ++l) {
      terms.clear();
      const std::int64_t base = nt::mod(3 * n / 4 - phi * (n / 8) + 2 * sc * (d * (l * l % n) % n), n);
      for (std::int64_t m = 0; m < c; ++m) {
        const std::int64_t g = j + 2 * r * m;
        const std::int64_t quad = nt::mod(base + 2 * sc * (a * (g * g % n) % n), n);
        const std::int64_t lin = nt::mod(4 * sc * (g * l % n), n);
        terms.emplace_back(quad + lin, 1);
        terms.emplace_back(quad - lin, -1);
      }
      out(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(l - 1)) = times_monomials(root, terms) * scale;
    }
  }
  return out;
}

RepMatrix jeffrey_t_power(int p, const mpz_class& k) {
  const std::int64_t r = half_level(p);
  const std::int64_t n = 8 * r;
  const std::int64_t km = mod_mpz(k, n);
  std::vector<CycNum> diag;
  for (std::int64_t l = 1; l < r; ++l) diag.push_back(CycNum::root_of_unity(n, km * (2 * l * l - r) % n));
  return RepMatrix::diagonal(p, Basis::kSigned, std::move(diag));
}

RepMatrix jeffrey(int p, const Mat2Z& u) {
  if (u.c() != 0) return jeffrey_matrix(p, u);
  if (u.a() == 1) return jeffrey_t_power(p, u.b());
  // (-1, b; 0, -1) = S^2 T^-b
  RepMatrix s = jeffrey_matrix(p, Mat2Z::S());
  return s * s * jeffrey_t_power(p, -u.b());
}

Comparison compare(const Theory& th, const Mat2Z& u) {
  if (!th.even) throw std::invalid_argument("compare needs even p");
  GenWord word = decompose(u);
  WordValue v = evaluate_word(th, word, Basis::kSigned);
  RepMatrix j = jeffrey(th.p, u);

  Comparison out;
  out.order = nt::lcm(j.order(), th.order);
  RepMatrix w = v.product.scaled(u_power(th, -v.weight)).lifted(out.order);
  j = j.lifted(out.order);

  // scalar estimated from the largest entry of the word side, then certified exactly
  std::size_t best = 0;
  double best_abs = -1;
  for (std::size_t i = 0; i < w.entries().size(); ++i) {
    double m = std::abs(embed_complex(w.entries()[i]));
    if (m > best_abs) best_abs = m, best = i;
  }
  if (best_abs < 1e-9) return out;
  const auto ratio = embed_complex(j.entries()[best]) / embed_complex(w.entries()[best]);
  if (std::abs(std::abs(ratio) - 1) > 1e-6) return out;
  const double turns = std::arg(ratio) / (2 * std::numbers::pi) * static_cast<double>(out.order);
  const std::int64_t k = nt::mod(std::llround(turns), out.order);
  CycNum lambda = CycNum::root_of_unity(out.order, k);
  if (!(j == w.scaled(lambda))) return out;
  out.match = true;
  out.scalar = lambda;
  out.exponent = k;

  // (alpha zeta_8^-1)^t u^w at the theory's order 8r: alpha = zeta^2, zeta_8 = zeta^r
  mpz_class t = 0;
  for (const Token& g : word)
    if (g.kind == Token::Kind::T) t += g.power;
  const std::int64_t n = th.order;
  const std::int64_t predicted = nt::mod((2 - th.r) * mod_mpz(t, n) + th.u_exp * mod_mpz(v.weight, n), n);
  out.closed_form = lift(CycNum::root_of_unity(n, predicted), out.order) == lambda;
  return out;
}

bool integral_in_subfield(const RepMatrix& x, std::int64_t s) {
  for (const auto& e : x.entries())
    if (denominator_bound(e) != 1 || !in_subfield(e, s)) return false;
  return true;
}

Ladder integrality_ladder(const Theory& th, const Mat2Z& u) {
  if (!th.even) throw std::invalid_argument("integrality ladder needs even p");
  if (u.c() == 0) throw std::invalid_argument("integrality ladder needs c != 0");
  const int p = th.p;
  Ladder out;
  RepMatrix j = jeffrey_matrix(p, u);
  out.c_side = integral_in_subfield(j.scaled(mpq_class(p * u.c())), th.s * abs_c(u));

  if (u.a() == 0) {
    out.a_side_skipped = true;
  } else {
    // (a b; c d) = S (c d; -a -b)
    RepMatrix tail = jeffrey_matrix(p, Mat2Z(u.c(), u.d(), -u.a(), -u.b()));
    RepMatrix head = jeffrey_matrix(p, Mat2Z::S()).lifted(tail.order());
    RepMatrix ja = head * tail;
    mpz_class abs_a = abs(u.a());
    out.a_side = integral_in_subfield(ja.scaled(mpq_class(p * u.a())), th.s * abs_a.get_si());
    const std::int64_t common = nt::lcm(ja.order(), j.order());
    out.factorization = ja.lifted(common) == j.lifted(common);
  }
  out.combined = integral_in_subfield(j.scaled(mpq_class(p)), th.s);
  return out;
}

}  // namespace wrt
