#include "wrt/theory.hpp"

#include <stdexcept>
#include <string>

namespace wrt {

namespace {

std::int64_t mod_mpz(const mpz_class& k, std::int64_t n) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(n));
  return r.get_si();
}

CycNum compute_eta(const Theory& th) {
  const std::int64_t n = th.order;
  CycNum a2_diff = CycNum::root_of_unity(n, 2 * th.a_exp) - CycNum::root_of_unity(n, -2 * th.a_exp);
  CycNum prefactor = CycNum::root_of_unity(n, th.u_exp + 3 * th.a_exp) * a2_diff;
  return prefactor * gauss_sum(th) * mpq_class(1, th.p);
}

void require_even(const Theory& th, Basis basis) {
  if (basis == Basis::kSigned && !th.even)
    throw std::invalid_argument("signed basis is defined only for even p (got p=" + std::to_string(th.p) + ")");
}

}  // namespace

CycNum gauss_sum(const Theory& th) {
  std::vector<std::pair<std::int64_t, mpz_class>> terms;
  const std::int64_t minus_a = th.a_exp + th.order / 2;
  for (std::int64_t m = 1; m <= 2 * th.p; ++m) terms.emplace_back(-minus_a * (m * m % th.order), 1);
  return CycNum::from_exponents(th.order, terms, 2);
}

Theory make_theory(int p) {
  if (p < 3) throw std::invalid_argument("level p must be at least 3 (got " + std::to_string(p) + ")");
  Theory th;
  th.p = p;
  th.even = p % 2 == 0;
  th.r = th.even ? p / 2 : 0;
  th.order = nt::lcm(8, 4 * static_cast<std::int64_t>(p));
  const std::int64_t n = th.order;
  if (th.even) {
    for (int l = 0; l <= th.r - 2; ++l) th.colors.push_back(l);
    th.s = (th.r % 2 == 0) ? 4 * th.r : 8 * th.r;
  } else {
    for (int l = 0; l <= p - 3; l += 2) th.colors.push_back(l);
  }

  const std::int64_t zeta2p = n / (2 * p);
  th.alpha = CycNum::root_of_unity(n, zeta2p);
  th.a_exp = th.even ? zeta2p * (1 + p) % n : zeta2p;
  th.A = CycNum::root_of_unity(n, th.a_exp);

  int found = -1;
  for (int e = 0; e < 8; ++e) {
    th.u_exponent = e;
    th.u_exp = nt::mod(e * (n / 8) - 3 * zeta2p, n);
    th.u = CycNum::root_of_unity(n, th.u_exp);
    if (!u_square_holds(th)) continue;
    CycNum eta = compute_eta(th);
    if (!(eta == eta.conj()) || embed_complex(eta).real() <= 0) continue;
    if (found >= 0) throw std::logic_error("u_p exponent is not unique for p=" + std::to_string(p));
    found = e;
  }
  if (found < 0) throw std::logic_error("no u_p exponent satisfies the square and positivity constraints");
  th.u_exponent = found;
  th.u_exp = nt::mod(found * (n / 8) - 3 * zeta2p, n);
  th.u = CycNum::root_of_unity(n, th.u_exp);
  th.eta = compute_eta(th);

  if (th.even && found != 3) throw std::logic_error("even level must use u = zeta_8^3 alpha^-3");
  if (!eta_square_holds(th)) throw std::logic_error("eta^2 identity fails for p=" + std::to_string(p));
  if (th.even && !eta_embedding_holds(th))
    throw std::logic_error("eta embedding identity fails for p=" + std::to_string(p));
  return th;
}

bool u_square_holds(const Theory& th) {
  const std::int64_t k = -6 - static_cast<std::int64_t>(th.p) * (th.p + 1) / 2;
  return th.u * th.u == th.A.pow(k);
}

bool eta_square_holds(const Theory& th) {
  CycNum d = th.A * th.A - th.A.pow(-2);
  return th.eta * th.eta == -(d * d) * mpq_class(1, th.p);
}

bool eta_embedding_holds(const Theory& th) {
  if (!th.even) throw std::invalid_argument("eta embedding identity is stated for even p only");
  const std::int64_t n = th.order;
  CycNum root = lift(sqrt_integer(2 * th.r), n);  // 8r divides N
  CycNum diff = th.alpha * th.alpha - th.alpha.pow(-2);
  CycNum minus_i = CycNum::root_of_unity(n, 3 * n / 4);
  CycNum rhs = minus_i * diff * root * mpq_class(1, 2 * th.r);
  return th.eta == rhs;
}

CycNum quantum_integer(const Theory& th, std::int64_t n) {
  if (n == 0) return CycNum(th.order);
  if (n < 0) return -quantum_integer(th, -n);
  std::vector<std::pair<std::int64_t, mpz_class>> terms;
  for (std::int64_t k = 0; k < n; ++k) terms.emplace_back(th.a_exp * (2 * (n - 1) - 4 * k), 1);
  return CycNum::from_exponents(th.order, terms);
}

CycNum u_power(const Theory& th, const mpz_class& k) {
  return CycNum::root_of_unity(th.order, th.u_exp * mod_mpz(k, th.order) % th.order);
}

std::size_t basis_dim(const Theory& th, Basis basis) {
  require_even(th, basis);
  return th.colors.size();
}

std::vector<std::int64_t> t_exponents(const Theory& th, Basis basis) {
  require_even(th, basis);
  const std::int64_t n = th.order;
  const std::int64_t minus_a = nt::mod(th.a_exp + n / 2, n);
  std::vector<std::int64_t> out;
  if (basis == Basis::kColored) {
    for (int l : th.colors) out.push_back(minus_a * (static_cast<std::int64_t>(l) * l + 2 * l) % n);
  } else {
    for (int l = 1; l <= th.r - 1; ++l) out.push_back(minus_a * (static_cast<std::int64_t>(l) * l - 1) % n);
  }
  return out;
}

RepMatrix t_matrix(const Theory& th, Basis basis) { return t_power(th, basis, 1); }

RepMatrix t_power(const Theory& th, Basis basis, const mpz_class& k) {
  const std::int64_t km = mod_mpz(k, th.order);
  std::vector<CycNum> diag;
  for (auto e : t_exponents(th, basis)) diag.push_back(CycNum::root_of_unity(th.order, e * km % th.order));
  return RepMatrix::diagonal(th.p, basis, std::move(diag));
}

RepMatrix s_matrix(const Theory& th, Basis basis) {
  require_even(th, basis);
  const std::size_t d = th.colors.size();
  RepMatrix m(th.p, basis, th.order, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (basis == Basis::kColored) {
        const std::int64_t l = th.colors[i], k = th.colors[j];
        CycNum v = th.eta * quantum_integer(th, (l + 1) * (k + 1));
        m(i, j) = ((l + k) % 2 == 0) ? v : -v;
      } else {
        const std::int64_t l = static_cast<std::int64_t>(i) + 1, k = static_cast<std::int64_t>(j) + 1;
        m(i, j) = th.eta * quantum_integer(th, l * k);
      }
    }
  }
  return m;
}

}  // namespace wrt
