#include "wrt/rep.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <deque>
#include <numbers>
#include <unordered_set>

namespace wrt {

namespace {

// P * diag(d), in place.
void scale_columns(RepMatrix& m, const RepMatrix& diag) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!m(i, j).is_zero()) m(i, j) *= diag(j, j);
}

// Least q <= cap with q * theta within tol of an integer, read off the
// continued-fraction convergents of theta in [0, 1).
std::optional<std::uint64_t> phase_denominator(double theta, std::uint64_t cap) {
  constexpr double kTol = 1e-9;
  theta -= std::floor(theta);
  if (theta < kTol || 1 - theta < kTol) return 1;
  double x = theta;
  long double h0 = 1, h1 = 0, k0 = 0, k1 = 1;  // convergents h/k
  for (int iter = 0; iter < 64; ++iter) {
    long double a = std::floor(x);
    long double h = a * h0 + h1, k = a * k0 + k1;
    h1 = h0, h0 = h, k1 = k0, k0 = k;
    if (k0 > static_cast<long double>(cap)) return std::nullopt;
    if (std::fabs(static_cast<double>(theta - h0 / k0)) < kTol / k0) return static_cast<std::uint64_t>(k0);
    double frac = x - static_cast<double>(a);
    if (frac < 1e-15) return std::nullopt;
    x = 1 / frac;
  }
  return std::nullopt;
}

std::vector<double> eigen_phases(const RepMatrix& m) {
  const auto d = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd x(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      auto v = embed_complex(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      x(i, j) = {v.real(), v.imag()};
    }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(x, false);
  std::vector<double> out;
  if (solver.info() != Eigen::Success) return out;
  for (Eigen::Index i = 0; i < d; ++i) out.push_back(std::arg(solver.eigenvalues()(i)) / (2 * std::numbers::pi));
  return out;
}

std::optional<std::uint64_t> lcm_of_denominators(const std::vector<double>& phases, std::uint64_t cap) {
  std::uint64_t k = 1;
  for (double t : phases) {
    auto q = phase_denominator(t, cap);
    if (!q) return std::nullopt;
    k = static_cast<std::uint64_t>(nt::lcm(static_cast<std::int64_t>(k), static_cast<std::int64_t>(*q)));
    if (k > cap) return std::nullopt;
  }
  return k;
}

// Given k with pred(m^k), shrinks k to the least such exponent.  Valid when
// the exponents satisfying pred form a subgroup of Z.
template <class Pred>
std::uint64_t minimize_exponent(const RepMatrix& m, std::uint64_t k, Pred pred) {
  for (auto q : nt::prime_factors(static_cast<std::int64_t>(k))) {
    const auto uq = static_cast<std::uint64_t>(q);
    while (k % uq == 0 && pred(m.pow(k / uq))) k /= uq;
  }
  return k;
}

template <class Pred>
std::optional<std::uint64_t> sequential_search(const RepMatrix& m, std::uint64_t cap, Pred pred) {
  RepMatrix x = m;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (pred(x)) return k;
    x = x * m;
  }
  return std::nullopt;
}

constexpr std::array<std::uint64_t, 18> kListed = {1, 1, 10, 6, 4, 3, 12, 30, 5, 12, 14, 12, 20, 12, 18, 12, 9, 60};

}  // namespace

WordValue evaluate_word(const Theory& th, const GenWord& word, Basis basis) {
  const std::size_t d = basis_dim(th, basis);
  RepMatrix s = s_matrix(th, basis);
  WordValue out{RepMatrix::identity(th.p, basis, th.order, d), 0};
  WeightedClass acc;
  for (const Token& g : word) {
    acc = compose(acc, WeightedClass{g.matrix(), 0});
    if (g.kind == Token::Kind::S)
      out.product = out.product * s;
    else
      scale_columns(out.product, t_power(th, basis, g.power));
  }
  out.weight = acc.n;
  return out;
}

RepMatrix evaluate(const Theory& th, const Mat2Z& f, const mpz_class& n, Basis basis, Reduction how) {
  WordValue v = evaluate_word(th, decompose(f, how), basis);
  mpz_class shift = n - v.weight;
  if (shift == 0) return v.product;
  return v.product.scaled(u_power(th, shift));
}

DenominatorProfile denominator_profile(const RepMatrix& m) {
  DenominatorProfile out;
  for (const auto& e : m.entries()) {
    out.entries.push_back(denominator_bound(e));
    out.bound = lcm(out.bound, out.entries.back());
  }
  return out;
}

std::optional<std::uint64_t> matrix_order(const RepMatrix& m, std::uint64_t cap) {
  auto is_id = [](const RepMatrix& x) { return x.is_identity(); };
  if (m.is_identity()) return 1;
  if (auto k = lcm_of_denominators(eigen_phases(m), cap); k && m.pow(*k).is_identity())
    return minimize_exponent(m, *k, is_id);
  return sequential_search(m, cap, is_id);
}

std::optional<ProjectiveOrder> projective_order(const RepMatrix& m, std::uint64_t cap) {
  auto is_scalar = [](const RepMatrix& x) { return x.scalar_value().has_value(); };
  auto finish = [&](std::uint64_t k) { return ProjectiveOrder{k, *m.pow(k).scalar_value()}; };
  if (is_scalar(m)) return finish(1);
  std::vector<double> phases = eigen_phases(m);
  if (!phases.empty()) {
    const double base = phases[0];
    for (double& t : phases) t -= base;
    if (auto k = lcm_of_denominators(phases, cap); k && is_scalar(m.pow(*k)))
      return finish(minimize_exponent(m, *k, is_scalar));
  }
  if (auto k = sequential_search(m, cap, is_scalar)) return finish(*k);
  return std::nullopt;
}

std::optional<std::uint64_t> listed_period(int p) {
  if (p < 3 || p > 20) return std::nullopt;
  return kListed[static_cast<std::size_t>(p - 3)];
}

Fig8Row fig8_row(int p, std::uint64_t cap) {
  Theory th = make_theory(p);
  RepMatrix r = evaluate(th, figure_eight(), 0);
  Fig8Row row;
  row.p = p;
  row.listed = listed_period(p);
  row.order = matrix_order(r, cap);
  if (auto po = projective_order(r, cap)) {
    row.projective = po->order;
    row.scalar = po->scalar;
    row.scalar_order = root_of_unity_order(po->scalar);
  }
  row.exact_match = row.listed && row.order == row.listed;
  row.lambda_modulus = nt::lcm(2, th.order);

  if (row.listed && row.projective && row.scalar && *row.listed % *row.projective == 0) {
    // (lambda R)^k is scalar iff P | k, and (lambda R)^(P m) = (lambda^P c)^m,
    // so ord(lambda R) = P * ord(lambda^P c).  Search lambda in the host field.
    const std::int64_t big_m = row.lambda_modulus;
    const auto proj = static_cast<std::int64_t>(*row.projective);
    const auto target = static_cast<std::int64_t>(*row.listed) / proj;
    auto c_exp = root_of_unity_exponent(lift(*row.scalar, big_m));
    if (c_exp) {
      for (std::int64_t j = 0; j < big_m; ++j) {
        std::int64_t e = nt::mod(j * proj + *c_exp, big_m);
        if (big_m / nt::gcd(e, big_m) == target) {
          row.lambda_exp = j;
          row.residual_order = target;
          break;
        }
      }
    }
    row.fallback_match = row.residual_order.has_value() &&
                         *row.projective * static_cast<std::uint64_t>(*row.residual_order) == *row.listed;
  }
  return row;
}

std::vector<Fig8Row> fig8_periods(int p_min, int p_max, std::uint64_t cap) {
  std::vector<Fig8Row> out;
  for (int p = p_min; p <= p_max; ++p) out.push_back(fig8_row(p, cap));
  return out;
}

std::optional<ClosureResult> group_closure(const Theory& th, std::uint64_t cap, Basis basis) {
  const std::array<RepMatrix, 2> gens = {s_matrix(th, basis), t_matrix(th, basis)};
  std::unordered_set<RepMatrix, RepMatrixHash> seen;
  std::deque<const RepMatrix*> queue;
  auto id = RepMatrix::identity(th.p, basis, th.order, basis_dim(th, basis));
  queue.push_back(&*seen.insert(id).first);
  while (!queue.empty()) {
    const RepMatrix* x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto [it, fresh] = seen.insert(*x * g);
      if (!fresh) continue;
      if (seen.size() > cap) return std::nullopt;
      queue.push_back(&*it);
    }
  }
  ClosureResult out;
  out.order = seen.size();
  for (const auto& x : seen) {
    if (x.scalar_value()) ++out.center;
    ++out.element_orders[*matrix_order(x, out.order)];
  }
  return out;
}

}  // namespace wrt
