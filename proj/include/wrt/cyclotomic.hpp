#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element is stored on the power basis {1, zeta_N, ..., zeta_N^(phi(N)-1)},
// reduced modulo the N-th cyclotomic polynomial, as an integer numerator vector
// over a single positive common denominator.  The representation is canonical:
// gcd(content(num), den) == 1 and den > 0, so equality is coordinate-wise.
// Because the power basis is an integral basis of Z[zeta_N], the common
// denominator is exactly the least d with d*x integral.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wrt {

/// Per-order data shared by every element of Q(zeta_N): phi(N) and the sparse
/// monic cyclotomic polynomial used for reduction.
class CyclotomicField {
public:
  struct Term {
    std::size_t degree;
    long coeff;
  };

  /// Returns the shared field of order n (cached; thread-safe).
  static std::shared_ptr<const CyclotomicField> get(std::int64_t n);

  std::int64_t order() const { return order_; }
  std::size_t degree() const { return degree_; }
  /// Non-leading terms of Phi_N, i.e. x^phi = -sum(coeff * x^degree).
  const std::vector<Term>& tail() const { return tail_; }
  const std::vector<long>& polynomial() const { return poly_; }

  /// Reduces an integer coefficient vector (any length) modulo Phi_N in place
  /// and truncates it to degree() entries.
  void reduce(std::vector<mpz_class>& coeffs) const;

  explicit CyclotomicField(std::int64_t n);

private:
  std::int64_t order_;
  std::size_t degree_;
  std::vector<long> poly_;
  std::vector<Term> tail_;
};

class CycNum {
public:
  /// Zero of Q(zeta_n).
  explicit CycNum(std::int64_t n = 1);

  static CycNum zero(std::int64_t n) { return CycNum(n); }
  static CycNum one(std::int64_t n) { return from_rational(n, mpq_class(1)); }
  static CycNum from_rational(std::int64_t n, const mpq_class& q);
  /// zeta_n^k for any integer k.
  static CycNum root_of_unity(std::int64_t n, std::int64_t k);
  /// Builds sum(coeff_j * zeta_n^exp_j) from unreduced exponents (any integers).
  static CycNum from_exponents(std::int64_t n,
                               std::span<const std::pair<std::int64_t, mpz_class>> terms,
                               const mpz_class& den = 1);
  /// Canonical element from rational power-basis coordinates (length <= phi(n)).
  static CycNum from_coords(std::int64_t n, std::span<const mpq_class> coords);

  std::int64_t order() const { return field_->order(); }
  std::size_t degree() const { return field_->degree(); }
  const CyclotomicField& field() const { return *field_; }

  std::vector<mpq_class> coords() const;
  mpq_class coord(std::size_t i) const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Number of nonzero power-basis coordinates.
  std::size_t support() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(const mpq_class& q);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator*(CycNum a, const mpq_class& q) { return a *= q; }
  friend CycNum operator*(const mpq_class& q, CycNum a) { return a *= q; }
  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Multiplicative inverse; throws std::domain_error on zero.
  CycNum inverse() const;
  /// Complex conjugation, the Galois map zeta -> zeta^-1.
  CycNum conj() const;
  /// Multiplication by the monomial zeta_N^k.
  CycNum shifted(std::int64_t k) const;
  /// x^e by repeated squaring; negative e inverts first.
  CycNum pow(std::int64_t e) const;

  std::size_t hash() const;

private:
  friend CycNum sum_of_products(std::span<const CycNum* const>, std::span<const CycNum* const>);
  friend CycNum times_monomials(const CycNum&, std::span<const std::pair<std::int64_t, mpz_class>>);

  void normalize();
  static CycNum from_raw(std::shared_ptr<const CyclotomicField> f, std::vector<mpz_class> num,
                         mpz_class den);

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

inline CycNum root_of_unity(std::int64_t n, std::int64_t k) { return CycNum::root_of_unity(n, k); }

/// sum_i xs[i] * ys[i], accumulated unreduced and reduced once.
CycNum sum_of_products(std::span<const CycNum* const> xs, std::span<const CycNum* const> ys);

/// x * sum(coeff_j * zeta_N^exp_j), computed in Z[x]/(x^N - 1) before a
/// single reduction.  Cheap when the monomial list is short.
CycNum times_monomials(const CycNum& x, std::span<const std::pair<std::int64_t, mpz_class>> terms);

/// Re-expresses x at order m; requires order(x) | m.
CycNum lift(const CycNum& x, std::int64_t m);

/// Ring automorphism zeta_N -> zeta_N^k; requires gcd(k, N) = 1.
CycNum galois(const CycNum& x, std::int64_t k);

/// True iff x lies in Q(zeta_s); requires s | order(x).
bool in_subfield(const CycNum& x, std::int64_t s);

/// When x lies in Q(zeta_s), returns it re-expressed at order s.
std::optional<CycNum> extract_subfield(const CycNum& x, std::int64_t s);

/// Least d >= 1 with d*x integral.
mpz_class denominator_bound(const CycNum& x);

/// Element of order 4t with square t, integral, positive under the standard
/// embedding.  Built from the quadratic Gauss sum sum_j zeta_{4t}^{j^2}.
CycNum sqrt_integer(std::int64_t t);

/// Evaluates x at zeta_N -> exp(2 pi i k / N); requires gcd(k, N) = 1.
std::complex<double> embed_complex(const CycNum& x, std::int64_t k = 1);

/// If x is a root of unity, returns j with x = zeta_M^j, M = lcm(2, N), 0 <= j < M.
std::optional<std::int64_t> root_of_unity_exponent(const CycNum& x);

/// Multiplicative order of a root of unity x, or nullopt if x is not one.
std::optional<std::int64_t> root_of_unity_order(const CycNum& x);

std::string to_string(const CycNum& x);

/// Number-theory helpers shared across modules.
namespace nt {
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t euler_phi(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);
std::int64_t radical(std::int64_t n);
}  // namespace nt

}  // namespace wrt

template <>
struct std::hash<wrt::CycNum> {
  std::size_t operator()(const wrt::CycNum& x) const noexcept { return x.hash(); }
};
