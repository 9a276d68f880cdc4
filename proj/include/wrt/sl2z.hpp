#pragma once

// SL(2,Z): the mapping class group of the torus in (meridian, longitude)
// coordinates, generator words in S and T^k, Dedekind sums and the Rademacher
// Phi function.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace wrt {

class Mat2Z {
public:
  /// Throws std::invalid_argument unless ad - bc = 1.
  Mat2Z(mpz_class a, mpz_class b, mpz_class c, mpz_class d);

  static Mat2Z identity() { return {1, 0, 0, 1}; }
  static Mat2Z S() { return {0, -1, 1, 0}; }
  static Mat2Z T(const mpz_class& k = 1) { return {1, k, 0, 1}; }

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }
  const mpz_class& d() const { return d_; }

  Mat2Z inverse() const { return {d_, -b_, -c_, a_}; }
  /// Largest absolute entry.
  mpz_class height() const;

  friend Mat2Z operator*(const Mat2Z& x, const Mat2Z& y);
  friend bool operator==(const Mat2Z& x, const Mat2Z& y) = default;

private:
  mpz_class a_, b_, c_, d_;
};

std::string to_string(const Mat2Z& m);

/// Parses "a,b;c,d" (whitespace tolerated).  Throws std::invalid_argument on
/// malformed input or determinant != 1.
Mat2Z parse_mat2z(std::string_view text);

struct Token {
  enum class Kind { S, T };
  Kind kind;
  mpz_class power;  // always 1 for S; nonzero for T

  static Token s() { return {Kind::S, 1}; }
  static Token t(const mpz_class& k) { return {Kind::T, k}; }
  Mat2Z matrix() const { return kind == Kind::S ? Mat2Z::S() : Mat2Z::T(power); }
  friend bool operator==(const Token&, const Token&) = default;
};

using GenWord = std::vector<Token>;

std::string to_string(const GenWord& w);

/// Product of the tokens, left to right.
Mat2Z evaluate(const GenWord& w);

enum class Reduction {
  /// Right multiplication by T^-q S^-1 with q = floor(d/c); Euclid on the bottom row.
  kRightFloor,
  /// Left multiplication by S^-1 T^-q with q nearest to a/c; Euclid on the first column.
  kLeftNearest,
};

/// A word whose product is exactly m.  Length is O(log height(m)).
GenWord decompose(const Mat2Z& m, Reduction how = Reduction::kRightFloor);

/// Random word of the given length over {S, T, T^-1}.
GenWord random_word(std::mt19937_64& rng, std::size_t length);

/// Samples a matrix from random words of length <= max_length, rejecting
/// candidates above the height bound (and with c = 0 if requested).
Mat2Z sample_matrix(std::mt19937_64& rng, std::size_t max_length, const mpz_class& height_bound,
                    bool require_c_nonzero = false);

/// s(h,k) = sum_{i=1}^{k-1} ((i/k))((hi/k)); requires k >= 1, gcd(h,k) = 1.
mpq_class dedekind_sum(const mpz_class& h, const mpz_class& k);

/// The defining O(k) sum, for cross-checking dedekind_sum.
mpq_class dedekind_sum_direct(const mpz_class& h, const mpz_class& k);

/// Rademacher Phi: (a+d)/c - 12 sign(c) s(d,|c|) for c != 0, b/d for c = 0.
mpz_class rademacher_phi(const Mat2Z& m);

int sign(const mpz_class& x);

/// Uniform integer in [0, n) from the raw engine output (portable across
/// standard libraries, unlike std::uniform_int_distribution).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

}  // namespace wrt
