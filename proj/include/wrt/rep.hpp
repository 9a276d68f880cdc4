#pragma once

// rho_p on weighted mapping classes, evaluated through generator words, plus
// the order, denominator and closure computations built on top of it.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wrt/extension.hpp"
#include "wrt/rep_matrix.hpp"
#include "wrt/sl2z.hpp"
#include "wrt/theory.hpp"

namespace wrt {

/// Product of the generator matrices of a word together with the weight w of
/// the composed weighted class; the product equals rho(evaluate(word), w).
struct WordValue {
  RepMatrix product;
  mpz_class weight;
};

WordValue evaluate_word(const Theory& th, const GenWord& word, Basis basis = Basis::kColored);

/// rho_p(f, n).
RepMatrix evaluate(const Theory& th, const Mat2Z& f, const mpz_class& n = 0, Basis basis = Basis::kColored,
                   Reduction how = Reduction::kRightFloor);

/// rho_p of a weighted class.
inline RepMatrix evaluate(const Theory& th, const WeightedClass& w, Basis basis = Basis::kColored) {
  return evaluate(th, w.f, w.n, basis);
}

struct DenominatorProfile {
  mpz_class bound = 1;             ///< lcm of the entry bounds
  std::vector<mpz_class> entries;  ///< row-major per-entry bounds
  bool divides(const mpz_class& m) const { return mpz_divisible_p(m.get_mpz_t(), bound.get_mpz_t()) != 0; }
};

DenominatorProfile denominator_profile(const RepMatrix& m);

/// Least k <= cap with m^k = Id.  The candidate k comes from the floating
/// spectrum; it is certified and minimized with exact powers, and an exact
/// sequential search takes over if the candidate does not certify.
std::optional<std::uint64_t> matrix_order(const RepMatrix& m, std::uint64_t cap);

struct ProjectiveOrder {
  std::uint64_t order;
  CycNum scalar;  ///< m^order = scalar * Id
};

/// Least k <= cap with m^k scalar.
std::optional<ProjectiveOrder> projective_order(const RepMatrix& m, std::uint64_t cap);

/// Monodromy of the figure-eight knot fibration.
inline Mat2Z figure_eight() { return {2, 1, 1, 1}; }

/// Published periods for p = 3..20.
std::optional<std::uint64_t> listed_period(int p);

struct Fig8Row {
  int p = 0;
  std::optional<std::uint64_t> order;
  std::optional<std::uint64_t> projective;
  std::optional<CycNum> scalar;              ///< R^projective
  std::optional<std::int64_t> scalar_order;  ///< multiplicative order of scalar
  std::optional<std::uint64_t> listed;

  bool exact_match = false;
  /// Fallback: a root of unity lambda = zeta_M^lambda_exp (M = lcm(2, N))
  /// with ord(lambda R) = listed; the residual scalar is (lambda R)^projective.
  bool fallback_match = false;
  std::optional<std::int64_t> lambda_exp;
  std::int64_t lambda_modulus = 0;
  std::optional<std::int64_t> residual_order;

  bool pass() const { return exact_match || fallback_match; }
};

Fig8Row fig8_row(int p, std::uint64_t cap);
std::vector<Fig8Row> fig8_periods(int p_min, int p_max, std::uint64_t cap);

struct ClosureResult {
  std::uint64_t order = 0;
  std::uint64_t center = 0;                               ///< scalar elements
  std::map<std::uint64_t, std::uint64_t> element_orders;  ///< order -> count
};

/// Breadth-first closure of {rho(S,0), rho(T,0)}.  Returns nullopt when more
/// than cap distinct elements appear.
std::optional<ClosureResult> group_closure(const Theory& th, std::uint64_t cap, Basis basis = Basis::kColored);

}  // namespace wrt
