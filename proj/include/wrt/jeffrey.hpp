#pragma once

// Jeffrey's closed formula for R_p(U), p = 2r, indices j, l in {1, ..., r-1}:
//
//   R(U)_{j,l} = -i zeta_8^-Phi(U) sign(c) / sqrt(p|c|) * zeta_{4rc}^(d l^2)
//                * sum_{gamma mod 2r|c|, gamma = j mod 2r}
//                    zeta_{4rc}^(a gamma^2) (zeta_{2rc}^(gamma l) - zeta_{2rc}^(-gamma l))
//
// with zeta_{-t} = zeta_t^-1.  Entries live at order 8r|c|.

#include <gmpxx.h>

#include <cstdint>
#include <optional>

#include "wrt/rep_matrix.hpp"
#include "wrt/sl2z.hpp"
#include "wrt/theory.hpp"

namespace wrt {

/// Host order 8r|c| of the closed formula (c != 0).
std::int64_t jeffrey_order(int p, const Mat2Z& u);

/// The displayed formula; requires even p and c != 0.
RepMatrix jeffrey_matrix(int p, const Mat2Z& u);

/// R(T)^k = diag(zeta_8^-k alpha^(k l^2)) at order 8r, i.e. (alpha zeta_8^-1 T-hat)^k.
RepMatrix jeffrey_t_power(int p, const mpz_class& k);

/// jeffrey_matrix when c != 0; otherwise U = +-T^b is routed through
/// jeffrey_t_power (and R(S)^2 for the minus sign).
RepMatrix jeffrey(int p, const Mat2Z& u);

struct Comparison {
  bool match = false;
  std::int64_t order = 0;               ///< common order of both matrices
  std::optional<CycNum> scalar;         ///< lambda with jeffrey = lambda * word
  std::optional<std::int64_t> exponent; ///< lambda = zeta_order^exponent
  /// lambda == (alpha zeta_8^-1)^t u^w, t the net T exponent of the word and
  /// w its weight.  Observed, not required.
  bool closed_form = false;
};

/// Compares jeffrey(p, u) with the signed-basis word evaluation rho_p(u, 0).
Comparison compare(const Theory& th, const Mat2Z& u);

/// Integrality ladder for p R(U):
///   c side: p c R(U) integral with entries in Q(zeta_{s|c|});
///   a side: p a R(S) R(c,d;-a,-b) likewise in Q(zeta_{s|a|}), and equal to p a R(U);
///   combined: p R(U) integral with entries in Q(zeta_s).
struct Ladder {
  bool c_side = false;
  bool a_side = false;
  bool a_side_skipped = false;  ///< a = 0
  bool factorization = false;   ///< R(S) R(U') == R(U)
  bool combined = false;
  bool pass() const { return c_side && (a_side_skipped || (a_side && factorization)) && combined; }
};

Ladder integrality_ladder(const Theory& th, const Mat2Z& u);

/// True iff every entry of x is integral and lies in Q(zeta_s).
bool integral_in_subfield(const RepMatrix& x, std::int64_t s);

}  // namespace wrt
