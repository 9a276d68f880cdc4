#pragma once

// Level data for V_p of the torus: colors, A_p, u_p, eta_p, quantum integers,
// and the generator matrices rho_p(S, 0), rho_p(T, 0).
//
// Everything lives in the host field Q(zeta_N), N = lcm(8, 4p).  For p = 2r
// the elements are realized through the standard embedding: A = -alpha with
// alpha = zeta_2p and u = zeta_8^3 alpha^-3.  For odd p, A = zeta_2p.  In both
// cases u = zeta_8^e zeta_2p^-3 with e in [0, 8) the unique exponent for which
// u^2 = A^(-6 - p(p+1)/2) holds and eta is a positive real number.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "wrt/cyclotomic.hpp"
#include "wrt/rep_matrix.hpp"

namespace wrt {

struct Theory {
  int p = 0;
  bool even = false;
  int r = 0;                ///< p / 2 for even p, 0 otherwise
  std::vector<int> colors;  ///< p-colors, the index set of the colored basis
  std::int64_t order = 0;   ///< host cyclotomic order N
  std::int64_t s = 0;       ///< order of the target subring Z[zeta_s] (even p), else 0
  int u_exponent = 0;       ///< e in u = zeta_8^e zeta_2p^-3

  std::int64_t a_exp = 0;  ///< A = zeta_N^a_exp
  std::int64_t u_exp = 0;  ///< u = zeta_N^u_exp
  CycNum A, u, eta, alpha;

  std::size_t dim() const { return colors.size(); }
};

/// Builds and self-validates the level-p data.  Throws std::invalid_argument
/// for p < 3 and std::logic_error if the u^2 or eta^2 identities fail.
Theory make_theory(int p);

/// u^2 == A^(-6 - p(p+1)/2), exactly.
bool u_square_holds(const Theory& th);
/// eta^2 == -(A^2 - A^-2)^2 / p, exactly.
bool eta_square_holds(const Theory& th);
/// eta == -i (alpha^2 - alpha^-2) / sqrt(2r), exactly; even p only.
bool eta_embedding_holds(const Theory& th);

/// The quadratic Gauss sum G_p(A) = 1/2 sum_{m=1}^{2p} (-A)^(-m^2).
CycNum gauss_sum(const Theory& th);

/// [n] = (A^2n - A^-2n) / (A^2 - A^-2), evaluated as the finite geometric sum.
CycNum quantum_integer(const Theory& th, std::int64_t n);

/// u^k.
CycNum u_power(const Theory& th, const mpz_class& k);

std::size_t basis_dim(const Theory& th, Basis basis);

/// Exponents e_l with rho(T, 0) = diag(zeta_N^e_l).
std::vector<std::int64_t> t_exponents(const Theory& th, Basis basis);

RepMatrix t_matrix(const Theory& th, Basis basis);
/// rho(T, 0)^k for any integer k.
RepMatrix t_power(const Theory& th, Basis basis, const mpz_class& k);
RepMatrix s_matrix(const Theory& th, Basis basis);

}  // namespace wrt
