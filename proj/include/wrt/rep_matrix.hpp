#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wrt/cyclotomic.hpp"

namespace wrt {

/// Basis of V_p(torus).  kColored is {b_l} indexed by p-colors; kSigned is
/// {(-1)^(l-1) b_(l-1) : 1 <= l <= r-1}, defined only for p = 2r.
enum class Basis { kColored, kSigned };

std::string to_string(Basis b);

/// Square matrix of cyclotomic numbers sharing one host order, tagged with
/// its level and basis.
class RepMatrix {
public:
  RepMatrix(int p, Basis basis, std::int64_t order, std::size_t dim);

  static RepMatrix identity(int p, Basis basis, std::int64_t order, std::size_t dim);
  static RepMatrix diagonal(int p, Basis basis, std::vector<CycNum> diag);

  int level() const { return p_; }
  Basis basis() const { return basis_; }
  std::int64_t order() const { return order_; }
  std::size_t dim() const { return dim_; }

  const CycNum& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  CycNum& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const std::vector<CycNum>& entries() const { return entries_; }

  friend RepMatrix operator*(const RepMatrix& x, const RepMatrix& y);
  friend bool operator==(const RepMatrix& x, const RepMatrix& y);

  RepMatrix scaled(const CycNum& s) const;
  RepMatrix scaled(const mpq_class& s) const;
  RepMatrix conj_transpose() const;
  RepMatrix transpose() const;
  /// Re-expresses every entry at order m.
  RepMatrix lifted(std::int64_t m) const;
  RepMatrix pow(std::uint64_t k) const;

  bool is_identity() const;
  bool is_symmetric() const;
  /// If the matrix is c * Id, returns c.
  std::optional<CycNum> scalar_value() const;

  std::size_t hash() const;

private:
  int p_;
  Basis basis_;
  std::int64_t order_;
  std::size_t dim_;
  std::vector<CycNum> entries_;
};

std::string to_string(const RepMatrix& m);

struct RepMatrixHash {
  std::size_t operator()(const RepMatrix& m) const { return m.hash(); }
};

}  // namespace wrt
