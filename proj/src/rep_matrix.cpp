#include "wrt/rep_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace wrt {

std::string to_string(Basis b) { return b == Basis::kColored ? "colored" : "signed"; }

RepMatrix::RepMatrix(int p, Basis basis, std::int64_t order, std::size_t dim)
    : p_(p), basis_(basis), order_(order), dim_(dim), entries_(dim * dim, CycNum(order)) {}

RepMatrix RepMatrix::identity(int p, Basis basis, std::int64_t order, std::size_t dim) {
  RepMatrix m(p, basis, order, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = CycNum::one(order);
  return m;
}

RepMatrix RepMatrix::diagonal(int p, Basis basis, std::vector<CycNum> diag) {
  if (diag.empty()) throw std::invalid_argument("diagonal matrix needs at least one entry");
  RepMatrix m(p, basis, diag[0].order(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = std::move(diag[i]);
  return m;
}

RepMatrix operator*(const RepMatrix& x, const RepMatrix& y) {
  if (x.dim_ != y.dim_ || x.order_ != y.order_)
    throw std::invalid_argument("RepMatrix product: shape or order mismatch");
  const std::size_t n = x.dim_;
  RepMatrix out(x.p_, x.basis_, x.order_, n);
  std::vector<const CycNum*> xs, ys;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      xs.clear();
      ys.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (x(i, k).is_zero() || y(k, j).is_zero()) continue;
        xs.push_back(&x(i, k));
        ys.push_back(&y(k, j));
      }
      if (!xs.empty()) out(i, j) = sum_of_products(xs, ys);
    }
  }
  return out;
}

bool operator==(const RepMatrix& x, const RepMatrix& y) {
  return x.dim_ == y.dim_ && x.order_ == y.order_ && x.entries_ == y.entries_;
}

RepMatrix RepMatrix::scaled(const CycNum& s) const {
  RepMatrix out = *this;
  for (auto& e : out.entries_)
    if (!e.is_zero()) e = e * s;
  return out;
}

RepMatrix RepMatrix::scaled(const mpq_class& s) const {
  RepMatrix out = *this;
  for (auto& e : out.entries_) e *= s;
  return out;
}

RepMatrix RepMatrix::conj_transpose() const {
  RepMatrix out(p_, basis_, order_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j).conj();
  return out;
}

RepMatrix RepMatrix::transpose() const {
  RepMatrix out(p_, basis_, order_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RepMatrix RepMatrix::lifted(std::int64_t m) const {
  RepMatrix out(p_, basis_, m, dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = lift(entries_[i], m);
  return out;
}

RepMatrix RepMatrix::pow(std::uint64_t k) const {
  RepMatrix result = identity(p_, basis_, order_, dim_);
  RepMatrix base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool RepMatrix::is_identity() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const CycNum& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  return true;
}

bool RepMatrix::is_symmetric() const { return *this == transpose(); }

std::optional<CycNum> RepMatrix::scalar_value() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j) {
        if (!((*this)(i, i) == (*this)(0, 0))) return std::nullopt;
      } else if (!(*this)(i, j).is_zero()) {
        return std::nullopt;
      }
    }
  return (*this)(0, 0);
}

std::size_t RepMatrix::hash() const {
  std::size_t h = dim_;
  for (const auto& e : entries_) h = h * 1000003u ^ e.hash();
  return h;
}

std::string to_string(const RepMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << "[ ";
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? " | " : "") << to_string(m(i, j));
    os << " ]\n";
  }
  return os.str();
}

}  // namespace wrt
