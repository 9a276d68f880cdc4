#include "wrt/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace wrt {

namespace nt {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return (a < 0 ? -a : a) / gcd(a, b) * (b < 0 ? -b : b);
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (auto q : prime_factors(n)) r = r / q * (q - 1);
  return r;
}

std::int64_t radical(std::int64_t n) {
  std::int64_t r = 1;
  for (auto q : prime_factors(n)) r *= q;
  return r;
}

}  // namespace nt

namespace {

using Poly = std::vector<mpz_class>;

// p * (x^d - 1)
Poly mul_xd_minus_one(const Poly& p, std::size_t d) {
  Poly out(p.size() + d);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + d] += p[i];
    out[i] -= p[i];
  }
  return out;
}

// p / (x^d - 1), exact
Poly div_xd_minus_one(const Poly& p, std::size_t d) {
  // q = p / (x^d - 1)  <=>  p = q x^d - q, solve from the top.
  std::size_t qn = p.size() - d;
  Poly q(qn);
  Poly rem = p;
  for (std::size_t i = p.size(); i-- > d;) {
    mpz_class c = rem[i];
    q[i - d] = c;
    rem[i] -= c;
    rem[i - d] += c;
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (rem[i] != 0) throw std::logic_error("cyclotomic polynomial division not exact");
  }
  return q;
}

int mobius(std::int64_t n) {
  int mu = 1;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      n /= q;
      if (n % q == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Phi_m for squarefree m via prod_{d|m} (x^d - 1)^mu(m/d).
Poly squarefree_cyclotomic(std::int64_t m) {
  std::vector<std::int64_t> divs;
  for (std::int64_t d = 1; d <= m; ++d)
    if (m % d == 0) divs.push_back(d);
  Poly p{1};
  for (auto d : divs)
    if (mobius(m / d) == 1) p = mul_xd_minus_one(p, static_cast<std::size_t>(d));
  for (auto d : divs)
    if (mobius(m / d) == -1) p = div_xd_minus_one(p, static_cast<std::size_t>(d));
  return p;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

CyclotomicField::CyclotomicField(std::int64_t n) : order_(n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  degree_ = static_cast<std::size_t>(nt::euler_phi(n));
  std::int64_t rad = nt::radical(n);
  std::size_t stretch = static_cast<std::size_t>(n / rad);
  Poly base = squarefree_cyclotomic(rad);
  poly_.assign(degree_ + 1, 0);
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (!base[i].fits_slong_p()) throw std::overflow_error("cyclotomic coefficient too large");
    poly_[i * stretch] = base[i].get_si();
  }
  for (std::size_t i = 0; i < degree_; ++i)
    if (poly_[i] != 0) tail_.push_back({i, poly_[i]});
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(std::int64_t n) {
  static std::map<std::int64_t, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(registry_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const CyclotomicField>(n);
  cache.emplace(n, f);
  return f;
}

void CyclotomicField::reduce(std::vector<mpz_class>& a) const {
  const std::size_t phi = degree_;
  if (a.size() > phi) {
    mpz_class t;
    for (std::size_t i = a.size(); i-- > phi;) {
      if (a[i] == 0) continue;
      const std::size_t base = i - phi;
      for (const auto& term : tail_) {
        t = a[i] * term.coeff;
        a[base + term.degree] -= t;
      }
      a[i] = 0;
    }
  }
  a.resize(phi);
}

// ---------------------------------------------------------------------------

CycNum::CycNum(std::int64_t n) : field_(CyclotomicField::get(n)), num_(field_->degree()), den_(1) {}

CycNum CycNum::from_raw(std::shared_ptr<const CyclotomicField> f, std::vector<mpz_class> num,
                        mpz_class den) {
  CycNum x;
  x.field_ = std::move(f);
  x.num_ = std::move(num);
  x.den_ = std::move(den);
  x.normalize();
  return x;
}

void CycNum::normalize() {
  if (den_ == 0) throw std::domain_error("zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

CycNum CycNum::from_rational(std::int64_t n, const mpq_class& q) {
  auto f = CyclotomicField::get(n);
  std::vector<mpz_class> num(f->degree());
  num[0] = q.get_num();
  return from_raw(std::move(f), std::move(num), q.get_den());
}

CycNum CycNum::root_of_unity(std::int64_t n, std::int64_t k) {
  auto f = CyclotomicField::get(n);
  std::size_t e = static_cast<std::size_t>(nt::mod(k, n));
  std::vector<mpz_class> num(std::max(e + 1, f->degree()));
  num[e] = 1;
  f->reduce(num);
  return from_raw(std::move(f), std::move(num), 1);
}

CycNum CycNum::from_exponents(std::int64_t n,
                              std::span<const std::pair<std::int64_t, mpz_class>> terms,
                              const mpz_class& den) {
  auto f = CyclotomicField::get(n);
  std::vector<mpz_class> num(static_cast<std::size_t>(n));
  for (const auto& [e, c] : terms) num[static_cast<std::size_t>(nt::mod(e, n))] += c;
  f->reduce(num);
  return from_raw(std::move(f), std::move(num), den);
}

CycNum CycNum::from_coords(std::int64_t n, std::span<const mpq_class> coords) {
  auto f = CyclotomicField::get(n);
  if (coords.size() > f->degree()) throw std::invalid_argument("too many coordinates for order");
  mpz_class den = 1;
  for (const auto& c : coords) den = lcm(den, mpz_class(c.get_den()));
  std::vector<mpz_class> num(f->degree());
  for (std::size_t i = 0; i < coords.size(); ++i)
    num[i] = coords[i].get_num() * (den / coords[i].get_den());
  return from_raw(std::move(f), std::move(num), den);
}

std::vector<mpq_class> CycNum::coords() const {
  std::vector<mpq_class> out(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out[i] = coord(i);
  return out;
}

mpq_class CycNum::coord(std::size_t i) const {
  mpq_class q(num_.at(i), den_);
  q.canonicalize();
  return q;
}

bool CycNum::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
}

bool CycNum::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return c == 0; });
}

bool CycNum::is_one() const { return den_ == 1 && num_[0] == 1 && is_rational(); }

std::size_t CycNum::support() const {
  return static_cast<std::size_t>(
      std::count_if(num_.begin(), num_.end(), [](const mpz_class& c) { return c != 0; }));
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

namespace {
void require_same_order(const CycNum& a, const CycNum& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("cyclotomic order mismatch: " + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()));
}
}  // namespace

CycNum& CycNum::operator+=(const CycNum& o) {
  require_same_order(*this, o);
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    mpz_class g = gcd(den_, o.den_);
    mpz_class sa = o.den_ / g;
    mpz_class sb = den_ / g;
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * sa + o.num_[i] * sb;
    den_ *= sa;
  }
  normalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum operator*(const CycNum& a, const CycNum& b) {
  require_same_order(a, b);
  const std::size_t n = a.num_.size();
  std::vector<std::size_t> ia, ib;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.num_[i] != 0) ia.push_back(i);
    if (b.num_[i] != 0) ib.push_back(i);
  }
  if (ia.empty() || ib.empty()) return CycNum(a.order());
  std::vector<mpz_class> prod(2 * n - 1);
  for (auto i : ia)
    for (auto j : ib) mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
  a.field_->reduce(prod);
  return CycNum::from_raw(a.field_, std::move(prod), a.den_ * b.den_);
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum& CycNum::operator*=(const mpq_class& q) {
  for (auto& c : num_) c *= q.get_num();
  den_ *= q.get_den();
  normalize();
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
  return a.order() == b.order() && a.den_ == b.den_ && a.num_ == b.num_;
}

CycNum CycNum::shifted(std::int64_t k) const {
  const std::int64_t n = order();
  const std::size_t e = static_cast<std::size_t>(nt::mod(k, n));
  if (e == 0) return *this;
  std::vector<mpz_class> v(num_.size() + e);
  for (std::size_t i = 0; i < num_.size(); ++i) v[i + e] = num_[i];
  // Fold exponents >= N back using zeta^N = 1 before reducing.
  if (v.size() > static_cast<std::size_t>(n)) {
    for (std::size_t i = static_cast<std::size_t>(n); i < v.size(); ++i) v[i - n] += v[i];
    v.resize(static_cast<std::size_t>(n));
  }
  field_->reduce(v);
  return from_raw(field_, std::move(v), den_);
}

CycNum CycNum::conj() const { return galois(*this, -1); }

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
  const std::size_t n = num_.size();
  // Solve M y = e_0 where column j of M holds the coordinates of num * zeta^j.
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
  CycNum col = from_raw(field_, num_, 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.num_[i];
    col = col.shifted(1);
  }
  m[0][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular multiplication matrix in cyclotomic inverse");
    std::swap(m[piv], m[c]);
    mpq_class inv = 1 / m[c][c];
    for (std::size_t k = c; k <= n; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<mpq_class> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = m[i][n] * den_;
  return from_coords(order(), y);
}

CycNum CycNum::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result = one(order());
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::size_t CycNum::hash() const {
  std::size_t h = std::hash<std::int64_t>{}(order());
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  mix(mpz_get_ui(den_.get_mpz_t()));
  for (const auto& c : num_) mix(mpz_get_ui(c.get_mpz_t()) ^ static_cast<std::size_t>(mpz_sgn(c.get_mpz_t()) + 1));
  return h;
}

// ---------------------------------------------------------------------------

CycNum sum_of_products(std::span<const CycNum* const> xs, std::span<const CycNum* const> ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("sum_of_products: operand lists must be nonempty and equal length");
  const std::int64_t order = xs[0]->order();
  const std::size_t n = xs[0]->degree();
  std::vector<mpz_class> acc(2 * n - 1);
  mpz_class den = 1;
  std::vector<std::size_t> ia, ib;
  mpz_class scale;
  for (std::size_t t = 0; t < xs.size(); ++t) {
    const CycNum& a = *xs[t];
    const CycNum& b = *ys[t];
    if (a.order() != order || b.order() != order)
      throw std::invalid_argument("sum_of_products: cyclotomic order mismatch");
    ia.clear();
    ib.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (a.numerators()[i] != 0) ia.push_back(i);
      if (b.numerators()[i] != 0) ib.push_back(i);
    }
    if (ia.empty() || ib.empty()) continue;
    mpz_class pd = a.denominator() * b.denominator();
    mpz_class l = lcm(den, pd);
    if (l != den) {
      scale = l / den;
      for (auto& c : acc)
        if (c != 0) c *= scale;
      den = l;
    }
    scale = den / pd;
    const bool unit = scale == 1;
    mpz_class t2;
    for (auto i : ia) {
      if (unit) {
        for (auto j : ib)
          mpz_addmul(acc[i + j].get_mpz_t(), a.numerators()[i].get_mpz_t(), b.numerators()[j].get_mpz_t());
      } else {
        t2 = a.numerators()[i] * scale;
        for (auto j : ib) mpz_addmul(acc[i + j].get_mpz_t(), t2.get_mpz_t(), b.numerators()[j].get_mpz_t());
      }
    }
  }
  auto f = CyclotomicField::get(order);
  f->reduce(acc);
  return CycNum::from_raw(std::move(f), std::move(acc), den);
}

CycNum times_monomials(const CycNum& x, std::span<const std::pair<std::int64_t, mpz_class>> terms) {
  const std::int64_t n = x.order();
  std::vector<mpz_class> acc(static_cast<std::size_t>(n));
  const auto& num = x.numerators();
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < num.size(); ++i)
    if (num[i] != 0) nz.push_back(i);
  // Merge repeated exponents first.
  std::map<std::int64_t, mpz_class> merged;
  for (const auto& [e, c] : terms) merged[nt::mod(e, n)] += c;
  for (const auto& [e, c] : merged) {
    if (c == 0) continue;
    for (auto i : nz) {
      std::size_t k = static_cast<std::size_t>((static_cast<std::int64_t>(i) + e) % n);
      mpz_addmul(acc[k].get_mpz_t(), num[i].get_mpz_t(), c.get_mpz_t());
    }
  }
  x.field().reduce(acc);
  return CycNum::from_raw(CyclotomicField::get(n), std::move(acc), x.denominator());
}

CycNum lift(const CycNum& x, std::int64_t m) {
  const std::int64_t n = x.order();
  if (m < 1 || m % n != 0)
    throw std::invalid_argument("lift: order " + std::to_string(n) + " does not divide " +
                                std::to_string(m));
  if (m == n) return x;
  const std::int64_t step = m / n;
  std::vector<std::pair<std::int64_t, mpz_class>> terms;
  const auto& num = x.numerators();
  for (std::size_t i = 0; i < num.size(); ++i)
    if (num[i] != 0) terms.emplace_back(static_cast<std::int64_t>(i) * step, num[i]);
  return CycNum::from_exponents(m, terms, x.denominator());
}

CycNum galois(const CycNum& x, std::int64_t k) {
  const std::int64_t n = x.order();
  if (nt::gcd(k, n) != 1)
    throw std::invalid_argument("galois: exponent " + std::to_string(k) + " not coprime to " +
                                std::to_string(n));
  std::vector<std::pair<std::int64_t, mpz_class>> terms;
  const auto& num = x.numerators();
  for (std::size_t i = 0; i < num.size(); ++i)
    if (num[i] != 0) terms.emplace_back(nt::mod(static_cast<std::int64_t>(i) * k, n), num[i]);
  return CycNum::from_exponents(n, terms, x.denominator());
}

namespace {

// Generators of {k in (Z/N)^* : k = 1 mod s}.
std::vector<std::int64_t> subfield_fixers(std::int64_t n, std::int64_t s) {
  static std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::int64_t>> cache;
  static std::mutex m;
  {
    std::lock_guard lock(m);
    auto it = cache.find({n, s});
    if (it != cache.end()) return it->second;
  }
  std::vector<char> in_group(static_cast<std::size_t>(n), 0);
  in_group[1 % n] = 1;
  std::vector<std::int64_t> members{1 % n};
  std::vector<std::int64_t> gens;
  for (std::int64_t k = 1; k < n; k += s) {
    if (nt::gcd(k, n) != 1 || in_group[static_cast<std::size_t>(k)]) continue;
    gens.push_back(k);
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::int64_t y = members[i] * k % n;
      if (!in_group[static_cast<std::size_t>(y)]) {
        in_group[static_cast<std::size_t>(y)] = 1;
        members.push_back(y);
      }
    }
  }
  std::lock_guard lock(m);
  cache.emplace(std::make_pair(n, s), gens);
  return gens;
}

}  // namespace

bool in_subfield(const CycNum& x, std::int64_t s) {
  const std::int64_t n = x.order();
  if (s < 1 || n % s != 0) throw std::invalid_argument("in_subfield: s must divide the order");
  if (x.is_rational()) return true;
  for (auto k : subfield_fixers(n, s))
    if (!(galois(x, k) == x)) return false;
  return true;
}

std::optional<CycNum> extract_subfield(const CycNum& x, std::int64_t s) {
  const std::int64_t n = x.order();
  if (s < 1 || n % s != 0) throw std::invalid_argument("extract_subfield: s must divide the order");
  if (s == n) return x;
  const std::int64_t step = n / s;
  const std::size_t ds = static_cast<std::size_t>(nt::euler_phi(s));
  const auto& num = x.numerators();

  std::vector<mpq_class> sol(ds);
  if (s % nt::radical(step) == 0) {
    // Lifts of zeta_s^i (i < phi(s)) are the monomials zeta_N^(i*step), all
    // below phi(N): read them off directly.
    for (std::size_t i = 0; i < num.size(); ++i) {
      if (num[i] == 0) continue;
      if (i % static_cast<std::size_t>(step) != 0) return std::nullopt;
      sol[i / static_cast<std::size_t>(step)] = mpq_class(num[i], x.denominator());
    }
    for (auto& q : sol) q.canonicalize();
  } else {
    // Incremental row echelon on coordinates: columns are lifted basis vectors.
    std::vector<CycNum> basis;
    basis.reserve(ds);
    for (std::size_t i = 0; i < ds; ++i) basis.push_back(lift(CycNum::root_of_unity(s, static_cast<std::int64_t>(i)), n));
    struct Row {
      std::vector<mpq_class> a;
      mpq_class rhs;
      std::size_t pivot;
    };
    std::vector<Row> rows;
    for (std::size_t r = 0; r < num.size() && rows.size() < ds; ++r) {
      Row row{std::vector<mpq_class>(ds), mpq_class(num[r], x.denominator()), 0};
      row.rhs.canonicalize();
      for (std::size_t i = 0; i < ds; ++i) row.a[i] = basis[i].numerators()[r];
      for (const auto& pr : rows) {
        if (row.a[pr.pivot] == 0) continue;
        mpq_class f = row.a[pr.pivot];
        for (std::size_t i = 0; i < ds; ++i) row.a[i] -= f * pr.a[i];
        row.rhs -= f * pr.rhs;
      }
      std::size_t piv = 0;
      while (piv < ds && row.a[piv] == 0) ++piv;
      if (piv == ds) {
        if (row.rhs != 0) return std::nullopt;
        continue;
      }
      mpq_class inv = 1 / row.a[piv];
      for (auto& v : row.a) v *= inv;
      row.rhs *= inv;
      row.pivot = piv;
      for (auto& pr : rows) {
        if (pr.a[piv] == 0) continue;
        mpq_class f = pr.a[piv];
        for (std::size_t i = 0; i < ds; ++i) pr.a[i] -= f * row.a[i];
        pr.rhs -= f * row.rhs;
      }
      rows.push_back(std::move(row));
    }
    if (rows.size() < ds) throw std::logic_error("extract_subfield: lifted basis is rank deficient");
    for (const auto& pr : rows) sol[pr.pivot] = pr.rhs;
  }
  CycNum y = CycNum::from_coords(s, sol);
  if (!(lift(y, n) == x)) return std::nullopt;
  return y;
}

mpz_class denominator_bound(const CycNum& x) { return x.denominator(); }

CycNum sqrt_integer(std::int64_t t) {
  if (t < 1) throw std::invalid_argument("sqrt_integer: t must be positive");
  const std::int64_t n = 4 * t;
  // (1 - i)/4 * sum_{j<4t} zeta_{4t}^{j^2}, with i = zeta_{4t}^t.
  std::vector<std::pair<std::int64_t, mpz_class>> terms;
  terms.reserve(static_cast<std::size_t>(2 * n));
  for (std::int64_t j = 0; j < n; ++j) {
    std::int64_t e = nt::mod(j * j, n);
    terms.emplace_back(e, 1);
    terms.emplace_back(e + t, -1);
  }
  return CycNum::from_exponents(n, terms, 4);
}

std::complex<double> embed_complex(const CycNum& x, std::int64_t k) {
  const std::int64_t n = x.order();
  if (nt::gcd(k, n) != 1) throw std::invalid_argument("embed_complex: k not coprime to order");
  const auto& num = x.numerators();
  const double den = x.denominator().get_d();
  std::complex<long double> acc = 0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    long double ang = 2.0L * std::numbers::pi_v<long double> *
                      static_cast<long double>(nt::mod(static_cast<std::int64_t>(i) * k, n)) /
                      static_cast<long double>(n);
    acc += static_cast<long double>(num[i].get_d()) * std::polar(1.0L, ang);
  }
  return {static_cast<double>(acc.real() / den), static_cast<double>(acc.imag() / den)};
}

std::optional<std::int64_t> root_of_unity_exponent(const CycNum& x) {
  // Roots of unity in Q(zeta_N) are the powers of zeta_M with M = lcm(2, N).
  const std::int64_t n = x.order();
  const std::int64_t m = nt::lcm(2, n);
  auto z = embed_complex(x);
  if (std::abs(std::abs(z) - 1.0) > 1e-6) return std::nullopt;
  double frac = std::arg(z) / (2.0 * std::numbers::pi);
  std::int64_t j = nt::mod(static_cast<std::int64_t>(std::llround(frac * static_cast<double>(m))), m);
  CycNum cand = (m == n) ? CycNum::root_of_unity(n, j)
                         : ((j % 2 == 0) ? CycNum::root_of_unity(n, j / 2)
                                         : -CycNum::root_of_unity(n, (j + n) / 2));
  if (cand == x) return j;
  return std::nullopt;
}

std::optional<std::int64_t> root_of_unity_order(const CycNum& x) {
  auto j = root_of_unity_exponent(x);
  if (!j) return std::nullopt;
  const std::int64_t m = nt::lcm(2, x.order());
  return m / nt::gcd(*j, m);
}

std::string to_string(const CycNum& x) {
  std::ostringstream os;
  bool first = true;
  const auto& num = x.numerators();
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    if (!first) os << (num[i] > 0 ? " + " : " - ");
    else if (num[i] < 0) os << "-";
    mpz_class a = abs(num[i]);
    if (i == 0 || a != 1) os << a;
    if (i > 0) os << (i == 0 || a != 1 ? "*" : "") << "z" << x.order() << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << "0";
  if (x.denominator() != 1) return "(" + os.str() + ")/" + x.denominator().get_str();
  return os.str();
}

}  // namespace wrt
