#include "wrt/sl2z.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace wrt {

int sign(const mpz_class& x) { return sgn(x); }

Mat2Z::Mat2Z(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1)
    throw std::invalid_argument("matrix " + to_string(*this) + " has determinant != 1");
}

mpz_class Mat2Z::height() const {
  return std::max({mpz_class(abs(a_)), mpz_class(abs(b_)), mpz_class(abs(c_)), mpz_class(abs(d_))});
}

Mat2Z operator*(const Mat2Z& x, const Mat2Z& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
          x.c_ * y.b_ + x.d_ * y.d_};
}

std::string to_string(const Mat2Z& m) {
  return m.a().get_str() + "," + m.b().get_str() + ";" + m.c().get_str() + "," + m.d().get_str();
}

Mat2Z parse_mat2z(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto semi = s.find(';');
  if (semi == std::string::npos || s.find(';', semi + 1) != std::string::npos)
    throw std::invalid_argument("matrix must have the form \"a,b;c,d\", got \"" + std::string(text) + "\"");
  auto split = [&](const std::string& row) {
    auto comma = row.find(',');
    if (comma == std::string::npos || row.find(',', comma + 1) != std::string::npos)
      throw std::invalid_argument("matrix row must have the form \"x,y\", got \"" + row + "\"");
    mpz_class x, y;
    if (x.set_str(row.substr(0, comma), 10) != 0 || y.set_str(row.substr(comma + 1), 10) != 0)
      throw std::invalid_argument("matrix entries must be integers, got \"" + row + "\"");
    return std::pair{x, y};
  };
  auto [a, b] = split(s.substr(0, semi));
  auto [c, d] = split(s.substr(semi + 1));
  return {a, b, c, d};
}

std::string to_string(const GenWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    if (w[i].kind == Token::Kind::S) os << 'S';
    else if (w[i].power == 1) os << 'T';
    else os << "T^" << w[i].power.get_str();
  }
  return os.str();
}

Mat2Z evaluate(const GenWord& w) {
  Mat2Z m = Mat2Z::identity();
  for (const auto& t : w) m = m * t.matrix();
  return m;
}

namespace {

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class nearest_div(const mpz_class& a, const mpz_class& b) {
  // floor(a/b + 1/2) = floor((2a + b) / 2b)
  return floor_div(2 * a + b, 2 * b);
}

// Word for an upper-triangular +-T^b.
GenWord triangular_word(const Mat2Z& m) {
  GenWord w;
  if (m.a() == 1) {
    if (m.b() != 0) w.push_back(Token::t(m.b()));
  } else {
    // (-1, b; 0, -1) = S^2 T^-b
    w.push_back(Token::s());
    w.push_back(Token::s());
    if (m.b() != 0) w.push_back(Token::t(-m.b()));
  }
  return w;
}

}  // namespace

GenWord decompose(const Mat2Z& m, Reduction how) {
  Mat2Z cur = m;
  if (how == Reduction::kRightFloor) {
    // cur = cur' S T^q with cur' = cur T^-q S^-1; the new c is -(d - q c).
    std::vector<mpz_class> quotients;
    while (cur.c() != 0) {
      mpz_class q = floor_div(cur.d(), cur.c());
      quotients.push_back(q);
      cur = cur * Mat2Z::T(-q) * Mat2Z::S().inverse();
    }
    GenWord w = triangular_word(cur);
    for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) {
      w.push_back(Token::s());
      if (*it != 0) w.push_back(Token::t(*it));
    }
    return w;
  }
  // cur = T^q S cur' with cur' = S^-1 T^-q cur; the new c is -(a - q c).
  GenWord w;
  while (cur.c() != 0) {
    mpz_class q = nearest_div(cur.a(), cur.c());
    if (q != 0) w.push_back(Token::t(q));
    w.push_back(Token::s());
    cur = Mat2Z::S().inverse() * Mat2Z::T(-q) * cur;
  }
  GenWord tail = triangular_word(cur);
  w.insert(w.end(), tail.begin(), tail.end());
  return w;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

GenWord random_word(std::mt19937_64& rng, std::size_t length) {
  GenWord w;
  w.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    switch (uniform_below(rng, 3)) {
      case 0: w.push_back(Token::s()); break;
      case 1: w.push_back(Token::t(1)); break;
      default: w.push_back(Token::t(-1)); break;
    }
  }
  return w;
}

Mat2Z sample_matrix(std::mt19937_64& rng, std::size_t max_length, const mpz_class& height_bound,
                    bool require_c_nonzero) {
  if (max_length == 0) throw std::invalid_argument("sample_matrix: max_length must be positive");
  for (;;) {
    std::size_t len = 1 + uniform_below(rng, max_length);
    Mat2Z m = evaluate(random_word(rng, len));
    if (m.height() > height_bound) continue;
    if (require_c_nonzero && m.c() == 0) continue;
    return m;
  }
}

mpq_class dedekind_sum(const mpz_class& h_in, const mpz_class& k_in) {
  if (k_in < 1) throw std::invalid_argument("dedekind_sum: k must be positive");
  if (gcd(h_in, k_in) != 1) throw std::invalid_argument("dedekind_sum: gcd(h, k) != 1");
  // Reciprocity: s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk)) / 12, with
  // s(h,k) depending only on h mod k.
  mpq_class acc = 0;
  int sgn_acc = 1;
  mpz_class h, k = k_in;
  mpz_fdiv_r(h.get_mpz_t(), h_in.get_mpz_t(), k.get_mpz_t());
  while (k > 1 && h != 0) {
    mpq_class hq(h), kq(k);
    acc += sgn_acc * (mpq_class(-1, 4) + (hq / kq + kq / hq + 1 / (hq * kq)) / 12);
    sgn_acc = -sgn_acc;
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), k.get_mpz_t(), h.get_mpz_t());
    k = h;
    h = r;
  }
  acc.canonicalize();
  return acc;
}

mpq_class dedekind_sum_direct(const mpz_class& h, const mpz_class& k) {
  if (k < 1) throw std::invalid_argument("dedekind_sum_direct: k must be positive");
  if (!k.fits_slong_p()) throw std::overflow_error("dedekind_sum_direct: k too large");
  // ((x)) for x = i/k with 0 < i < k is i/k - 1/2; ((hi/k)) uses hi mod k.
  mpq_class acc = 0;
  const long kk = k.get_si();
  mpz_class r;
  for (long i = 1; i < kk; ++i) {
    mpz_class hi = h * i;
    mpz_fdiv_r(r.get_mpz_t(), hi.get_mpz_t(), k.get_mpz_t());
    if (r == 0) continue;
    mpq_class a(i, kk), b(r, k);
    a.canonicalize();
    b.canonicalize();
    acc += (a - mpq_class(1, 2)) * (b - mpq_class(1, 2));
  }
  return acc;
}

mpz_class rademacher_phi(const Mat2Z& m) {
  // gmp arithmetic needs canonical operands, so fix the sign of c or d first
  auto ratio = [](const mpz_class& x, const mpz_class& y) {
    mpq_class q(x, y);
    q.canonicalize();
    return q;
  };
  mpq_class v;
  if (m.c() == 0) {
    v = ratio(m.b(), m.d());
  } else {
    v = ratio(m.a() + m.d(), m.c()) - 12 * sign(m.c()) * dedekind_sum(m.d(), abs(m.c()));
  }
  if (v.get_den() != 1)
    throw std::logic_error("rademacher_phi: non-integer value " + v.get_str() + " for " + to_string(m));
  return v.get_num();
}

}  // namespace wrt
