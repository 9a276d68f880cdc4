#include "wrt/serialize.hpp"

#include <cmath>
#include <stdexcept>

namespace wrt {

using nlohmann::json;

json preview(const CycNum& x) {
  // rounding noise below 1e-15 is shown as 0 so previews of real numbers read as real
  auto clean = [](double v) { return std::abs(v) < 1e-15 ? 0.0 : v; };
  auto z = embed_complex(x);
  return {clean(z.real()), clean(z.imag())};
}

json to_json(const CycNum& x) {
  json coords = json::array();
  for (const auto& q : x.coords()) coords.push_back({q.get_num().get_str(), q.get_den().get_str()});
  return {{"order", x.order()}, {"coords", std::move(coords)}};
}

json to_json_with_preview(const CycNum& x) {
  json j = to_json(x);
  j["approx"] = preview(x);
  return j;
}

CycNum cycnum_from_json(const json& j) {
  try {
    const std::int64_t n = j.at("order").get<std::int64_t>();
    if (n < 1) throw std::invalid_argument("order must be positive");
    std::vector<mpq_class> coords;
    for (const auto& pair : j.at("coords")) {
      if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("coordinate must be [num, den]");
      mpz_class num(pair[0].get<std::string>()), den(pair[1].get<std::string>());
      if (den == 0) throw std::invalid_argument("zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      coords.push_back(q);
    }
    return CycNum::from_coords(n, coords);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed cyclotomic number: ") + e.what());
  }
}

json to_json(const RepMatrix& m, bool preview) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(preview ? to_json_with_preview(m(i, j)) : to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"p", m.level()},       {"basis", to_string(m.basis())}, {"order", m.order()},
          {"dim", m.dim()},       {"entries", std::move(rows)}};
}

RepMatrix repmatrix_from_json(const json& j) {
  try {
    const std::string b = j.at("basis").get<std::string>();
    if (b != "colored" && b != "signed") throw std::invalid_argument("unknown basis " + b);
    const std::size_t dim = j.at("dim").get<std::size_t>();
    RepMatrix m(j.at("p").get<int>(), b == "colored" ? Basis::kColored : Basis::kSigned,
                j.at("order").get<std::int64_t>(), dim);
    const auto& rows = j.at("entries");
    if (rows.size() != dim) throw std::invalid_argument("row count does not match dim");
    for (std::size_t i = 0; i < dim; ++i) {
      if (rows[i].size() != dim) throw std::invalid_argument("column count does not match dim");
      for (std::size_t k = 0; k < dim; ++k) {
        m(i, k) = cycnum_from_json(rows[i][k]);
        if (m(i, k).order() != m.order()) throw std::invalid_argument("entry order differs from matrix order");
      }
    }
    return m;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed matrix: ") + e.what());
  }
}

json to_json(const GenWord& w) {
  json out = json::array();
  for (const Token& t : w) out.push_back(t.kind == Token::Kind::S ? std::string("S") : "T^" + t.power.get_str());
  return out;
}

}  // namespace wrt
