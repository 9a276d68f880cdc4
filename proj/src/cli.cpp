#include "wrt/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "wrt/extension.hpp"
#include "wrt/jeffrey.hpp"
#include "wrt/rep.hpp"
#include "wrt/serialize.hpp"
#include "wrt/theory.hpp"

namespace wrt {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Report {
  json meta = json::object();
  json results = json::array();
  std::vector<std::string> columns;
  std::vector<json> table;
  bool ok = true;
};

json level_meta(const Theory& th) {
  return {{"p", th.p},
          {"N", th.order},
          {"s", th.even ? json(th.s) : json(nullptr)},
          {"u_exponent", th.u_exponent},
          {"A_exponent", th.a_exp},
          {"dim", th.dim()}};
}

json conventions() {
  return {{"sigma", "signature of omega(x1, y2) on W; sigma((1,0),(0,1),(1,1)) = +1"},
          {"lagrangian", "meridian (1,0)"},
          {"u", "u = zeta_8^e zeta_2p^-3, e unique with u^2 = A^(-6-p(p+1)/2) and eta > 0"},
          {"A", "even p: -zeta_2p, odd p: zeta_2p"},
          {"ring", "denominators tested in Z[zeta_N], N = lcm(8, 4p), which contains Z[lambda_p]"}};
}

Theory level(const RunConfig& c) {
  if (c.p == 0) throw UsageError("--p is required for " + c.command);
  if (c.p < 3) throw UsageError("level p must be at least 3 (got " + std::to_string(c.p) + ")");
  return make_theory(c.p);
}

Theory even_level(const RunConfig& c) {
  Theory th = level(c);
  if (!th.even) throw UsageError(c.command + " is defined only for even p (got " + std::to_string(c.p) + ")");
  return th;
}

Basis basis_of(const RunConfig& c, const Theory& th) {
  if (c.basis == "colored") return Basis::kColored;
  if (c.basis == "signed") {
    if (!th.even) throw UsageError("the signed basis exists only for even p");
    return Basis::kSigned;
  }
  throw UsageError("unknown basis '" + c.basis + "' (expected colored or signed)");
}

Mat2Z matrix_of(const RunConfig& c) {
  if (c.matrix.empty()) throw UsageError("--matrix \"a,b;c,d\" is required for " + c.command);
  try {
    return parse_mat2z(c.matrix);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

mpz_class integer_of(const std::string& text, const char* what) {
  mpz_class v;
  if (text.empty() || v.set_str(text, 10) != 0) throw UsageError(std::string("malformed integer for ") + what + ": '" + text + "'");
  return v;
}

json opt(const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); }
json opt(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

void add_matrix_rows(Report& r, const std::string& name, const RepMatrix& m) {
  r.columns = {"name", "i", "j", "exact", "re", "im"};
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      json z = preview(m(i, j));
      r.table.push_back({{"name", name}, {"i", i}, {"j", j}, {"exact", to_string(m(i, j))}, {"re", z[0]}, {"im", z[1]}});
    }
}

bool unitary(const RepMatrix& m) { return (m * m.conj_transpose()).is_identity(); }

std::mt19937_64 rng_of(const RunConfig& c) { return std::mt19937_64(c.seed); }

// --- commands -------------------------------------------------------------

Report cmd_stmat(const RunConfig& c) {
  Theory th = level(c);
  Basis b = basis_of(c, th);
  Report r;
  r.meta["levels"] = {level_meta(th)};
  r.meta["basis"] = to_string(b);
  RepMatrix s = s_matrix(th, b), t = t_matrix(th, b);
  r.results.push_back({{"name", "S"}, {"matrix", to_json(s, true)}});
  r.results.push_back({{"name", "T"}, {"matrix", to_json(t, true)}});
  add_matrix_rows(r, "S", s);
  add_matrix_rows(r, "T", t);
  r.ok = unitary(s) && unitary(t) && s.is_symmetric();
  return r;
}

Report cmd_rho(const RunConfig& c) {
  Theory th = level(c);
  Basis b = basis_of(c, th);
  Mat2Z f = matrix_of(c);
  mpz_class n = integer_of(c.weight, "--weight");
  GenWord word = decompose(f);
  WordValue v = evaluate_word(th, word, b);
  RepMatrix m = evaluate(th, f, n, b);
  Report r;
  r.meta["levels"] = {level_meta(th)};
  r.meta["basis"] = to_string(b);
  const bool iso = unitary(m);
  r.results.push_back({{"f", to_string(f)},
                       {"weight", n.get_str()},
                       {"word", to_json(word)},
                       {"word_weight", v.weight.get_str()},
                       {"isometry", iso},
                       {"denominator_bound", denominator_profile(m).bound.get_str()},
                       {"rho", to_json(m, true)}});
  add_matrix_rows(r, "rho", m);
  r.ok = iso;
  return r;
}

Report cmd_order(const RunConfig& c) {
  Theory th = level(c);
  Basis b = basis_of(c, th);
  Mat2Z f = matrix_of(c);
  mpz_class n = integer_of(c.weight, "--weight");
  RepMatrix m = evaluate(th, f, n, b);
  auto k = matrix_order(m, c.order_cap);
  auto pk = projective_order(m, c.order_cap);
  Report r;
  r.meta["levels"] = {level_meta(th)};
  r.meta["order_cap"] = c.order_cap;
  json row = {{"f", to_string(f)}, {"weight", n.get_str()}, {"order", opt(k)}, {"projective_order", nullptr},
              {"scalar_order", nullptr}};
  json result = row;
  if (pk) {
    auto so = root_of_unity_order(pk->scalar);
    row["projective_order"] = pk->order;
    row["scalar_order"] = opt(so);
    result = row;
    result["scalar"] = to_json_with_preview(pk->scalar);
    // group theory: P | ord and ord = P * ord(scalar)
    if (k) r.ok = so && *k % pk->order == 0 && *k == pk->order * static_cast<std::uint64_t>(*so);
  }
  r.results.push_back(result);
  r.columns = {"f", "weight", "order", "projective_order", "scalar_order"};
  r.table.push_back(row);
  return r;
}

Report cmd_fig8(const RunConfig& c) {
  if (c.p_min < 3 || c.p_max < c.p_min) throw UsageError("need 3 <= --pmin <= --pmax");
  Report r;
  r.meta["levels"] = json::array();
  r.meta["order_cap"] = c.order_cap;
  r.meta["monodromy"] = to_string(figure_eight());
  r.meta["weight"] = 0;
  r.columns = {"p", "listed", "order", "projective_order", "scalar_order", "mode", "lambda_exp", "lambda_modulus",
               "residual_order"};
  for (const Fig8Row& row : fig8_periods(c.p_min, c.p_max, c.order_cap)) {
    r.meta["levels"].push_back(level_meta(make_theory(row.p)));
    std::string mode = !row.listed ? "unlisted" : row.exact_match ? "exact" : row.fallback_match ? "projective" : "fail";
    json t = {{"p", row.p},
              {"listed", opt(row.listed)},
              {"order", opt(row.order)},
              {"projective_order", opt(row.projective)},
              {"scalar_order", opt(row.scalar_order)},
              {"mode", mode},
              {"lambda_exp", opt(row.lambda_exp)},
              {"lambda_modulus", row.lambda_modulus},
              {"residual_order", opt(row.residual_order)}};
    r.table.push_back(t);
    if (row.scalar) t["scalar"] = to_json_with_preview(*row.scalar);
    r.results.push_back(t);
    if (row.listed && !row.pass()) r.ok = false;
  }
  return r;
}

Report cmd_denominators(const RunConfig& c) {
  Theory th = level(c);
  Basis b = basis_of(c, th);
  mpz_class height = integer_of(c.height, "--height");
  if (height < 1) throw UsageError("--height must be positive");
  auto rng = rng_of(c);
  Report r;
  r.meta["levels"] = {level_meta(th)};
  r.meta["samples"] = c.samples;
  r.meta["height"] = height.get_str();
  r.columns = {"index", "f", "bound", "divides_p", "in_subfield_s"};
  for (std::size_t i = 0; i < c.samples; ++i) {
    Mat2Z f = sample_matrix(rng, c.word_length, height);
    RepMatrix m = evaluate(th, f, 0, b);
    DenominatorProfile prof = denominator_profile(m);
    const bool div = prof.divides(th.p);
    json sub = nullptr;
    bool sub_ok = true;
    if (th.even) {
      sub_ok = std::all_of(m.entries().begin(), m.entries().end(), [&](const CycNum& e) { return in_subfield(e, th.s); });
      sub = sub_ok;
    }
    r.ok = r.ok && div && sub_ok;
    json row = {{"index", i}, {"f", to_string(f)}, {"bound", prof.bound.get_str()}, {"divides_p", div}, {"in_subfield_s", sub}};
    r.table.push_back(row);
    r.results.push_back(row);
  }
  return r;
}

Report cmd_jeffrey(const RunConfig& c) {
  Theory th = even_level(c);
  Mat2Z u = matrix_of(c);
  RepMatrix m = jeffrey(th.p, u);
  Report r;
  r.meta["levels"] = {level_meta(th)};
  r.meta["basis"] = "signed";
  const bool iso = unitary(m);
  r.results.push_back({{"U", to_string(u)},
                       {"phi", rademacher_phi(u).get_str()},
                       {"order", m.order()},
                       {"isometry", iso},
                       {"R", to_json(m, true)}});
  add_matrix_rows(r, "R", m);
  r.ok = iso;
  return r;
}

Report cmd_compare(const RunConfig& c) {
  Theory th = even_level(c);
  std::vector<Mat2Z> targets;
  if (!c.matrix.empty()) {
    targets.push_back(matrix_of(c));
    if (targets[0].c() == 0) throw UsageError("compare needs c != 0");
  } else {
    mpz_class height = integer_of(c.height, "--height");
    if (height < 1) throw UsageError("--height must be positive");
    auto rng = rng_of(c);
    for (std::size_t i = 0; i < c.samples; ++i) targets.push_back(sample_matrix(rng, c.word_length, height, true));
  }
  Report r;
  r.meta["levels"] = {level_meta(th)};
  r.columns = {"index",  "U",      "match",         "lambda_exp", "lambda_modulus", "closed_form",
               "c_side", "a_side", "factorization", "combined"};
  for (std::size_t i = 0; i < targets.size(); ++i) {
    Comparison cmp = compare(th, targets[i]);
    Ladder lad = integrality_ladder(th, targets[i]);
    json row = {{"index", i},
                {"U", to_string(targets[i])},
                {"match", cmp.match},
                {"lambda_exp", opt(cmp.exponent)},
                {"lambda_modulus", cmp.order},
                {"closed_form", cmp.closed_form},
                {"c_side", lad.c_side},
                {"a_side", lad.a_side_skipped ? json("skipped") : json(lad.a_side)},
                {"factorization", lad.a_side_skipped ? json("skipped") : json(lad.factorization)},
                {"combined", lad.combined}};
    r.table.push_back(row);
    if (cmp.scalar) row["lambda"] = to_json_with_preview(*cmp.scalar);
    r.results.push_back(row);
    r.ok = r.ok && cmp.match && lad.pass();
  }
  return r;
}

Report cmd_image(const RunConfig& c) {
  Theory th = level(c);
  Basis b = basis_of(c, th);
  auto g = group_closure(th, c.closure_cap, b);
  Report r;
  r.meta["levels"] = {level_meta(th)};
  r.meta["closure_cap"] = c.closure_cap;
  json census = json::array();  // [element order, count], ascending
  if (g)
    for (auto [k, n] : g->element_orders) census.push_back({k, n});
  json row = {{"p", th.p},
              {"terminated", g.has_value()},
              {"order", g ? json(g->order) : json(nullptr)},
              {"center", g ? json(g->center) : json(nullptr)},
              {"element_orders", census}};
  r.columns = {"p", "terminated", "order", "center", "element_orders"};
  r.table.push_back(row);
  r.results.push_back(row);
  return r;
}

Report cmd_selfcheck(const RunConfig& c) {
  if (c.p_min < 3 || c.p_max < c.p_min) throw UsageError("need 3 <= --pmin <= --pmax");
  Report r;
  r.meta["levels"] = json::array();
  r.columns = {"check", "cases", "failures"};
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> tally;  // name -> (cases, failures)
  std::vector<std::string> order;
  auto record = [&](const std::string& name, bool pass) {
    if (!tally.count(name)) order.push_back(name);
    auto& t = tally[name];
    ++t.first;
    if (!pass) ++t.second;
  };
  auto rng = rng_of(c);

  for (int p = c.p_min; p <= c.p_max; ++p) {
    Theory th;
    try {
      th = make_theory(p);
    } catch (const std::logic_error&) {
      record("theory", false);
      continue;
    }
    r.meta["levels"].push_back(level_meta(th));
    record("u_square", u_square_holds(th));
    record("eta_square", eta_square_holds(th));
    if (th.even) record("eta_embedding", eta_embedding_holds(th));
    RepMatrix s = s_matrix(th, Basis::kColored), t = t_matrix(th, Basis::kColored);
    RepMatrix st = s * t;
    auto s4 = s.pow(4).scalar_value();
    auto braid = (st * st * st * s.pow(2).conj_transpose()).scalar_value();
    record("modular_relations", s.is_symmetric() && unitary(s) && s4 && root_of_unity_order(*s4) && braid &&
                                    root_of_unity_order(*braid));
    for (int i = 0; i < 3; ++i) {
      Mat2Z f = sample_matrix(rng, 16, 1000);
      record("word_independence", evaluate(th, f, 0, Basis::kColored, Reduction::kRightFloor) ==
                                      evaluate(th, f, 0, Basis::kColored, Reduction::kLeftNearest));
    }
  }
  for (std::int64_t t = 1; t <= 50; ++t) {
    CycNum x = sqrt_integer(t);
    record("sqrt_gauss_sum", x * x == CycNum::from_rational(x.order(), t) && embed_complex(x).real() > 0 &&
                                 denominator_bound(x) == 1);
  }
  for (long k = 2; k <= 50; ++k)
    for (long h = 1; h < k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      mpq_class a = dedekind_sum_direct(h, k), b = dedekind_sum_direct(k, h);
      mpq_class hq(h), kq(k);
      record("dedekind_reciprocity", a == dedekind_sum(h, k) &&
                                         a + b == mpq_class(-1, 4) + (hq / kq + kq / hq + 1 / (hq * kq)) / 12);
    }
  for (std::size_t i = 0; i < c.samples;) {
    Mat2Z x = sample_matrix(rng, 12, 10000), y = sample_matrix(rng, 12, 10000);
    Mat2Z xy = x * y;
    if (x.c() == 0 || y.c() == 0 || xy.c() == 0) continue;
    record("rademacher_cocycle",
           rademacher_phi(xy) == rademacher_phi(x) + rademacher_phi(y) - 3 * sign(x.c() * y.c() * xy.c()));
    ++i;
  }
  for (std::size_t i = 0; i < c.samples; ++i) {
    WeightedClass w[3];
    for (auto& x : w) x = {sample_matrix(rng, 10, 1000), static_cast<long>(uniform_below(rng, 11)) - 5};
    record("extension_associativity", compose(w[2], compose(w[1], w[0])) == compose(compose(w[2], w[1]), w[0]));
    LagLine a = act(w[0].f, LagLine::meridian()), b = act(w[1].f, LagLine::meridian()), d = act(w[2].f, LagLine::meridian());
    int s = wall_sigma(a, b, d);
    record("wall_sigma", s >= -1 && s <= 1 && wall_sigma(a, a, d) == 0 && wall_sigma(b, a, d) == -s);
  }
  for (const auto& name : order) {
    auto [cases, fails] = tally[name];
    json row = {{"check", name}, {"cases", cases}, {"failures", fails}};
    r.table.push_back(row);
    r.results.push_back(row);
    if (fails) r.ok = false;
  }
  return r;
}

const std::map<std::string, std::function<Report(const RunConfig&)>>& dispatch() {
  static const std::map<std::string, std::function<Report(const RunConfig&)>> table = {
      {"stmat", cmd_stmat},
      {"rho", cmd_rho},
      {"order", cmd_order},
      {"fig8-table", cmd_fig8},
      {"verify-denominators", cmd_denominators},
      {"jeffrey", cmd_jeffrey},
      {"compare", cmd_compare},
      {"image-order", cmd_image},
      {"selfcheck", cmd_selfcheck},
  };
  return table;
}

// --- rendering ------------------------------------------------------------

std::string cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string md_field(const std::string& s) {
  std::string out;
  for (char ch : s) out += ch == '|' ? std::string("\\|") : std::string(1, ch);
  return out;
}

void render(const Report& r, const std::string& format, std::ostream& os) {
  if (format == "json") {
    json doc = {{"meta", r.meta}, {"results", r.results}, {"passed", r.ok}};
    os << doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    for (const auto& [k, v] : r.meta.items()) os << "# " << k << ": " << v.dump() << "\n";
    os << "# passed: " << (r.ok ? "true" : "false") << "\n";
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
    os << "\n";
    for (const auto& row : r.table) {
      for (std::size_t i = 0; i < r.columns.size(); ++i)
        os << (i ? "," : "") << csv_field(cell(row.contains(r.columns[i]) ? row[r.columns[i]] : json(nullptr)));
      os << "\n";
    }
    return;
  }
  // markdown
  os << "# " << r.meta.value("command", std::string("report")) << "\n\n";
  for (const auto& [k, v] : r.meta.items())
    if (k != "command") os << "- " << k << ": `" << v.dump() << "`\n";
  os << "- passed: " << (r.ok ? "true" : "false") << "\n\n";
  os << "|";
  for (const auto& col : r.columns) os << " " << col << " |";
  os << "\n|";
  for (std::size_t i = 0; i < r.columns.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& row : r.table) {
    os << "|";
    for (const auto& col : r.columns) os << " " << md_field(cell(row.contains(col) ? row[col] : json(nullptr))) << " |";
    os << "\n";
  }
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, fn] : dispatch()) v.push_back(k);
    return v;
  }();
  return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    auto it = dispatch().find(config.command);
    if (it == dispatch().end()) throw UsageError("unknown command '" + config.command + "'");
    if (config.format != "json" && config.format != "csv" && config.format != "md")
      throw UsageError("unknown format '" + config.format + "' (expected json, csv or md)");
    report = it->second(config);
  } catch (const std::invalid_argument& e) {
    // includes UsageError and domain errors raised while validating inputs
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  json meta = {{"tool", "wrt_torus"}, {"version", kToolVersion}, {"command", config.command},
               {"seed", config.seed},  {"conventions", conventions()}};
  if (config.p) meta["p"] = config.p;
  meta.update(report.meta);
  if (meta.contains("levels") && meta["levels"].size() == 1) {
    meta["N"] = meta["levels"][0]["N"];
    meta["s"] = meta["levels"][0]["s"];
  }
  report.meta = std::move(meta);

  if (config.output.empty()) {
    render(report, config.format, out);
  } else {
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << config.output << " for writing\n";
      return 2;
    }
    render(report, config.format, file);
  }
  if (!report.ok) err << config.command << ": checks failed\n";
  return report.ok ? 0 : 1;
}

}  // namespace wrt
