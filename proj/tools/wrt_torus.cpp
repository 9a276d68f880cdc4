// wrt_torus: command-line front end for the torus WRT representations.

#include <CLI11.hpp>

#include <iostream>

#include "wrt/cli.hpp"

int main(int argc, char** argv) {
  wrt::RunConfig cfg;
  CLI::App app{"Exact WRT representations of the torus mapping class group"};
  app.set_version_flag("--version", wrt::kToolVersion);
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    sub->add_option("-o,--output", cfg.output, "write the report here instead of stdout");
  };
  auto level = [&](CLI::App* sub) { sub->add_option("-p,--p", cfg.p, "level p >= 3")->required(); };
  auto matrix = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("-m,--matrix", cfg.matrix, "SL(2,Z) element as \"a,b;c,d\"");
    if (required) o->required();
  };
  auto weight = [&](CLI::App* sub) { sub->add_option("-n,--weight", cfg.weight, "integer weight n"); };
  auto basis = [&](CLI::App* sub) { sub->add_option("--basis", cfg.basis, "colored or signed (even p)"); };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--samples", cfg.samples, "number of random samples");
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--height", cfg.height, "entry-height bound for sampled matrices");
    sub->add_option("--word-length", cfg.word_length, "maximum length of sampling words");
  };
  auto range = [&](CLI::App* sub) {
    sub->add_option("--pmin", cfg.p_min, "first level");
    sub->add_option("--pmax", cfg.p_max, "last level");
  };
  auto order_cap = [&](CLI::App* sub) { sub->add_option("--cap", cfg.order_cap, "largest order searched"); };

  auto* stmat = app.add_subcommand("stmat", "emit rho(S,0) and rho(T,0)");
  level(stmat), basis(stmat), common(stmat);
  auto* rho = app.add_subcommand("rho", "evaluate rho_p(f, n)");
  level(rho), matrix(rho, true), weight(rho), basis(rho), common(rho);
  auto* order = app.add_subcommand("order", "exact and projective order of rho_p(f, n)");
  level(order), matrix(order, true), weight(order), basis(order), order_cap(order), common(order);
  auto* fig8 = app.add_subcommand("fig8-table", "figure-eight monodromy periods");
  range(fig8), order_cap(fig8), common(fig8);
  auto* den = app.add_subcommand("verify-denominators", "sample p rho_p(f, 0) and test integrality");
  level(den), basis(den), sampling(den), common(den);
  auto* jef = app.add_subcommand("jeffrey", "Jeffrey's closed formula (even p)");
  level(jef), matrix(jef, true), common(jef);
  auto* cmp = app.add_subcommand("compare", "closed formula against word evaluation, with integrality ladder");
  level(cmp), matrix(cmp, false), sampling(cmp), common(cmp);
  auto* img = app.add_subcommand("image-order", "order of the image group by closure");
  level(img), basis(img), common(img);
  img->add_option("--closure-cap", cfg.closure_cap, "largest group stored");
  auto* self = app.add_subcommand("selfcheck", "identities, Gauss sums, Dedekind sums and cocycles");
  range(self), common(self);
  self->add_option("--samples", cfg.samples, "random cases per sampled check");
  self->add_option("--seed", cfg.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return wrt::run(cfg, std::cout, std::cerr);
}
