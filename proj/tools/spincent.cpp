#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "spincent/commands.hpp"

namespace {

struct Flags {
  unsigned r = 0;
  unsigned r_max = 0;
  std::size_t m = 1;
  std::optional<std::size_t> m2;
  std::optional<std::size_t> max_n;
  std::string backend = "exact";
  std::string format = "pretty";
  std::string out;
  std::string label;
  std::uint64_t seed = 20240611;
};

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--backend", f.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app->add_option("--max-n", f.max_n, "size guard on the ambient dimension N (default 128, env SPINCENT_MAX_N)");
  app->add_option("--format", f.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app->add_option("--out", f.out, "write output to this file");
  app->add_option("--seed", f.seed, "seed for sampled checks");
}

void add_case(CLI::App* app, Flags& f) {
  app->add_option("--r", f.r, "rank r of spin(r)");
  app->add_option("--m", f.m, "multiplicity m (m1 for r = 0 mod 4)");
  app->add_option("--m2", f.m2, "second multiplicity for r = 0 mod 4");
}

spincent::RunConfig to_config(const std::string& command, const Flags& f) {
  spincent::RunConfig cfg;
  cfg.command = command;
  cfg.r = f.r;
  cfg.r_max = f.r_max;
  cfg.m = f.m;
  cfg.m2 = f.m2;
  cfg.label = f.label;
  cfg.backend = spincent::parse_backend(f.backend);
  cfg.max_n = f.max_n;
  cfg.format = spincent::parse_format(f.format);
  cfg.out = f.out;
  cfg.seed = f.seed;
  return cfg;
}

int emit(const spincent::Report& rep, const spincent::RunConfig& cfg) {
  const std::string text = spincent::render(rep, cfg.format);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(cfg.out);
    if (!file) throw spincent::UsageError("cannot open '" + cfg.out + "' for writing");
    file << text;
    std::cout << rep.command << ": " << (rep.pass() ? "pass" : "fail") << " (" << rep.rows.size() << " rows) -> "
              << cfg.out << '\n';
  }
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centralizers of spin(r) in so(N): constructions, verification suites and reports"};
  app.require_subcommand(1);
  Flags f;

  auto* dims = app.add_subcommand("dims", "table of d_r and v_r");
  dims->add_option("--r-max", f.r_max, "largest r (default 16)");
  add_common(dims, f);

  auto* cent = app.add_subcommand("centralize", "centralizer of spin(r) for one case");
  add_case(cent, f);
  cent->get_option("--r")->required();
  add_common(cent, f);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "prop1, thm1, thm2, lemma, table2, decomp, gamma, structure, trivial, phi, dims")
      ->required();
  verify->add_option("--r-max", f.r_max, "largest r for decomp or dims");
  add_common(verify, f);

  std::string target;
  auto* exp = app.add_subcommand("export", "serialize a representation or a centralizer basis as JSON");
  exp->add_option("target", target, "rep or centralizer")->required()->check(CLI::IsMember({"rep", "centralizer"}));
  add_case(exp, f);
  exp->get_option("--r")->required();
  exp->add_option("--label", f.label, "+ or - for r = 0 mod 4 representations");
  add_common(exp, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*dims) {
      auto cfg = to_config("dims", f);
      return emit(spincent::cmd_dims(cfg), cfg);
    }
    if (*cent) {
      auto cfg = to_config("centralize", f);
      return emit(spincent::cmd_centralize(cfg), cfg);
    }
    if (*verify) {
      auto cfg = to_config("verify", f);
      cfg.suite = suite;
      return emit(spincent::cmd_verify(cfg), cfg);
    }
    auto cfg = to_config("export", f);
    cfg.target = target;
    spincent::json j = spincent::cmd_export(cfg);
    if (cfg.out.empty()) std::cout << j.dump(2) << '\n';
    else std::cout << "export " << target << ": " << j.at("matrices").size() << " matrices -> " << cfg.out << '\n';
    return 0;
  } catch (const spincent::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << '\n';
    return 1;
  }
}
