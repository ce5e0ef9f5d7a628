#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "brick/cli.hpp"

using brick::RunConfig;

namespace
{

struct Flags
{
  RunConfig cfg;
  std::string m_range = "1";
  std::string report_out;
  long long coset_cap = 0;
  long long freehull_cap = 0;
  std::uint64_t basis_seed = 0;
};

void common(CLI::App *sub, Flags &f)
{
  sub->add_option("--seed", f.cfg.seed, "Seed for every randomised step")->capture_default_str();
  sub->add_option("--catalog", f.cfg.catalog_dir, "Catalog directory")->capture_default_str();
  sub->add_option("--out", f.report_out, "Also write the report to this file");
}

void entry_flags(CLI::App *sub, Flags &f)
{
  sub->add_option("--entry", f.cfg.entry, "Catalog entry")->required();
  sub->add_option("--coset-cap", f.coset_cap, "Coset enumeration cap (default: the entry's)");
  sub->add_option("--freehull-cap", f.freehull_cap, "Largest |G| * dim T for the free hull method");
  sub->add_flag("--allow-stretch", f.cfg.allow_stretch, "Run stretch-tier entries");
}

void mm_flags(CLI::App *sub, Flags &f)
{
  sub->add_option("--case", f.cfg.case_tag, "Expected case: i, ii or iii");
  sub->add_option("--r", f.cfg.r, "Cycle length for case iii");
  sub->add_option("--m", f.m_range, "m or a range a..b")->capture_default_str();
  sub->add_option("--basis-seed", f.basis_seed, "Take Ext classes from a seeded random basis");
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Bricks from extensions of simple modules: build and verify M_m"};
  app.set_version_flag("--version", brick::version());
  app.require_subcommand(1);
  Flags f;

  auto *catalog = app.add_subcommand("catalog", "List the catalog entries");
  common(catalog, f);

  auto *show = app.add_subcommand("show", "Print an entry's metadata");
  common(show, f);
  show->add_option("--entry", f.cfg.entry, "Catalog entry")->required();

  auto *field = app.add_subcommand("field", "Print the field header for GF(q)");
  common(field, f);
  field->add_option("--field", f.cfg.field_order, "Field order q")->required();

  auto *qend = app.add_subcommand("qend", "dim End of the quiver representations M_m");
  common(qend, f);
  qend->add_option("--case", f.cfg.case_tag, "i, ii or iii")->required();
  qend->add_option("--r", f.cfg.r, "Cycle length for case iii");
  qend->add_option("--field", f.cfg.field_order, "Field order q")->required();
  qend->add_option("--m", f.m_range, "m or a range a..b")->required();

  auto *chop = app.add_subcommand("chop", "Composition factors of a module");
  common(chop, f);
  entry_flags(chop, f);
  chop->add_option("--module", f.cfg.module, "perm, seedN or a module file")->capture_default_str();

  auto *ext = app.add_subcommand("ext", "dim Ext^1(S, T) between two simples");
  common(ext, f);
  entry_flags(ext, f);
  ext->add_option("--s", f.cfg.s, "Top simple: label, role or dimN")->required();
  ext->add_option("--t", f.cfg.t, "Bottom simple: label, role or dimN")->required();
  ext->add_option("--method", f.cfg.method, "cocycle, freehull or both")->capture_default_str();

  auto *build = app.add_subcommand("build", "Build the group module M_m");
  common(build, f);
  entry_flags(build, f);
  mm_flags(build, f);
  build->add_option("--write-module", f.cfg.module_out, "Write M_m to this file");

  auto *verify = app.add_subcommand("verify", "Build and verify M_m over a range of m");
  common(verify, f);
  entry_flags(verify, f);
  mm_flags(verify, f);

  auto *certify = app.add_subcommand("certify", "verify plus the centraliser certificate");
  common(certify, f);
  entry_flags(certify, f);
  mm_flags(certify, f);
  certify->add_option("--commutant-cap", f.cfg.commutant_cap, "Largest module for the commutant solve")
      ->capture_default_str();

  auto *check = app.add_subcommand("check", "Check a catalog entry: presentation, simples, Ext");
  common(check, f);
  entry_flags(check, f);

  auto *search = app.add_subcommand("search", "Scan an entry's simples for case (i) pairs");
  common(search, f);
  entry_flags(search, f);

  CLI11_PARSE(app, argc, argv);

  f.cfg.command = app.get_subcommands().front()->get_name();
  auto *sub = app.get_subcommands().front();
  auto given = [sub](char const *name) {
    auto *opt = sub->get_option_no_throw(name);
    return opt && opt->count() > 0;
  };
  try {
    if (given("--m")) {
      auto [lo, hi] = brick::parse_m_range(f.m_range);
      f.cfg.m_lo = lo;
      f.cfg.m_hi = hi;
    }
  } catch (brick::UsageError const &e) {
    std::cerr << "ERROR: usage: " << e.what() << '\n';
    return 2;
  }
  if (given("--coset-cap"))
    f.cfg.coset_cap = f.coset_cap;
  if (given("--freehull-cap"))
    f.cfg.freehull_cap = f.freehull_cap;
  if (given("--basis-seed"))
    f.cfg.basis_seed = f.basis_seed;

  auto result = brick::run_command(f.cfg);
  (result.exit_code == 2 ? std::cerr : std::cout) << result.report;
  if (!f.report_out.empty()) {
    std::ofstream out(f.report_out);
    out << result.report;
    if (!out) {
      std::cerr << "ERROR: cannot write " << f.report_out << '\n';
      return 2;
    }
  }
  return result.exit_code;
}
