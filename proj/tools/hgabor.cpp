#include <iostream>

#include <CLI11.hpp>

#include "hg/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Gabor systems on the dual of the Heisenberg group"};
  app.require_subcommand(1, 1);
  hg::CliOptions opt;
  std::string config, out;
  std::uint64_t seed = 0;

  for (const char* name : {"selftest", "analyze", "gram", "bessel"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config, "flat key = value config file");
    sub->add_option("--out", out, "output directory");
    sub->add_option("--seed", seed, "random seed (u64)");
    sub->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--force", opt.force, "bypass resource guards");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : hg::kExitUsage;
  }
  auto* sub = app.get_subcommands().front();
  opt.command = sub->get_name();
  if (sub->count("--config")) opt.config = config;
  if (sub->count("--out")) opt.out = out;
  if (sub->count("--seed")) opt.seed = seed;
  return hg::run_cli(opt, std::cout, std::cerr);
}
