#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nnc/parallel.hpp"
#include "nnc/scenario.hpp"

namespace {

struct CommonOpts {
  std::string scenario_path;
  std::string out_path;
  long seed = -1;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--scenario", o.scenario_path, "scenario file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", o.out_path, "output CSV path (default from scenario, else stdout)");
  cmd->add_option("--seed", o.seed, "override the scenario seed");
  cmd->add_option("--threads", o.threads, "cap worker threads (0 = default)");
}

int run(const CommonOpts& o,
        std::string (*fn)(const nnc::Scenario&)) {
  try {
    nnc::set_thread_cap(o.threads);
    nnc::Scenario s = nnc::load_scenario(o.scenario_path);
    if (o.seed >= 0) s.seed = static_cast<std::uint64_t>(o.seed);
    std::string csv = fn(s);
    std::string out = !o.out_path.empty() ? o.out_path : s.output;
    if (out.empty()) {
      std::cout << csv;
    } else {
      std::ofstream f(out, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot write " << out << "\n";
        return 3;
      }
      f << csv;
    }
    return 0;
  } catch (const nnc::ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "nnc-lab: achievable rates, rate regions and Rayleigh-fading outage "
      "probabilities for Gaussian relay networks"};
  app.require_subcommand(1);

  CommonOpts rate_o, outage_o, region_o, dec_o, flood_o;
  auto* rate = app.add_subcommand("rate", "achievable rates over a sweep");
  add_common(rate, rate_o);
  auto* outage = app.add_subcommand("outage", "Monte Carlo outage probabilities");
  add_common(outage, outage_o);
  auto* region = app.add_subcommand("region", "two-user rate regions");
  add_common(region, region_o);
  auto* dec = app.add_subcommand("decodable-set", "largest helper sets per node");
  add_common(dec, dec_o);
  auto* flood = app.add_subcommand("flooding", "link capacities, widest paths and multihop overhead");
  add_common(flood, flood_o);

  CLI11_PARSE(app, argc, argv);

  if (rate->parsed()) return run(rate_o, nnc::cmd_rate);
  if (outage->parsed()) return run(outage_o, nnc::cmd_outage);
  if (region->parsed()) return run(region_o, nnc::cmd_region);
  if (dec->parsed()) return run(dec_o, nnc::cmd_decodable_set);
  if (flood->parsed()) return run(flood_o, nnc::cmd_flooding);
  return 1;
}
