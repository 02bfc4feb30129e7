// Timing harness comparing the serial reference kernels against the OpenMP
// ones on identical workloads, and checking that both produce the same
// numbers.

#include <chrono>
#include <cstdio>
#include <string>

#include "nnc/outage.hpp"
#include "nnc/parallel.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

nnc::NetworkModel relay_model(double p_db) {
  nnc::NetworkModel m;
  m.num_nodes = 3;
  m.distances.resize(3, 3);
  m.distances << 0, 0.3, 1.0, 0.3, 0, 0.7, 1.0, 0.7, 0;
  m.path_loss = 3.0;
  double p = nnc::db_to_linear(p_db);
  m.powers = {2 * p, p, 0.0};
  m.fading = nnc::Fading::Rayleigh;
  return m;
}

nnc::NetworkModel trc_model(double p_db) {
  nnc::NetworkModel m;
  m.num_nodes = 4;
  m.distances.resize(4, 4);
  m.distances << 0, 0.2, 0.8, 1.0,
                 0.2, 0, 0.75, 0.8,
                 0.8, 0.75, 0, 0.2,
                 1.0, 0.8, 0.2, 0;
  m.path_loss = 3.0;
  double p = nnc::db_to_linear(p_db);
  m.powers = {p, p, p, 0.0};
  m.fading = nnc::Fading::Rayleigh;
  return m;
}

struct Case {
  const char* name;
  nnc::ChannelKind kind;
  nnc::NetworkModel model;
  nnc::Strategy strategy;
  nnc::StrategyParams params;
  nnc::Targets targets;
};

void bench_case(const Case& c, long trials) {
  nnc::OutageSpec spec;
  spec.model = c.model;
  spec.kind = c.kind;
  spec.strategy = c.strategy;
  spec.targets = c.targets;
  spec.trials = trials;
  spec.seed = 7;
  spec.params = c.params;

  auto t0 = Clock::now();
  auto serial = nnc::estimate_outage(spec, nnc::Execution::Serial);
  double ser_ms = ms_since(t0);

  t0 = Clock::now();
  auto parallel = nnc::estimate_outage(spec, nnc::Execution::Parallel);
  double par_ms = ms_since(t0);

  bool same = serial.p_hat == parallel.p_hat &&
              serial.branch_tally == parallel.branch_tally;
  std::printf("%-22s %10ld trials  serial %8.1f ms  openmp %8.1f ms  "
              "speedup %5.2fx  identical %s\n",
              c.name, trials, ser_ms, par_ms,
              par_ms > 0 ? ser_ms / par_ms : 0.0, same ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  long trials = 200000;
  if (argc > 1) trials = std::strtol(argv[1], nullptr, 10);
  std::printf("workers: %d\n", nnc::effective_threads());

  {
    Case c{"relay snnc-df", nnc::ChannelKind::Relay, relay_model(10.0),
           nnc::Strategy::SnncDf, {}, {2.0, 0.0}};
    c.params.beta = 0.6;
    c.params.sigma_hat[1] = 1.5;
    bench_case(c, trials);
  }
  {
    Case c{"two-relay snnc", nnc::ChannelKind::TwoRelay, trc_model(5.0),
           nnc::Strategy::Snnc, {}, {2.0, 0.0}};
    c.params.sigma_hat[1] = 1.0;
    c.params.sigma_hat[2] = 1.0;
    bench_case(c, trials);
  }
  {
    Case c{"two-relay cf-s", nnc::ChannelKind::TwoRelay, trc_model(5.0),
           nnc::Strategy::CfS, {}, {2.0, 0.0}};
    c.params.sigma_hat[1] = 1.0;
    c.params.sigma_hat[2] = 1.0;
    c.params.r_bin[1] = 1.0;
    c.params.r_bin[2] = 1.0;
    bench_case(c, trials);
  }
  return 0;
}
