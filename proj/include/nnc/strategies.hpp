#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nnc/closed_form.hpp"
#include "nnc/model.hpp"

namespace nnc {

enum class ChannelKind { Relay, TwoRelay, Marc, Twrc };

int channel_nodes(ChannelKind k);
int rate_components(ChannelKind k);  // 1 scalar, or bound count for regions
const char* to_string(ChannelKind k);
std::optional<ChannelKind> channel_from_string(const std::string& s);

enum class Strategy { Df, CfS, Snnc, Dqf, SnncDf };
const char* to_string(Strategy s);
// Accepts "lnnc" as an alias for "snnc" (identical achievable rates).
std::optional<Strategy> strategy_from_string(const std::string& s);

struct Targets {
  double r1 = 0.0;
  double r2 = 0.0;
  double sum() const { return r1 + r2; }
};

// Free coding parameters.  Channels read only their relevant fields:
//   beta / gamma   source cooperation splits (relay, MARC, TWRC)
//   theta          relay or source layer vector (MARC/TWRC theta1,theta2;
//                  two-relay DF source layers b1,b2,b3)
//   theta2         two-relay DF first-relay layers h1,h2
//   df_route       two-relay: 0 -> relay 2 decodes first, 1 -> relay 3;
//                  -1 -> evaluate both and keep the better
//   sigma_hat      per-node quantization noise variances (0-based node id)
//   r_bin          per-node bin rates for step-by-step compress-forward
//   dqf_theta/dqf_sigma   mixed-route parameters per two-relay route
struct StrategyParams {
  std::complex<double> beta{0.0, 0.0};
  std::complex<double> gamma{0.0, 0.0};
  std::vector<std::complex<double>> theta;
  std::vector<std::complex<double>> theta2;
  int df_route = -1;
  std::array<double, 4> sigma_hat{0.0, 0.0, 0.0, 0.0};
  std::array<double, 4> r_bin{0.0, 0.0, 0.0, 0.0};
  std::array<std::complex<double>, 2> dqf_theta{};
  std::array<double, 2> dqf_sigma{0.0, 0.0};

  std::string describe() const;  // "name=value;..." with 12 digits
};

struct RateOutcome {
  // Relay/two-relay: {R}.  MARC: {R1, R2, R1+R2} bounds.  TWRC: {R1, R2}
  // (plus the sum bound for decode-forward).
  std::vector<double> rates;
  std::string branch;
  StrategyParams params;
  double scalar() const { return rates.empty() ? 0.0 : rates[0]; }
};

// Deterministic-gain evaluation (used for no-fading figures; also the
// per-realization core of the outage path).  Compress-forward enforces its
// feasibility constraints directly and falls back to the degraded branch
// they protect against.
RateOutcome rate_df(ChannelKind, const GainMatrix&, const std::vector<double>& powers,
                    const StrategyParams&);
RateOutcome rate_cfs(ChannelKind, const GainMatrix&, const std::vector<double>& powers,
                     const StrategyParams&);
RateOutcome rate_snnc(ChannelKind, const GainMatrix&, const std::vector<double>& powers,
                      const StrategyParams&);
RateOutcome rate_dqf(ChannelKind, const GainMatrix&, const std::vector<double>& powers,
                     const StrategyParams&);  // two-relay only
RateOutcome rate_snnc_df(ChannelKind, const GainMatrix&, const std::vector<double>& powers,
                         const StrategyParams&);

// Realized-fading evaluation: the decode/forward events are tested against
// the targets and the branch tables pick the rate.
RateOutcome rate_df_faded(ChannelKind, const GainMatrix&, const std::vector<double>&,
                          const StrategyParams&, const Targets&);
RateOutcome rate_cfs_faded(ChannelKind, const GainMatrix&, const std::vector<double>&,
                           const StrategyParams&, const Targets&);
RateOutcome rate_snnc_faded(ChannelKind, const GainMatrix&, const std::vector<double>&,
                            const StrategyParams&, const Targets&);
RateOutcome rate_snnc_df_faded(ChannelKind, const GainMatrix&, const std::vector<double>&,
                               const StrategyParams&, const Targets&);

RateOutcome evaluate(Strategy, ChannelKind, const GainMatrix&,
                     const std::vector<double>& powers, const StrategyParams&);
RateOutcome evaluate_faded(Strategy, ChannelKind, const GainMatrix&,
                           const std::vector<double>& powers,
                           const StrategyParams&, const Targets&);

// True when every rate component meets its target (strict comparisons, as
// in the outage definitions).
bool meets_targets(ChannelKind, const RateOutcome&, const Targets&);

struct OptResult {
  StrategyParams params;
  double value = 0.0;   // achieved rate / weighted rate, or outage estimate
  bool converged = true;
};

// Maximize the rate for fixed gains.  weight in [0,1] scalarizes two-user
// regions (w*R1 + (1-w)*R2 over the bound polytope); weight < 0 means the
// scalar rate (or best sum rate for two-user channels).
OptResult optimize_rate(ChannelKind, Strategy, const GainMatrix&,
                        const std::vector<double>& powers, double weight = -1.0);

// Choose parameters ahead of the fading draws: inner Monte Carlo outage
// estimate over `trials` channel states drawn from the model statistics
// (common random numbers across candidate parameters).
OptResult optimize_outage(ChannelKind, Strategy, const NetworkModel&,
                          const Targets&, long trials, std::uint64_t seed);

struct Objective {
  enum class Kind { MaxRate, MinOutage } kind = Kind::MaxRate;
  double weight = -1.0;          // MaxRate scalarization
  Targets targets;               // MinOutage
  long trials = 20000;           // MinOutage inner sample size
  std::uint64_t seed = 1;
};

// Convenience dispatcher matching the two objectives above.  For MaxRate,
// gains must be supplied; for MinOutage the model statistics are used.
OptResult optimize_params(ChannelKind, Strategy, const GainMatrix* gains,
                          const NetworkModel* model,
                          const std::vector<double>& powers, const Objective&);

}  // namespace nnc
