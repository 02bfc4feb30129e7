#include "nnc/strategies.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace nnc {

using cf::cd;

int channel_nodes(ChannelKind k) {
  switch (k) {
    case ChannelKind::Relay: return 3;
    case ChannelKind::TwoRelay: return 4;
    case ChannelKind::Marc: return 4;
    case ChannelKind::Twrc: return 3;
  }
  return 0;
}

int rate_components(ChannelKind k) {
  switch (k) {
    case ChannelKind::Relay:
    case ChannelKind::TwoRelay: return 1;
    case ChannelKind::Marc: return 3;
    case ChannelKind::Twrc: return 2;
  }
  return 0;
}

const char* to_string(ChannelKind k) {
  switch (k) {
    case ChannelKind::Relay: return "relay";
    case ChannelKind::TwoRelay: return "two_relay";
    case ChannelKind::Marc: return "marc";
    case ChannelKind::Twrc: return "twrc";
  }
  return "?";
}

std::optional<ChannelKind> channel_from_string(const std::string& s) {
  if (s == "relay") return ChannelKind::Relay;
  if (s == "two_relay" || s == "trc") return ChannelKind::TwoRelay;
  if (s == "marc") return ChannelKind::Marc;
  if (s == "twrc") return ChannelKind::Twrc;
  return std::nullopt;
}

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Df: return "df";
    case Strategy::CfS: return "cf_s";
    case Strategy::Snnc: return "snnc";
    case Strategy::Dqf: return "dqf";
    case Strategy::SnncDf: return "snnc_df";
  }
  return "?";
}

std::optional<Strategy> strategy_from_string(const std::string& s) {
  if (s == "df") return Strategy::Df;
  if (s == "cf_s" || s == "cfs" || s == "cf-s") return Strategy::CfS;
  if (s == "snnc" || s == "lnnc") return Strategy::Snnc;
  if (s == "dqf") return Strategy::Dqf;
  if (s == "snnc_df" || s == "snnc-df") return Strategy::SnncDf;
  return std::nullopt;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt(cd v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", v.real(), v.imag());
  return buf;
}

double clamp0(double v) { return v < 0.0 ? 0.0 : v; }

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

cd th(const std::vector<cd>& v, std::size_t i) {
  return i < v.size() ? v[i] : cd(0.0, 0.0);
}

double sigma_of(const StrategyParams& p, int node0) {
  double s = p.sigma_hat[static_cast<std::size_t>(node0)];
  require(s > 0.0, "quantization variance must be set and > 0");
  return s;
}

RateOutcome make(std::vector<double> rates, std::string branch,
                 const StrategyParams& p) {
  for (double& r : rates) r = clamp0(r);
  return {std::move(rates), std::move(branch), p};
}

}  // namespace

std::string StrategyParams::describe() const {
  std::string s;
  auto add = [&s](const std::string& k, const std::string& v) {
    if (!s.empty()) s += ';';
    s += k + "=" + v;
  };
  if (std::abs(beta) > 0) add("beta", fmt(beta));
  if (std::abs(gamma) > 0) add("gamma", fmt(gamma));
  for (std::size_t i = 0; i < theta.size(); ++i)
    add("theta" + std::to_string(i + 1), fmt(theta[i]));
  for (std::size_t i = 0; i < theta2.size(); ++i)
    add("split" + std::to_string(i + 1), fmt(theta2[i]));
  if (df_route >= 0) add("route", std::to_string(df_route + 1));
  for (std::size_t i = 0; i < sigma_hat.size(); ++i)
    if (sigma_hat[i] > 0) add("s2_" + std::to_string(i + 1), fmt(sigma_hat[i]));
  for (std::size_t i = 0; i < r_bin.size(); ++i)
    if (r_bin[i] > 0) add("rbin_" + std::to_string(i + 1), fmt(r_bin[i]));
  for (std::size_t i = 0; i < 2; ++i)
    if (std::abs(dqf_theta[i]) > 0 || dqf_sigma[i] > 0) {
      add("dqf" + std::to_string(i + 1) + "_theta", fmt(dqf_theta[i]));
      add("dqf" + std::to_string(i + 1) + "_s2", fmt(dqf_sigma[i]));
    }
  return s.empty() ? "-" : s;
}

// ------------------------------------------------------------------- DF --

RateOutcome rate_df(ChannelKind k, const GainMatrix& g,
                    const std::vector<double>& p, const StrategyParams& sp) {
  switch (k) {
    case ChannelKind::Relay: {
      auto c = cf::relay_ch(g, p);
      return make({cf::relay_df(c, sp.beta).rate()}, "DF", sp);
    }
    case ChannelKind::TwoRelay: {
      auto c = cf::trc_ch(g, p);
      auto eval = [&](int route) {
        return cf::trc_df(c, route == 0 ? 2 : 3, th(sp.theta, 0),
                          th(sp.theta, 1), th(sp.theta, 2), th(sp.theta2, 0),
                          th(sp.theta2, 1))
            .rate();
      };
      if (sp.df_route >= 0)
        return make({eval(sp.df_route)}, "DF", sp);
      double r0 = eval(0), r1 = eval(1);
      StrategyParams used = sp;
      used.df_route = r1 > r0 ? 1 : 0;
      return make({std::max(r0, r1)}, "DF", used);
    }
    case ChannelKind::Marc: {
      auto c = cf::marc_ch(g, p);
      auto b = cf::marc_df(c, sp.beta, sp.gamma, th(sp.theta, 0), th(sp.theta, 1));
      return make({b.r1(), b.r2(), b.rsum()}, "DF", sp);
    }
    case ChannelKind::Twrc: {
      auto c = cf::twrc_ch(g, p);
      auto b = cf::twrc_df(c, sp.beta, sp.gamma, th(sp.theta, 0), th(sp.theta, 1));
      return make({b.r1(), b.r2(), b.csum}, "DF", sp);
    }
  }
  throw std::logic_error("rate_df: bad kind");
}

RateOutcome rate_df_faded(ChannelKind k, const GainMatrix& g,
                          const std::vector<double>& p,
                          const StrategyParams& sp, const Targets&) {
  if (k == ChannelKind::TwoRelay)
    require(sp.df_route >= 0, "two-relay fading DF needs a fixed route");
  // The decode events alter only the mixed strategy; plain DF commits to
  // relay decoding, so the realized rate is the same expression.
  if (k == ChannelKind::Twrc) {
    auto c = cf::twrc_ch(g, p);
    auto b = cf::twrc_df(c, sp.beta, sp.gamma, th(sp.theta, 0), th(sp.theta, 1));
    return make({b.r1(), b.r2()}, "DF", sp);
  }
  return rate_df(k, g, p, sp);
}

// ----------------------------------------------------------------- CF-S --

RateOutcome rate_cfs(ChannelKind k, const GainMatrix& g,
                     const std::vector<double>& p, const StrategyParams& sp) {
  switch (k) {
    case ChannelKind::Relay: {
      auto c = cf::relay_ch(g, p);
      double s2 = sigma_of(sp, 1);
      // Deterministic gains: the bin rate is picked inside the feasible
      // window when one exists.
      if (cf::relay_bin_requirement(c, s2) <= cf::relay_bin_capacity(c))
        return make({cf::relay_quantized(c, s2)}, "CFS:D1&D2", sp);
      return make({cf::relay_direct(c)}, "CFS:D1&!D2", sp);
    }
    case ChannelKind::TwoRelay: {
      auto c = cf::trc_ch(g, p);
      double s2 = sigma_of(sp, 1), s3 = sigma_of(sp, 2);
      auto caps = cf::trc_bin_caps(c);
      auto reqs = cf::trc_bin_reqs(c, s2, s3);
      if (reqs.r2 <= caps.r2 && reqs.r3 <= caps.r3 && reqs.sum <= caps.sum)
        return make({cf::trc_cfs_decode(c, s2, s3)}, "CFS:D1&D2", sp);
      return make({cf::trc_interference_free(c)}, "CFS:D1&!D2", sp);
    }
    case ChannelKind::Marc: {
      auto c = cf::marc_ch(g, p);
      double s3 = sigma_of(sp, 2);
      if (s3 >= cf::marc_cfs_sigma_min(c)) {
        auto b = cf::marc_cfs(c, s3);
        return make({b.d, b.e, b.f}, "CFS:D1&D2", sp);
      }
      auto d = cf::marc_degraded(c);
      return make({d.d2, d.e2, d.f2}, "CFS:D1&!D2", sp);
    }
    case ChannelKind::Twrc: {
      auto c = cf::twrc_ch(g, p);
      double s3 = sigma_of(sp, 2);
      if (s3 >= cf::twrc_cfs_floors(c).max()) {
        auto b = cf::twrc_cfs(c, s3);
        return make({b.d, b.e}, "CFS:D1&D2", sp);
      }
      auto d = cf::twrc_degraded(c);
      return make({d.d2, d.e2}, "CFS:D1&!D2", sp);
    }
  }
  throw std::logic_error("rate_cfs: bad kind");
}

RateOutcome rate_cfs_faded(ChannelKind k, const GainMatrix& g,
                           const std::vector<double>& p,
                           const StrategyParams& sp, const Targets&) {
  switch (k) {
    case ChannelKind::Relay: {
      auto c = cf::relay_ch(g, p);
      double s2 = sigma_of(sp, 1), rb = sp.r_bin[1];
      bool d1 = rb < cf::relay_bin_capacity(c);
      bool d2 = rb >= cf::relay_bin_requirement(c, s2);
      if (d1 && d2) return make({cf::relay_quantized(c, s2)}, "CFS:D1&D2", sp);
      if (d1) return make({cf::relay_direct(c)}, "CFS:D1&!D2", sp);
      return make({cf::relay_as_noise(c)}, "CFS:!D1", sp);
    }
    case ChannelKind::TwoRelay: {
      auto c = cf::trc_ch(g, p);
      double s2 = sigma_of(sp, 1), s3 = sigma_of(sp, 2);
      double rb2 = sp.r_bin[1], rb3 = sp.r_bin[2];
      auto caps = cf::trc_bin_caps(c);
      auto reqs = cf::trc_bin_reqs(c, s2, s3);
      bool d1 = rb2 < caps.r2 && rb3 < caps.r3 && rb2 + rb3 < caps.sum;
      bool d2 = rb2 >= reqs.r2 && rb3 >= reqs.r3 && rb2 + rb3 >= reqs.sum;
      if (d1 && d2) return make({cf::trc_cfs_decode(c, s2, s3)}, "CFS:D1&D2", sp);
      if (d1) return make({cf::trc_interference_free(c)}, "CFS:D1&!D2", sp);
      return make({cf::trc_all_noise(c)}, "CFS:!D1", sp);
    }
    case ChannelKind::Marc: {
      auto c = cf::marc_ch(g, p);
      double s3 = sigma_of(sp, 2), rb3 = sp.r_bin[2];
      bool d1 = rb3 < cf::marc_bin_capacity(c);
      bool d2 = rb3 >= cf::marc_bin_requirement(c, s3);
      if (d1 && d2) {
        auto b = cf::marc_cfs(c, s3);
        return make({b.d, b.e, b.f}, "CFS:D1&D2", sp);
      }
      auto d = cf::marc_degraded(c);
      if (d1) return make({d.d2, d.e2, d.f2}, "CFS:D1&!D2", sp);
      return make({d.d3, d.e3, d.f3}, "CFS:!D1", sp);
    }
    case ChannelKind::Twrc: {
      auto c = cf::twrc_ch(g, p);
      double s3 = sigma_of(sp, 2), rb3 = sp.r_bin[2];
      auto deg = cf::twrc_degraded(c);
      // message 1 is decoded at node 2, message 2 at node 1
      double r1, r2;
      std::string b1, b2;
      bool d21 = rb3 < cf::twrc_bin_capacity_at2(c);
      bool d22 = rb3 >= cf::twrc_bin_requirement_at2(c, s3);
      if (d21 && d22) { r1 = cf::twrc_cfs(c, s3).d; b1 = "D1&D2"; }
      else if (d21) { r1 = deg.d2; b1 = "D1&!D2"; }
      else { r1 = deg.d3; b1 = "!D1"; }
      auto cs = cf::twrc_swap_ends(c);
      bool d11 = rb3 < cf::twrc_bin_capacity_at2(cs);
      bool d12 = rb3 >= cf::twrc_bin_requirement_at2(cs, s3);
      if (d11 && d12) { r2 = cf::twrc_cfs(c, s3).e; b2 = "D1&D2"; }
      else if (d11) { r2 = deg.e2; b2 = "D1&!D2"; }
      else { r2 = deg.e3; b2 = "!D1"; }
      return make({r1, r2}, "CFS:" + b1 + "/" + b2, sp);
    }
  }
  throw std::logic_error("rate_cfs_faded: bad kind");
}

// ----------------------------------------------------------------- SNNC --

RateOutcome rate_snnc(ChannelKind k, const GainMatrix& g,
                      const std::vector<double>& p, const StrategyParams& sp) {
  switch (k) {
    case ChannelKind::Relay: {
      auto c = cf::relay_ch(g, p);
      double s2 = sigma_of(sp, 1);
      if (cf::relay_event_snnc(c, s2))
        return make({std::min(cf::relay_joint(c, s2), cf::relay_quantized(c, s2))},
                    "SNNC:decode", sp);
      return make({cf::relay_as_noise(c)}, "SNNC:noise", sp);
    }
    case ChannelKind::TwoRelay: {
      auto c = cf::trc_ch(g, p);
      double s2 = sigma_of(sp, 1), s3 = sigma_of(sp, 2);
      auto ev = cf::trc_snnc_events(c, s2, s3);
      if (ev.both) return make({cf::trc_snnc(c, s2, s3).rate()}, "SNNC:both", sp);
      if (ev.only2)
        return make({cf::trc_snnc_single(c, s2).rate()}, "SNNC:only2", sp);
      if (ev.only3)
        return make({cf::trc_snnc_single(cf::trc_swap_relays(c), s3).rate()},
                    "SNNC:only3", sp);
      return make({cf::trc_all_noise(c)}, "SNNC:noise", sp);
    }
    case ChannelKind::Marc: {
      auto c = cf::marc_ch(g, p);
      double s3 = sigma_of(sp, 2);
      if (cf::marc_event_snnc(c, s3)) {
        auto b = cf::marc_cfs(c, s3);
        auto x = cf::marc_snnc_extra(c, s3);
        return make({std::min(b.d, x.g), std::min(b.e, x.h), std::min(b.f, x.i)},
                    "SNNC:decode", sp);
      }
      auto d = cf::marc_degraded(c);
      return make({d.d3, d.e3, d.f3}, "SNNC:noise", sp);
    }
    case ChannelKind::Twrc: {
      auto c = cf::twrc_ch(g, p);
      double s3 = sigma_of(sp, 2);
      auto b = cf::twrc_cfs(c, s3);
      auto x = cf::twrc_snnc_extra(c, s3);
      auto d = cf::twrc_degraded(c);
      bool e1 = cf::twrc_event_snnc_at2(c, s3);
      bool e2 = cf::twrc_event_snnc_at2(cf::twrc_swap_ends(c), s3);
      double r1 = e1 ? std::min(b.d, x.g) : d.d3;
      double r2 = e2 ? std::min(b.e, x.h) : d.e3;
      std::string br = std::string("SNNC:") + (e1 ? "decode" : "noise") + "/" +
                       (e2 ? "decode" : "noise");
      return make({r1, r2}, br, sp);
    }
  }
  throw std::logic_error("rate_snnc: bad kind");
}

RateOutcome rate_snnc_faded(ChannelKind k, const GainMatrix& g,
                            const std::vector<double>& p,
                            const StrategyParams& sp, const Targets&) {
  // The quantization-recovery events do not involve the targets, so the
  // realized-fading branches coincide with the deterministic evaluation.
  return rate_snnc(k, g, p, sp);
}

// ------------------------------------------------------------------ DQF --

RateOutcome rate_dqf(ChannelKind k, const GainMatrix& g,
                     const std::vector<double>& p, const StrategyParams& sp) {
  require(k == ChannelKind::TwoRelay, "dqf is defined for the two-relay channel");
  auto c = cf::trc_ch(g, p);
  auto eval = [&](int route) {
    double s = sp.dqf_sigma[static_cast<std::size_t>(route)];
    require(s > 0.0, "dqf quantization variance must be > 0");
    return cf::trc_dqf(c, route == 0 ? 2 : 3, sp.dqf_theta[static_cast<std::size_t>(route)], s)
        .rate();
  };
  if (sp.df_route >= 0)
    return make({eval(sp.df_route)}, sp.df_route == 0 ? "DQF1" : "DQF2", sp);
  double r0 = eval(0), r1 = eval(1);
  StrategyParams used = sp;
  used.df_route = r1 > r0 ? 1 : 0;
  return make({std::max(r0, r1)}, used.df_route == 0 ? "DQF1" : "DQF2", used);
}

// -------------------------------------------------------------- SNNC-DF --

RateOutcome rate_snnc_df(ChannelKind k, const GainMatrix& g,
                         const std::vector<double>& p,
                         const StrategyParams& sp) {
  std::vector<RateOutcome> cand;
  cand.push_back(rate_df(k, g, p, sp));
  if (k == ChannelKind::TwoRelay) {
    if (sp.dqf_sigma[0] > 0) {
      StrategyParams q = sp;
      q.df_route = 0;
      cand.push_back(rate_dqf(k, g, p, q));
    }
    if (sp.dqf_sigma[1] > 0) {
      StrategyParams q = sp;
      q.df_route = 1;
      cand.push_back(rate_dqf(k, g, p, q));
    }
  }
  cand.push_back(rate_snnc(k, g, p, sp));

  if (rate_components(k) == 1) {
    // scalar channels: definitional max, ties to the first label
    const RateOutcome* best = &cand[0];
    for (const auto& c : cand)
      if (c.rates[0] > best->rates[0]) best = &c;
    return *best;
  }
  // Two-user kinds: the mixed region is the union (its convex hull is taken
  // by the region layer); pointwise we report the set with the better
  // achievable sum.
  const RateOutcome* best = &cand[0];
  double bestsum = -1.0;
  for (const auto& c : cand) {
    double s = c.rates.size() >= 3 ? std::min(c.rates[2], c.rates[0] + c.rates[1])
                                   : c.rates[0] + c.rates[1];
    if (s > bestsum) { bestsum = s; best = &c; }
  }
  return *best;
}

RateOutcome rate_snnc_df_faded(ChannelKind k, const GainMatrix& g,
                               const std::vector<double>& p,
                               const StrategyParams& sp, const Targets& t) {
  switch (k) {
    case ChannelKind::Relay: {
      auto c = cf::relay_ch(g, p);
      if (cf::relay_event_df(c, sp.beta, t.r1)) {
        auto o = rate_df(k, g, p, sp);
        o.branch = "DF";
        return o;
      }
      return rate_snnc_faded(k, g, p, sp, t);
    }
    case ChannelKind::TwoRelay: {
      require(sp.df_route >= 0, "two-relay mixed strategy needs a fixed DF route");
      auto c = cf::trc_ch(g, p);
      auto v = cf::trc_df(c, sp.df_route == 0 ? 2 : 3, th(sp.theta, 0),
                          th(sp.theta, 1), th(sp.theta, 2), th(sp.theta2, 0),
                          th(sp.theta2, 1));
      if (t.r1 < v.v1 && t.r1 < v.v2) return make({v.rate()}, "DF", sp);
      if (sp.dqf_sigma[0] > 0) {
        auto d1 = cf::trc_dqf(c, 2, sp.dqf_theta[0], sp.dqf_sigma[0]);
        if (t.r1 < d1.v1) return make({d1.rate()}, "DQF1", sp);
      }
      if (sp.dqf_sigma[1] > 0) {
        auto d2 = cf::trc_dqf(c, 3, sp.dqf_theta[1], sp.dqf_sigma[1]);
        if (t.r1 < d2.v1) return make({d2.rate()}, "DQF2", sp);
      }
      return rate_snnc_faded(k, g, p, sp, t);
    }
    case ChannelKind::Marc: {
      auto c = cf::marc_ch(g, p);
      auto b = cf::marc_df(c, sp.beta, sp.gamma, th(sp.theta, 0), th(sp.theta, 1));
      if (t.r1 < b.a1 && t.r2 < b.b1 && t.sum() < b.c1) {
        auto o = rate_df(k, g, p, sp);
        o.branch = "DF";
        return o;
      }
      return rate_snnc_faded(k, g, p, sp, t);
    }
    case ChannelKind::Twrc: {
      auto c = cf::twrc_ch(g, p);
      auto b = cf::twrc_df(c, sp.beta, sp.gamma, th(sp.theta, 0), th(sp.theta, 1));
      if (t.r1 < b.a1 && t.r2 < b.b1 && t.sum() < b.csum)
        return make({b.r1(), b.r2()}, "DF", sp);
      return rate_snnc_faded(k, g, p, sp, t);
    }
  }
  throw std::logic_error("rate_snnc_df_faded: bad kind");
}

// ----------------------------------------------------------- dispatchers --

RateOutcome evaluate(Strategy s, ChannelKind k, const GainMatrix& g,
                     const std::vector<double>& p, const StrategyParams& sp) {
  switch (s) {
    case Strategy::Df: return rate_df(k, g, p, sp);
    case Strategy::CfS: return rate_cfs(k, g, p, sp);
    case Strategy::Snnc: return rate_snnc(k, g, p, sp);
    case Strategy::Dqf: return rate_dqf(k, g, p, sp);
    case Strategy::SnncDf: return rate_snnc_df(k, g, p, sp);
  }
  throw std::logic_error("evaluate: bad strategy");
}

RateOutcome evaluate_faded(Strategy s, ChannelKind k, const GainMatrix& g,
                           const std::vector<double>& p,
                           const StrategyParams& sp, const Targets& t) {
  switch (s) {
    case Strategy::Df: return rate_df_faded(k, g, p, sp, t);
    case Strategy::CfS: return rate_cfs_faded(k, g, p, sp, t);
    case Strategy::Snnc: return rate_snnc_faded(k, g, p, sp, t);
    case Strategy::Dqf: return rate_dqf(k, g, p, sp);
    case Strategy::SnncDf: return rate_snnc_df_faded(k, g, p, sp, t);
  }
  throw std::logic_error("evaluate_faded: bad strategy");
}

bool meets_targets(ChannelKind k, const RateOutcome& o, const Targets& t) {
  switch (k) {
    case ChannelKind::Relay:
    case ChannelKind::TwoRelay:
      return !(o.rates[0] < t.r1);
    case ChannelKind::Marc:
      return !(o.rates[0] < t.r1) && !(o.rates[1] < t.r2) &&
             !(o.rates[2] < t.sum());
    case ChannelKind::Twrc:
      return !(o.rates[0] < t.r1) && !(o.rates[1] < t.r2);
  }
  return false;
}

}  // namespace nnc
