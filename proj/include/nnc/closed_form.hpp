#pragma once

// Closed-form achievable-rate building blocks for the four canonical
// Gaussian channels (relay, two-relay, multiple-access relay, two-way
// relay).  Node numbering follows the channel layouts:
//   relay:      1 -> source, 2 -> relay, 3 -> destination
//   two-relay:  1 -> source, 2,3 -> relays, 4 -> destination
//   MARC:       1,2 -> sources, 3 -> relay, 4 -> destination
//   TWRC:       1,2 -> end nodes, 3 -> relay
// Every scalar below equals a log-det mutual-information evaluation of the
// same quantity on the matching Gaussian spec; the test oracle enforces
// that equivalence instance by instance.

#include <algorithm>
#include <cmath>
#include <complex>

#include "nnc/model.hpp"

namespace nnc::cf {

using cd = std::complex<double>;

inline double sq(cd z) { return std::norm(z); }
// 2 Re{a b^*}
inline double xre(cd a, cd b) { return 2.0 * std::real(a * std::conj(b)); }
inline double cbits(double snr) { return shannon_c(std::max(0.0, snr)); }

// ---------------------------------------------------------------- relay --

struct RelayCh {
  cd g12, g13, g23;
  double p1 = 0, p2 = 0;
};

inline RelayCh relay_ch(const GainMatrix& g, const std::vector<double>& p) {
  return {g(0, 1), g(0, 2), g(1, 2), p[0], p[1]};
}

// Decode-forward with source split beta: the relay-decode bound sees the
// fresh fraction 1-|beta|^2, the destination sees coherent combining.
struct RelayDf {
  double relay_decode, combine;
  double rate() const { return std::min(relay_decode, combine); }
};

inline RelayDf relay_df(const RelayCh& c, cd beta) {
  double rd = cbits(sq(c.g12) * c.p1 * (1.0 - sq(beta)));
  double co = cbits(sq(c.g13) * c.p1 + sq(c.g23) * c.p2 +
                    xre(beta * c.g13, c.g23) * std::sqrt(c.p1 * c.p2));
  return {rd, co};
}

// Destination decodes relay signal and quantization index jointly.
inline double relay_quantized(const RelayCh& c, double s2) {
  return cbits(sq(c.g12) * c.p1 / (1.0 + s2) + sq(c.g13) * c.p1);
}
inline double relay_joint(const RelayCh& c, double s2) {
  return cbits(sq(c.g13) * c.p1 + sq(c.g23) * c.p2) - cbits(1.0 / s2);
}
// Relay signal decoded but quantization dropped.
inline double relay_direct(const RelayCh& c) { return cbits(sq(c.g13) * c.p1); }
// Relay signal treated as noise.
inline double relay_as_noise(const RelayCh& c) {
  return cbits(sq(c.g13) * c.p1 / (1.0 + sq(c.g23) * c.p2));
}
// Bin rate the destination can absorb, and the rate the quantizer needs.
inline double relay_bin_capacity(const RelayCh& c) {
  return cbits(sq(c.g23) * c.p2 / (1.0 + sq(c.g13) * c.p1));
}
inline double relay_bin_requirement(const RelayCh& c, double s2) {
  return cbits(1.0 / s2 +
               sq(c.g12) * c.p1 / (s2 * (1.0 + sq(c.g13) * c.p1)));
}
inline bool relay_event_snnc(const RelayCh& c, double s2) {
  return s2 >= 1.0 / (sq(c.g23) * c.p2);
}
inline bool relay_event_df(const RelayCh& c, cd beta, double rtar) {
  return rtar < cbits(sq(c.g12) * c.p1 * (1.0 - sq(beta)));
}

// ------------------------------------------------------------ two-relay --

struct TwoRelayCh {
  cd g12, g13, g14, g23, g24, g32, g34;
  double p1 = 0, p2 = 0, p3 = 0;
};

inline TwoRelayCh trc_ch(const GainMatrix& g, const std::vector<double>& p) {
  return {g(0, 1), g(0, 2), g(0, 3), g(1, 2), g(1, 3), g(2, 1), g(2, 3),
          p[0],    p[1],    p[2]};
}

// Exchange the two relay labels; lets every two-relay expression be written
// once for the "relay 2 first" orientation.
inline TwoRelayCh trc_swap_relays(const TwoRelayCh& c) {
  return {c.g13, c.g12, c.g14, c.g32, c.g34, c.g23, c.g24, c.p1, c.p3, c.p2};
}

struct Triple {
  double v1, v2, v3;
  double rate() const { return std::min({v1, v2, v3}); }
};

// Decode-forward, relay 2 decoding first.  Source layers (b1,b2,b3) with
// sum |b_i|^2 = 1, relay-2 layers (h1,h2) with sum |h_i|^2 = 1; relay 3
// carries the outermost layer alone.
inline Triple trc_df_first2(const TwoRelayCh& c, cd b1, cd b2, cd b3, cd h1,
                            cd h2) {
  double s12 = std::sqrt(c.p1 * c.p2), s13 = std::sqrt(c.p1 * c.p3),
         s23 = std::sqrt(c.p2 * c.p3);
  double v1 = cbits(sq(b1) * sq(c.g12) * c.p1);
  double v2 = cbits((1.0 - sq(b3)) * sq(c.g13) * c.p1 +
                    sq(h1) * sq(c.g23) * c.p2 +
                    xre(b2 * c.g13, h1 * c.g23) * s12);
  double v3 = cbits(sq(c.g14) * c.p1 + sq(c.g24) * c.p2 + sq(c.g34) * c.p3 +
                    (xre(b2 * c.g14, h1 * c.g24) + xre(b3 * c.g14, h2 * c.g24)) * s12 +
                    xre(b3 * c.g14, c.g34) * s13 +
                    xre(h2 * c.g24, c.g34) * s23);
  return {v1, v2, v3};
}

inline Triple trc_df(const TwoRelayCh& c, int first_relay, cd b1, cd b2, cd b3,
                     cd h1, cd h2) {
  return first_relay == 2 ? trc_df_first2(c, b1, b2, b3, h1, h2)
                          : trc_df_first2(trc_swap_relays(c), b1, b2, b3, h1, h2);
}

// Step-by-step compress-forward: destination decode bound, the three bin
// capacities and the three quantization-rate requirements.
inline double trc_cfs_decode(const TwoRelayCh& c, double s2, double s3) {
  return cbits(sq(c.g12) * c.p1 / (1.0 + s2) + sq(c.g13) * c.p1 / (1.0 + s3) +
               sq(c.g14) * c.p1);
}
struct TrcBinCaps {
  double r2, r3, sum;  // bin-rate room for relay 2, relay 3, both
};
inline TrcBinCaps trc_bin_caps(const TwoRelayCh& c) {
  double den = 1.0 + sq(c.g14) * c.p1;
  return {cbits(sq(c.g24) * c.p2 / den), cbits(sq(c.g34) * c.p3 / den),
          cbits((sq(c.g24) * c.p2 + sq(c.g34) * c.p3) / den)};
}
struct TrcBinReqs {
  double r2, r3, sum;
};
inline TrcBinReqs trc_bin_reqs(const TwoRelayCh& c, double s2, double s3) {
  double g2 = cbits(1.0 / s2 + sq(c.g12) * c.p1 /
                                   (s2 * (1.0 + sq(c.g13) * c.p1 / (1.0 + s3) +
                                          sq(c.g14) * c.p1)));
  double h2 = cbits(1.0 / s3 + sq(c.g13) * c.p1 /
                                   (s3 * (1.0 + sq(c.g12) * c.p1 / (1.0 + s2) +
                                          sq(c.g14) * c.p1)));
  double i2 = cbits((1.0 + s2 + s3) / (s2 * s3) +
                    (sq(c.g12) * c.p1 * (1.0 + s3) + sq(c.g13) * c.p1 * (1.0 + s2)) /
                        (s2 * s3 * (1.0 + sq(c.g14) * c.p1)));
  return {g2, h2, i2};
}

// Joint-decoding bounds when both quantization indices are recovered.
struct TrcSnnc {
  double decode, with2, with3, all;  // helper-set bounds {1},{1,2},{1,3},{1,2,3}
  double rate() const { return std::min({decode, with2, with3, all}); }
};
inline TrcSnnc trc_snnc(const TwoRelayCh& c, double s2, double s3) {
  double j21;
  {
    double quad = sq(c.g13) * sq(c.g24) + sq(c.g14) * sq(c.g23) -
                  xre(c.g13 * c.g24, c.g14 * c.g23);
    j21 = cbits(sq(c.g14) * c.p1 + sq(c.g24) * c.p2 +
                (sq(c.g13) * c.p1 + sq(c.g23) * c.p2) / (1.0 + s3) +
                c.p1 * c.p2 * std::max(0.0, quad) / (1.0 + s3)) -
          cbits(1.0 / s2);
  }
  double j22;
  {
    double quad = sq(c.g12) * sq(c.g34) + sq(c.g14) * sq(c.g32) -
                  xre(c.g12 * c.g34, c.g14 * c.g32);
    j22 = cbits(sq(c.g14) * c.p1 + sq(c.g34) * c.p3 +
                (sq(c.g12) * c.p1 + sq(c.g32) * c.p3) / (1.0 + s2) +
                c.p1 * c.p3 * std::max(0.0, quad) / (1.0 + s2)) -
          cbits(1.0 / s3);
  }
  double j23 = cbits(sq(c.g14) * c.p1 + sq(c.g24) * c.p2 + sq(c.g34) * c.p3) -
               cbits((1.0 + s2 + s3) / (s2 * s3));
  return {trc_cfs_decode(c, s2, s3), j21, j22, j23};
}

// Only relay 2's quantization decodable; relay 3 treated as noise.
struct Pair {
  double v1, v2;
  double rate() const { return std::min(v1, v2); }
};
inline Pair trc_snnc_single(const TwoRelayCh& c, double s2) {
  double quad = sq(c.g12) * sq(c.g34) - xre(c.g12 * c.g34, c.g14 * c.g32);
  double den = sq(c.g32) * c.p3 + (1.0 + s2) * (1.0 + sq(c.g34) * c.p3);
  double m21 = cbits((c.p1 * (sq(c.g12) + (1.0 + s2) * sq(c.g14)) +
                      c.p1 * c.p3 * sq(c.g14) * sq(c.g32) +
                      c.p1 * c.p3 * quad) /
                     den);
  double m22 = cbits((sq(c.g14) * c.p1 + sq(c.g24) * c.p2) /
                     (1.0 + sq(c.g34) * c.p3)) -
               cbits(1.0 / s2 +
                     sq(c.g32) * c.p3 / (s2 * (1.0 + sq(c.g34) * c.p3)));
  return {m21, m22};
}

// Both relay signals decoded, quantizations dropped / everything as noise.
inline double trc_interference_free(const TwoRelayCh& c) {
  return cbits(sq(c.g14) * c.p1);
}
inline double trc_all_noise(const TwoRelayCh& c) {
  return cbits(sq(c.g14) * c.p1 /
               (1.0 + sq(c.g24) * c.p2 + sq(c.g34) * c.p3));
}

struct TrcSnncEvents {
  bool both;     // both quantization indices recoverable
  bool only2;    // relay 2's recoverable with relay 3 as noise
  bool only3;
};
inline TrcSnncEvents trc_snnc_events(const TwoRelayCh& c, double s2, double s3) {
  bool e1 = sq(c.g24) * c.p2 + sq(c.g23) * c.p2 / (1.0 + s3) >= 1.0 / s2;
  bool e2 = sq(c.g34) * c.p3 + sq(c.g32) * c.p3 / (1.0 + s2) >= 1.0 / s3;
  bool e3 = sq(c.g24) * c.p2 + sq(c.g34) * c.p3 >=
            1.0 / s2 + 1.0 / s3 + 1.0 / (s2 * s3);
  bool only2 = s2 >= (1.0 + sq(c.g32) * c.p3 + sq(c.g34) * c.p3) /
                         (sq(c.g24) * c.p2);
  bool only3 = s3 >= (1.0 + sq(c.g23) * c.p2 + sq(c.g24) * c.p2) /
                         (sq(c.g34) * c.p3);
  return {e1 && e2 && e3, only2, only3};
}

// Mixed route: relay 2 decodes (source split theta toward it), relay 3
// quantizes with variance s3.
inline Triple trc_dqf_first2(const TwoRelayCh& c, cd theta, double s3) {
  double s12 = std::sqrt(c.p1 * c.p2);
  double v1 = cbits(sq(c.g12) * c.p1 * (1.0 - sq(theta)) /
                    (1.0 + sq(c.g32) * c.p3));
  double quad = sq(c.g13) * sq(c.g24) + sq(c.g14) * sq(c.g23) -
                xre(c.g13 * c.g24, c.g14 * c.g23);
  double v2 = cbits(sq(c.g14) * c.p1 + sq(c.g24) * c.p2 +
                    xre(theta * c.g14, c.g24) * s12 +
                    (sq(c.g13) * c.p1 + sq(c.g23) * c.p2 +
                     xre(theta * c.g13, c.g23) * s12) /
                        (1.0 + s3) +
                    (1.0 - sq(theta)) * c.p1 * c.p2 * std::max(0.0, quad) /
                        (1.0 + s3));
  double v3 = cbits(sq(c.g14) * c.p1 + sq(c.g24) * c.p2 + sq(c.g34) * c.p3 +
                    xre(theta * c.g14, c.g24) * s12) -
              cbits(1.0 / s3);
  return {v1, v2, v3};
}

inline Triple trc_dqf(const TwoRelayCh& c, int df_relay, cd theta,
                      double s_other) {
  return df_relay == 2 ? trc_dqf_first2(c, theta, s_other)
                       : trc_dqf_first2(trc_swap_relays(c), theta, s_other);
}

// ----------------------------------------------------------------- MARC --

struct MarcCh {
  cd g13, g14, g23, g24, g34;
  double p1 = 0, p2 = 0, p3 = 0;
};

inline MarcCh marc_ch(const GainMatrix& g, const std::vector<double>& p) {
  return {g(0, 2), g(0, 3), g(1, 2), g(1, 3), g(2, 3), p[0], p[1], p[2]};
}

inline MarcCh marc_swap_sources(const MarcCh& c) {
  return {c.g23, c.g24, c.g13, c.g14, c.g34, c.p2, c.p1, c.p3};
}

// Decode-forward bounds (individual source bound at the relay and at the
// destination); theta splits the relay power across the two cooperation
// layers, |t1|^2 + |t2|^2 = 1.
struct MarcDf {
  double a1, a2;  // R1 bounds
  double b1, b2;  // R2 bounds
  double c1, c2;  // sum bounds
  double r1() const { return std::min(a1, a2); }
  double r2() const { return std::min(b1, b2); }
  double rsum() const { return std::min(c1, c2); }
};

inline MarcDf marc_df(const MarcCh& c, cd beta, cd gamma, cd t1, cd t2) {
  double s13 = std::sqrt(c.p1 * c.p3), s23 = std::sqrt(c.p2 * c.p3);
  MarcDf o;
  o.a1 = cbits(sq(c.g13) * c.p1 * (1.0 - sq(beta)));
  o.a2 = cbits(sq(c.g14) * c.p1 + sq(c.g34) * c.p3 +
               xre(beta * c.g14, t1 * c.g34) * s13);
  o.b1 = cbits(sq(c.g23) * c.p2 * (1.0 - sq(gamma)));
  o.b2 = cbits(sq(c.g24) * c.p2 + sq(c.g34) * c.p3 +
               xre(gamma * c.g24, t2 * c.g34) * s23);
  o.c1 = cbits(sq(c.g13) * c.p1 * (1.0 - sq(beta)) +
               sq(c.g23) * c.p2 * (1.0 - sq(gamma)));
  o.c2 = cbits(sq(c.g14) * c.p1 + sq(c.g24) * c.p2 + sq(c.g34) * c.p3 +
               xre(beta * c.g14, t1 * c.g34) * s13 +
               xre(gamma * c.g24, t2 * c.g34) * s23);
  return o;
}

inline double marc_quad(const MarcCh& c) {
  return std::max(0.0, sq(c.g13) * sq(c.g24) + sq(c.g14) * sq(c.g23) -
                           xre(c.g13 * c.g24, c.g14 * c.g23));
}

// Compress-forward bounds with quantization variance s3.
struct MarcCfs {
  double d, e, f;  // R1, R2, sum
};
inline MarcCfs marc_cfs(const MarcCh& c, double s3) {
  double d = cbits(sq(c.g13) * c.p1 / (1.0 + s3) + sq(c.g14) * c.p1);
  double e = cbits(sq(c.g23) * c.p2 / (1.0 + s3) + sq(c.g24) * c.p2);
  double f = cbits(sq(c.g14) * c.p1 + sq(c.g24) * c.p2 +
                   (sq(c.g13) * c.p1 + sq(c.g23) * c.p2) / (1.0 + s3) +
                   c.p1 * c.p2 * marc_quad(c) / (1.0 + s3));
  return {d, e, f};
}

// Smallest quantization variance for which bin and quantization indices can
// be conveyed step by step.
inline double marc_cfs_sigma_min(const MarcCh& c) {
  return (1.0 + (sq(c.g13) + sq(c.g14)) * c.p1 +
          (sq(c.g23) + sq(c.g24)) * c.p2 + c.p1 * c.p2 * marc_quad(c)) /
         (sq(c.g34) * c.p3);
}

struct MarcDegraded {
  double d2, d3, e2, e3, f2, f3;  // relay decoded / relay as noise
};
inline MarcDegraded marc_degraded(const MarcCh& c) {
  double den = 1.0 + sq(c.g34) * c.p3;
  return {cbits(sq(c.g14) * c.p1),
          cbits(sq(c.g14) * c.p1 / den),
          cbits(sq(c.g24) * c.p2),
          cbits(sq(c.g24) * c.p2 / den),
          cbits(sq(c.g14) * c.p1 + sq(c.g24) * c.p2),
          cbits((sq(c.g14) * c.p1 + sq(c.g24) * c.p2) / den)};
}

struct MarcSnncExtra {
  double g, h, i;  // bounds adding the relay's signal to each set
};
inline MarcSnncExtra marc_snnc_extra(const MarcCh& c, double s3) {
  double pen = cbits(1.0 / s3);
  return {cbits(sq(c.g14) * c.p1 + sq(c.g34) * c.p3) - pen,
          cbits(sq(c.g24) * c.p2 + sq(c.g34) * c.p3) - pen,
          cbits(sq(c.g14) * c.p1 + sq(c.g24) * c.p2 + sq(c.g34) * c.p3) - pen};
}

inline bool marc_event_snnc(const MarcCh& c, double s3) {
  return s3 >= 1.0 / (sq(c.g34) * c.p3);
}
inline double marc_bin_capacity(const MarcCh& c) {
  return cbits(sq(c.g34) * c.p3 /
               (1.0 + sq(c.g14) * c.p1 + sq(c.g24) * c.p2));
}
inline double marc_bin_requirement(const MarcCh& c, double s3) {
  double den = 1.0 + sq(c.g14) * c.p1 + sq(c.g24) * c.p2;
  return cbits(1.0 / s3 + (sq(c.g13) * c.p1 + sq(c.g23) * c.p2) / (s3 * den) +
               c.p1 * c.p2 * marc_quad(c) / (s3 * den));
}

// ----------------------------------------------------------------- TWRC --

struct TwrcCh {
  cd g12, g13, g21, g23, g31, g32;
  double p1 = 0, p2 = 0, p3 = 0;
};

inline TwrcCh twrc_ch(const GainMatrix& g, const std::vector<double>& p) {
  return {g(0, 1), g(0, 2), g(1, 0), g(1, 2), g(2, 0), g(2, 1),
          p[0],    p[1],    p[2]};
}

inline TwrcCh twrc_swap_ends(const TwrcCh& c) {
  return {c.g21, c.g23, c.g12, c.g13, c.g32, c.g31, c.p2, c.p1, c.p3};
}

// Decode-forward; relay splits power t1/t2 across the two directions.  The
// message-1 bound at node 2 sees the relay's layer-1 power |t1|^2 P3 and
// the coherent cross term through the same layer.
struct TwrcDf {
  double a1, a2, b1, b2, csum;
  double r1() const { return std::min(a1, a2); }
  double r2() const { return std::min(b1, b2); }
};
inline TwrcDf twrc_df(const TwrcCh& c, cd beta, cd gamma, cd t1, cd t2) {
  TwrcDf o;
  o.a1 = cbits(sq(c.g13) * c.p1 * (1.0 - sq(beta)));
  o.a2 = cbits(sq(c.g12) * c.p1 + sq(t1) * sq(c.g32) * c.p3 +
               xre(beta * c.g12, t1 * c.g32) * std::sqrt(c.p1 * c.p3));
  o.b1 = cbits(sq(c.g23) * c.p2 * (1.0 - sq(gamma)));
  o.b2 = cbits(sq(c.g21) * c.p2 + sq(t2) * sq(c.g31) * c.p3 +
               xre(gamma * c.g21, t2 * c.g31) * std::sqrt(c.p2 * c.p3));
  o.csum = cbits(sq(c.g13) * c.p1 * (1.0 - sq(beta)) +
                 sq(c.g23) * c.p2 * (1.0 - sq(gamma)));
  return o;
}

struct TwrcCfs {
  double d, e;  // R1 (at node 2), R2 (at node 1)
};
inline TwrcCfs twrc_cfs(const TwrcCh& c, double s3) {
  return {cbits(sq(c.g12) * c.p1 + sq(c.g13) * c.p1 / (1.0 + s3)),
          cbits(sq(c.g21) * c.p2 + sq(c.g23) * c.p2 / (1.0 + s3))};
}

// Four feasibility floors for the common bin rate (quantization rate of
// each destination vs bin-decoding room at each destination).
struct TwrcCfsFloors {
  double f1, f2, f3, f4;
  double max() const { return std::max({f1, f2, f3, f4}); }
};
inline TwrcCfsFloors twrc_cfs_floors(const TwrcCh& c) {
  TwrcCfsFloors o;
  o.f1 = (1.0 + sq(c.g12) * c.p1 + sq(c.g13) * c.p1) / (sq(c.g32) * c.p3);
  o.f2 = (sq(c.g21) * c.p2 + 1.0) / (sq(c.g31) * c.p3) +
         sq(c.g13) * c.p1 * (sq(c.g21) * c.p2 + 1.0) /
             (sq(c.g31) * c.p3 * (sq(c.g12) * c.p1 + 1.0));
  o.f3 = (1.0 + sq(c.g21) * c.p2 + sq(c.g23) * c.p2) / (sq(c.g31) * c.p3);
  o.f4 = (sq(c.g12) * c.p1 + 1.0) / (sq(c.g32) * c.p3) +
         sq(c.g23) * c.p2 * (sq(c.g12) * c.p1 + 1.0) /
             (sq(c.g32) * c.p3 * (sq(c.g21) * c.p2 + 1.0));
  return o;
}

struct TwrcSnncExtra {
  double g, h;
};
inline TwrcSnncExtra twrc_snnc_extra(const TwrcCh& c, double s3) {
  double pen = cbits(1.0 / s3);
  return {cbits(sq(c.g12) * c.p1 + sq(c.g32) * c.p3) - pen,
          cbits(sq(c.g21) * c.p2 + sq(c.g31) * c.p3) - pen};
}

struct TwrcDegraded {
  double d2, d3, e2, e3;  // relay decoded / relay as noise, per direction
};
inline TwrcDegraded twrc_degraded(const TwrcCh& c) {
  return {cbits(sq(c.g12) * c.p1),
          cbits(sq(c.g12) * c.p1 / (1.0 + sq(c.g32) * c.p3)),
          cbits(sq(c.g21) * c.p2),
          cbits(sq(c.g21) * c.p2 / (1.0 + sq(c.g31) * c.p3))};
}

// Bin thresholds seen at destination 2 (message 1 direction).
inline double twrc_bin_capacity_at2(const TwrcCh& c) {
  return cbits(sq(c.g32) * c.p3 / (1.0 + sq(c.g12) * c.p1));
}
inline double twrc_bin_requirement_at2(const TwrcCh& c, double s3) {
  return cbits(1.0 / s3 +
               sq(c.g13) * c.p1 / (s3 * (1.0 + sq(c.g12) * c.p1)));
}
inline bool twrc_event_snnc_at2(const TwrcCh& c, double s3) {
  return s3 >= 1.0 / (sq(c.g32) * c.p3);
}

}  // namespace nnc::cf
