#pragma once

#include <cstdint>

namespace bmmtc {

// Right-hand sides of the concentration statements, evaluated in log space so
// huge combinatorial prefactors cannot overflow. Values >= 1 are vacuous but
// returned as computed, never clamped.

/// 2^(d+1) e^(-beta n) with beta = tau^2 / (d^4 2^(d+1)).
double bound_mixture_low_tc(double n, int d, double tau);

/// 2^(d+1) e^(-beta d^2 n).
double bound_pure_high_tc(double n, int d, double tau);

/// 4^l_sep exp(-tau^2 n l_sep / (d^5 2^(d+1))).
double bound_mtc_mixture(double n, double l_sep, int d, double tau);

/// C(L,d) 2^(d+1) exp(-tau^2 n / (d^2 2^(d+1))).
double bound_mtc_pure(double n, double big_l, int d, double tau);

/// K e^(-n alpha^2 / 2): multinomial chance that some cluster falls below
/// half its expected size.
double min_cluster_bound(int k, double alpha, double n);

/// ceil((2/alpha^2) ln(3K/zeta)).
std::int64_t min_n_for_cluster_sizes(double alpha, int k, double zeta);

struct Theorem1Thresholds {
  double l_sep_min = 0.0;
  double n_min = 0.0;
};

/// Sample-size and informative-dimension thresholds with caller-supplied
/// constants; the statement leaves B and C symbolic, so defaults of 1 only
/// fix a scale for reporting.
Theorem1Thresholds theorem1_thresholds(double alpha, double delta, double epsilon, double zeta,
                                       double big_l, double b_const = 1.0, double c_const = 1.0);

/// ln C(n,k) via lgamma.
double log_binomial(double n, double k);

}  // namespace bmmtc
