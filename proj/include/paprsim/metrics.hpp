#pragma once

#include <vector>

#include "paprsim/types.hpp"

namespace paprsim {

/// Peak-to-average power ratio, carried in linear form with its dB value.
struct PaprValue {
  double linear = 1.0;
  double db = 0.0;
};

PaprValue make_papr(double linear);

/// max_n |x(n)|^2 / mean_n |x(n)|^2. All-zero input has no defined PAPR.
PaprValue compute_papr(const TimeSignal& x);

/// Whole-system PAPR: maximum over the per-antenna values (linear domain).
PaprValue mimo_papr(const std::vector<PaprValue>& per_antenna);

/// Empirical exceedance curve Pr(PAPR > threshold).
struct CcdfCurve {
  std::vector<double> thresholds_db;
  std::vector<double> probs;
  long n_samples = 0;
};

/// Strict-inequality exceedance counts of samples_db over an ascending
/// threshold grid.
CcdfCurve empirical_ccdf(const std::vector<double>& samples_db,
                         const std::vector<double>& thresholds_db);

/// Reference curve for n_samples_per_symbol independent Gaussian samples per
/// antenna: 1 - (1 - exp(-g))^(n_tx * N) with g the linear threshold.
double theoretical_ccdf(int n_samples_per_symbol, int n_tx, double threshold_db);

/// Threshold (dB) where the curve crosses probability p, interpolated
/// linearly in (threshold, log10 prob) on the grid.
double threshold_at_probability(const CcdfCurve& curve, double p);

/// Inverts theoretical_ccdf in threshold by bisection.
double theory_threshold_at_probability(int n_samples_per_symbol, int n_tx, double p);

}  // namespace paprsim
