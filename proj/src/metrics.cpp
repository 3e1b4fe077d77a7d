#include "paprsim/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace paprsim {

PaprValue make_papr(double linear) {
  if (!(linear >= 1.0 - 1e-9))
    throw input_error("PAPR below 1 is impossible, got " + std::to_string(linear));
  return PaprValue{linear, 10.0 * std::log10(linear)};
}

PaprValue compute_papr(const TimeSignal& x) {
  double peak = 0.0;
  double sum = 0.0;
  for (const cplx& v : x.samples) {
    const double p = std::norm(v);
    peak = std::max(peak, p);
    sum += p;
  }
  if (sum == 0.0) throw input_error("PAPR of the all-zero signal is undefined");
  const double mean = sum / static_cast<double>(x.samples.size());
  return make_papr(peak / mean);
}

PaprValue mimo_papr(const std::vector<PaprValue>& per_antenna) {
  if (per_antenna.empty()) throw input_error("mimo_papr needs at least one antenna value");
  double linear = per_antenna.front().linear;
  for (const PaprValue& v : per_antenna) linear = std::max(linear, v.linear);
  return make_papr(linear);
}

CcdfCurve empirical_ccdf(const std::vector<double>& samples_db,
                         const std::vector<double>& thresholds_db) {
  if (samples_db.empty()) throw input_error("empirical_ccdf needs at least one sample");
  for (std::size_t i = 1; i < thresholds_db.size(); ++i)
    if (!(thresholds_db[i] > thresholds_db[i - 1]))
      throw input_error("thresholds must be strictly ascending");

  std::vector<double> sorted = samples_db;
  std::sort(sorted.begin(), sorted.end());
  CcdfCurve curve;
  curve.thresholds_db = thresholds_db;
  curve.n_samples = static_cast<long>(samples_db.size());
  curve.probs.reserve(thresholds_db.size());
  for (double t : thresholds_db) {
    const auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), t);
    curve.probs.push_back(static_cast<double>(above) / static_cast<double>(sorted.size()));
  }
  return curve;
}

double theoretical_ccdf(int n_samples_per_symbol, int n_tx, double threshold_db) {
  if (n_samples_per_symbol < 1 || n_tx < 1)
    throw input_error("theoretical_ccdf needs N >= 1 and n_tx >= 1");
  const double gamma = std::pow(10.0, threshold_db / 10.0);
  const double exponent = static_cast<double>(n_tx) * static_cast<double>(n_samples_per_symbol);
  return -std::expm1(exponent * std::log1p(-std::exp(-gamma)));
}

double threshold_at_probability(const CcdfCurve& curve, double p) {
  if (curve.thresholds_db.empty()) throw input_error("empty curve");
  if (!(p > 0.0 && p < 1.0)) throw input_error("probability level must be in (0, 1)");
  const auto& t = curve.thresholds_db;
  const auto& pr = curve.probs;
  if (pr.front() <= p) return t.front();
  for (std::size_t i = 1; i < pr.size(); ++i) {
    if (pr[i] <= p) {
      // Interpolate in log-probability; a drop to zero has no log, so fall
      // back to the last threshold still above p.
      if (pr[i] <= 0.0) return t[i - 1];
      const double l0 = std::log10(pr[i - 1]);
      const double l1 = std::log10(pr[i]);
      const double lp = std::log10(p);
      if (l0 == l1) return t[i];
      return t[i - 1] + (t[i] - t[i - 1]) * (l0 - lp) / (l0 - l1);
    }
  }
  return t.back();
}

double theory_threshold_at_probability(int n_samples_per_symbol, int n_tx, double p) {
  if (!(p > 0.0 && p < 1.0)) throw input_error("probability level must be in (0, 1)");
  double lo = -10.0, hi = 20.0;
  while (theoretical_ccdf(n_samples_per_symbol, n_tx, hi) > p) hi += 10.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (theoretical_ccdf(n_samples_per_symbol, n_tx, mid) > p)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace paprsim
