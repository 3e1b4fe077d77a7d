#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "paprsim/config.hpp"
#include "paprsim/metrics.hpp"

namespace paprsim {

struct MethodResult {
  Method method = Method::none;
  CcdfCurve tx_ccdf;
  std::optional<CcdfCurve> rx_ccdf;
};

struct ResultSet {
  SimConfig config;
  CcdfCurve theory;
  std::vector<MethodResult> methods;
  std::string cr_note;  // clipping-ratio interpretation, present when clip runs
  std::string rx_note;  // receive-side model description, present when rx curves run
  double elapsed_seconds = 0.0;
};

/// Monte Carlo CCDF experiment over cfg.n_symbols trials. Each trial draws
/// its own random stream keyed by trial index, so the curves are identical
/// for any thread count. All enabled methods see the same source bits.
ResultSet run_ccdf_experiment(const SimConfig& cfg);

/// Columns: threshold_db, ccdf_theory, ccdf_<method>..., then
/// rx_ccdf_<method>... when receive-side curves were recorded. Six
/// significant digits.
void write_results_csv(const ResultSet& rs, std::ostream& os);

/// Mirrors the ResultSet: config echo (reloadable), seed, curves, notes.
void write_results_json(const ResultSet& rs, std::ostream& os);

/// Dispatch on format ("csv" | "json"); path "-" writes to stdout.
void write_results(const ResultSet& rs, const std::string& format, const std::string& path);

}  // namespace paprsim
