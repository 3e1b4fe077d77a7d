#include <fstream>
#include <iostream>
#include <ostream>

#include <json.hpp>

#include "paprsim/experiment.hpp"

namespace paprsim {
namespace {

std::string sig6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

nlohmann::json curve_json(const CcdfCurve& curve) {
  return nlohmann::json{{"thresholds_db", curve.thresholds_db},
                        {"probs", curve.probs},
                        {"n_samples", curve.n_samples}};
}

}  // namespace

void write_results_csv(const ResultSet& rs, std::ostream& os) {
  os << "threshold_db,ccdf_theory";
  for (const MethodResult& mr : rs.methods) os << ",ccdf_" << method_name(mr.method);
  if (rs.config.rx_ccdf)
    for (const MethodResult& mr : rs.methods) os << ",rx_ccdf_" << method_name(mr.method);
  os << "\n";

  const std::size_t rows = rs.theory.thresholds_db.size();
  for (std::size_t i = 0; i < rows; ++i) {
    os << sig6(rs.theory.thresholds_db[i]) << ',' << sig6(rs.theory.probs[i]);
    for (const MethodResult& mr : rs.methods) os << ',' << sig6(mr.tx_ccdf.probs[i]);
    if (rs.config.rx_ccdf)
      for (const MethodResult& mr : rs.methods) os << ',' << sig6(mr.rx_ccdf->probs[i]);
    os << "\n";
  }
}

void write_results_json(const ResultSet& rs, std::ostream& os) {
  nlohmann::json j;
  nlohmann::json cfg = nlohmann::json::object();
  for (const auto& [key, value] : config_entries(rs.config)) cfg[key] = value;
  j["config"] = cfg;
  j["seed"] = rs.config.seed;
  j["n_symbols"] = rs.config.n_symbols;
  j["thresholds_db"] = rs.theory.thresholds_db;
  j["theory"] = rs.theory.probs;

  nlohmann::json methods = nlohmann::json::array();
  for (const MethodResult& mr : rs.methods) {
    nlohmann::json entry;
    entry["method"] = method_name(mr.method);
    entry["tx_ccdf"] = curve_json(mr.tx_ccdf);
    if (mr.rx_ccdf) entry["rx_ccdf"] = curve_json(*mr.rx_ccdf);
    methods.push_back(std::move(entry));
  }
  j["methods"] = methods;

  nlohmann::json meta;
  if (!rs.cr_note.empty()) meta["cr_interpretation"] = rs.cr_note;
  if (!rs.rx_note.empty()) meta["rx_model"] = rs.rx_note;
  meta["elapsed_seconds"] = rs.elapsed_seconds;
  j["metadata"] = meta;

  os << j.dump(2) << "\n";
}

void write_results(const ResultSet& rs, const std::string& format, const std::string& path) {
  const auto emit = [&](std::ostream& os) {
    if (format == "json")
      write_results_json(rs, os);
    else if (format == "csv")
      write_results_csv(rs, os);
    else
      throw config_error("unknown output format '" + format + "'");
    if (!os) throw io_error("failed while writing results");
  };

  if (path == "-" || path.empty()) {
    emit(std::cout);
    std::cout.flush();
    if (!std::cout) throw io_error("failed while writing results to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open output file '" + path + "'");
  emit(out);
  out.close();
  if (!out) throw io_error("failed to finish writing '" + path + "'");
}

}  // namespace paprsim
