#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "paprsim/modem.hpp"
#include "paprsim/reduction.hpp"
#include "paprsim/types.hpp"

namespace paprsim {

enum class CarrierLayout { centered, inorder };

/// Full experiment configuration. The defaults reproduce the reference
/// setup: N = 512 with 301 used subcarriers, QPSK, oversampling 6, 2x2
/// antennas, CR 4 dB, U = 8 SLM routes, V = 8 PTS sub-blocks, 1000 symbols.
struct SimConfig {
  int n = 512;
  int n_used = 301;
  int oversampling = 6;
  int n_tx = 2;
  int n_rx = 2;
  std::vector<Method> methods{Method::none, Method::clip, Method::slm, Method::pts};
  ClipConfig clip{};
  bool cr_given_linear = false;
  int slm_routes = 8;
  PtsPlan pts{};
  int n_symbols = 1000;
  std::uint64_t seed = 1;
  double threshold_start = 4.0;
  double threshold_step = 0.1;
  double threshold_stop = 13.0;
  CarrierLayout layout = CarrierLayout::centered;
  bool rx_ccdf = false;
  double noise_power = 0.0;
  int threads = 1;
  std::string format = "csv";
  std::string out = "-";

  CarrierMap carrier_map() const;
  std::vector<double> threshold_grid() const;
};

/// 301 used carriers at N = 512 and 601 at N = 1024; other sizes scale the
/// 301/512 occupancy, rounded to the nearest odd count.
int default_n_used(int n);

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

/// Build a config from key=value entries applied over the defaults, last
/// entry winning. Keys use the CLI flag spelling (n, n-used, oversample,
/// methods, cr-db, cr-linear, ...). Unknown keys or invalid values raise
/// config_error naming the key.
SimConfig load_config(const ConfigEntries& entries);

/// Parse a flat UTF-8 key=value file ('#' starts a comment).
ConfigEntries parse_config_file(const std::string& path);

SimConfig load_config_file(const std::string& path, const ConfigEntries& overrides = {});

/// Canonical echo of every setting; feeding the result back through
/// load_config reproduces the same configuration.
ConfigEntries config_entries(const SimConfig& cfg);

void validate(const SimConfig& cfg);

}  // namespace paprsim
