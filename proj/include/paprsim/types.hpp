#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace paprsim {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

// Invalid configuration values (bad sizes, unknown keys). CLI exit code 1.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed operation input at run time. CLI exit code 2.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Side information inconsistent with the reduction method used.
class side_info_error : public input_error {
 public:
  using input_error::input_error;
};

// Channel with zero combined gain; Alamouti combining is undefined.
class degenerate_channel_error : public input_error {
 public:
  using input_error::input_error;
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Method { none, clip, slm, pts };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// One OFDM block in the frequency domain. `bins` is in DFT index order
/// (non-negative frequencies first, negative frequencies in the upper half).
/// For oversampled spectra bins.size() is a multiple of n_nominal.
struct FrequencyBlock {
  cvec bins;
  int n_nominal = 0;
};

/// A synthesized baseband signal of oversampling * n_nominal samples.
struct TimeSignal {
  cvec samples;
  int oversampling = 1;
  int n_nominal = 0;
};

}  // namespace paprsim
