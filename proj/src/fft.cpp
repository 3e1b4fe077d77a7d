#include "paprsim/fft.hpp"

#include <cmath>
#include <cstddef>
#include <unordered_map>
#include <utility>

namespace paprsim {
namespace {

// Forward roots of unity W[k] = exp(-j 2 pi k / n), cached per length.
// thread_local keeps the transform functions safe for concurrent callers.
const cvec& twiddle_table(std::size_t n) {
  thread_local std::unordered_map<std::size_t, cvec> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  cvec w(n);
  for (std::size_t k = 0; k < n; ++k) {
    double ang = -2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
    w[k] = cplx(std::cos(ang), std::sin(ang));
  }
  return cache.emplace(n, std::move(w)).first->second;
}

inline cplx root(const cvec& w, std::size_t idx, bool inverse) {
  return inverse ? std::conj(w[idx]) : w[idx];
}

// Iterative radix-2 decimation in time; n power of two. Twiddles come from
// the exact-index table, so no recurrence error accumulates across a stage.
void fft_pow2(cvec& a, bool inverse) {
  const std::size_t n = a.size();
  const cvec& w = twiddle_table(n);
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx u = a[i + k];
        cplx v = a[i + k + len / 2] * root(w, k * stride, inverse);
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

// General length: peel radix-2 stages recursively, direct DFT for the odd
// base. Exact at every length of the form 2^k * m.
void dft_raw(cvec& a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  if (is_power_of_two(n)) {
    fft_pow2(a, inverse);
    return;
  }
  if (n % 2 == 0) {
    const std::size_t h = n / 2;
    cvec even(h), odd(h);
    for (std::size_t i = 0; i < h; ++i) {
      even[i] = a[2 * i];
      odd[i] = a[2 * i + 1];
    }
    dft_raw(even, inverse);
    dft_raw(odd, inverse);
    const cvec& w = twiddle_table(n);
    for (std::size_t k = 0; k < h; ++k) {
      cplx t = odd[k] * root(w, k, inverse);
      a[k] = even[k] + t;
      a[k + h] = even[k] - t;
    }
    return;
  }
  const cvec& w = twiddle_table(n);
  cvec out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc(0.0, 0.0);
    for (std::size_t m = 0; m < n; ++m) acc += a[m] * root(w, (k * m) % n, inverse);
    out[k] = acc;
  }
  a = std::move(out);
}

void require_block_shape(const FrequencyBlock& X) {
  if (X.n_nominal <= 0 || !is_power_of_two(static_cast<std::size_t>(X.n_nominal)))
    throw config_error("transform length must be a power of two, got " +
                       std::to_string(X.n_nominal));
  if (X.bins.size() != static_cast<std::size_t>(X.n_nominal))
    throw input_error("frequency block has " + std::to_string(X.bins.size()) +
                      " bins, expected " + std::to_string(X.n_nominal));
}

void require_signal_shape(const TimeSignal& x) {
  if (x.n_nominal <= 0 || !is_power_of_two(static_cast<std::size_t>(x.n_nominal)))
    throw config_error("transform length must be a power of two, got " +
                       std::to_string(x.n_nominal));
  if (x.oversampling < 1) throw config_error("oversampling factor must be >= 1");
  if (x.samples.size() !=
      static_cast<std::size_t>(x.oversampling) * static_cast<std::size_t>(x.n_nominal))
    throw input_error("time signal has " + std::to_string(x.samples.size()) +
                      " samples, expected oversampling * n_nominal = " +
                      std::to_string(std::size_t(x.oversampling) * x.n_nominal));
}

}  // namespace

namespace detail {

void dft_unitary(cvec& a, bool inverse) {
  dft_raw(a, inverse);
  const double scale = 1.0 / std::sqrt(static_cast<double>(a.size()));
  for (cplx& v : a) v *= scale;
}

}  // namespace detail

TimeSignal inverse_transform(const FrequencyBlock& X) {
  require_block_shape(X);
  cvec a = X.bins;
  detail::dft_unitary(a, true);
  return TimeSignal{std::move(a), 1, X.n_nominal};
}

FrequencyBlock forward_transform(const TimeSignal& x) {
  require_signal_shape(x);
  cvec a = x.samples;
  detail::dft_unitary(a, false);
  return FrequencyBlock{std::move(a), x.n_nominal};
}

TimeSignal oversampled_synthesis(const FrequencyBlock& X, int oversampling) {
  require_block_shape(X);
  if (oversampling < 1) throw config_error("oversampling factor must be >= 1");
  if (oversampling == 1) return inverse_transform(X);

  const std::size_t n = X.bins.size();
  const std::size_t total = n * static_cast<std::size_t>(oversampling);
  const std::size_t half = n / 2;
  cvec padded(total, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < half; ++k) padded[k] = X.bins[k];
  for (std::size_t k = half; k < n; ++k) padded[total - n + k] = X.bins[k];

  detail::dft_unitary(padded, true);
  const double scale = std::sqrt(static_cast<double>(oversampling));
  for (cplx& v : padded) v *= scale;
  return TimeSignal{std::move(padded), oversampling, X.n_nominal};
}

FrequencyBlock oversampled_analysis(const TimeSignal& x) {
  require_signal_shape(x);
  const std::size_t n = static_cast<std::size_t>(x.n_nominal);
  const std::size_t total = x.samples.size();
  const std::size_t half = n / 2;

  cvec a = x.samples;
  detail::dft_unitary(a, false);
  const double scale = 1.0 / std::sqrt(static_cast<double>(x.oversampling));
  cvec bins(n);
  for (std::size_t k = 0; k < half; ++k) bins[k] = a[k] * scale;
  for (std::size_t k = half; k < n; ++k) bins[k] = a[total - n + k] * scale;
  return FrequencyBlock{std::move(bins), x.n_nominal};
}

}  // namespace paprsim
