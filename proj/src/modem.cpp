#include "paprsim/modem.hpp"

#include <cmath>

namespace paprsim {
namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

CarrierMap CarrierMap::centered(int n_total, int n_used) {
  if (n_total <= 0 || !is_power_of_two(static_cast<std::size_t>(n_total)))
    throw config_error("carrier map size must be a power of two, got " + std::to_string(n_total));
  if (n_used < 1 || n_used > n_total)
    throw config_error("used subcarrier count " + std::to_string(n_used) +
                       " must be in [1, " + std::to_string(n_total) + "]");
  CarrierMap map;
  map.n_total = n_total;
  map.n_used = n_used;
  map.occupied.reserve(n_used);
  const int lo = -((n_used - 1) / 2);
  const int hi = n_used / 2;
  for (int k = lo; k <= hi; ++k) map.occupied.push_back(k >= 0 ? k : k + n_total);
  return map;
}

CarrierMap CarrierMap::inorder(int n_total, int n_used) {
  if (n_total <= 0 || !is_power_of_two(static_cast<std::size_t>(n_total)))
    throw config_error("carrier map size must be a power of two, got " + std::to_string(n_total));
  if (n_used < 1 || n_used > n_total)
    throw config_error("used subcarrier count " + std::to_string(n_used) +
                       " must be in [1, " + std::to_string(n_total) + "]");
  CarrierMap map;
  map.n_total = n_total;
  map.n_used = n_used;
  map.occupied.resize(n_used);
  for (int i = 0; i < n_used; ++i) map.occupied[i] = i;
  return map;
}

cvec qpsk_modulate(const BitBlock& bits) {
  if (bits.size() % 2 != 0)
    throw input_error("QPSK needs an even bit count, got " + std::to_string(bits.size()));
  cvec symbols(bits.size() / 2);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const int b0 = bits[2 * i] & 1;
    const int b1 = bits[2 * i + 1] & 1;
    symbols[i] = cplx(b1 ? -kInvSqrt2 : kInvSqrt2, b0 ? -kInvSqrt2 : kInvSqrt2);
  }
  return symbols;
}

BitBlock qpsk_demodulate(const cvec& symbols) {
  BitBlock bits(symbols.size() * 2);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    bits[2 * i] = symbols[i].imag() < 0.0 ? 1 : 0;
    bits[2 * i + 1] = symbols[i].real() < 0.0 ? 1 : 0;
  }
  return bits;
}

FrequencyBlock map_to_subcarriers(const cvec& symbols, const CarrierMap& map) {
  if (symbols.size() != static_cast<std::size_t>(map.n_used))
    throw input_error("symbol count " + std::to_string(symbols.size()) +
                      " does not match map.n_used = " + std::to_string(map.n_used));
  FrequencyBlock X{cvec(map.n_total, cplx(0.0, 0.0)), map.n_total};
  for (std::size_t i = 0; i < symbols.size(); ++i) X.bins[map.occupied[i]] = symbols[i];
  return X;
}

cvec extract_from_subcarriers(const FrequencyBlock& X, const CarrierMap& map) {
  if (X.bins.size() != static_cast<std::size_t>(map.n_total))
    throw input_error("block length " + std::to_string(X.bins.size()) +
                      " does not match map.n_total = " + std::to_string(map.n_total));
  cvec symbols(map.n_used);
  for (int i = 0; i < map.n_used; ++i) symbols[i] = X.bins[map.occupied[i]];
  return symbols;
}

BitBlock generate_bits(RandomStream& stream, int count) {
  if (count < 0) throw input_error("bit count must be >= 0");
  BitBlock bits(count);
  for (int i = 0; i < count; ++i) bits[i] = static_cast<std::uint8_t>(stream.next_bit());
  return bits;
}

}  // namespace paprsim
