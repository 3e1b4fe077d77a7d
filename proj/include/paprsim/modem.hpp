#pragma once

#include <vector>

#include "paprsim/rng.hpp"
#include "paprsim/types.hpp"

namespace paprsim {

using BitBlock = std::vector<std::uint8_t>;

/// Placement of n_used data symbols onto n_total DFT bins. `occupied` lists
/// bin indices in frequency order, negative frequencies first, so adjacent
/// entries are adjacent subcarriers.
struct CarrierMap {
  int n_total = 0;
  int n_used = 0;
  std::vector<int> occupied;

  /// Centered band k in {-floor((n_used-1)/2), ..., +floor(n_used/2)}
  /// including DC. 301 carriers at N = 512 give bins {0..150, 362..511}.
  static CarrierMap centered(int n_total, int n_used);

  /// Bins 0..n_used-1 in natural index order. Mainly for small fully
  /// occupied blocks where the centered split is not wanted.
  static CarrierMap inorder(int n_total, int n_used);
};

/// Gray-coded QPSK, unit symbol energy:
/// 00 -> (+1+j)/sqrt2, 01 -> (-1+j)/sqrt2, 11 -> (-1-j)/sqrt2, 10 -> (+1-j)/sqrt2.
cvec qpsk_modulate(const BitBlock& bits);

/// Hard minimum-distance decision; axis ties resolve to bit 0.
BitBlock qpsk_demodulate(const cvec& symbols);

FrequencyBlock map_to_subcarriers(const cvec& symbols, const CarrierMap& map);

cvec extract_from_subcarriers(const FrequencyBlock& X, const CarrierMap& map);

BitBlock generate_bits(RandomStream& stream, int count);

}  // namespace paprsim
