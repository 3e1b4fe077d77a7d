#pragma once

#include <array>
#include <utility>

#include "paprsim/types.hpp"

namespace paprsim {

/// Alamouti codeword over two antennas and two symbol periods:
/// blocks[antenna][period] with period-1 columns (S1, S2) and period-2
/// columns (-conj(S2), conj(S1)), conjugation elementwise per block.
struct AlamoutiCodeword {
  std::array<std::array<FrequencyBlock, 2>, 2> blocks;
};

/// Flat complex gains from the two transmit antennas to one receive antenna.
struct ChannelPair {
  cplx h1{1.0, 0.0};
  cplx h2{0.0, 0.0};
};

AlamoutiCodeword alamouti_encode(const FrequencyBlock& s1, const FrequencyBlock& s2);

/// Standard Alamouti combining for one receive antenna over two periods:
///   s1_hat = conj(h1) r1 + h2 conj(r2)
///   s2_hat = conj(h2) r1 - h1 conj(r2)
/// On a noiseless channel both estimates come back scaled by |h1|^2 + |h2|^2.
std::pair<cvec, cvec> alamouti_combine(const cvec& r_period1, const cvec& r_period2,
                                       const ChannelPair& ch);

}  // namespace paprsim
