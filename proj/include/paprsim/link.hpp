#pragma once

#include <array>
#include <utility>
#include <vector>

#include "paprsim/config.hpp"
#include "paprsim/metrics.hpp"
#include "paprsim/reduction.hpp"
#include "paprsim/rng.hpp"
#include "paprsim/stbc.hpp"

namespace paprsim {

/// One Alamouti frame ready for the air: four synthesized signals indexed
/// [antenna][period], plus the side information and source bits per data
/// block needed to check recovery.
struct TxFrame {
  std::array<std::array<TimeSignal, 2>, 2> signals;
  std::array<SideInfo, 2> side;
  std::array<BitBlock, 2> bits;
};

/// Received signals indexed [rx antenna][period] with the gains that
/// produced them.
struct RxFrame {
  std::vector<std::array<TimeSignal, 2>> signals;
  std::vector<ChannelPair> channels;
};

/// One data block taken through modulation, mapping and the selected
/// reduction method.
struct ReducedBlock {
  TimeSignal signal;
  FrequencyBlock spectrum;
  SideInfo side;
};

/// Modulate, map, and apply the reduction method to one block of symbols.
/// SLM and PTS rotate the frequency block before synthesis; clipping acts
/// on the synthesized signal and the distorted spectrum is recovered by
/// analysis so the Alamouti structure stays intact.
ReducedBlock reduce_block(const cvec& symbols, Method method, const SimConfig& cfg,
                          const CarrierMap& map, const SlmCodebook* slm_codebook);

/// Full transmit chain for one frame. Reduction runs on the two period-1
/// blocks only; period-2 signals are synthesized from the conjugated
/// codeword, which has the same PAPR.
TxFrame transmit_frame(const BitBlock& bits1, const BitBlock& bits2, Method method,
                       const SimConfig& cfg, const SlmCodebook* slm_codebook);

/// r_j = h1_j x_ant1 + h2_j x_ant2 + n per period, one ChannelPair per
/// receive antenna. Noise draws come from the caller's stream; zero power
/// draws nothing.
RxFrame propagate(const TxFrame& tx, const std::vector<ChannelPair>& channels,
                  double noise_power, RandomStream& stream);

/// PAPR of each receive antenna's period-1 signal, max across antennas.
PaprValue receive_papr(const RxFrame& rx);

/// Analysis transform per period, Alamouti combining summed over receive
/// antennas, rotation inversion per the side info, then demodulation.
std::pair<BitBlock, BitBlock> recover_data(const RxFrame& rx,
                                           const std::array<SideInfo, 2>& side,
                                           const SimConfig& cfg,
                                           const SlmCodebook* slm_codebook);

}  // namespace paprsim
