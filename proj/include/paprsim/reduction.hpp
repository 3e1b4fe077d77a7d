#pragma once

#include <cstdint>
#include <vector>

#include "paprsim/metrics.hpp"
#include "paprsim/modem.hpp"
#include "paprsim/types.hpp"

namespace paprsim {

/// Clipping ratio in dB: the amplitude limit is A = rms(x) * 10^(cr_db/20).
/// iterations counts clip+filter passes (0 leaves the signal untouched).
struct ClipConfig {
  double cr_db = 4.0;
  int iterations = 1;
};

/// Magnitude-limit every sample to A, preserving phase.
TimeSignal clip_signal(const TimeSignal& x, double cr_db);

/// Zero every spectral bin outside the oversampled images of map.occupied,
/// leaving in-band bins untouched.
TimeSignal filter_out_of_band(const TimeSignal& x, const CarrierMap& map);

TimeSignal clip_and_filter(const TimeSignal& x, const ClipConfig& cfg, const CarrierMap& map);

cvec default_phase_alphabet();  // {1, -1, j, -j}

/// U phase-rotation routes of length n_used. Route 0 is the identity, the
/// rest are i.i.d. draws from the alphabet, deterministic in the seed.
struct SlmCodebook {
  int u_count = 1;
  std::vector<cvec> sequences;
  std::uint64_t seed = 0;
};

SlmCodebook build_slm_codebook(int n_used, int u_count, const cvec& alphabet,
                               std::uint64_t seed);

/// What the receiver needs to undo a transmit-side rotation.
struct SideInfo {
  Method method = Method::none;
  int slm_route = 0;
  cvec pts_phases;
};

struct SlmSelection {
  TimeSignal signal;
  FrequencyBlock spectrum;
  SideInfo side;
  PaprValue papr;
};

/// Synthesize every route at the given oversampling and keep the one with
/// minimum PAPR; ties resolve to the lowest route index.
SlmSelection slm_select(const cvec& symbols, const SlmCodebook& codebook,
                        const CarrierMap& map, int oversampling);

cvec slm_invert(const cvec& symbols, const SlmCodebook& codebook, const SideInfo& side);

enum class PtsScheme { adjacent, interleaved };
enum class PtsStrategy { exhaustive, greedy };

struct PtsPlan {
  int v_count = 8;
  PtsScheme scheme = PtsScheme::adjacent;
  cvec alphabet = default_phase_alphabet();
  PtsStrategy strategy = PtsStrategy::greedy;
};

/// Sub-block index of each occupied-list position under the plan's scheme.
/// Adjacent blocks take n_used/v_count consecutive positions each, the last
/// block absorbing any remainder; interleaved assigns round-robin.
std::vector<int> subblock_of_position(const PtsPlan& plan, int n_used);

/// Split X (supported on map.occupied) into v_count disjoint blocks that sum
/// back to X exactly.
std::vector<FrequencyBlock> partition_subblocks(const FrequencyBlock& X, const PtsPlan& plan,
                                                const CarrierMap& map);

struct PtsOptimum {
  TimeSignal signal;
  FrequencyBlock spectrum;
  SideInfo side;
  PaprValue papr;
};

/// Search unit-modulus weights (first factor pinned to 1) minimizing the
/// PAPR of sum_v b_v x_v. Exhaustive enumerates alphabet^(v_count-1)
/// combinations in lexicographic order; greedy makes one pass over the
/// blocks. Ties resolve to the earliest candidate.
PtsOptimum pts_optimize(const FrequencyBlock& X, const PtsPlan& plan, const CarrierMap& map,
                        int oversampling);

cvec pts_invert(const cvec& symbols, const PtsPlan& plan, const CarrierMap& map,
                const SideInfo& side);

}  // namespace paprsim
