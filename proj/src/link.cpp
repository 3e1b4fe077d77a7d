#include "paprsim/link.hpp"

#include <cmath>

#include "paprsim/fft.hpp"
#include "paprsim/modem.hpp"

namespace paprsim {

ReducedBlock reduce_block(const cvec& symbols, Method method, const SimConfig& cfg,
                          const CarrierMap& map, const SlmCodebook* slm_codebook) {
  ReducedBlock out;
  switch (method) {
    case Method::none: {
      out.spectrum = map_to_subcarriers(symbols, map);
      out.signal = oversampled_synthesis(out.spectrum, cfg.oversampling);
      out.side = SideInfo{Method::none, 0, {}};
      break;
    }
    case Method::clip: {
      FrequencyBlock X = map_to_subcarriers(symbols, map);
      TimeSignal x = oversampled_synthesis(X, cfg.oversampling);
      out.signal = clip_and_filter(x, cfg.clip, map);
      out.spectrum = oversampled_analysis(out.signal);
      out.side = SideInfo{Method::clip, 0, {}};
      break;
    }
    case Method::slm: {
      if (!slm_codebook) throw input_error("SLM selected but no codebook supplied");
      SlmSelection sel = slm_select(symbols, *slm_codebook, map, cfg.oversampling);
      out.signal = std::move(sel.signal);
      out.spectrum = std::move(sel.spectrum);
      out.side = std::move(sel.side);
      break;
    }
    case Method::pts: {
      FrequencyBlock X = map_to_subcarriers(symbols, map);
      PtsOptimum opt = pts_optimize(X, cfg.pts, map, cfg.oversampling);
      out.signal = std::move(opt.signal);
      out.spectrum = std::move(opt.spectrum);
      out.side = std::move(opt.side);
      break;
    }
  }
  return out;
}

TxFrame transmit_frame(const BitBlock& bits1, const BitBlock& bits2, Method method,
                       const SimConfig& cfg, const SlmCodebook* slm_codebook) {
  const std::size_t expected = 2 * static_cast<std::size_t>(cfg.n_used);
  if (bits1.size() != expected || bits2.size() != expected)
    throw input_error("each bit block must carry 2 * n_used = " + std::to_string(expected) +
                      " bits");
  const CarrierMap map = cfg.carrier_map();

  ReducedBlock b1 = reduce_block(qpsk_modulate(bits1), method, cfg, map, slm_codebook);
  ReducedBlock b2 = reduce_block(qpsk_modulate(bits2), method, cfg, map, slm_codebook);

  const AlamoutiCodeword cw = alamouti_encode(b1.spectrum, b2.spectrum);

  TxFrame frame;
  frame.signals[0][0] = std::move(b1.signal);
  frame.signals[1][0] = std::move(b2.signal);
  frame.signals[0][1] = oversampled_synthesis(cw.blocks[0][1], cfg.oversampling);
  frame.signals[1][1] = oversampled_synthesis(cw.blocks[1][1], cfg.oversampling);
  frame.side = {std::move(b1.side), std::move(b2.side)};
  frame.bits = {bits1, bits2};
  return frame;
}

RxFrame propagate(const TxFrame& tx, const std::vector<ChannelPair>& channels,
                  double noise_power, RandomStream& stream) {
  if (channels.empty()) throw input_error("propagate needs at least one receive antenna");
  const double noise_scale = noise_power > 0.0 ? std::sqrt(noise_power / 2.0) : 0.0;

  RxFrame rx;
  rx.channels = channels;
  rx.signals.resize(channels.size());
  for (std::size_t j = 0; j < channels.size(); ++j) {
    const ChannelPair& ch = channels[j];
    for (int period = 0; period < 2; ++period) {
      const TimeSignal& a1 = tx.signals[0][period];
      const TimeSignal& a2 = tx.signals[1][period];
      TimeSignal r{cvec(a1.samples.size()), a1.oversampling, a1.n_nominal};
      for (std::size_t i = 0; i < r.samples.size(); ++i)
        r.samples[i] = ch.h1 * a1.samples[i] + ch.h2 * a2.samples[i];
      if (noise_scale > 0.0)
        for (cplx& v : r.samples) v += noise_scale * stream.next_complex_gaussian();
      rx.signals[j][period] = std::move(r);
    }
  }
  return rx;
}

PaprValue receive_papr(const RxFrame& rx) {
  if (rx.signals.empty()) throw input_error("empty receive frame");
  std::vector<PaprValue> per_antenna;
  per_antenna.reserve(rx.signals.size());
  for (const auto& periods : rx.signals) per_antenna.push_back(compute_papr(periods[0]));
  return mimo_papr(per_antenna);
}

std::pair<BitBlock, BitBlock> recover_data(const RxFrame& rx,
                                           const std::array<SideInfo, 2>& side,
                                           const SimConfig& cfg,
                                           const SlmCodebook* slm_codebook) {
  if (rx.signals.size() != rx.channels.size() || rx.signals.empty())
    throw input_error("receive frame and channel list sizes do not match");

  double total_gain = 0.0;
  for (const ChannelPair& ch : rx.channels)
    total_gain += std::norm(ch.h1) + std::norm(ch.h2);
  if (total_gain == 0.0)
    throw degenerate_channel_error("all receive paths have zero gain");

  const CarrierMap map = cfg.carrier_map();
  cvec acc1(map.n_total, cplx(0.0, 0.0));
  cvec acc2(map.n_total, cplx(0.0, 0.0));
  for (std::size_t j = 0; j < rx.signals.size(); ++j) {
    const ChannelPair& ch = rx.channels[j];
    if (std::norm(ch.h1) + std::norm(ch.h2) == 0.0) continue;  // dead antenna
    const FrequencyBlock y1 = oversampled_analysis(rx.signals[j][0]);
    const FrequencyBlock y2 = oversampled_analysis(rx.signals[j][1]);
    auto [s1_hat, s2_hat] = alamouti_combine(y1.bins, y2.bins, ch);
    for (std::size_t k = 0; k < acc1.size(); ++k) {
      acc1[k] += s1_hat[k];
      acc2[k] += s2_hat[k];
    }
  }

  std::array<cvec, 2> used = {
      extract_from_subcarriers(FrequencyBlock{std::move(acc1), map.n_total}, map),
      extract_from_subcarriers(FrequencyBlock{std::move(acc2), map.n_total}, map)};

  std::pair<BitBlock, BitBlock> bits;
  for (int blk = 0; blk < 2; ++blk) {
    cvec symbols = std::move(used[blk]);
    switch (side[blk].method) {
      case Method::slm:
        if (!slm_codebook) throw side_info_error("SLM side info without a codebook");
        symbols = slm_invert(symbols, *slm_codebook, side[blk]);
        break;
      case Method::pts:
        symbols = pts_invert(symbols, cfg.pts, map, side[blk]);
        break;
      case Method::none:
      case Method::clip:
        break;  // nothing to undo (clipping distortion is not invertible)
    }
    (blk == 0 ? bits.first : bits.second) = qpsk_demodulate(symbols);
  }
  return bits;
}

}  // namespace paprsim
