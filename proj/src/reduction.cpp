#include "paprsim/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "paprsim/fft.hpp"
#include "paprsim/rng.hpp"

namespace paprsim {
namespace {

constexpr std::uint64_t kCodebookStreamId = 0x736C6D2D63626BULL;

double rms(const cvec& samples) {
  double sum = 0.0;
  for (const cplx& v : samples) sum += std::norm(v);
  return std::sqrt(sum / static_cast<double>(samples.size()));
}

PaprValue papr_of_samples(const cvec& samples) {
  double peak = 0.0, sum = 0.0;
  for (const cplx& v : samples) {
    const double p = std::norm(v);
    peak = std::max(peak, p);
    sum += p;
  }
  if (sum == 0.0) throw input_error("PAPR of the all-zero signal is undefined");
  return make_papr(peak * static_cast<double>(samples.size()) / sum);
}

void check_unit_alphabet(const cvec& alphabet) {
  if (alphabet.empty()) throw config_error("phase alphabet must not be empty");
  for (const cplx& a : alphabet)
    if (std::abs(std::abs(a) - 1.0) > 1e-12)
      throw config_error("phase alphabet entries must have unit modulus");
}

// y = sum_v b_v x_v, accumulated in block order so every evaluation of the
// same b is bit-identical.
void combine_weighted(const std::vector<cvec>& sub_signals, const cvec& b, cvec& out) {
  const std::size_t n = sub_signals.front().size();
  out.assign(n, cplx(0.0, 0.0));
  for (std::size_t v = 0; v < sub_signals.size(); ++v) {
    const cplx w = b[v];
    const cvec& xv = sub_signals[v];
    for (std::size_t i = 0; i < n; ++i) out[i] += w * xv[i];
  }
}

}  // namespace

TimeSignal clip_signal(const TimeSignal& x, double cr_db) {
  const double sigma = rms(x.samples);
  if (sigma == 0.0) throw input_error("cannot clip the all-zero signal (undefined RMS)");
  const double limit = sigma * std::pow(10.0, cr_db / 20.0);
  TimeSignal out = x;
  for (cplx& v : out.samples) {
    const double mag = std::abs(v);
    if (mag > limit) v *= limit / mag;
  }
  return out;
}

TimeSignal filter_out_of_band(const TimeSignal& x, const CarrierMap& map) {
  const std::size_t n = static_cast<std::size_t>(map.n_total);
  if (x.n_nominal != map.n_total ||
      x.samples.size() != n * static_cast<std::size_t>(x.oversampling))
    throw input_error("signal length does not match oversampling * map.n_total");

  const std::size_t total = x.samples.size();
  cvec spectrum = x.samples;
  detail::dft_unitary(spectrum, false);

  std::vector<char> keep(total, 0);
  for (int bin : map.occupied) {
    const std::size_t image =
        static_cast<std::size_t>(bin) < n / 2
            ? static_cast<std::size_t>(bin)
            : static_cast<std::size_t>(bin) + (static_cast<std::size_t>(x.oversampling) - 1) * n;
    keep[image] = 1;
  }
  for (std::size_t k = 0; k < total; ++k)
    if (!keep[k]) spectrum[k] = cplx(0.0, 0.0);

  detail::dft_unitary(spectrum, true);
  return TimeSignal{std::move(spectrum), x.oversampling, x.n_nominal};
}

TimeSignal clip_and_filter(const TimeSignal& x, const ClipConfig& cfg, const CarrierMap& map) {
  if (cfg.iterations < 0) throw config_error("clip iterations must be >= 0");
  TimeSignal out = x;
  for (int i = 0; i < cfg.iterations; ++i)
    out = filter_out_of_band(clip_signal(out, cfg.cr_db), map);
  return out;
}

cvec default_phase_alphabet() {
  return {cplx(1.0, 0.0), cplx(-1.0, 0.0), cplx(0.0, 1.0), cplx(0.0, -1.0)};
}

SlmCodebook build_slm_codebook(int n_used, int u_count, const cvec& alphabet,
                               std::uint64_t seed) {
  if (u_count < 1) throw config_error("SLM route count must be >= 1");
  if (n_used < 1) throw config_error("SLM codebook needs n_used >= 1");
  check_unit_alphabet(alphabet);

  SlmCodebook cb;
  cb.u_count = u_count;
  cb.seed = seed;
  cb.sequences.reserve(u_count);
  cb.sequences.emplace_back(n_used, cplx(1.0, 0.0));
  RandomStream stream(seed, kCodebookStreamId);
  for (int u = 1; u < u_count; ++u) {
    cvec seq(n_used);
    for (int i = 0; i < n_used; ++i)
      seq[i] = alphabet[stream.next_below(static_cast<std::uint32_t>(alphabet.size()))];
    cb.sequences.push_back(std::move(seq));
  }
  return cb;
}

SlmSelection slm_select(const cvec& symbols, const SlmCodebook& codebook,
                        const CarrierMap& map, int oversampling) {
  if (symbols.size() != static_cast<std::size_t>(map.n_used))
    throw input_error("symbol count does not match map.n_used");
  if (codebook.sequences.empty() ||
      codebook.sequences.front().size() != symbols.size())
    throw input_error("codebook sequence length does not match map.n_used");

  SlmSelection best;
  bool have_best = false;
  cvec rotated(symbols.size());
  for (int u = 0; u < codebook.u_count; ++u) {
    const cvec& seq = codebook.sequences[u];
    for (std::size_t i = 0; i < symbols.size(); ++i) rotated[i] = symbols[i] * seq[i];
    FrequencyBlock X = map_to_subcarriers(rotated, map);
    TimeSignal x = oversampled_synthesis(X, oversampling);
    const PaprValue papr = compute_papr(x);
    if (!have_best || papr.linear < best.papr.linear) {
      best.signal = std::move(x);
      best.spectrum = std::move(X);
      best.side = SideInfo{Method::slm, u, {}};
      best.papr = papr;
      have_best = true;
    }
  }
  return best;
}

cvec slm_invert(const cvec& symbols, const SlmCodebook& codebook, const SideInfo& side) {
  if (side.slm_route < 0 || side.slm_route >= codebook.u_count)
    throw side_info_error("SLM route index " + std::to_string(side.slm_route) +
                          " out of range [0, " + std::to_string(codebook.u_count) + ")");
  const cvec& seq = codebook.sequences[side.slm_route];
  if (symbols.size() != seq.size())
    throw input_error("symbol count does not match codebook sequence length");
  cvec out(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) out[i] = symbols[i] * std::conj(seq[i]);
  return out;
}

std::vector<int> subblock_of_position(const PtsPlan& plan, int n_used) {
  if (plan.v_count < 1) throw config_error("PTS sub-block count must be >= 1");
  if (plan.v_count > n_used)
    throw config_error("PTS sub-block count " + std::to_string(plan.v_count) +
                       " exceeds used subcarriers " + std::to_string(n_used));
  std::vector<int> sub(n_used);
  if (plan.scheme == PtsScheme::interleaved) {
    for (int i = 0; i < n_used; ++i) sub[i] = i % plan.v_count;
  } else {
    const int base = n_used / plan.v_count;
    for (int i = 0; i < n_used; ++i) sub[i] = std::min(i / base, plan.v_count - 1);
  }
  return sub;
}

std::vector<FrequencyBlock> partition_subblocks(const FrequencyBlock& X, const PtsPlan& plan,
                                                const CarrierMap& map) {
  if (X.bins.size() != static_cast<std::size_t>(map.n_total))
    throw input_error("block length does not match map.n_total");
  const std::vector<int> sub = subblock_of_position(plan, map.n_used);
  std::vector<FrequencyBlock> blocks(
      plan.v_count, FrequencyBlock{cvec(map.n_total, cplx(0.0, 0.0)), map.n_total});
  for (int i = 0; i < map.n_used; ++i) {
    const int bin = map.occupied[i];
    blocks[sub[i]].bins[bin] = X.bins[bin];
  }
  return blocks;
}

PtsOptimum pts_optimize(const FrequencyBlock& X, const PtsPlan& plan, const CarrierMap& map,
                        int oversampling) {
  check_unit_alphabet(plan.alphabet);
  const std::vector<FrequencyBlock> blocks = partition_subblocks(X, plan, map);
  const int v_count = plan.v_count;

  std::vector<cvec> sub_signals;
  sub_signals.reserve(v_count);
  for (const FrequencyBlock& blk : blocks)
    sub_signals.push_back(oversampled_synthesis(blk, oversampling).samples);

  const std::size_t a_count = plan.alphabet.size();
  cvec b(v_count, cplx(1.0, 0.0));
  cvec candidate_b = b;
  cvec buffer;

  if (v_count > 1 && plan.strategy == PtsStrategy::exhaustive) {
    if ((v_count - 1) * std::log2(static_cast<double>(a_count)) > 40.0)
      throw config_error("exhaustive PTS search space is too large");
    std::uint64_t total = 1;
    for (int v = 1; v < v_count; ++v) total *= a_count;

    double best_papr = 0.0;
    bool have_best = false;
    for (std::uint64_t c = 0; c < total; ++c) {
      // Lexicographic: the factor for block 1 is the most significant digit.
      std::uint64_t rem = c;
      for (int v = v_count - 1; v >= 1; --v) {
        candidate_b[v] = plan.alphabet[rem % a_count];
        rem /= a_count;
      }
      combine_weighted(sub_signals, candidate_b, buffer);
      const PaprValue papr = papr_of_samples(buffer);
      if (!have_best || papr.linear < best_papr) {
        best_papr = papr.linear;
        b = candidate_b;
        have_best = true;
      }
    }
  } else if (v_count > 1) {
    for (int v = 1; v < v_count; ++v) {
      double best_papr = 0.0;
      cplx best_factor = plan.alphabet.front();
      for (std::size_t a = 0; a < a_count; ++a) {
        candidate_b = b;
        candidate_b[v] = plan.alphabet[a];
        combine_weighted(sub_signals, candidate_b, buffer);
        const PaprValue papr = papr_of_samples(buffer);
        if (a == 0 || papr.linear < best_papr) {
          best_papr = papr.linear;
          best_factor = plan.alphabet[a];
        }
      }
      b[v] = best_factor;
    }
  }

  combine_weighted(sub_signals, b, buffer);
  PtsOptimum result;
  result.papr = papr_of_samples(buffer);
  result.signal = TimeSignal{std::move(buffer), oversampling, X.n_nominal};

  const std::vector<int> sub = subblock_of_position(plan, map.n_used);
  FrequencyBlock spectrum{cvec(map.n_total, cplx(0.0, 0.0)), map.n_total};
  for (int i = 0; i < map.n_used; ++i) {
    const int bin = map.occupied[i];
    spectrum.bins[bin] = b[sub[i]] * X.bins[bin];
  }
  result.spectrum = std::move(spectrum);
  result.side = SideInfo{Method::pts, 0, std::move(b)};
  return result;
}

cvec pts_invert(const cvec& symbols, const PtsPlan& plan, const CarrierMap& map,
                const SideInfo& side) {
  if (side.pts_phases.size() != static_cast<std::size_t>(plan.v_count))
    throw side_info_error("phase vector length " + std::to_string(side.pts_phases.size()) +
                          " does not match v_count " + std::to_string(plan.v_count));
  if (symbols.size() != static_cast<std::size_t>(map.n_used))
    throw input_error("symbol count does not match map.n_used");
  const std::vector<int> sub = subblock_of_position(plan, map.n_used);
  cvec out(symbols.size());
  for (int i = 0; i < map.n_used; ++i)
    out[i] = symbols[i] * std::conj(side.pts_phases[sub[i]]);
  return out;
}

}  // namespace paprsim
