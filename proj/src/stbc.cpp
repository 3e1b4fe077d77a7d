#include "paprsim/stbc.hpp"

namespace paprsim {

AlamoutiCodeword alamouti_encode(const FrequencyBlock& s1, const FrequencyBlock& s2) {
  if (s1.bins.size() != s2.bins.size() || s1.n_nominal != s2.n_nominal)
    throw input_error("Alamouti inputs must have equal length");
  AlamoutiCodeword cw;
  cw.blocks[0][0] = s1;
  cw.blocks[1][0] = s2;
  FrequencyBlock neg_conj_s2{cvec(s2.bins.size()), s2.n_nominal};
  FrequencyBlock conj_s1{cvec(s1.bins.size()), s1.n_nominal};
  for (std::size_t k = 0; k < s1.bins.size(); ++k) {
    neg_conj_s2.bins[k] = -std::conj(s2.bins[k]);
    conj_s1.bins[k] = std::conj(s1.bins[k]);
  }
  cw.blocks[0][1] = std::move(neg_conj_s2);
  cw.blocks[1][1] = std::move(conj_s1);
  return cw;
}

std::pair<cvec, cvec> alamouti_combine(const cvec& r_period1, const cvec& r_period2,
                                       const ChannelPair& ch) {
  if (r_period1.size() != r_period2.size())
    throw input_error("received blocks must have equal length");
  if (std::norm(ch.h1) + std::norm(ch.h2) == 0.0)
    throw degenerate_channel_error("channel pair has zero combined gain");
  const cplx h1c = std::conj(ch.h1);
  const cplx h2c = std::conj(ch.h2);
  cvec s1_hat(r_period1.size()), s2_hat(r_period1.size());
  for (std::size_t k = 0; k < r_period1.size(); ++k) {
    const cplx r2c = std::conj(r_period2[k]);
    s1_hat[k] = h1c * r_period1[k] + ch.h2 * r2c;
    s2_hat[k] = h2c * r_period1[k] - ch.h1 * r2c;
  }
  return {std::move(s1_hat), std::move(s2_hat)};
}

}  // namespace paprsim
