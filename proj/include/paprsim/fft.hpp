#pragma once

#include "paprsim/types.hpp"

namespace paprsim {

/// Unitary DFT pair. The nominal block length N must be a power of two;
/// oversampled lengths L*N are handled exactly for any integer L >= 1
/// (radix-2 stages plus an exact small-odd-factor base case, never an
/// approximate resample).

/// x(n) = (1/sqrt(N)) * sum_k X_k exp(j 2 pi k n / N). Requires
/// bins.size() == n_nominal, power of two.
TimeSignal inverse_transform(const FrequencyBlock& X);

/// Exact inverse of inverse_transform at the same length. Accepts
/// oversampled signals and returns the full-length spectrum.
FrequencyBlock forward_transform(const TimeSignal& x);

/// Zero-pad the spectrum to L*N by splitting at N/2 (negative-frequency
/// bins keep the tail), inverse transform at length L*N, and scale by
/// sqrt(L) so mean power does not depend on L. Samples at indices
/// {0, L, 2L, ...} reproduce the L = 1 output.
TimeSignal oversampled_synthesis(const FrequencyBlock& X, int oversampling);

/// Exact inverse of oversampled_synthesis: recovers the length-N spectrum
/// from an oversampled signal.
FrequencyBlock oversampled_analysis(const TimeSignal& x);

namespace detail {
/// In-place unitary DFT of any length n = 2^k * m with odd m computed
/// exactly (radix-2 butterflies, direct DFT for the odd base).
void dft_unitary(cvec& a, bool inverse);
}  // namespace detail

}  // namespace paprsim
