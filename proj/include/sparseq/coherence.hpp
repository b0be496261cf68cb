#pragma once

#include <cstdint>
#include <utility>

#include "sparseq/types.hpp"

namespace sparseq {

struct CoherenceReport {
    double mu = 0.0;
    std::pair<Index, Index> argmax_pair{0, 1};
};

/// Worst-case coherence: max over distinct column pairs of
/// |<phi_i, phi_j>| / (||phi_i|| ||phi_j||). Exact O(N^2) via the Gram
/// matrix; argmax ties broken by lexicographic (i, j).
CoherenceReport worst_case_coherence(const CMat& phi);

/// mu(R_yy) built from the worst-case channel of length v at the given
/// linear SNR: the analytic upper bound over unit-energy channels.
double coherence_bound_theoretical(int v, double snr, Index n_f);

/// Max of mu(R_yy) over `trials` random unit-energy channels.
double coherence_bound_empirical(int v, double snr, Index n_f, int trials,
                                 std::uint64_t seed);

}  // namespace sparseq
