#pragma once

#include <cstdint>

#include "sparseq/types.hpp"

namespace sparseq {

/// FIR channel impulse response of memory v (v+1 taps).
struct Cir {
    CVec taps;
    int memory = 0;

    double energy() const { return taps.squaredNorm(); }
};

/// Random unit-energy channel: i.i.d. circularly-symmetric complex Gaussian
/// taps, then scaled to unit energy. Deterministic for a fixed (seed, stream).
Cir generate_random_cir(int v, std::uint64_t seed, std::uint64_t stream = 0);

/// Worst-case channel for the coherence bound:
/// h_j = sqrt(2/(v+2)) sin(j pi/(v+2)), j = 1..v+1, the top eigenvector of
/// the tridiagonal matrix with ones on the off-diagonals. Requires v >= 1.
Cir worst_case_cir(int v);

/// Top eigenvalue of that tridiagonal matrix, 2 cos(pi/(v+2)).
double worst_case_eigenvalue(int v);

/// N_f x (N_f + v) Toeplitz convolution matrix; row 0 is [h_0 .. h_v, 0..].
CMat convolution_matrix(const Cir& cir, Index n_f);

}  // namespace sparseq
