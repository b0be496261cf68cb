#pragma once

#include "sparseq/channel.hpp"
#include "sparseq/types.hpp"

namespace sparseq {

/// Second-order statistics of one design instance. r_yy is Hermitian
/// Toeplitz, banded with bandwidth v, and positive definite (noise floor
/// 1/snr). snr is linear, not dB.
struct CorrelationSet {
    CMat r_yy;
    CVec r_delta;
    double xi_m = 0.0;
    double eps_x = 1.0;
    double snr = 1.0;
    Index delta = 0;
    Index n_f = 0;
};

/// R_yy = H H^H + (1/snr) I, assembled from the banded first column.
CMat build_r_yy(const CMat& h_matrix, int v, double snr);

/// Column delta of H (r_delta = H R_xx 1_delta with R_xx = I).
CVec build_r_delta(const CMat& h_matrix, Index delta);

/// Default decision delay, floor((N_f + v) / 2).
inline Index default_delta(Index n_f, int v) { return (n_f + v) / 2; }

CorrelationSet build_correlations(const Cir& cir, Index n_f, double snr,
                                  Index delta, double eps_x = 1.0);

inline CorrelationSet build_correlations(const Cir& cir, Index n_f, double snr) {
    return build_correlations(cir, n_f, snr, default_delta(n_f, cir.memory));
}

/// xi_m = eps_x - r_delta^H R_yy^{-1} r_delta, via Cholesky solve.
double minimum_mse(const CorrelationSet& corr);

/// xi_e(w) = (w - w_opt)^H R_yy (w - w_opt).
double excess_mse(const CVec& w, const CorrelationSet& corr);

}  // namespace sparseq
