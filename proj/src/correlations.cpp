#include "sparseq/correlations.hpp"

#include <stdexcept>

namespace sparseq {

CMat build_r_yy(const CMat& h_matrix, int v, double snr) {
    if (snr <= 0.0) throw std::invalid_argument("build_r_yy: snr must be > 0");
    const Index n_f = h_matrix.rows();
    // first row: r_0 = sum |h_i|^2 + 1/snr, r_j = sum_{i=j}^{v} h_i h_{i-j}^*
    CVec first_row = CVec::Zero(n_f);
    const auto h = h_matrix.row(0).head(v + 1);
    first_row[0] = Complex(h.squaredNorm() + 1.0 / snr, 0.0);
    for (int j = 1; j <= v && j < n_f; ++j) {
        Complex r = 0.0;
        for (int i = j; i <= v; ++i) r += h[i] * std::conj(h[i - j]);
        first_row[j] = r;
    }
    CMat r_yy(n_f, n_f);
    for (Index i = 0; i < n_f; ++i)
        for (Index j = 0; j < n_f; ++j)
            r_yy(i, j) = j >= i ? first_row[j - i] : std::conj(first_row[i - j]);
    return r_yy;
}

CVec build_r_delta(const CMat& h_matrix, Index delta) {
    if (delta < 0 || delta >= h_matrix.cols())
        throw std::invalid_argument("build_r_delta: delta out of range");
    return h_matrix.col(delta);
}

CorrelationSet build_correlations(const Cir& cir, Index n_f, double snr,
                                  Index delta, double eps_x) {
    const CMat h = convolution_matrix(cir, n_f);
    CorrelationSet corr;
    corr.r_yy = build_r_yy(h, cir.memory, snr);
    corr.r_delta = build_r_delta(h, delta);
    corr.eps_x = eps_x;
    corr.snr = snr;
    corr.delta = delta;
    corr.n_f = n_f;
    corr.xi_m = minimum_mse(corr);
    return corr;
}

double minimum_mse(const CorrelationSet& corr) {
    Eigen::LLT<CMat> llt(corr.r_yy);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("minimum_mse: R_yy is not positive definite");
    const CVec solved = llt.solve(corr.r_delta);
    const double xi_m = corr.eps_x - corr.r_delta.dot(solved).real();
    return std::max(xi_m, 0.0);
}

double excess_mse(const CVec& w, const CorrelationSet& corr) {
    if (w.size() != corr.n_f)
        throw std::invalid_argument("excess_mse: dimension mismatch");
    Eigen::LLT<CMat> llt(corr.r_yy);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("excess_mse: R_yy is not positive definite");
    const CVec diff = w - llt.solve(corr.r_delta);
    return std::max(diff.dot(corr.r_yy * diff).real(), 0.0);
}

}  // namespace sparseq
