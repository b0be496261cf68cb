#include "sparseq/coherence.hpp"

#include <stdexcept>

#include "sparseq/channel.hpp"
#include "sparseq/correlations.hpp"

namespace sparseq {

CoherenceReport worst_case_coherence(const CMat& phi) {
    const Index n = phi.cols();
    if (n < 2) throw std::invalid_argument("worst_case_coherence: need >= 2 columns");
    const RVec norms = phi.colwise().norm();
    for (Index i = 0; i < n; ++i)
        if (norms[i] == 0.0)
            throw std::invalid_argument("worst_case_coherence: zero column");

    const CMat gram = phi.adjoint() * phi;
    CoherenceReport report;
    report.mu = -1.0;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            const double value = std::abs(gram(i, j)) / (norms[i] * norms[j]);
            if (value > report.mu) {
                report.mu = value;
                report.argmax_pair = {i, j};
            }
        }
    return report;
}

double coherence_bound_theoretical(int v, double snr, Index n_f) {
    if (n_f <= v) throw std::invalid_argument("coherence_bound_theoretical: n_f must exceed v");
    const Cir worst = worst_case_cir(v);
    const CMat r_yy = build_r_yy(convolution_matrix(worst, n_f), v, snr);
    return worst_case_coherence(r_yy).mu;
}

double coherence_bound_empirical(int v, double snr, Index n_f, int trials,
                                 std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("coherence_bound_empirical: trials must be >= 1");
    double best = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Cir cir = generate_random_cir(v, seed, static_cast<std::uint64_t>(t));
        const CMat r_yy = build_r_yy(convolution_matrix(cir, n_f), v, snr);
        best = std::max(best, worst_case_coherence(r_yy).mu);
    }
    return best;
}

}  // namespace sparseq
