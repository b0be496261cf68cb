#include "sparseq/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "sparseq/rng.hpp"

namespace sparseq {

Cir generate_random_cir(int v, std::uint64_t seed, std::uint64_t stream) {
    if (v < 0) throw std::invalid_argument("generate_random_cir: v must be >= 0");
    Rng rng(seed, stream);
    CVec taps(v + 1);
    const double var = 1.0 / (v + 1);  // immaterial after normalization
    for (int i = 0; i <= v; ++i) taps[i] = rng.complex_gaussian(var);
    taps /= taps.norm();
    return Cir{std::move(taps), v};
}

Cir worst_case_cir(int v) {
    if (v < 1) throw std::invalid_argument("worst_case_cir: v must be >= 1");
    const double n = v + 2.0;
    const double scale = std::sqrt(2.0 / n);
    CVec taps(v + 1);
    for (int j = 1; j <= v + 1; ++j) taps[j - 1] = scale * std::sin(j * M_PI / n);
    return Cir{std::move(taps), v};
}

double worst_case_eigenvalue(int v) {
    if (v < 1) throw std::invalid_argument("worst_case_eigenvalue: v must be >= 1");
    return 2.0 * std::cos(M_PI / (v + 2.0));
}

CMat convolution_matrix(const Cir& cir, Index n_f) {
    if (n_f < 1) throw std::invalid_argument("convolution_matrix: n_f must be >= 1");
    const int v = cir.memory;
    CMat h = CMat::Zero(n_f, n_f + v);
    for (Index i = 0; i < n_f; ++i)
        for (int l = 0; l <= v; ++l) h(i, i + l) = cir.taps[l];
    return h;
}

}  // namespace sparseq
