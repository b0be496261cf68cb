#include "sparseq/decompositions.hpp"

#include <stdexcept>
#include <unsupported/Eigen/FFT>

namespace sparseq {

Factorization cholesky_llh(const CMat& r_yy) {
    Eigen::LLT<CMat> llt(r_yy);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("cholesky_llh: matrix is not positive definite");
    const Index n = r_yy.rows();
    return {FactorizationKind::CholeskyLLH, CMat(llt.matrixL()), RVec::Ones(n), n, 0};
}

Factorization ldl_unit(const CMat& r_yy) {
    // From L L^H: P = L diag(L)^{-1}, Lambda = diag(L)^2.
    Factorization chol = cholesky_llh(r_yy);
    const Index n = r_yy.rows();
    const RVec d = chol.factor_1.diagonal().real();
    CMat p = chol.factor_1 * d.cwiseInverse().asDiagonal();
    return {FactorizationKind::LdlUnit, std::move(p), d.cwiseAbs2(), n, 0};
}

Factorization eigen_exact(const CMat& r_yy) {
    Eigen::SelfAdjointEigenSolver<CMat> solver(r_yy);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigen_exact: eigensolver did not converge");
    const Index n = r_yy.rows();
    // Eigen sorts ascending; flip to descending for a fixed, reproducible order.
    CMat u = solver.eigenvectors().rowwise().reverse();
    RVec d = solver.eigenvalues().reverse();
    return {FactorizationKind::EigenExact, std::move(u), std::move(d), n, 0};
}

Factorization eigen_circulant(const CVec& r_yy_first_column, int v,
                              double eigenvalue_floor) {
    const Index n = r_yy_first_column.size();
    if (n <= 2 * static_cast<Index>(v))
        throw std::invalid_argument("eigen_circulant: requires N_f > 2v");

    CVec c = CVec::Zero(n);
    c[0] = r_yy_first_column[0];
    for (int k = 1; k <= v; ++k) {
        c[k] = r_yy_first_column[k];
        c[n - k] = std::conj(r_yy_first_column[k]);
    }

    Eigen::FFT<double> fft;
    std::vector<Complex> c_in(c.data(), c.data() + n), spectrum(n);
    fft.fwd(spectrum, c_in);

    RVec d(n);
    int clamped = 0;
    for (Index m = 0; m < n; ++m) {
        double lambda = spectrum[m].real();  // imag ~ 0 by conjugate symmetry
        if (lambda < eigenvalue_floor) {
            lambda = eigenvalue_floor;
            ++clamped;
        }
        d[m] = lambda;
    }

    // unitary inverse-DFT matrix: u(k, m) = exp(+2 pi i k m / n) / sqrt(n)
    CMat u(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (Index k = 0; k < n; ++k)
        for (Index m = 0; m < n; ++m) {
            const double angle = 2.0 * M_PI * static_cast<double>(k) * static_cast<double>(m) / static_cast<double>(n);
            u(k, m) = scale * Complex(std::cos(angle), std::sin(angle));
        }

    return {FactorizationKind::EigenCirculant, std::move(u), std::move(d), n, clamped};
}

CMat reconstruct(const Factorization& f) {
    return f.factor_1 * f.factor_2.asDiagonal() * f.factor_1.adjoint();
}

CVec circulant_uh_apply(const CVec& w) {
    const Index n = w.size();
    Eigen::FFT<double> fft;
    std::vector<Complex> in(w.data(), w.data() + n), out(n);
    fft.fwd(out, in);
    CVec result = Eigen::Map<CVec>(out.data(), n);
    return result / std::sqrt(static_cast<double>(n));
}

}  // namespace sparseq
