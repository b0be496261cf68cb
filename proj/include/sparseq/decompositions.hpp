#pragma once

#include "sparseq/types.hpp"

namespace sparseq {

enum class FactorizationKind {
    CholeskyLLH,     // R_yy = L L^H
    LdlUnit,         // R_yy = P Lambda P^H, P unit lower triangular
    EigenExact,      // R_yy = U D U^H, eigenvalues sorted descending
    EigenCirculant,  // circulant surrogate: U = unitary inverse-DFT, D = DFT of band-wrapped column
};

struct Factorization {
    FactorizationKind kind;
    CMat factor_1;   // L, P, or U
    RVec factor_2;   // diag of Lambda or D; all-ones for CholeskyLLH
    Index source_dim = 0;
    int clamped_eigenvalues = 0;  // circulant path only
};

Factorization cholesky_llh(const CMat& r_yy);
Factorization ldl_unit(const CMat& r_yy);
Factorization eigen_exact(const CMat& r_yy);

/// Circulant approximation of the banded Toeplitz R_yy. The surrogate's
/// first column wraps the band: c_0 = r_0, c_k = r_k, c_{N-k} = r_k^* for
/// 1 <= k <= v. Eigenvalues are the DFT of c (real up to roundoff);
/// eigenvectors are the normalized DFT vectors. Requires N_f > 2v.
/// Surrogate eigenvalues below eigenvalue_floor are clamped to it (the
/// wrap can lose definiteness); the count of clamps is reported.
Factorization eigen_circulant(const CVec& r_yy_first_column, int v,
                              double eigenvalue_floor);

/// Dense reconstruction factor_1 * diag(factor_2) * factor_1^H.
CMat reconstruct(const Factorization& f);

/// U^H w for EigenCirculant via FFT, O(N_f log N_f).
CVec circulant_uh_apply(const CVec& w);

}  // namespace sparseq
