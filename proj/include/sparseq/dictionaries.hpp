#pragma once

#include <string>

#include "sparseq/decompositions.hpp"
#include "sparseq/types.hpp"

namespace sparseq {

/// The six (A, Phi, b) assignments encoding ||A(Phi w - b)||^2 = xi_e(w).
enum class TripleKind {
    CHOL_LH,   // (I, L^H, L^{-1} r_delta)
    CHOL_RYY,  // (L^{-1}, R_yy, r_delta)
    LDL_PH,    // (I, Lambda^{1/2} P^H, Lambda^{-1/2} P^{-1} r_delta)
    EIG_DU,    // (I, D^{1/2} U^H, D^{-1/2} U^H r_delta)
    EIG_RYY,   // (D^{-1/2} U^H, R_yy, r_delta)
    EIG_UH,    // (D^{1/2}, U^H, D^{-1} U^H r_delta) -- flagged invalid
};

std::string to_string(TripleKind kind);
TripleKind triple_kind_from_string(const std::string& name);

/// How A is applied; the triangular cases use solves, never explicit inverses.
enum class ProjectorKind {
    Identity,
    TriangularSolve,  // x -> L^{-1} x
    ScaledDft,        // x -> D^{-1/2} U^H x
    Diagonal,         // x -> D^{1/2} x
};

struct DictionaryTriple {
    TripleKind kind;
    CMat phi;
    CVec b;
    bool valid = true;

    ProjectorKind projector = ProjectorKind::Identity;
    CMat projector_matrix;  // L for TriangularSolve, U for ScaledDft
    RVec projector_scale;   // diagonal weights for ScaledDft / Diagonal

    // EIG_DU only: sqrt(D), and whether U came from the circulant path
    // (enables the FFT application of Phi).
    RVec d_sqrt;
    bool circulant_phi = false;

    /// A x for this triple's A.
    CVec apply_a(const CVec& x) const;

    /// Dense A, for small oracle problems.
    CMat dense_a() const;
};

/// Assemble one Table-style triple from a factorization of R_yy. The
/// Cholesky/LDL kinds require the matching factorization; the eigen kinds
/// accept EigenExact or EigenCirculant. The RYY kinds additionally need
/// r_yy itself.
DictionaryTriple build_triple(TripleKind kind, const Factorization& factorization,
                              const CVec& r_delta, const CMat& r_yy);

/// ||A(Phi w - b)||^2.
double projected_residual_error(const DictionaryTriple& triple, const CVec& w);

/// Phi w for EIG_DU triples built from a circulant factorization, via FFT.
CVec eig_du_phi_apply_fft(const DictionaryTriple& triple, const CVec& w);

}  // namespace sparseq
