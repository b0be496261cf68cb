#include "sparseq/dictionaries.hpp"

#include <stdexcept>

namespace sparseq {

std::string to_string(TripleKind kind) {
    switch (kind) {
        case TripleKind::CHOL_LH: return "CHOL_LH";
        case TripleKind::CHOL_RYY: return "CHOL_RYY";
        case TripleKind::LDL_PH: return "LDL_PH";
        case TripleKind::EIG_DU: return "EIG_DU";
        case TripleKind::EIG_RYY: return "EIG_RYY";
        case TripleKind::EIG_UH: return "EIG_UH";
    }
    throw std::logic_error("to_string: unknown TripleKind");
}

TripleKind triple_kind_from_string(const std::string& name) {
    if (name == "CHOL_LH") return TripleKind::CHOL_LH;
    if (name == "CHOL_RYY") return TripleKind::CHOL_RYY;
    if (name == "LDL_PH") return TripleKind::LDL_PH;
    if (name == "EIG_DU") return TripleKind::EIG_DU;
    if (name == "EIG_RYY") return TripleKind::EIG_RYY;
    if (name == "EIG_UH") return TripleKind::EIG_UH;
    throw std::invalid_argument("unknown dictionary kind: " + name);
}

CVec DictionaryTriple::apply_a(const CVec& x) const {
    switch (projector) {
        case ProjectorKind::Identity:
            return x;
        case ProjectorKind::TriangularSolve:
            return projector_matrix.triangularView<Eigen::Lower>().solve(x);
        case ProjectorKind::ScaledDft:
            return projector_scale.cwiseInverse().cwiseSqrt().asDiagonal() *
                   (projector_matrix.adjoint() * x);
        case ProjectorKind::Diagonal:
            return projector_scale.asDiagonal() * x;
    }
    throw std::logic_error("apply_a: unknown projector");
}

CMat DictionaryTriple::dense_a() const {
    const Index n = phi.rows();
    CMat a(n, n);
    for (Index j = 0; j < n; ++j) a.col(j) = apply_a(CVec::Unit(n, j));
    return a;
}

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

bool is_cholesky(const Factorization& f) {
    return f.kind == FactorizationKind::CholeskyLLH;
}
bool is_ldl(const Factorization& f) { return f.kind == FactorizationKind::LdlUnit; }
bool is_eigen(const Factorization& f) {
    return f.kind == FactorizationKind::EigenExact ||
           f.kind == FactorizationKind::EigenCirculant;
}

}  // namespace

DictionaryTriple build_triple(TripleKind kind, const Factorization& factorization,
                              const CVec& r_delta, const CMat& r_yy) {
    DictionaryTriple triple;
    triple.kind = kind;
    const CMat& f1 = factorization.factor_1;
    const RVec& f2 = factorization.factor_2;

    switch (kind) {
        case TripleKind::CHOL_LH:
            require(is_cholesky(factorization), "CHOL_LH needs a CholeskyLLH factorization");
            triple.phi = f1.adjoint();
            triple.b = f1.triangularView<Eigen::Lower>().solve(r_delta);
            break;
        case TripleKind::CHOL_RYY:
            require(is_cholesky(factorization), "CHOL_RYY needs a CholeskyLLH factorization");
            triple.phi = r_yy;
            triple.b = r_delta;
            triple.projector = ProjectorKind::TriangularSolve;
            triple.projector_matrix = f1;
            break;
        case TripleKind::LDL_PH: {
            require(is_ldl(factorization), "LDL_PH needs an LdlUnit factorization");
            const RVec sqrt_lambda = f2.cwiseSqrt();
            triple.phi = sqrt_lambda.asDiagonal() * f1.adjoint();
            triple.b = sqrt_lambda.cwiseInverse().asDiagonal() *
                       f1.triangularView<Eigen::Lower>().solve(r_delta).eval();
            break;
        }
        case TripleKind::EIG_DU: {
            require(is_eigen(factorization), "EIG_DU needs an eigen factorization");
            const RVec sqrt_d = f2.cwiseSqrt();
            triple.phi = sqrt_d.asDiagonal() * f1.adjoint();
            triple.b = sqrt_d.cwiseInverse().asDiagonal() * (f1.adjoint() * r_delta).eval();
            triple.d_sqrt = sqrt_d;
            triple.circulant_phi = factorization.kind == FactorizationKind::EigenCirculant;
            break;
        }
        case TripleKind::EIG_RYY:
            require(is_eigen(factorization), "EIG_RYY needs an eigen factorization");
            triple.phi = r_yy;
            triple.b = r_delta;
            triple.projector = ProjectorKind::ScaledDft;
            triple.projector_matrix = f1;
            triple.projector_scale = f2;
            break;
        case TripleKind::EIG_UH:
            require(is_eigen(factorization), "EIG_UH needs an eigen factorization");
            triple.phi = f1.adjoint();
            triple.b = f2.cwiseInverse().asDiagonal() * (f1.adjoint() * r_delta).eval();
            triple.projector = ProjectorKind::Diagonal;
            triple.projector_scale = f2.cwiseSqrt();
            triple.valid = false;
            break;
    }
    return triple;
}

double projected_residual_error(const DictionaryTriple& triple, const CVec& w) {
    if (w.size() != triple.phi.cols())
        throw std::invalid_argument("projected_residual_error: dimension mismatch");
    return triple.apply_a(triple.phi * w - triple.b).squaredNorm();
}

CVec eig_du_phi_apply_fft(const DictionaryTriple& triple, const CVec& w) {
    if (triple.kind != TripleKind::EIG_DU || !triple.circulant_phi)
        throw std::invalid_argument("eig_du_phi_apply_fft: triple is not a circulant EIG_DU");
    return triple.d_sqrt.asDiagonal() * circulant_uh_apply(w).eval();
}

}  // namespace sparseq
