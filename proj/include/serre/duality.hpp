#pragma once

#include "serre/object.hpp"

#include <optional>
#include <string>

namespace serre {

/// Hattori-Stallings rank of a finite-dimensional space over a field: dim * 1_k.
struct HsRank {
    Scalar value;
    bool invertible = false;
};

HsRank hs_rank(std::size_t dim, Field field);

/// R_N = sum_i e_i (x) e_i* in the Kronecker basis of N (x) N*.
struct CanonicalElement {
    std::size_t module_dim = 0;
    Matrix element;  // dim^2 x 1

    /// sum_i e_i*(n) e_i = n and sum_i f(e_i) e_i* = f on every basis vector.
    bool dual_basis_identities_hold() const;
};

CanonicalElement canonical_element(std::size_t dim, Field field);

/// i_N : k -> N (x) N*, a dim^2 x 1 column.
Matrix coevaluation(std::size_t dim, Field field);
/// ev_N : N (x) N* -> k, a 1 x dim^2 row.
Matrix evaluation(std::size_t dim, Field field);
/// j_N : k -> N* (x) N.
Matrix left_coevaluation(std::size_t dim, Field field);
/// ev'_N : N* (x) N -> k.
Matrix left_evaluation(std::size_t dim, Field field);

/// ev_N i_N and ev'_N j_N as scalars; both equal dim * 1_k.
Scalar right_pairing(std::size_t dim, Field field);
Scalar left_pairing(std::size_t dim, Field field);

/// i_N is H-linear: h . R_N = epsilon(h) R_N for every basis element h.
/// Holds for every Hopf algebra. Check name "coevaluation H-linear".
AxiomReport verify_coev_equivariance(const ModuleRep& n);
/// ev_N is H-linear. Needs S^2 = id in general. Check name "evaluation H-linear".
AxiomReport verify_ev_equivariance(const ModuleRep& n);
/// i_N is H-colinear: rho(R_N) = R_N (x) 1_H. Check name "coevaluation H-colinear".
AxiomReport verify_coev_colinearity(const ComoduleRep& n);
/// ev_N is H-colinear: sum_t <e_j*<0>, e_i<0>> e_i<1> e_j*<1> = delta_ij 1_H.
/// Check name "evaluation H-colinear"; the witness is (i, j).
AxiomReport verify_ev_colinearity(const ComoduleRep& n);

/// Morphism checks for the four maps of any object, in the category's sense:
/// "coevaluation", "evaluation", "left coevaluation", "left evaluation",
/// plus "rank identity" (ev i = ev' j = dim * 1_k).
AxiomReport verify_duality_maps(const Object& n);

/// A morphism together with a one-sided inverse.
struct SplitMonoCertificate {
    Category category = Category::Module;
    Matrix mono;
    Matrix retraction;
    Object source;  // domain of mono
    Object target;  // codomain of mono
    std::string context;
};

/// retraction * mono == id, and both maps lie in the span of the canonical
/// Hom basis. Checks: "retraction after mono is identity", "mono is a morphism",
/// "retraction is a morphism".
AxiomReport recheck(const SplitMonoCertificate& certificate);

struct StrongDualCertificates {
    SplitMonoCertificate right;  // i_N : k -> N (x) N*, retraction ev_N / r(N)
    SplitMonoCertificate left;   // j_N : k -> N* (x) N, retraction ev'_N / r(N)
};

/// Throws NotInvolutory when S^2 != id and RankNotInvertible when char | dim N,
/// in that order; AxiomFailure if a certificate does not re-verify.
StrongDualCertificates build_strong_dual_certificates(const Object& n);

/// Solves for g in Hom(target, source) with g * mono = id (first echelon
/// solution). nullopt when no such g exists. Throws NotInjective when mono
/// has a kernel and NotAMorphism when mono is not a morphism.
std::optional<SplitMonoCertificate> split_retraction(const Matrix& mono, const Object& source, const Object& target);

struct SerreVerdict {
    std::string m_name;
    std::string n_name;
    Category category = Category::Module;
    bool involutory = false;
    bool hypothesis_holds = false;  // M (x) N is semisimple
    bool rank_invertible_m = false;
    bool rank_invertible_n = false;
    bool conclusion_m = false;  // M is semisimple
    bool conclusion_n = false;
    bool consistent = true;
};

/// Assembles a verdict from already computed facts.
SerreVerdict serre_verdict(std::string m_name, std::string n_name, Category category, bool involutory,
                           bool tensor_semisimple, bool m_semisimple, bool n_semisimple, std::size_t m_dim,
                           std::size_t n_dim, Field field);

/// Computes the semisimplicity of M (x) N, M and N and assembles the verdict.
/// Throws HopfMismatch.
SerreVerdict verify_serre(const Object& m, const Object& n);

} // namespace serre
