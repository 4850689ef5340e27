#include "serre/duality.hpp"

#include "serre/error.hpp"

namespace serre {

HsRank hs_rank(std::size_t dim, Field field) {
    HsRank r{Scalar(field, static_cast<long>(dim)), false};
    r.invertible = !r.value.is_zero();
    return r;
}

bool CanonicalElement::dual_basis_identities_hold() const {
    const Field f = element.field();
    const Matrix r = Matrix::reshape(element.data(), module_dim, module_dim, f);
    // r(i, a) = coefficient of e_i (x) e_a*.
    for (std::size_t b = 0; b < module_dim; ++b) {
        const Vector e = basis_vector(module_dim, b, f);
        Vector recovered(module_dim, Scalar::zero(f)), recovered_dual(module_dim, Scalar::zero(f));
        for (std::size_t i = 0; i < module_dim; ++i)
            for (std::size_t a = 0; a < module_dim; ++a) {
                recovered[i].add_mul(r(i, a), e[a]);
                recovered_dual[a].add_mul(r(i, a), e[i]);
            }
        if (recovered != e || recovered_dual != e) return false;
    }
    return true;
}

CanonicalElement canonical_element(std::size_t dim, Field field) {
    return CanonicalElement{dim, Matrix::identity(dim, field).flatten()};
}

Matrix coevaluation(std::size_t dim, Field field) { return Matrix::identity(dim, field).flatten(); }

Matrix evaluation(std::size_t dim, Field field) { return Matrix::identity(dim, field).flatten().transpose(); }

// The pairing <e_i*, e_j> is symmetric in the index order, so the left maps
// share their coordinates with the right ones; only the objects differ.
Matrix left_coevaluation(std::size_t dim, Field field) { return coevaluation(dim, field); }

Matrix left_evaluation(std::size_t dim, Field field) { return evaluation(dim, field); }

namespace {

Scalar as_scalar(const Matrix& one_by_one, Field field) {
    if (one_by_one.rows() != 1 || one_by_one.cols() != 1) return Scalar::zero(field);
    return one_by_one(0, 0);
}

std::string label(const HopfAlgebra& h, std::size_t i) { return h.algebra().basis_label(i); }

// f : k -> X is a morphism iff X_k f = u_k f for every operator pair.
void check_from_unit(AxiomReport& report, std::string name, const Matrix& column, const Object& target) {
    report.add(std::move(name));
    const Object unit = unit_object(hopf_of(target), category_of(target));
    const std::vector<Matrix> ops = operators_of(target);
    const std::vector<Matrix> unit_ops = operators_of(unit);
    for (std::size_t k = 0; k < ops.size(); ++k) {
        if (ops[k] * column != unit_ops[k](0, 0) * column) {
            report.fail({k}, "fails on operator " + std::to_string(k));
            return;
        }
    }
}

// f : X -> k is a morphism iff f X_k = u_k f.
void check_to_unit(AxiomReport& report, std::string name, const Matrix& row, const Object& source) {
    report.add(std::move(name));
    const Object unit = unit_object(hopf_of(source), category_of(source));
    const std::vector<Matrix> ops = operators_of(source);
    const std::vector<Matrix> unit_ops = operators_of(unit);
    for (std::size_t k = 0; k < ops.size(); ++k) {
        if (row * ops[k] != unit_ops[k](0, 0) * row) {
            report.fail({k}, "fails on operator " + std::to_string(k));
            return;
        }
    }
}

} // namespace

Scalar right_pairing(std::size_t dim, Field field) {
    return as_scalar(evaluation(dim, field) * coevaluation(dim, field), field);
}

Scalar left_pairing(std::size_t dim, Field field) {
    return as_scalar(left_evaluation(dim, field) * left_coevaluation(dim, field), field);
}

AxiomReport verify_coev_equivariance(const ModuleRep& n) {
    const HopfAlgebra& h = n.require_hopf();
    const ModuleRep x = tensor_modules(n, dual_module(n));
    const Matrix r = coevaluation(n.dim(), n.field());
    AxiomReport report;
    report.add("coevaluation H-linear");
    for (std::size_t i = 0; i < h.dim(); ++i) {
        if (x.action(i) * r != h.counit()[i] * r) {
            report.fail({i}, "h . R_N != epsilon(h) R_N for h = " + label(h, i));
            break;
        }
    }
    return report;
}

AxiomReport verify_ev_equivariance(const ModuleRep& n) {
    const HopfAlgebra& h = n.require_hopf();
    const std::size_t m = n.dim();
    const ModuleRep x = tensor_modules(n, dual_module(n));
    const Matrix ev = evaluation(m, n.field());
    AxiomReport report;
    report.add("evaluation H-linear");
    for (std::size_t i = 0; i < h.dim() && report.checks.back().passed; ++i) {
        const Matrix moved = ev * x.action(i);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                const Scalar lhs = moved(0, a * m + b);
                const Scalar rhs = h.counit()[i] * ev(0, a * m + b);
                if (lhs != rhs) {
                    report.fail({i, a, b}, "ev(" + label(h, i) + " . (e_" + std::to_string(a) + " (x) e_" +
                                               std::to_string(b) + "*)) = " + lhs.to_string() + " but expected " +
                                               rhs.to_string());
                    return report;
                }
            }
    }
    return report;
}

AxiomReport verify_coev_colinearity(const ComoduleRep& n) {
    const HopfAlgebra& h = *n.hopf();
    const std::size_t m = n.dim();
    const ComoduleRep x = tensor_comodules(n, dual_comodule(n));
    AxiomReport report;
    report.add("coevaluation H-colinear");
    // Coefficient of e_a (x) e_b* (x) h_t in rho(R_N) against R_N (x) 1_H.
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t t = 0; t < h.dim(); ++t) {
                Scalar lhs = Scalar::zero(n.field());
                for (std::size_t i = 0; i < m; ++i) lhs += x.coaction()(i * m + i, a * m + b, t);
                const Scalar rhs = a == b ? h.unit()[t] : Scalar::zero(n.field());
                if (lhs != rhs) {
                    report.fail({a, b, t}, "rho(R_N) has coefficient " + lhs.to_string() + " at e_" +
                                               std::to_string(a) + " (x) e_" + std::to_string(b) + "* (x) " +
                                               label(h, t) + ", expected " + rhs.to_string());
                    return report;
                }
            }
    return report;
}

AxiomReport verify_ev_colinearity(const ComoduleRep& n) {
    const HopfAlgebra& h = *n.hopf();
    const std::size_t m = n.dim();
    const ComoduleRep x = tensor_comodules(n, dual_comodule(n));
    AxiomReport report;
    report.add("evaluation H-colinear");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t t = 0; t < h.dim(); ++t) {
                Scalar lhs = Scalar::zero(n.field());
                for (std::size_t a = 0; a < m; ++a) lhs += x.coaction()(i * m + j, a * m + a, t);
                const Scalar rhs = i == j ? h.unit()[t] : Scalar::zero(n.field());
                if (lhs != rhs) {
                    report.fail({i, j}, "coefficient of " + label(h, t) + " is " + lhs.to_string() +
                                            ", expected " + rhs.to_string());
                    return report;
                }
            }
    return report;
}

AxiomReport verify_duality_maps(const Object& n) {
    const std::size_t m = dim_of(n);
    const Field f = field_of(n);
    const Object d = dual(n);
    const Object right = tensor(n, d);
    const Object left = tensor(d, n);
    AxiomReport report;
    check_from_unit(report, "coevaluation", coevaluation(m, f), right);
    check_to_unit(report, "evaluation", evaluation(m, f), right);
    check_from_unit(report, "left coevaluation", left_coevaluation(m, f), left);
    check_to_unit(report, "left evaluation", left_evaluation(m, f), left);
    report.add("rank identity");
    const Scalar expected = hs_rank(m, f).value;
    const Scalar r = right_pairing(m, f);
    const Scalar l = left_pairing(m, f);
    if (r != expected || l != expected) {
        report.fail({}, "ev i = " + r.to_string() + ", ev' j = " + l.to_string() + ", dim = " + expected.to_string());
    }
    return report;
}

AxiomReport recheck(const SplitMonoCertificate& c) {
    AxiomReport report;
    report.add("retraction after mono is identity");
    const std::size_t n = dim_of(c.source);
    if (c.retraction.cols() != c.mono.rows() || c.retraction.rows() != n ||
        !(c.retraction * c.mono).is_identity()) {
        report.fail({}, c.context);
    }
    report.add("mono is a morphism");
    if (!in_span(c.mono, hom_basis(c.source, c.target))) report.fail({}, c.context);
    report.add("retraction is a morphism");
    if (!in_span(c.retraction, hom_basis(c.target, c.source))) report.fail({}, c.context);
    return report;
}

StrongDualCertificates build_strong_dual_certificates(const Object& n) {
    const HopfAlgebra& h = *hopf_of(n);
    if (const auto bad = involution_defect(h)) {
        throw NotInvolutory("strong dual of '" + name_of(n) + "': " + h.name() + " is not involutory (S^2 != id on " +
                            h.algebra().basis_label(*bad) + ")");
    }
    const std::size_t m = dim_of(n);
    const Field f = field_of(n);
    const HsRank rank = hs_rank(m, f);
    if (!rank.invertible) {
        throw RankNotInvertible("strong dual of '" + name_of(n) + "': rank " + std::to_string(m) + " is zero in " +
                                f.name());
    }
    const Scalar inv = rank.value.inverse();
    const Object unit = unit_object(hopf_of(n), category_of(n));
    const Object d = dual(n);

    StrongDualCertificates out{
        SplitMonoCertificate{category_of(n), coevaluation(m, f), inv * evaluation(m, f), unit, tensor(n, d),
                             "i_N for " + name_of(n)},
        SplitMonoCertificate{category_of(n), left_coevaluation(m, f), inv * left_evaluation(m, f), unit, tensor(d, n),
                             "j_N for " + name_of(n)},
    };
    for (const auto* c : {&out.right, &out.left}) {
        const AxiomReport r = recheck(*c);
        if (!r.passed()) throw AxiomFailure("certificate " + c->context + " does not re-verify:\n" + r.render());
    }
    return out;
}

std::optional<SplitMonoCertificate> split_retraction(const Matrix& mono, const Object& source, const Object& target) {
    const std::size_t s = dim_of(source);
    const std::size_t t = dim_of(target);
    if (mono.rows() != t || mono.cols() != s) {
        throw NotAMorphism("split_retraction: mono has shape " + std::to_string(mono.rows()) + "x" +
                           std::to_string(mono.cols()) + ", expected " + std::to_string(t) + "x" + std::to_string(s));
    }
    if (rank(mono) != s) throw NotInjective("split_retraction: mono into '" + name_of(target) + "' has a kernel");
    if (!is_morphism(mono, source, target)) {
        throw NotAMorphism("split_retraction: map '" + name_of(source) + "' -> '" + name_of(target) +
                           "' is not a morphism");
    }
    const Field f = field_of(source);
    const std::vector<Matrix> basis = hom_basis(target, source);
    Matrix system(s * s, basis.size(), f);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const Matrix composite = basis[k] * mono;
        for (std::size_t e = 0; e < s * s; ++e) system(e, k) = composite.data()[e];
    }
    const auto coeffs = solve_linear(system, Matrix::identity(s, f).flatten());
    if (!coeffs) return std::nullopt;
    Matrix g(s, t, f);
    for (std::size_t k = 0; k < basis.size(); ++k) g.add_scaled((*coeffs)(k, 0), basis[k]);
    return SplitMonoCertificate{category_of(source), mono, std::move(g), source, target,
                                "'" + name_of(source) + "' -> '" + name_of(target) + "'"};
}

SerreVerdict serre_verdict(std::string m_name, std::string n_name, Category category, bool involutory,
                           bool tensor_semisimple, bool m_semisimple, bool n_semisimple, std::size_t m_dim,
                           std::size_t n_dim, Field field) {
    SerreVerdict v;
    v.m_name = std::move(m_name);
    v.n_name = std::move(n_name);
    v.category = category;
    v.involutory = involutory;
    v.hypothesis_holds = tensor_semisimple;
    v.rank_invertible_m = hs_rank(m_dim, field).invertible;
    v.rank_invertible_n = hs_rank(n_dim, field).invertible;
    v.conclusion_m = m_semisimple;
    v.conclusion_n = n_semisimple;
    v.consistent = !(v.hypothesis_holds && v.rank_invertible_n && !v.conclusion_m) &&
                   !(v.hypothesis_holds && v.rank_invertible_m && !v.conclusion_n);
    return v;
}

SerreVerdict verify_serre(const Object& m, const Object& n) {
    if (!same_hopf(hopf_of(m), hopf_of(n))) {
        throw HopfMismatch("verify_serre: '" + name_of(m) + "' and '" + name_of(n) +
                           "' live over different Hopf algebras");
    }
    const bool tensor_ss = semisimplicity(tensor(m, n)).verdict;
    return serre_verdict(name_of(m), name_of(n), category_of(m), is_involutory(*hopf_of(m)), tensor_ss,
                         semisimplicity(m).verdict, semisimplicity(n).verdict, dim_of(m), dim_of(n), field_of(m));
}

} // namespace serre
