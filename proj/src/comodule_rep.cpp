#include "serre/comodule_rep.hpp"

#include "serre/error.hpp"
#include "sparse.hpp"

#include <stdexcept>

namespace serre {

ComoduleRep::ComoduleRep(HopfPtr hopf, std::string name, Tensor3 coaction)
    : hopf_(std::move(hopf)), name_(std::move(name)), coaction_(std::move(coaction)) {
    if (!hopf_) throw std::invalid_argument("comodule '" + name_ + "' has no Hopf algebra");
    if (coaction_.dim1() != coaction_.dim0() || coaction_.dim2() != hopf_->dim()) {
        throw std::invalid_argument("comodule '" + name_ + "': coaction tensor must be dim x dim x " +
                                    std::to_string(hopf_->dim()));
    }
    if (coaction_.field() != hopf_->field()) throw FieldMismatch("comodule '" + name_ + "': coaction over another field");
    components_.reserve(hopf_->dim());
    for (std::size_t t = 0; t < hopf_->dim(); ++t) components_.push_back(component(t));
}

Matrix ComoduleRep::component(std::size_t t) const {
    const std::size_t m = dim();
    Matrix c(m, m, field());
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) c(b, a) = coaction_(a, b, t);
    return c;
}

ComoduleRep ComoduleRep::renamed(std::string name) const {
    ComoduleRep copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

bool operator==(const ComoduleRep& a, const ComoduleRep& b) {
    return same_hopf(a.hopf_, b.hopf_) && a.coaction_ == b.coaction_;
}

namespace {

void require_same_hopf(const ComoduleRep& m, const ComoduleRep& n, const char* op) {
    if (!same_hopf(m.hopf(), n.hopf())) {
        throw HopfMismatch(std::string(op) + ": '" + m.name() + "' is over " + m.hopf()->name() + " but '" +
                           n.name() + "' is over " + n.hopf()->name());
    }
}

} // namespace

AxiomReport check_comodule_axioms(const ComoduleRep& comodule) {
    const HopfAlgebra& h = *comodule.hopf();
    const std::size_t m = comodule.dim();
    const std::size_t n = h.dim();
    const Field f = h.field();
    const Tensor3& c = comodule.coaction();
    const detail::SparseFirst rho(c);
    const detail::SparseFirst d(h.comult());
    AxiomReport report;

    report.add("counit law");
    for (std::size_t a = 0; a < m && report.checks.back().passed; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Scalar s = Scalar::zero(f);
            for (std::size_t t = 0; t < n; ++t) s.add_mul(c(a, b, t), h.counit()[t]);
            if (a == b ? !s.is_one() : !s.is_zero()) {
                report.fail({a, b}, "sum_t c(a,b,t) epsilon(h_t) = " + s.to_string());
                break;
            }
        }

    // (rho (x) id) rho = (id (x) Delta) rho, compared on M (x) H (x) H per basis vector.
    report.add("coassociativity");
    for (std::size_t a = 0; a < m && report.checks.back().passed; ++a) {
        Vector left(m * n * n, Scalar::zero(f)), right(m * n * n, Scalar::zero(f));
        for (const auto& [b, t, x] : rho[a])
            for (const auto& [e, s, y] : rho[b]) left[(e * n + s) * n + t].add_mul(x, y);
        for (const auto& [e, u, x] : rho[a])
            for (const auto& [s, t, y] : d[u]) right[(e * n + s) * n + t].add_mul(x, y);
        for (std::size_t k = 0; k < left.size(); ++k) {
            if (left[k] != right[k]) {
                report.fail({a, k / (n * n), (k / n) % n, k % n}, "(rho x id) rho != (id x Delta) rho");
                break;
            }
        }
    }
    return report;
}

ComoduleRep trivial_comodule(const HopfPtr& hopf) {
    Tensor3 c(1, 1, hopf->dim(), hopf->field());
    for (std::size_t t = 0; t < hopf->dim(); ++t) c(0, 0, t) = hopf->unit()[t];
    return ComoduleRep(hopf, hopf->name() + "/comodule/trivial", std::move(c));
}

ComoduleRep regular_comodule(const HopfPtr& hopf) {
    return ComoduleRep(hopf, hopf->name() + "/comodule/regular", hopf->comult());
}

ComoduleRep tensor_comodules(const ComoduleRep& m, const ComoduleRep& n) {
    require_same_hopf(m, n, "tensor_comodules");
    const HopfAlgebra& h = *m.hopf();
    const std::size_t p = m.dim();
    const std::size_t q = n.dim();
    const detail::SparseFirst rm(m.coaction());
    const detail::SparseFirst rn(n.coaction());
    const detail::SparseLast mult(h.mult());
    Tensor3 c(p * q, p * q, h.dim(), h.field());
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < q; ++b)
            for (const auto& [a2, s, x] : rm[a])
                for (const auto& [b2, t, y] : rn[b]) {
                    const Scalar xy = x * y;
                    for (const auto& [u, z] : mult(s, t)) c(a * q + b, a2 * q + b2, u).add_mul(xy, z);
                }
    return ComoduleRep(m.hopf(), "(" + m.name() + " (x) " + n.name() + ")", std::move(c));
}

ComoduleRep dual_comodule(const ComoduleRep& n) {
    const HopfAlgebra& h = *n.hopf();
    const std::size_t m = n.dim();
    const Matrix& S = h.antipode();
    Tensor3 c(m, m, h.dim(), h.field());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t s = 0; s < h.dim(); ++s) {
                const Scalar& x = n.coaction()(j, i, s);
                if (x.is_zero()) continue;
                for (std::size_t t = 0; t < h.dim(); ++t)
                    if (!S(t, s).is_zero()) c(i, j, t).add_mul(x, S(t, s));
            }
    return ComoduleRep(n.hopf(), n.name() + "*", std::move(c));
}

ComoduleRep direct_sum(const ComoduleRep& m, const ComoduleRep& n) {
    require_same_hopf(m, n, "direct_sum");
    const std::size_t p = m.dim();
    const std::size_t q = n.dim();
    const std::size_t k = m.hopf()->dim();
    Tensor3 c(p + q, p + q, k, m.field());
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b)
            for (std::size_t t = 0; t < k; ++t) c(a, b, t) = m.coaction()(a, b, t);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b)
            for (std::size_t t = 0; t < k; ++t) c(p + a, p + b, t) = n.coaction()(a, b, t);
    return ComoduleRep(m.hopf(), "(" + m.name() + " + " + n.name() + ")", std::move(c));
}

ModuleRep comodule_to_dual_module(const ComoduleRep& comodule) {
    return ModuleRep(comodule.hopf()->dual(), comodule.name() + " as " + comodule.hopf()->dual()->name() + "-module",
                     comodule.components(), comodule.dim());
}

std::vector<Matrix> colinear_hom_space(const ComoduleRep& m, const ComoduleRep& n) {
    require_same_hopf(m, n, "colinear_hom_space");
    return intertwiners(m.components(), n.components(), m.dim(), n.dim(), m.field());
}

bool is_comodule_map(const Matrix& g, const ComoduleRep& m, const ComoduleRep& n) {
    if (g.rows() != n.dim() || g.cols() != m.dim()) return false;
    for (std::size_t t = 0; t < m.hopf()->dim(); ++t) {
        if (g * m.components()[t] != n.components()[t] * g) return false;
    }
    return true;
}

} // namespace serre
