#include "serre/module_rep.hpp"

#include "serre/error.hpp"
#include "sparse.hpp"

#include <stdexcept>

namespace serre {

ModuleRep::ModuleRep(HopfPtr hopf, std::string name, std::vector<Matrix> action, std::size_t dim)
    : algebra_(hopf ? std::shared_ptr<const Algebra>(hopf, &hopf->algebra()) : nullptr), hopf_(std::move(hopf)),
      name_(std::move(name)), action_(std::move(action)), dim_(dim) {
    validate_shapes();
}

ModuleRep::ModuleRep(std::shared_ptr<const Algebra> algebra, std::string name, std::vector<Matrix> action,
                     std::size_t dim)
    : algebra_(std::move(algebra)), name_(std::move(name)), action_(std::move(action)), dim_(dim) {
    validate_shapes();
}

void ModuleRep::validate_shapes() const {
    if (!algebra_) throw std::invalid_argument("module '" + name_ + "' has no acting algebra");
    if (action_.size() != algebra_->dim()) {
        throw std::invalid_argument("module '" + name_ + "': expected " + std::to_string(algebra_->dim()) +
                                    " action matrices, got " + std::to_string(action_.size()));
    }
    for (const auto& a : action_) {
        if (a.rows() != dim_ || a.cols() != dim_) {
            throw std::invalid_argument("module '" + name_ + "': action matrices must be " + std::to_string(dim_) +
                                        "x" + std::to_string(dim_));
        }
        if (a.field() != algebra_->field()) throw FieldMismatch("module '" + name_ + "': action over another field");
    }
}

const HopfAlgebra& ModuleRep::require_hopf() const {
    if (!hopf_) throw std::logic_error("module '" + name_ + "' is not over a Hopf algebra");
    return *hopf_;
}

ModuleRep ModuleRep::renamed(std::string name) const {
    ModuleRep copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

bool operator==(const ModuleRep& a, const ModuleRep& b) {
    return a.dim_ == b.dim_ && *a.algebra_ == *b.algebra_ && a.action_ == b.action_;
}

bool same_hopf(const HopfPtr& a, const HopfPtr& b) {
    if (a == b) return true;
    return a && b && a->name() == b->name() && *a == *b;
}

namespace {

void require_same_hopf(const ModuleRep& m, const ModuleRep& n, const char* op) {
    const bool ok = (m.hopf() || n.hopf()) ? same_hopf(m.hopf(), n.hopf())
                                           : (m.algebra_ptr() == n.algebra_ptr() || m.algebra() == n.algebra());
    if (!ok) {
        throw HopfMismatch(std::string(op) + ": '" + m.name() + "' is over " + m.algebra().name() + " but '" +
                           n.name() + "' is over " + n.algebra().name());
    }
}

} // namespace

Matrix act(const ModuleRep& module, const Vector& v) {
    Matrix out(module.dim(), module.dim(), module.field());
    for (std::size_t i = 0; i < v.size(); ++i) out.add_scaled(v[i], module.action(i));
    return out;
}

AxiomReport check_module_axioms(const ModuleRep& module) {
    const Algebra& alg = module.algebra();
    const std::size_t n = alg.dim();
    const detail::SparseLast m(alg.mult());
    AxiomReport report;

    report.add("unit acts as identity");
    if (!act(module, alg.unit()).is_identity()) report.fail({}, "sum_i unit[i] A_i != I");

    report.add("multiplicativity");
    for (std::size_t i = 0; i < n && report.checks.back().passed; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix expected(module.dim(), module.dim(), module.field());
            for (const auto& [t, x] : m(i, j)) expected.add_scaled(x, module.action(t));
            if (module.action(i) * module.action(j) != expected) {
                report.fail({i, j}, "A_i A_j != sum_t m(i,j,t) A_t");
                break;
            }
        }
    return report;
}

ModuleRep trivial_module(const HopfPtr& hopf) {
    std::vector<Matrix> action;
    for (const auto& e : hopf->counit()) {
        Matrix a(1, 1, hopf->field());
        a(0, 0) = e;
        action.push_back(std::move(a));
    }
    return ModuleRep(hopf, hopf->name() + "/trivial", std::move(action), 1);
}

ModuleRep regular_module(const HopfPtr& hopf) {
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < hopf->dim(); ++i) action.push_back(hopf->algebra().left_multiplication(i));
    return ModuleRep(hopf, hopf->name() + "/regular", std::move(action), hopf->dim());
}

ModuleRep tensor_modules(const ModuleRep& m, const ModuleRep& n) {
    require_same_hopf(m, n, "tensor_modules");
    const HopfAlgebra& h = m.require_hopf();
    const detail::SparseFirst d(h.comult());
    const std::size_t dim = m.dim() * n.dim();
    std::vector<Matrix> action;
    action.reserve(h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i) {
        Matrix a(dim, dim, h.field());
        for (const auto& [j, t, x] : d[i]) a.add_scaled(x, kron(m.action(j), n.action(t)));
        action.push_back(std::move(a));
    }
    return ModuleRep(m.hopf(), "(" + m.name() + " (x) " + n.name() + ")", std::move(action), dim);
}

ModuleRep dual_module(const ModuleRep& n) {
    const HopfAlgebra& h = n.require_hopf();
    std::vector<Matrix> action;
    action.reserve(h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i) {
        Matrix s_action(n.dim(), n.dim(), h.field());
        for (std::size_t t = 0; t < h.dim(); ++t) s_action.add_scaled(h.antipode()(t, i), n.action(t));
        action.push_back(s_action.transpose());
    }
    return ModuleRep(n.hopf(), n.name() + "*", std::move(action), n.dim());
}

ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n) {
    require_same_hopf(m, n, "direct_sum");
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < m.algebra().dim(); ++i) action.push_back(direct_sum(m.action(i), n.action(i)));
    const std::string name = "(" + m.name() + " + " + n.name() + ")";
    if (m.hopf()) return ModuleRep(m.hopf(), name, std::move(action), m.dim() + n.dim());
    return ModuleRep(m.algebra_ptr(), name, std::move(action), m.dim() + n.dim());
}

std::vector<Matrix> hom_space(const ModuleRep& m, const ModuleRep& n) {
    require_same_hopf(m, n, "hom_space");
    return intertwiners(m.actions(), n.actions(), m.dim(), n.dim(), m.field());
}

bool is_module_map(const Matrix& g, const ModuleRep& m, const ModuleRep& n) {
    if (g.rows() != n.dim() || g.cols() != m.dim()) return false;
    for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
        if (g * m.action(i) != n.action(i) * g) return false;
    }
    return true;
}

} // namespace serre
