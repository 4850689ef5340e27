#include "serre/yd.hpp"

#include "serre/error.hpp"
#include "sparse.hpp"

#include <stdexcept>

namespace serre {

YDModuleRep::YDModuleRep(ModuleRep module, ComoduleRep comodule, std::string name)
    : module_(std::move(module)), comodule_(std::move(comodule)), name_(std::move(name)) {
    if (!module_.hopf() || !same_hopf(module_.hopf(), comodule_.hopf())) {
        throw HopfMismatch("yd '" + name_ + "': module and comodule parts live over different Hopf algebras");
    }
    if (module_.dim() != comodule_.dim()) {
        throw std::invalid_argument("yd '" + name_ + "': module part has dim " + std::to_string(module_.dim()) +
                                    " but comodule part has dim " + std::to_string(comodule_.dim()));
    }
}

std::vector<Matrix> YDModuleRep::operators() const {
    std::vector<Matrix> ops = module_.actions();
    ops.insert(ops.end(), comodule_.components().begin(), comodule_.components().end());
    return ops;
}

YDModuleRep YDModuleRep::renamed(std::string name) const {
    YDModuleRep copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

bool operator==(const YDModuleRep& a, const YDModuleRep& b) {
    return a.module_ == b.module_ && a.comodule_ == b.comodule_;
}

AxiomReport check_yd_compat(const YDModuleRep& yd) {
    AxiomReport report;
    report.append(check_module_axioms(yd.module()), "module ");
    report.append(check_comodule_axioms(yd.comodule()), "comodule ");

    const HopfAlgebra& h = *yd.hopf();
    const std::size_t n = h.dim();
    const std::size_t m = yd.dim();
    const Field f = h.field();
    const detail::SparseFirst delta(h.comult());
    const detail::SparseFirst rho(yd.comodule().coaction());
    const detail::SparseLast mult(h.mult());
    const auto& A = yd.module().actions();

    report.add("yd compatibility");
    for (std::size_t i = 0; i < n && report.checks.back().passed; ++i)
        for (std::size_t a = 0; a < m; ++a) {
            // Coefficients of e_c (x) h_u, flattened as c * n + u.
            Vector lhs(m * n, Scalar::zero(f)), rhs(m * n, Scalar::zero(f));
            for (const auto& [j, t, x] : delta[i]) {
                // h_(1) m<0> (x) h_(2) m<1>
                for (const auto& [b, s, y] : rho[a]) {
                    const Scalar xy = x * y;
                    for (std::size_t c = 0; c < m; ++c) {
                        if (A[j](c, b).is_zero()) continue;
                        const Scalar coeff = xy * A[j](c, b);
                        for (const auto& [u, z] : mult(t, s)) lhs[c * n + u].add_mul(coeff, z);
                    }
                }
                // (h_(2) m)<0> (x) (h_(2) m)<1> h_(1)
                for (std::size_t b = 0; b < m; ++b) {
                    if (A[t](b, a).is_zero()) continue;
                    const Scalar xa = x * A[t](b, a);
                    for (const auto& [c, s, y] : rho[b]) {
                        const Scalar coeff = xa * y;
                        for (const auto& [u, z] : mult(s, j)) rhs[c * n + u].add_mul(coeff, z);
                    }
                }
            }
            if (lhs != rhs) {
                report.fail({i, a}, "compatibility fails for " + h.algebra().basis_label(i) + " on e_" +
                                        std::to_string(a));
                break;
            }
        }
    return report;
}

YDModuleRep trivial_yd(const HopfPtr& hopf) {
    return YDModuleRep(trivial_module(hopf), trivial_comodule(hopf), hopf->name() + "/yd/trivial");
}

YDModuleRep tensor_yd(const YDModuleRep& a, const YDModuleRep& b) {
    if (!same_hopf(a.hopf(), b.hopf())) {
        throw HopfMismatch("tensor_yd: '" + a.name() + "' and '" + b.name() + "' live over different Hopf algebras");
    }
    return YDModuleRep(tensor_modules(a.module(), b.module()), tensor_comodules(a.comodule(), b.comodule()),
                       "(" + a.name() + " (x) " + b.name() + ")");
}

YDModuleRep dual_yd(const YDModuleRep& yd) {
    return YDModuleRep(dual_module(yd.module()), dual_comodule(yd.comodule()), yd.name() + "*");
}

YDModuleRep direct_sum(const YDModuleRep& a, const YDModuleRep& b) {
    return YDModuleRep(direct_sum(a.module(), b.module()), direct_sum(a.comodule(), b.comodule()),
                       "(" + a.name() + " + " + b.name() + ")");
}

std::vector<Matrix> yd_hom_space(const YDModuleRep& a, const YDModuleRep& b) {
    if (!same_hopf(a.hopf(), b.hopf())) {
        throw HopfMismatch("yd_hom_space: '" + a.name() + "' and '" + b.name() +
                           "' live over different Hopf algebras");
    }
    return intertwiners(a.operators(), b.operators(), a.dim(), b.dim(), a.field());
}

bool is_yd_map(const Matrix& g, const YDModuleRep& a, const YDModuleRep& b) {
    return is_module_map(g, a.module(), b.module()) && is_comodule_map(g, a.comodule(), b.comodule());
}

} // namespace serre
