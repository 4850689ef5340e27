#pragma once

#include "serre/hopf.hpp"

#include <memory>
#include <string>
#include <vector>

namespace serre {

/// A finite-dimensional left module: action(i) is the matrix of basis
/// element b_i. The acting algebra is either a Hopf algebra (the usual case)
/// or a plain algebra such as the dual H* used for comodules.
///
/// Construction only checks shapes; check_module_axioms verifies the
/// unit and multiplicativity laws.
class ModuleRep {
public:
    ModuleRep(HopfPtr hopf, std::string name, std::vector<Matrix> action, std::size_t dim);
    ModuleRep(std::shared_ptr<const Algebra> algebra, std::string name, std::vector<Matrix> action, std::size_t dim);

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return dim_; }
    Field field() const noexcept { return algebra_->field(); }
    const Algebra& algebra() const noexcept { return *algebra_; }
    const std::shared_ptr<const Algebra>& algebra_ptr() const noexcept { return algebra_; }
    /// Null for modules over a plain algebra.
    const HopfPtr& hopf() const noexcept { return hopf_; }
    /// Throws std::logic_error for modules over a plain algebra.
    const HopfAlgebra& require_hopf() const;

    const Matrix& action(std::size_t i) const { return action_.at(i); }
    const std::vector<Matrix>& actions() const noexcept { return action_; }

    ModuleRep renamed(std::string name) const;

    friend bool operator==(const ModuleRep& a, const ModuleRep& b);

private:
    void validate_shapes() const;

    std::shared_ptr<const Algebra> algebra_;
    HopfPtr hopf_;
    std::string name_;
    std::vector<Matrix> action_;
    std::size_t dim_;
};

/// Two pointers to the same Hopf algebra, or two structurally equal ones.
bool same_hopf(const HopfPtr& a, const HopfPtr& b);

/// Checks "unit acts as identity" and "multiplicativity" (A_i A_j = sum_t m(i,j,t) A_t).
AxiomReport check_module_axioms(const ModuleRep& module);

/// k with h . a = epsilon(h) a.
ModuleRep trivial_module(const HopfPtr& hopf);

/// H acting on itself by left multiplication.
ModuleRep regular_module(const HopfPtr& hopf);

/// Diagonal action h . (m (x) n) = h_(1) m (x) h_(2) n on the Kronecker basis
/// (second factor fastest). Throws HopfMismatch.
ModuleRep tensor_modules(const ModuleRep& m, const ModuleRep& n);

/// N* with <h . f, n> = <f, S(h) n>: h_i acts by the transpose of the action of S(h_i).
ModuleRep dual_module(const ModuleRep& n);

/// Block-diagonal direct sum. Throws HopfMismatch.
ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n);

/// Canonical basis of Hom_H(M, N) as dim N x dim M matrices. Throws HopfMismatch.
std::vector<Matrix> hom_space(const ModuleRep& m, const ModuleRep& n);

/// True when g (dim N x dim M) intertwines the two actions.
bool is_module_map(const Matrix& g, const ModuleRep& m, const ModuleRep& n);

/// Action matrix of an arbitrary element v of the acting algebra.
Matrix act(const ModuleRep& module, const Vector& v);

} // namespace serre
