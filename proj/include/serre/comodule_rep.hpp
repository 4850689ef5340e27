#pragma once

#include "serre/module_rep.hpp"

namespace serre {

/// A finite-dimensional right H-comodule. coaction(a, b, t) is the
/// coefficient of e_b (x) h_t in rho(e_a).
class ComoduleRep {
public:
    ComoduleRep(HopfPtr hopf, std::string name, Tensor3 coaction);

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return coaction_.dim0(); }
    Field field() const noexcept { return hopf_->field(); }
    const HopfPtr& hopf() const noexcept { return hopf_; }
    const Tensor3& coaction() const noexcept { return coaction_; }

    /// The h_t-component of rho as a dim x dim matrix: column a holds
    /// (coaction(a, b, t))_b. A subspace is a subcomodule iff it is stable
    /// under every component.
    Matrix component(std::size_t t) const;
    const std::vector<Matrix>& components() const noexcept { return components_; }

    ComoduleRep renamed(std::string name) const;

    friend bool operator==(const ComoduleRep& a, const ComoduleRep& b);

private:
    HopfPtr hopf_;
    std::string name_;
    Tensor3 coaction_;
    std::vector<Matrix> components_;
};

/// Counit law and coassociativity, each reporting its first violating index.
AxiomReport check_comodule_axioms(const ComoduleRep& comodule);

/// k with rho(a) = a (x) 1_H.
ComoduleRep trivial_comodule(const HopfPtr& hopf);

/// H over itself via Delta.
ComoduleRep regular_comodule(const HopfPtr& hopf);

/// rho(m (x) n) = m<0> (x) n<0> (x) m<1> n<1> on the Kronecker basis. Throws HopfMismatch.
ComoduleRep tensor_comodules(const ComoduleRep& m, const ComoduleRep& n);

/// N* with rho(e_i*) = sum_j e_j* (x) S((e_j)<1>) e_i*((e_j)<0>).
ComoduleRep dual_comodule(const ComoduleRep& n);

ComoduleRep direct_sum(const ComoduleRep& m, const ComoduleRep& n);

/// The same space as a left module over the convolution algebra H*:
/// h_t* . e_a = sum_b coaction(a, b, t) e_b.
ModuleRep comodule_to_dual_module(const ComoduleRep& comodule);

/// Canonical basis of {g : rho_N g = (g (x) id) rho_M}. Throws HopfMismatch.
std::vector<Matrix> colinear_hom_space(const ComoduleRep& m, const ComoduleRep& n);

bool is_comodule_map(const Matrix& g, const ComoduleRep& m, const ComoduleRep& n);

} // namespace serre
