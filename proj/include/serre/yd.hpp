#pragma once

#include "serre/comodule_rep.hpp"

namespace serre {

/// A left-right Yetter-Drinfel'd module: a left H-module and right
/// H-comodule on one space, compatible via
///   h_(1) m<0> (x) h_(2) m<1> = (h_(2) m)<0> (x) (h_(2) m)<1> h_(1).
/// The constructor checks only that both parts share the Hopf algebra and
/// the dimension; check_yd_compat evaluates the compatibility identity.
class YDModuleRep {
public:
    YDModuleRep(ModuleRep module, ComoduleRep comodule, std::string name);

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return module_.dim(); }
    Field field() const noexcept { return module_.field(); }
    const HopfPtr& hopf() const noexcept { return module_.hopf(); }
    const ModuleRep& module() const noexcept { return module_; }
    const ComoduleRep& comodule() const noexcept { return comodule_; }

    /// Action matrices followed by coaction components; the YD subobjects are
    /// exactly the subspaces stable under all of them.
    std::vector<Matrix> operators() const;

    YDModuleRep renamed(std::string name) const;

    friend bool operator==(const YDModuleRep& a, const YDModuleRep& b);

private:
    ModuleRep module_;
    ComoduleRep comodule_;
    std::string name_;
};

/// Module axioms, comodule axioms and the compatibility identity ("yd compatibility").
/// The compatibility witness is (i, a): basis element h_i of H, basis vector e_a.
AxiomReport check_yd_compat(const YDModuleRep& yd);

YDModuleRep trivial_yd(const HopfPtr& hopf);

/// Diagonal action with the coaction of tensor_comodules. Throws HopfMismatch.
YDModuleRep tensor_yd(const YDModuleRep& a, const YDModuleRep& b);

/// dual_module and dual_comodule on the same dual basis.
YDModuleRep dual_yd(const YDModuleRep& yd);

YDModuleRep direct_sum(const YDModuleRep& a, const YDModuleRep& b);

/// Maps that are both H-linear and H-colinear, from one stacked system. Throws HopfMismatch.
std::vector<Matrix> yd_hom_space(const YDModuleRep& a, const YDModuleRep& b);

bool is_yd_map(const Matrix& g, const YDModuleRep& a, const YDModuleRep& b);

} // namespace serre
