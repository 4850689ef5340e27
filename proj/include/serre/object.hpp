#pragma once

#include "serre/semisimplicity.hpp"

#include <string>
#include <variant>
#include <vector>

namespace serre {

enum class Category { Module, Comodule, YD };

std::string to_string(Category category);
/// "module", "comodule" or "yd"; throws std::invalid_argument otherwise.
Category parse_category(const std::string& text);

/// An object of one of the three concrete categories.
using Object = std::variant<ModuleRep, ComoduleRep, YDModuleRep>;

Category category_of(const Object& object);
const std::string& name_of(const Object& object);
std::size_t dim_of(const Object& object);
Field field_of(const Object& object);
const HopfPtr& hopf_of(const Object& object);
Object renamed(const Object& object, std::string name);

/// Operators whose joint invariant subspaces are the subobjects: action
/// matrices, coaction components, or both.
std::vector<Matrix> operators_of(const Object& object);

/// The unit object k of the category over `hopf`.
Object unit_object(const HopfPtr& hopf, Category category);

/// Both objects must share category and Hopf algebra (HopfMismatch,
/// std::invalid_argument on a category mismatch).
Object tensor(const Object& a, const Object& b);
Object dual(const Object& object);
Object direct_sum(const Object& a, const Object& b);

/// Canonical basis of the morphisms a -> b (dim b x dim a matrices).
std::vector<Matrix> hom_basis(const Object& a, const Object& b);
bool is_morphism(const Matrix& g, const Object& a, const Object& b);

/// True when g lies in the span of `basis`, decided by solving for coefficients.
bool in_span(const Matrix& g, const std::vector<Matrix>& basis);

AxiomReport check_axioms(const Object& object);
SemisimplicityReport semisimplicity(const Object& object);
bool brute_force_semisimple(const Object& object, std::uint64_t bound = kDefaultOracleBound);

/// Exact equality of action matrices and/or coaction tensors.
bool same_structure(const Object& a, const Object& b);

} // namespace serre
