#include "serre/object.hpp"

#include "serre/error.hpp"

#include <stdexcept>

namespace serre {

namespace {

template <class... Fs>
struct Overload : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

void require_same_category(const Object& a, const Object& b, const char* op) {
    if (a.index() != b.index()) {
        throw std::invalid_argument(std::string(op) + ": '" + name_of(a) + "' is a " + to_string(category_of(a)) +
                                    " but '" + name_of(b) + "' is a " + to_string(category_of(b)));
    }
}

} // namespace

std::string to_string(Category category) {
    switch (category) {
    case Category::Module: return "module";
    case Category::Comodule: return "comodule";
    case Category::YD: return "yd";
    }
    return "unknown";
}

Category parse_category(const std::string& text) {
    if (text == "module") return Category::Module;
    if (text == "comodule") return Category::Comodule;
    if (text == "yd") return Category::YD;
    throw std::invalid_argument("unknown category '" + text + "' (expected module, comodule or yd)");
}

Category category_of(const Object& object) { return static_cast<Category>(object.index()); }

const std::string& name_of(const Object& object) {
    return std::visit([](const auto& x) -> const std::string& { return x.name(); }, object);
}

std::size_t dim_of(const Object& object) {
    return std::visit([](const auto& x) { return x.dim(); }, object);
}

Field field_of(const Object& object) {
    return std::visit([](const auto& x) { return x.field(); }, object);
}

const HopfPtr& hopf_of(const Object& object) {
    return std::visit([](const auto& x) -> const HopfPtr& { return x.hopf(); }, object);
}

Object renamed(const Object& object, std::string name) {
    return std::visit([&](const auto& x) -> Object { return x.renamed(std::move(name)); }, object);
}

std::vector<Matrix> operators_of(const Object& object) {
    return std::visit(Overload{
                          [](const ModuleRep& m) { return m.actions(); },
                          [](const ComoduleRep& c) { return c.components(); },
                          [](const YDModuleRep& y) { return y.operators(); },
                      },
                      object);
}

Object unit_object(const HopfPtr& hopf, Category category) {
    switch (category) {
    case Category::Module: return trivial_module(hopf);
    case Category::Comodule: return trivial_comodule(hopf);
    case Category::YD: return trivial_yd(hopf);
    }
    throw std::logic_error("unit_object: bad category");
}

Object tensor(const Object& a, const Object& b) {
    require_same_category(a, b, "tensor");
    return std::visit(Overload{
                          [&](const ModuleRep& m) -> Object { return tensor_modules(m, std::get<ModuleRep>(b)); },
                          [&](const ComoduleRep& c) -> Object {
                              return tensor_comodules(c, std::get<ComoduleRep>(b));
                          },
                          [&](const YDModuleRep& y) -> Object { return tensor_yd(y, std::get<YDModuleRep>(b)); },
                      },
                      a);
}

Object dual(const Object& object) {
    return std::visit(Overload{
                          [](const ModuleRep& m) -> Object { return dual_module(m); },
                          [](const ComoduleRep& c) -> Object { return dual_comodule(c); },
                          [](const YDModuleRep& y) -> Object { return dual_yd(y); },
                      },
                      object);
}

Object direct_sum(const Object& a, const Object& b) {
    require_same_category(a, b, "direct_sum");
    return std::visit(
        [&](const auto& x) -> Object { return direct_sum(x, std::get<std::decay_t<decltype(x)>>(b)); }, a);
}

std::vector<Matrix> hom_basis(const Object& a, const Object& b) {
    require_same_category(a, b, "hom_basis");
    return std::visit(Overload{
                          [&](const ModuleRep& m) { return hom_space(m, std::get<ModuleRep>(b)); },
                          [&](const ComoduleRep& c) { return colinear_hom_space(c, std::get<ComoduleRep>(b)); },
                          [&](const YDModuleRep& y) { return yd_hom_space(y, std::get<YDModuleRep>(b)); },
                      },
                      a);
}

bool is_morphism(const Matrix& g, const Object& a, const Object& b) {
    require_same_category(a, b, "is_morphism");
    return std::visit(Overload{
                          [&](const ModuleRep& m) { return is_module_map(g, m, std::get<ModuleRep>(b)); },
                          [&](const ComoduleRep& c) { return is_comodule_map(g, c, std::get<ComoduleRep>(b)); },
                          [&](const YDModuleRep& y) { return is_yd_map(g, y, std::get<YDModuleRep>(b)); },
                      },
                      a);
}

bool in_span(const Matrix& g, const std::vector<Matrix>& basis) {
    const std::size_t entries = g.rows() * g.cols();
    if (basis.empty()) return g.is_zero();
    Matrix columns(entries, basis.size(), g.field());
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t e = 0; e < entries; ++e) columns(e, k) = basis[k].data()[e];
    return solve_linear(columns, g.flatten()).has_value();
}

AxiomReport check_axioms(const Object& object) {
    return std::visit(Overload{
                          [](const ModuleRep& m) { return check_module_axioms(m); },
                          [](const ComoduleRep& c) { return check_comodule_axioms(c); },
                          [](const YDModuleRep& y) { return check_yd_compat(y); },
                      },
                      object);
}

SemisimplicityReport semisimplicity(const Object& object) {
    const std::vector<Matrix> ops = operators_of(object);
    return semisimplicity(ops, dim_of(object), field_of(object));
}

bool brute_force_semisimple(const Object& object, std::uint64_t bound) {
    const std::vector<Matrix> ops = operators_of(object);
    return brute_force_semisimple(ops, dim_of(object), field_of(object), bound);
}

bool same_structure(const Object& a, const Object& b) {
    if (a.index() != b.index()) return false;
    return std::visit(Overload{
                          [&](const ModuleRep& m) { return m.actions() == std::get<ModuleRep>(b).actions(); },
                          [&](const ComoduleRep& c) {
                              return c.coaction() == std::get<ComoduleRep>(b).coaction();
                          },
                          [&](const YDModuleRep& y) {
                              const auto& z = std::get<YDModuleRep>(b);
                              return y.module().actions() == z.module().actions() &&
                                     y.comodule().coaction() == z.comodule().coaction();
                          },
                      },
                      a);
}

} // namespace serre
