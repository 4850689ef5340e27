#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "serre/catalog.hpp"
#include "serre/error.hpp"

using namespace serre;

namespace {

const Field Q = Field::rationals();

const ModuleRep& module(const char* id) { return std::get<ModuleRep>(*default_catalog().at(id).object); }

const Matrix swap2 = Matrix::from_rows(Q, {{0, 1}, {1, 0}});

} // namespace

TEST_CASE("trivial module acts by the counit") {
    const ModuleRep t = trivial_module(default_catalog().at("kC2/Q").hopf);
    CHECK(t.dim() == 1);
    for (const auto& a : t.actions()) CHECK(a.is_identity());
    const ModuleRep h4 = trivial_module(sweedler(Q));
    CHECK(h4.action(1).is_identity());
    CHECK(h4.action(2).is_zero());
    CHECK(check_module_axioms(h4).passed());
}

TEST_CASE("regular module of Q[C2] is the swap") {
    const ModuleRep r = module("kC2/Q/regular");
    CHECK(r.action(0).is_identity());
    CHECK(r.action(1) == swap2);
    CHECK(check_module_axioms(r).passed());
}

TEST_CASE("a corrupted action entry is reported with its pair") {
    std::vector<Matrix> acts = module("kC2/Q/regular").actions();
    acts[1](0, 0) = Scalar::one(Q);
    const ModuleRep bad(default_catalog().at("kC2/Q").hopf, "bad", acts, 2);
    const AxiomReport r = check_module_axioms(bad);
    REQUIRE_FALSE(r.passed("multiplicativity"));
    CHECK(r.find("multiplicativity")->witness.size() == 2);
    CHECK_FALSE(check_module_axioms(module("kC2/Q/broken-regular")).passed("multiplicativity"));
}

TEST_CASE("tensor products") {
    const ModuleRep r = module("kC2/Q/regular");
    const ModuleRep rr = tensor_modules(r, r);
    CHECK(rr.dim() == 4);
    CHECK(rr.action(1) == kron(swap2, swap2));
    const ModuleRep t = module("kC2/Q/trivial");
    CHECK(tensor_modules(t, r).actions() == r.actions());
    CHECK(tensor_modules(r, t).actions() == r.actions());
    CHECK_THROWS_AS(tensor_modules(r, module("kC3/Q/trivial")), HopfMismatch);
}

TEST_CASE("tensor of every catalog pair over one Hopf algebra is a module") {
    for (const char* h : {"kS3/F2", "H4/Q", "k^C3/F3", "kC4/F5"}) {
        const auto objs = default_catalog().objects_over(h, Category::Module);
        for (const auto* a : objs)
            for (const auto* b : objs) {
                INFO(a->id << " (x) " << b->id);
                CHECK(check_module_axioms(tensor_modules(std::get<ModuleRep>(*a->object),
                                                         std::get<ModuleRep>(*b->object)))
                          .passed());
            }
    }
}

TEST_CASE("duals") {
    CHECK(dual_module(module("kC2/Q/trivial")).actions() == module("kC2/Q/trivial").actions());
    CHECK(dual_module(module("kC2/Q/regular")).action(1) == swap2);
    // modules even when S^2 != id
    for (const auto& e : default_catalog().entries()) {
        if (e.kind != EntryKind::Module || e.is_negative()) continue;
        INFO(e.id);
        CHECK(check_module_axioms(dual_module(std::get<ModuleRep>(*e.object))).passed());
    }
}

TEST_CASE("double dual over H4 twists by S^2") {
    const ModuleRep m = module("H4/Q/two-dim");
    const ModuleRep dd = dual_module(dual_module(m));
    // oracle: S^2(x) = -x, S^2(g) = g
    CHECK(dd.action(1) == m.action(1));
    CHECK(dd.action(2) == Scalar(Q, -1L) * m.action(2));
}

TEST_CASE("Hom spaces") {
    const ModuleRep t = module("kC2/Q/trivial");
    const ModuleRep r = module("kC2/Q/regular");
    CHECK(hom_space(t, t).size() == 1);
    const auto aug = hom_space(r, t);
    REQUIRE(aug.size() == 1);
    // the augmentation: both group elements map to the same scalar
    CHECK(aug[0](0, 0) == aug[0](0, 1));
    CHECK(hom_space(module("kS3/Q/sign"), module("kS3/Q/trivial")).empty());
    CHECK(hom_space(r, r).size() == 2);
    for (const auto& g : hom_space(module("kS3/Q/permutation"), module("kS3/Q/standard"))) {
        CHECK(is_module_map(g, module("kS3/Q/permutation"), module("kS3/Q/standard")));
    }
}

TEST_CASE("act on an arbitrary element") {
    const ModuleRep r = module("kC2/F2/regular");
    const Field f = r.field();
    const Matrix e_plus_g = act(r, Vector{Scalar::one(f), Scalar::one(f)});
    CHECK_FALSE(e_plus_g.is_zero());
    CHECK((e_plus_g * e_plus_g).is_zero());
}
