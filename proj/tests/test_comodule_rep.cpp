#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "serre/catalog.hpp"
#include "serre/error.hpp"
#include "serre/semisimplicity.hpp"

using namespace serre;

namespace {

const Field Q = Field::rationals();

const ComoduleRep& comodule(const std::string& id) {
    return std::get<ComoduleRep>(*default_catalog().at(id).object);
}

// The degree of a one-dimensional k[G]-comodule: the unique t with coaction(0, 0, t) = 1.
std::size_t degree(const ComoduleRep& c) {
    REQUIRE(c.dim() == 1);
    std::size_t found = c.hopf()->dim();
    for (std::size_t t = 0; t < c.hopf()->dim(); ++t)
        if (c.coaction()(0, 0, t).is_one()) found = t;
    return found;
}

} // namespace

TEST_CASE("trivial and regular comodules satisfy the axioms") {
    CHECK(check_comodule_axioms(comodule("kC2/Q/comodule/trivial")).passed());
    CHECK(check_comodule_axioms(comodule("kC2/Q/comodule/regular")).passed());
    CHECK(check_comodule_axioms(regular_comodule(sweedler(Q))).passed());
    const AxiomReport broken = check_comodule_axioms(comodule("kC2/Q/comodule/zero-coaction"));
    CHECK_FALSE(broken.passed("counit law"));
}

TEST_CASE("a corrupted counit row fails") {
    const ComoduleRep r = comodule("kC2/Q/comodule/regular");
    Tensor3 c = r.coaction();
    c(0, 0, 0) = Scalar::zero(Q);
    CHECK_FALSE(check_comodule_axioms(ComoduleRep(r.hopf(), "bad", c)).passed());
}

TEST_CASE("tensor of gradings multiplies degrees") {
    const FiniteGroup c3 = cyclic_group(3);
    const ComoduleRep g = comodule("kC3/Q/comodule/deg-g");
    const ComoduleRep g2 = comodule("kC3/Q/comodule/deg-g2");
    CHECK(degree(tensor_comodules(g, g)) == c3.table[1][1]);
    CHECK(degree(tensor_comodules(g, g2)) == 0);
    const ComoduleRep t = comodule("kC3/Q/comodule/trivial");
    CHECK(tensor_comodules(t, g).coaction() == g.coaction());
    const ComoduleRep reg = comodule("kC3/Q/comodule/regular");
    CHECK(tensor_comodules(reg, reg).dim() == 9);
    CHECK_THROWS_AS(tensor_comodules(g, comodule("kC2/Q/comodule/trivial")), HopfMismatch);
}

TEST_CASE("dual comodule inverts degrees") {
    const FiniteGroup s3 = symmetric_group_3();
    for (std::size_t k = 1; k < s3.order(); ++k) {
        const ComoduleRep line = comodule("kS3/Q/comodule/deg-" + s3.labels[k]);
        CHECK(degree(dual_comodule(line)) == s3.inverse(k));
    }
    CHECK(degree(dual_comodule(comodule("kC2/Q/comodule/deg-g"))) == 1);
    CHECK(dual_comodule(comodule("kC2/Q/comodule/trivial")).coaction() ==
          comodule("kC2/Q/comodule/trivial").coaction());
}

TEST_CASE("double dual is the identity for involutory H and every catalog comodule") {
    for (const auto& e : default_catalog().entries()) {
        if (e.kind != EntryKind::Comodule || e.is_negative()) continue;
        const ComoduleRep& c = std::get<ComoduleRep>(*e.object);
        INFO(e.id);
        CHECK(check_comodule_axioms(dual_comodule(c)).passed());
        if (is_involutory(*c.hopf())) CHECK(dual_comodule(dual_comodule(c)).coaction() == c.coaction());
    }
}

TEST_CASE("comodule to dual module") {
    const ModuleRep t = comodule_to_dual_module(comodule("kC2/Q/comodule/trivial"));
    // h_t* acts by evaluation at 1_H
    CHECK(t.action(0).is_identity());
    CHECK(t.action(1).is_zero());
    const ModuleRep r = comodule_to_dual_module(comodule("kC2/Q/comodule/regular"));
    // p_e and p_g act as the coordinate projections
    CHECK(r.action(0) == Matrix::from_rows(Q, {{1, 0}, {0, 0}}));
    CHECK(r.action(1) == Matrix::from_rows(Q, {{0, 0}, {0, 1}}));
    for (const auto& e : default_catalog().entries()) {
        if (e.kind != EntryKind::Comodule || e.is_negative()) continue;
        INFO(e.id);
        CHECK(check_module_axioms(comodule_to_dual_module(std::get<ComoduleRep>(*e.object))).passed());
    }
}

TEST_CASE("colinear Hom spaces") {
    const ComoduleRep t = comodule("kC2/Q/comodule/trivial");
    CHECK(colinear_hom_space(t, t).size() == 1);
    CHECK(colinear_hom_space(t, comodule("kC2/Q/comodule/deg-g")).empty());
    // same cardinality as Hom over H* of the converted modules
    for (const char* h : {"kS3/F2", "k^S3/Q", "H4/F5", "k^C2/F2"}) {
        const auto objs = default_catalog().objects_over(h, Category::Comodule);
        for (const auto* a : objs)
            for (const auto* b : objs) {
                const ComoduleRep& m = std::get<ComoduleRep>(*a->object);
                const ComoduleRep& n = std::get<ComoduleRep>(*b->object);
                INFO(a->id << " -> " << b->id);
                const auto colinear = colinear_hom_space(m, n);
                CHECK(colinear.size() == hom_space(comodule_to_dual_module(m), comodule_to_dual_module(n)).size());
                for (const auto& g : colinear) CHECK(is_comodule_map(g, m, n));
            }
    }
}

TEST_CASE("cosemisimplicity") {
    CHECK(is_cosemisimple(comodule("kC2/F2/comodule/trivial")).verdict);
    CHECK(is_cosemisimple(comodule("kC2/F2/comodule/regular")).verdict);
    const auto ns = is_cosemisimple(comodule("k^C2/F2/comodule/nonsplit"));
    CHECK_FALSE(ns.verdict);
    CHECK(ns.radical_dim == 1);
    CHECK_FALSE(brute_force_cosemisimple(comodule("k^C2/F2/comodule/nonsplit")));
}
