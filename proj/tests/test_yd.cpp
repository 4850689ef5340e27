#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "serre/catalog.hpp"
#include "serre/error.hpp"
#include "serre/semisimplicity.hpp"

using namespace serre;

namespace {

const Field Q = Field::rationals();

const YDModuleRep& yd(const std::string& id) { return std::get<YDModuleRep>(*default_catalog().at(id).object); }

// Hand-built line over k[C2]: degree index `deg`, g acting by `sign`.
YDModuleRep line(std::size_t deg, long sign) {
    const HopfPtr h = default_catalog().at("kC2/Q").hopf;
    ModuleRep m(h, "m", {Matrix::identity(1, Q), Matrix::from_rows(Q, {{sign}})}, 1);
    Tensor3 c(1, 1, 2, Q);
    c(0, 0, deg) = Scalar::one(Q);
    return YDModuleRep(std::move(m), ComoduleRep(h, "c", std::move(c)), "line");
}

} // namespace

TEST_CASE("compatibility on simple fixtures") {
    CHECK(check_yd_compat(trivial_yd(sweedler(Q))).passed());
    CHECK(check_yd_compat(line(1, -1)).passed());
    CHECK(check_yd_compat(yd("kC2/Q/yd/line-g-minus")).passed());
    const AxiomReport bad = check_yd_compat(yd("kS3/Q/yd/incompatible"));
    CHECK_FALSE(bad.passed("yd compatibility"));
    CHECK(bad.find("yd compatibility")->witness.size() == 2);
}

TEST_CASE("tensor of lines multiplies degrees and scalars") {
    const YDModuleRep t = tensor_yd(line(1, -1), line(1, -1));
    CHECK(same_structure(t, line(0, 1)));
    CHECK(same_structure(tensor_yd(trivial_yd(default_catalog().at("kC2/Q").hopf), line(1, -1)), line(1, -1)));
    CHECK_THROWS_AS(tensor_yd(line(1, -1), yd("kC3/Q/yd/trivial")), HopfMismatch);
}

TEST_CASE("tensor and dual stay compatible over every catalog Hopf algebra") {
    for (const auto* he : default_catalog().hopf_entries()) {
        const auto objs = default_catalog().objects_over(he->id, Category::YD);
        for (const auto* a : objs) {
            const YDModuleRep& y = std::get<YDModuleRep>(*a->object);
            INFO(a->id);
            if (is_involutory(*he->hopf)) {
                CHECK(check_yd_compat(dual_yd(y)).passed());
                CHECK(same_structure(dual_yd(dual_yd(y)), y));
            }
            for (const auto* b : objs) {
                INFO(b->id);
                CHECK(check_yd_compat(tensor_yd(y, std::get<YDModuleRep>(*b->object))).passed());
            }
        }
    }
}

TEST_CASE("dual of a line") {
    CHECK(same_structure(dual_yd(line(1, -1)), line(1, -1)));
    CHECK(same_structure(dual_yd(trivial_yd(default_catalog().at("kC2/Q").hopf)),
                         trivial_yd(default_catalog().at("kC2/Q").hopf)));
}

TEST_CASE("YD Hom spaces") {
    CHECK(yd_hom_space(line(1, -1), line(1, -1)).size() == 1);
    CHECK(yd_hom_space(line(1, -1), line(0, -1)).empty());
    CHECK(yd_hom_space(line(1, 1), line(1, -1)).empty());
    for (const char* h : {"kS3/Q", "kC2/F2"}) {
        const auto objs = default_catalog().objects_over(h, Category::YD);
        for (const auto* a : objs)
            for (const auto* b : objs) {
                const YDModuleRep& x = std::get<YDModuleRep>(*a->object);
                const YDModuleRep& y = std::get<YDModuleRep>(*b->object);
                const std::size_t d = yd_hom_space(x, y).size();
                CHECK(d <= hom_space(x.module(), y.module()).size());
                CHECK(d <= colinear_hom_space(x.comodule(), y.comodule()).size());
            }
    }
}

TEST_CASE("YD semisimplicity") {
    CHECK(is_yd_semisimple(trivial_yd(default_catalog().at("kC2/Q").hopf)).verdict);
    CHECK(is_yd_semisimple(direct_sum(line(0, -1), line(1, 1))).verdict);
    CHECK(is_yd_semisimple(yd("kC2/Q/yd/sum")).verdict);
    const YDModuleRep& ns = yd("kC2/F2/yd/nonsplit");
    CHECK_FALSE(is_yd_semisimple(ns).verdict);
    CHECK_FALSE(brute_force_yd_semisimple(ns));
}
