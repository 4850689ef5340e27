#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "serre/catalog.hpp"
#include "serre/semisimplicity.hpp"

#include <set>

using namespace serre;

TEST_CASE("required entries are present") {
    const Catalog& c = default_catalog();
    for (const char* g : {"kC2", "kC3", "kC4", "kS3"})
        for (const char* f : {"Q", "F2", "F3", "F5", "F7"}) CHECK(c.find(std::string(g) + "/" + f) != nullptr);
    for (const char* g : {"k^C2", "k^C3", "k^S3"}) CHECK(c.find(std::string(g) + "/Q") != nullptr);
    CHECK(c.find("H4/Q") != nullptr);
    CHECK(c.find("H4/F5") != nullptr);
    CHECK(c.find("H4/F2") == nullptr);
    CHECK_THROWS_AS(c.at("no/such/entry"), std::out_of_range);
}

TEST_CASE("ids are unique and every entry is checked") {
    std::set<std::string> ids;
    for (const auto& e : default_catalog().entries()) {
        CHECK(ids.insert(e.id).second);
        CHECK_FALSE(e.provenance.empty());
        INFO(e.id);
        if (e.kind == EntryKind::Hopf) {
            CHECK(check_hopf_axioms(*e.hopf).passed());
            continue;
        }
        const AxiomReport r = check_axioms(*e.object);
        if (e.is_negative()) {
            CHECK_FALSE(r.passed(e.negative_check));
        } else {
            CHECK(r.passed());
        }
    }
}

TEST_CASE("lookups from the examples") {
    const auto& reg = default_catalog().at("kC2/Q/regular");
    CHECK(dim_of(*reg.object) == 2);
    CHECK(check_axioms(*reg.object).passed());
    const auto& h4 = default_catalog().at("H4/Q");
    CHECK(h4.hopf->dim() == 4);
    CHECK(h4.hopf->algebra().basis_labels() == std::vector<std::string>{"1", "g", "x", "gx"});
    const Object& s3 = *default_catalog().at("kS3/F3/regular").object;
    CHECK(dim_of(s3) == 6);
    CHECK_FALSE(semisimplicity(s3).verdict);
    CHECK_FALSE(brute_force_semisimple(s3));
}

TEST_CASE("negative fixtures") {
    std::set<std::string> tags;
    for (const auto& e : default_catalog().entries())
        if (e.is_negative()) tags.insert(e.negative_check);
    CHECK(tags.count("yd compatibility") == 1);
    CHECK(tags.count("multiplicativity") == 1);
    CHECK(tags.count("counit law") == 1);
    CHECK(default_catalog().objects_over("kC2/Q", Category::Module).size() + 1 ==
          default_catalog().objects_over("kC2/Q", Category::Module, true).size());
}

TEST_CASE("non-split fixtures exist in bad characteristic") {
    CHECK_FALSE(semisimplicity(*default_catalog().at("kC2/F2/yd/nonsplit").object).verdict);
    CHECK_FALSE(semisimplicity(*default_catalog().at("k^C2/F2/comodule/nonsplit").object).verdict);
    CHECK_FALSE(semisimplicity(*default_catalog().at("kC2/F2/jordan").object).verdict);
}
