#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "serre/campaign.hpp"

using namespace serre;

TEST_CASE("YD-only campaign") {
    CampaignOptions options;
    options.category = Category::YD;
    const CampaignReport r = run_campaign(default_catalog(), options);
    CHECK(r.ok());
    CHECK(r.counterexamples.empty());
    CHECK_FALSE(r.serre_verdicts.empty());
    for (const auto& v : r.serre_verdicts) CHECK(v.category == Category::YD);
}

TEST_CASE("field filter") {
    CampaignOptions options;
    options.fields = {Field::prime(2)};
    const CampaignReport r = run_campaign(default_catalog(), options);
    CHECK(r.ok());
    CHECK(r.fields == std::vector<std::string>{"F2"});
    CHECK(r.chevalley_failures_observed > 0);
    // no H4 over F2, so nothing demands a witness
    CHECK_FALSE(r.witness_required);
}

TEST_CASE("faults make the report fail") {
    CampaignOptions options;
    options.fields = {Field::rationals()};
    options.fault = Fault::Verdict;
    const CampaignReport v = run_campaign(default_catalog(), options);
    CHECK_FALSE(v.ok());
    CHECK(v.counterexamples.size() == 1);
    options.fault = Fault::Fixture;
    const CampaignReport f = run_campaign(default_catalog(), options);
    CHECK_FALSE(f.ok());
    CHECK_FALSE(f.axiom_failures.empty());
    CHECK(parse_fault("none") == Fault::None);
    CHECK_THROWS_AS(parse_fault("bogus"), std::invalid_argument);
}

TEST_CASE("report rendering") {
    CampaignOptions options;
    options.category = Category::Comodule;
    options.fields = {Field::prime(3)};
    const CampaignReport r = run_campaign(default_catalog(), options);
    const std::string table = render_table(r);
    CHECK(table.find("observation, not theorem") != std::string::npos);
    const json j = to_json(r, false);
    CHECK_FALSE(j.contains("wall_time"));
    CHECK(j.at("tool_version") == json(kToolVersion));
    CHECK(to_json(r).contains("wall_time"));
}
