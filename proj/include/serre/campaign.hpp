#pragma once

#include "serre/document.hpp"

#include <optional>
#include <string>
#include <vector>

namespace serre {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Fault {
    None,
    Verdict,  // flips one semisimplicity verdict after it was computed
    Fixture,  // corrupts one multiplication constant of the first Hopf entry in scope
};

Fault parse_fault(const std::string& text);

struct CampaignOptions {
    std::optional<Category> category;  // all when empty
    std::vector<Field> fields;          // every catalog field when empty
    unsigned jobs = 1;
    std::uint64_t bound = kDefaultOracleBound;
    Fault fault = Fault::None;
};

struct Finding {
    std::string id;
    std::string check;
    std::string detail;
};

struct CampaignReport {
    std::string tool_version = kToolVersion;
    std::vector<std::string> fields;
    std::size_t entries_checked = 0;
    std::size_t hopf_checked = 0;

    std::vector<Finding> axiom_failures;

    std::size_t rank_identity_checks = 0;
    std::vector<Finding> rank_identity_failures;

    // i_N is a morphism for every H; ev_N must be one when S^2 = id.
    std::size_t coev_checks = 0;
    std::vector<Finding> coev_failures;
    std::size_t ev_checks_involutory = 0;
    std::vector<Finding> ev_failures_involutory;
    std::size_t ev_checks_non_involutory = 0;
    std::vector<Finding> ev_witnesses;  // expected failures over non-involutory H
    bool witness_required = false;

    std::size_t certificates_verified = 0;
    std::size_t rank_not_invertible = 0;
    std::size_t not_involutory = 0;
    std::vector<Finding> certificate_failures;

    std::size_t double_dual_checks = 0;
    std::vector<Finding> double_dual_failures;

    std::size_t oracle_checks = 0;
    std::vector<Finding> oracle_disagreements;

    std::vector<SerreVerdict> serre_verdicts;
    std::vector<SerreVerdict> counterexamples;
    /// Pairs of semisimple objects whose tensor product is not semisimple.
    std::size_t chevalley_failures_observed = 0;

    double wall_time = 0.0;

    bool dichotomy_holds() const;
    bool ok() const;
};

CampaignReport run_campaign(const Catalog& catalog, const CampaignOptions& options);

json to_json(const CampaignReport& report, bool include_wall_time = true);
std::string render_table(const CampaignReport& report);

} // namespace serre
