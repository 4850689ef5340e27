#include "serre/campaign.hpp"

#include "serre/duality.hpp"
#include "serre/error.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

namespace serre {

Fault parse_fault(const std::string& text) {
    if (text == "none") return Fault::None;
    if (text == "verdict") return Fault::Verdict;
    if (text == "fixture") return Fault::Fixture;
    throw std::invalid_argument("unknown fault '" + text + "' (expected verdict or fixture)");
}

bool CampaignReport::dichotomy_holds() const {
    return coev_failures.empty() && ev_failures_involutory.empty() && (!witness_required || !ev_witnesses.empty());
}

bool CampaignReport::ok() const {
    return axiom_failures.empty() && rank_identity_failures.empty() && dichotomy_holds() &&
           certificate_failures.empty() && double_dual_failures.empty() && oracle_disagreements.empty() &&
           counterexamples.empty();
}

namespace {

// Runs fn(i) for i in [0, n) on up to `jobs` threads; results keep index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, Fn fn) {
    std::vector<T> out(n);
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
                next = n;
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

struct ObjectOutcome {
    std::vector<Finding> axiom_failures;
    bool rank_identity_ok = true;
    std::string rank_detail;
    std::vector<Finding> coev_failures;
    std::vector<Finding> ev_failures;
    std::size_t coev_checks = 0;
    std::size_t ev_checks = 0;
    std::size_t certificates_verified = 0;
    bool rank_not_invertible = false;
    bool not_involutory = false;
    std::vector<Finding> certificate_failures;
    bool double_dual_checked = false;
    bool double_dual_ok = true;
    bool oracle_checked = false;
    bool oracle_agrees = true;
    bool semisimple = false;
};

void collect(std::vector<Finding>& out, const std::string& id, const AxiomReport& report) {
    for (const auto& c : report.checks) {
        if (c.passed) continue;
        std::string w;
        for (std::size_t k = 0; k < c.witness.size(); ++k) w += (k ? ", " : "") + std::to_string(c.witness[k]);
        out.push_back(Finding{id, c.name, (w.empty() ? "" : "at (" + w + ") ") + c.detail});
    }
}

ObjectOutcome analyse(const CatalogEntry& entry, bool involutory, std::uint64_t bound) {
    ObjectOutcome r;
    const Object& x = *entry.object;
    const std::string& id = entry.id;
    const std::size_t m = dim_of(x);
    const Field f = field_of(x);

    collect(r.axiom_failures, id, check_axioms(x));
    const Object d = dual(x);
    if (involutory || category_of(x) != Category::YD) collect(r.axiom_failures, id + " (dual)", check_axioms(d));

    const Scalar rank = hs_rank(m, f).value;
    const Scalar right = right_pairing(m, f), left = left_pairing(m, f);
    if (right != rank || left != rank || !canonical_element(m, f).dual_basis_identities_hold()) {
        r.rank_identity_ok = false;
        r.rank_detail = "ev i = " + right.to_string() + ", ev' j = " + left.to_string() + ", dim = " + rank.to_string();
    }

    auto module_checks = [&](const ModuleRep& mod) {
        collect(r.coev_failures, id, verify_coev_equivariance(mod));
        collect(r.ev_failures, id, verify_ev_equivariance(mod));
        ++r.coev_checks;
        ++r.ev_checks;
    };
    auto comodule_checks = [&](const ComoduleRep& com) {
        collect(r.coev_failures, id, verify_coev_colinearity(com));
        collect(r.ev_failures, id, verify_ev_colinearity(com));
        ++r.coev_checks;
        ++r.ev_checks;
    };
    switch (category_of(x)) {
    case Category::Module: module_checks(std::get<ModuleRep>(x)); break;
    case Category::Comodule: comodule_checks(std::get<ComoduleRep>(x)); break;
    case Category::YD:
        module_checks(std::get<YDModuleRep>(x).module());
        comodule_checks(std::get<YDModuleRep>(x).comodule());
        break;
    }
    if (involutory) collect(r.ev_failures, id, verify_duality_maps(x));

    const bool invertible = hs_rank(m, f).invertible;
    try {
        build_strong_dual_certificates(x);
        r.certificates_verified = 2;
        if (!involutory || !invertible) {
            r.certificate_failures.push_back(Finding{id, "strong dual", "built although a hypothesis fails"});
        }
    } catch (const NotInvolutory& e) {
        r.not_involutory = true;
        if (involutory) r.certificate_failures.push_back(Finding{id, "strong dual", e.what()});
    } catch (const RankNotInvertible& e) {
        r.rank_not_invertible = true;
        if (invertible) r.certificate_failures.push_back(Finding{id, "strong dual", e.what()});
    } catch (const AxiomFailure& e) {
        r.certificate_failures.push_back(Finding{id, "strong dual", e.what()});
    }

    if (involutory) {
        r.double_dual_checked = true;
        r.double_dual_ok = same_structure(dual(d), x);
    }

    r.semisimple = semisimplicity(x).verdict;
    if (oracle_applicable(f, m, bound)) {
        r.oracle_checked = true;
        r.oracle_agrees = brute_force_semisimple(x, bound) == r.semisimple;
    }
    return r;
}

struct PairTask {
    const CatalogEntry* m;
    const CatalogEntry* n;
    std::size_t m_index;
    std::size_t n_index;
};

HopfPtr corrupt(const HopfAlgebra& h) {
    Tensor3 mult = h.mult();
    mult(0, 0, 0) += Scalar::one(h.field());
    return make_hopf(HopfAlgebra(Algebra(h.name(), h.field(), std::move(mult), h.unit(), h.algebra().basis_labels()),
                                 h.comult(), h.counit(), h.antipode()),
                     Validation::Unchecked);
}

void append(std::vector<Finding>& out, const std::vector<Finding>& more) { out.insert(out.end(), more.begin(), more.end()); }

} // namespace

CampaignReport run_campaign(const Catalog& catalog, const CampaignOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    const std::vector<Field> fields = options.fields.empty() ? catalog_fields() : options.fields;
    for (const auto& f : fields) report.fields.push_back(f.name());

    std::vector<const CatalogEntry*> hopfs;
    for (const auto* e : catalog.hopf_entries())
        if (std::find(fields.begin(), fields.end(), e->hopf->field()) != fields.end()) hopfs.push_back(e);

    // Objects in scope, with the involutory flag of their Hopf algebra.
    std::vector<const CatalogEntry*> objects;
    std::vector<bool> involutory_of;
    bool fault_injected = false;
    for (const auto* he : hopfs) {
        ++report.hopf_checked;
        ++report.entries_checked;
        HopfPtr h = he->hopf;
        std::string id = he->id;
        if (options.fault == Fault::Fixture && !fault_injected) {
            h = corrupt(*h);
            id += " (injected fault)";
            fault_injected = true;
        }
        collect(report.axiom_failures, id, check_hopf_axioms(*h));
        const bool inv = is_involutory(*h);
        for (const auto* oe : catalog.objects_over(he->id, options.category)) {
            objects.push_back(oe);
            involutory_of.push_back(inv);
        }
    }

    const std::vector<ObjectOutcome> outcomes = parallel_map<ObjectOutcome>(
        objects.size(), options.jobs, [&](std::size_t i) { return analyse(*objects[i], involutory_of[i], options.bound); });

    for (std::size_t i = 0; i < objects.size(); ++i) {
        const ObjectOutcome& o = outcomes[i];
        const std::string& id = objects[i]->id;
        ++report.entries_checked;
        append(report.axiom_failures, o.axiom_failures);
        ++report.rank_identity_checks;
        if (!o.rank_identity_ok) report.rank_identity_failures.push_back(Finding{id, "rank identity", o.rank_detail});
        report.coev_checks += o.coev_checks;
        append(report.coev_failures, o.coev_failures);
        if (involutory_of[i]) {
            report.ev_checks_involutory += o.ev_checks;
            append(report.ev_failures_involutory, o.ev_failures);
        } else {
            report.ev_checks_non_involutory += o.ev_checks;
            append(report.ev_witnesses, o.ev_failures);
        }
        report.certificates_verified += o.certificates_verified;
        report.rank_not_invertible += o.rank_not_invertible;
        report.not_involutory += o.not_involutory;
        append(report.certificate_failures, o.certificate_failures);
        if (o.double_dual_checked) {
            ++report.double_dual_checks;
            if (!o.double_dual_ok) report.double_dual_failures.push_back(Finding{id, "double dual", "dual(dual(X)) != X"});
        }
        if (o.oracle_checked) {
            ++report.oracle_checks;
            if (!o.oracle_agrees) {
                report.oracle_disagreements.push_back(
                    Finding{id, "oracle", std::string("radical verdict ") + (o.semisimple ? "true" : "false")});
            }
        }
    }
    report.witness_required = report.ev_checks_non_involutory > 0;

    // Serre pairs: ordered pairs in one category over one involutory Hopf algebra.
    std::vector<PairTask> pairs;
    for (std::size_t i = 0; i < objects.size(); ++i) {
        if (!involutory_of[i]) continue;
        for (std::size_t j = 0; j < objects.size(); ++j) {
            if (objects[j]->hopf != objects[i]->hopf || objects[j]->kind != objects[i]->kind) continue;
            pairs.push_back(PairTask{objects[i], objects[j], i, j});
        }
    }
    const std::vector<SerreVerdict> verdicts = parallel_map<SerreVerdict>(pairs.size(), options.jobs, [&](std::size_t k) {
        const PairTask& t = pairs[k];
        const Object& m = *t.m->object;
        const Object& n = *t.n->object;
        const bool tensor_ss = semisimplicity(tensor(m, n)).verdict;
        return serre_verdict(t.m->id, t.n->id, category_of(m), true, tensor_ss, outcomes[t.m_index].semisimple,
                             outcomes[t.n_index].semisimple, dim_of(m), dim_of(n), field_of(m));
    });
    report.serre_verdicts = verdicts;

    if (options.fault == Fault::Verdict) {
        for (auto& v : report.serre_verdicts) {
            if (v.hypothesis_holds && v.rank_invertible_n && v.conclusion_m) {
                v.conclusion_m = false;
                v.consistent = false;
                v.m_name += " (injected fault)";
                break;
            }
        }
    }

    for (const auto& v : report.serre_verdicts) {
        if (v.involutory && !v.consistent) report.counterexamples.push_back(v);
        if (v.conclusion_m && v.conclusion_n && !v.hypothesis_holds) ++report.chevalley_failures_observed;
    }

    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

json findings_json(const std::vector<Finding>& findings) {
    json out = json::array();
    for (const auto& f : findings) out.push_back(json{{"id", f.id}, {"check", f.check}, {"detail", f.detail}});
    return out;
}

} // namespace

json to_json(const CampaignReport& r, bool include_wall_time) {
    json verdicts = json::array();
    for (const auto& v : r.serre_verdicts) verdicts.push_back(to_json(v));
    json counter = json::array();
    for (const auto& v : r.counterexamples) counter.push_back(to_json(v));
    json doc{
        {"tool_version", r.tool_version},
        {"field_list", r.fields},
        {"entries_checked", r.entries_checked},
        {"hopf_checked", r.hopf_checked},
        {"axiom_failures", findings_json(r.axiom_failures)},
        {"rank_identity", json{{"checks", r.rank_identity_checks}, {"failures", findings_json(r.rank_identity_failures)}}},
        {"equivariance_dichotomy",
         json{{"holds", r.dichotomy_holds()},
              {"coevaluation_checks", r.coev_checks},
              {"coevaluation_failures", findings_json(r.coev_failures)},
              {"evaluation_checks_involutory", r.ev_checks_involutory},
              {"evaluation_failures_involutory", findings_json(r.ev_failures_involutory)},
              {"evaluation_checks_non_involutory", r.ev_checks_non_involutory},
              {"non_involutory_witnesses", findings_json(r.ev_witnesses)}}},
        {"certificates",
         json{{"verified", r.certificates_verified},
              {"rank_not_invertible", r.rank_not_invertible},
              {"not_involutory", r.not_involutory},
              {"failures", findings_json(r.certificate_failures)}}},
        {"double_dual", json{{"checks", r.double_dual_checks}, {"failures", findings_json(r.double_dual_failures)}}},
        {"oracle", json{{"checks", r.oracle_checks}, {"disagreements", findings_json(r.oracle_disagreements)}}},
        {"serre_verdicts", std::move(verdicts)},
        {"counterexamples", std::move(counter)},
        {"chevalley_observation",
         json{{"note", "observation, not theorem"}, {"semisimple_pairs_with_non_semisimple_tensor", r.chevalley_failures_observed}}},
        {"ok", r.ok()},
    };
    if (include_wall_time) doc["wall_time"] = r.wall_time;
    return doc;
}

std::string render_table(const CampaignReport& r) {
    std::ostringstream out;
    auto row = [&](const std::string& what, std::size_t count, std::size_t failures, const std::string& note = {}) {
        out << std::left << std::setw(34) << what << std::right << std::setw(8) << count << std::setw(10) << failures
            << (note.empty() ? "" : "  " + note) << "\n";
    };
    out << "serre campaign " << r.tool_version << " over";
    for (const auto& f : r.fields) out << " " << f;
    out << "\n";
    out << std::left << std::setw(34) << "check" << std::right << std::setw(8) << "count" << std::setw(10) << "failures"
        << "\n";
    row("entries checked", r.entries_checked, r.axiom_failures.size(), "axiom failures");
    row("rank identity (ev i = ev' j = dim)", r.rank_identity_checks, r.rank_identity_failures.size());
    row("coevaluation morphism (all H)", r.coev_checks, r.coev_failures.size());
    row("evaluation morphism (S^2 = id)", r.ev_checks_involutory, r.ev_failures_involutory.size());
    row("evaluation morphism (S^2 != id)", r.ev_checks_non_involutory, r.ev_witnesses.size(), "expected witnesses");
    row("strong dual certificates", r.certificates_verified, r.certificate_failures.size(),
        std::to_string(r.rank_not_invertible) + " rank not invertible, " + std::to_string(r.not_involutory) +
            " not involutory");
    row("double dual", r.double_dual_checks, r.double_dual_failures.size());
    row("oracle agreement", r.oracle_checks, r.oracle_disagreements.size());
    row("serre pairs", r.serre_verdicts.size(), r.counterexamples.size(), "counterexamples");
    out << "chevalley (observation, not theorem): " << r.chevalley_failures_observed
        << " semisimple pairs with non-semisimple tensor\n";
    auto list = [&](const char* title, const std::vector<Finding>& fs) {
        for (const auto& f : fs) out << title << ": " << f.id << ": " << f.check << " " << f.detail << "\n";
    };
    list("axiom failure", r.axiom_failures);
    list("rank identity failure", r.rank_identity_failures);
    list("coevaluation failure", r.coev_failures);
    list("evaluation failure", r.ev_failures_involutory);
    list("certificate failure", r.certificate_failures);
    list("double dual failure", r.double_dual_failures);
    list("oracle disagreement", r.oracle_disagreements);
    for (const auto& v : r.counterexamples) out << "COUNTEREXAMPLE: " << v.m_name << " (x) " << v.n_name << "\n";
    if (r.witness_required && r.ev_witnesses.empty()) out << "missing: no evaluation failure over a non-involutory H\n";
    out << "wall time: " << std::fixed << std::setprecision(2) << r.wall_time << " s\n";
    out << (r.ok() ? "result: consistent" : "result: FAILED") << "\n";
    return out.str();
}

} // namespace serre
