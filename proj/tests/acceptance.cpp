// One line per acceptance criterion; exit status is nonzero if any fails.

#include "serre/campaign.hpp"
#include "serre/error.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace serre;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// Catalog objects that are not deliberately broken.
std::vector<const CatalogEntry*> good_objects() {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : default_catalog().entries())
        if (e.object && !e.is_negative()) out.push_back(&e);
    return out;
}

Outcome ac1_axioms() {
    const auto start = Clock::now();
    Outcome o;
    std::size_t n = 0;
    for (const auto* e : default_catalog().hopf_entries()) {
        ++n;
        const AxiomReport r = check_hopf_axioms(*e->hopf);
        if (!r.passed()) {
            o.pass = false;
            o.detail += e->id + " fails " + r.first_failure()->name + "; ";
        }
        const bool expect_involutory = starts_with(e->id, "kC") || starts_with(e->id, "kS") || starts_with(e->id, "k^");
        const bool sweedler_entry = starts_with(e->id, "H4/");
        if (!expect_involutory && !sweedler_entry) {
            o.pass = false;
            o.detail += e->id + " has no expected flag; ";
        }
        if (is_involutory(*e->hopf) != expect_involutory) {
            o.pass = false;
            o.detail += e->id + " involutory flag wrong; ";
        }
        if (sweedler_entry) {
            // S^2(x) = -x
            const Vector x = basis_vector(4, 2, e->hopf->field());
            const Vector s2x = apply_antipode(*e->hopf, apply_antipode(*e->hopf, x));
            if (!(s2x[2] == Scalar(e->hopf->field(), -1L))) {
                o.pass = false;
                o.detail += e->id + " S^2(x) != -x; ";
            }
        }
    }
    const double t = seconds_since(start);
    if (t >= 5.0) o.pass = false;
    o.detail += std::to_string(n) + " Hopf algebras, " + std::to_string(t) + " s";
    return o;
}

Outcome ac2_rank_identity() {
    Outcome o;
    std::size_t n = 0;
    for (const auto* e : good_objects()) {
        const std::size_t d = dim_of(*e->object);
        const Field f = field_of(*e->object);
        const Scalar expected = Scalar(f, static_cast<long>(d));
        const Scalar right = (evaluation(d, f) * coevaluation(d, f))(0, 0);
        const Scalar left = (left_evaluation(d, f) * left_coevaluation(d, f))(0, 0);
        ++n;
        if (!(right == expected) || !(left == expected) || !verify_duality_maps(*e->object).passed("rank identity")) {
            o.pass = false;
            o.detail += e->id + "; ";
        }
    }
    if (n < 40) o.pass = false;
    o.detail += std::to_string(n) + " objects, exact";
    return o;
}

std::set<std::string> stored_witnesses() {
    std::ifstream in(std::string(SERRE_TEST_DATA_DIR) + "/ev_witness.json");
    std::set<std::string> out;
    if (!in) return out;
    const json doc = json::parse(in);
    for (const auto& w : doc.at("witnesses"))
        out.insert(w.at("id").get<std::string>() + " | " + w.at("check").get<std::string>() + " | " +
                   w.at("detail").get<std::string>());
    return out;
}

Outcome ac3_dichotomy() {
    Outcome o;
    std::size_t coev = 0, ev = 0;
    std::set<std::string> found;
    for (const auto* e : good_objects()) {
        const bool inv = is_involutory(*e->hopf);
        AxiomReport c, v;
        if (const auto* m = std::get_if<ModuleRep>(&*e->object)) {
            c = verify_coev_equivariance(*m);
            v = verify_ev_equivariance(*m);
        } else if (const auto* k = std::get_if<ComoduleRep>(&*e->object)) {
            c = verify_coev_colinearity(*k);
            v = verify_ev_colinearity(*k);
        } else {
            continue;
        }
        ++coev;
        if (!c.passed()) {
            o.pass = false;
            o.detail += e->id + " coevaluation fails; ";
        }
        if (inv) {
            ++ev;
            if (!v.passed()) {
                o.pass = false;
                o.detail += e->id + " evaluation fails; ";
            }
        } else if (const AxiomCheck* bad = v.first_failure()) {
            std::string at;
            for (std::size_t k = 0; k < bad->witness.size(); ++k) at += (k ? ", " : "") + std::to_string(bad->witness[k]);
            found.insert(e->id + " | " + bad->name + " | at (" + at + ") " + bad->detail);
        }
    }
    const std::set<std::string> stored = stored_witnesses();
    if (stored.empty()) {
        o.pass = false;
        o.detail += "no stored witness artifact; ";
    }
    if (found != stored) {
        o.pass = false;
        o.detail += "witnesses differ from the stored artifact; ";
    }
    if (found.empty()) o.pass = false;
    o.detail += std::to_string(coev) + " coevaluation checks, " + std::to_string(ev) + " involutory evaluation checks, " +
                std::to_string(found.size()) + " H4 witnesses matching the artifact";
    return o;
}

Outcome ac4_certificates() {
    Outcome o;
    std::size_t built = 0, refused = 0;
    for (const auto* e : good_objects()) {
        if (!is_involutory(*e->hopf)) continue;
        const std::uint32_t p = field_of(*e->object).characteristic();
        const bool divisible = p != 0 && dim_of(*e->object) % p == 0;
        try {
            const StrongDualCertificates c = build_strong_dual_certificates(*e->object);
            if (divisible || !recheck(c.right).passed() || !recheck(c.left).passed()) {
                o.pass = false;
                o.detail += e->id + "; ";
            }
            ++built;
        } catch (const RankNotInvertible&) {
            if (!divisible) {
                o.pass = false;
                o.detail += e->id + " refused; ";
            }
            ++refused;
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail += e->id + ": " + ex.what() + "; ";
        }
    }
    o.detail += std::to_string(built) + " certificate pairs re-verified, " + std::to_string(refused) +
                " RankNotInvertible where char | dim";
    return o;
}

Outcome ac5_oracle() {
    const auto start = Clock::now();
    Outcome o;
    std::size_t n = 0;
    for (const auto* e : good_objects()) {
        if (category_of(*e->object) != Category::Module) continue;
        const Field f = field_of(*e->object);
        const std::uint32_t p = f.characteristic();
        if (p != 2 && p != 3 && p != 5) continue;
        if (!oracle_applicable(f, dim_of(*e->object), kDefaultOracleBound)) continue;
        ++n;
        if (semisimplicity(*e->object).verdict != brute_force_semisimple(*e->object)) {
            o.pass = false;
            o.detail += e->id + " disagrees; ";
        }
    }
    const double t = seconds_since(start);
    if (n < 25 || t >= 60.0) o.pass = false;
    o.detail += std::to_string(n) + " modules over F2, F3, F5 agree, " + std::to_string(t) + " s";
    return o;
}

Outcome ac6_maschke() {
    Outcome o;
    std::size_t n = 0, mismatches = 0;
    const std::vector<std::pair<std::string, std::size_t>> groups{{"kC2", 2}, {"kC3", 3}, {"kC4", 4}, {"kS3", 6}};
    for (const auto& [g, order] : groups) {
        for (Field f : catalog_fields()) {
            const std::string id = g + "/" + f.name() + "/regular";
            const bool expected = f.characteristic() == 0 || order % f.characteristic() != 0;
            ++n;
            if (semisimplicity(*default_catalog().at(id).object).verdict != expected) {
                o.pass = false;
                ++mismatches;
                o.detail += id + " mismatch; ";
            }
        }
    }
    o.detail += std::to_string(n) + " regular modules, " + std::to_string(mismatches) + " mismatches";
    return o;
}

Outcome ac7_campaign() {
    const auto start = Clock::now();
    Outcome o;
    CampaignOptions serial;
    CampaignOptions parallel;
    parallel.jobs = 4;
    const CampaignReport a = run_campaign(default_catalog(), serial);
    const CampaignReport b = run_campaign(default_catalog(), parallel);
    std::size_t involutory_pairs = 0;
    std::set<Category> categories;
    for (const auto& v : a.serre_verdicts) {
        if (!v.involutory) continue;
        ++involutory_pairs;
        categories.insert(v.category);
        if (!v.consistent) o.pass = false;
    }
    const bool deterministic = dump_canonical(to_json(a, false)) == dump_canonical(to_json(b, false));
    const double t = seconds_since(start);
    if (!a.counterexamples.empty() || !a.ok() || involutory_pairs < 200 || categories.size() != 3 || !deterministic ||
        t >= 600.0)
        o.pass = false;
    o.detail += std::to_string(involutory_pairs) + " pairs in " + std::to_string(categories.size()) +
                " categories, " + std::to_string(a.counterexamples.size()) + " counterexamples, report " +
                (deterministic ? "identical" : "DIFFERENT") + " across 1 and 4 jobs, " + std::to_string(t) +
                " s for two runs";
    return o;
}

Outcome ac8_double_dual() {
    Outcome o;
    std::size_t n = 0;
    for (const auto* e : good_objects()) {
        if (!is_involutory(*e->hopf)) continue;
        ++n;
        if (!same_structure(dual(dual(*e->object)), *e->object)) {
            o.pass = false;
            o.detail += e->id + "; ";
        }
    }
    o.detail += std::to_string(n) + " objects equal their double dual exactly";
    return o;
}

Outcome ac9_fault_injection() {
    Outcome o;
    std::size_t tried = 0, caught = 0;
    auto attempt = [&](const HopfAlgebra& bad, const std::string& where) {
        ++tried;
        if (check_hopf_axioms(bad).passed()) {
            o.pass = false;
            o.detail += where + " undetected; ";
        } else {
            ++caught;
        }
    };
    for (const auto* e : default_catalog().hopf_entries()) {
        const HopfAlgebra& h = *e->hopf;
        const Field f = h.field();
        const Scalar one = Scalar::one(f);
        const std::size_t n = h.dim();
        auto rebuild = [&](Tensor3 mult, Vector unit, Tensor3 comult, Vector counit, Matrix antipode) {
            return HopfAlgebra(Algebra(h.name(), f, std::move(mult), std::move(unit), h.algebra().basis_labels()),
                               std::move(comult), std::move(counit), std::move(antipode));
        };
        for (std::size_t k = 0; k < n * n * n; ++k) {
            Tensor3 m = h.mult();
            m.data()[k] += one;
            attempt(rebuild(m, h.unit(), h.comult(), h.counit(), h.antipode()), e->id + " mult " + std::to_string(k));
            Tensor3 c = h.comult();
            c.data()[k] += one;
            attempt(rebuild(h.mult(), h.unit(), c, h.counit(), h.antipode()), e->id + " comult " + std::to_string(k));
        }
        for (std::size_t k = 0; k < n; ++k) {
            Vector u = h.unit();
            u[k] += one;
            attempt(rebuild(h.mult(), u, h.comult(), h.counit(), h.antipode()), e->id + " unit " + std::to_string(k));
            Vector c = h.counit();
            c[k] += one;
            attempt(rebuild(h.mult(), h.unit(), h.comult(), c, h.antipode()), e->id + " counit " + std::to_string(k));
        }
        for (std::size_t k = 0; k < n * n; ++k) {
            Matrix s = h.antipode();
            s(k / n, k % n) += one;
            attempt(rebuild(h.mult(), h.unit(), h.comult(), h.counit(), s), e->id + " antipode " + std::to_string(k));
        }
    }
    CampaignOptions verdict_fault;
    verdict_fault.fault = Fault::Verdict;
    const bool verdict_caught = !run_campaign(default_catalog(), verdict_fault).ok();
    CampaignOptions fixture_fault;
    fixture_fault.fault = Fault::Fixture;
    const bool fixture_caught = !run_campaign(default_catalog(), fixture_fault).ok();
    if (!verdict_caught || !fixture_caught) o.pass = false;
    o.detail += std::to_string(caught) + "/" + std::to_string(tried) + " single-constant corruptions caught, " +
                "corrupted verdict " + (verdict_caught ? "fails" : "DOES NOT fail") + " the campaign";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 Hopf axioms and involutory flags", ac1_axioms},
        {"AC2 ev i = ev' j = dim", ac2_rank_identity},
        {"AC3 equivariance dichotomy", ac3_dichotomy},
        {"AC4 strong dual certificates", ac4_certificates},
        {"AC5 radical engine vs brute force", ac5_oracle},
        {"AC6 Maschke consistency", ac6_maschke},
        {"AC7 Serre campaign", ac7_campaign},
        {"AC8 double dual", ac8_double_dual},
        {"AC9 fault injection", ac9_fault_injection},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = Outcome{false, std::string("threw: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
