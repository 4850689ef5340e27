#include "serre/campaign.hpp"
#include "serre/duality.hpp"
#include "serre/error.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace serre;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

Document resolve(const std::string& ref) {
    const Catalog& catalog = default_catalog();
    if (const auto* e = catalog.find(ref)) {
        if (e->kind == EntryKind::Hopf) return e->hopf;
        return *e->object;
    }
    if (std::filesystem::exists(ref)) return load_document(ref, catalog);
    throw ParseError("'" + ref + "' is neither a catalog id nor a readable file");
}

Object resolve_object(const std::string& ref) {
    Document d = resolve(ref);
    if (auto* o = std::get_if<Object>(&d)) return *o;
    throw ParseError("'" + ref + "' is a Hopf algebra, expected a module, comodule or YD module");
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out);
    if (!file) throw ParseError(out + ": cannot write");
    file << text;
}

int cmd_check(const std::string& ref, const std::string& format) {
    const Document d = resolve(ref);
    if (const auto* h = std::get_if<HopfPtr>(&d)) {
        const AxiomReport report = check_hopf_axioms(**h);
        const auto defect = involution_defect(**h);
        if (format == "machine") {
            json out = to_json(report);
            out["involutory"] = !defect.has_value();
            std::cout << dump_canonical(out);
        } else if (report.passed()) {
            std::cout << "hopf axioms: PASS, involutory: ";
            if (defect) {
                std::cout << "NO (S² ≠ id on basis element " << (*h)->algebra().basis_label(*defect) << ")\n";
            } else {
                std::cout << "yes\n";
            }
        } else {
            const AxiomCheck* bad = report.first_failure();
            std::cout << "hopf axioms: FAIL\nAxiomFailure: hopf '" << (*h)->name() << "' violates " << bad->name << "\n"
                      << report.render();
        }
        return report.passed() ? kOk : kFailure;
    }
    const Object& o = std::get<Object>(d);
    const AxiomReport report = check_axioms(o);
    if (format == "machine") {
        std::cout << dump_canonical(to_json(report));
    } else if (report.passed()) {
        std::cout << to_string(category_of(o)) << " axioms: PASS\n";
    } else {
        std::cout << to_string(category_of(o)) << " axioms: FAIL\nAxiomFailure: '" << name_of(o) << "' violates "
                  << report.first_failure()->name << "\n"
                  << report.render();
    }
    return report.passed() ? kOk : kFailure;
}

int cmd_semisimple(const std::string& ref, bool oracle, std::uint64_t bound, const std::string& format) {
    const Object o = resolve_object(ref);
    const SemisimplicityReport r = semisimplicity(o);
    std::string line = r.verdict ? "true" : "false (radical dim " + std::to_string(r.radical_dim) + ")";
    std::string oracle_state;
    int code = kOk;
    if (oracle) {
        if (field_of(o).is_rational()) {
            oracle_state = "not applicable over Q";
        } else {
            try {
                const bool brute = brute_force_semisimple(o, bound);
                oracle_state = brute == r.verdict ? "agrees" : "DISAGREES";
                if (brute != r.verdict) code = kFailure;
            } catch (const BoundExceeded& e) {
                oracle_state = "skipped";
                std::cerr << "warning: " << e.what() << "\n";
            }
        }
        line += ", oracle: " + oracle_state;
    }
    if (format == "machine") {
        json out = to_json(r);
        if (oracle) out["oracle"] = oracle_state;
        std::cout << dump_canonical(out);
    } else {
        std::cout << line << "\nmethod: " << to_string(r.method) << "\n";
    }
    return code;
}

int cmd_dual(const std::string& ref, const std::string& out) {
    const Object d = dual(resolve_object(ref));
    emit(dump_canonical(to_json(d)), out);
    return check_axioms(d).passed() ? kOk : kFailure;
}

int cmd_tensor(const std::string& a, const std::string& b, const std::string& out) {
    const Object t = tensor(resolve_object(a), resolve_object(b));
    emit(dump_canonical(to_json(t)), out);
    return check_axioms(t).passed() ? kOk : kFailure;
}

int cmd_export(const std::string& ref, const std::string& out) {
    const Document d = resolve(ref);
    if (const auto* h = std::get_if<HopfPtr>(&d)) {
        emit(dump_canonical(to_json(**h)), out);
    } else {
        emit(dump_canonical(to_json(std::get<Object>(d))), out);
    }
    return kOk;
}

int cmd_list(const std::string& hopf, const std::string& field) {
    for (const auto& e : default_catalog().entries()) {
        if (!hopf.empty() && e.hopf->name() != hopf) continue;
        if (!field.empty() && e.hopf->field() != parse_field(field)) continue;
        std::cout << e.id << "  [" << to_string(e.kind) << (e.is_negative() ? ", negative: " + e.negative_check : "")
                  << "]  " << e.provenance << "\n";
    }
    return kOk;
}

int cmd_certify(const std::string& ref, const std::string& format) {
    const Object o = resolve_object(ref);
    try {
        const StrongDualCertificates c = build_strong_dual_certificates(o);
        if (format == "machine") {
            auto cert = [](const SplitMonoCertificate& s) {
                return json{{"category", to_string(s.category)},
                            {"context", s.context},
                            {"mono", matrix_to_json(s.mono)},
                            {"retraction", matrix_to_json(s.retraction)}};
            };
            std::cout << dump_canonical(json{{"right", cert(c.right)}, {"left", cert(c.left)}});
        } else {
            std::cout << "right dual: " << c.right.context << ", retraction " << c.right.retraction.to_string()
                      << ": verified\n"
                      << "left dual: " << c.left.context << ", retraction " << c.left.retraction.to_string()
                      << ": verified\n";
        }
        return kOk;
    } catch (const NotInvolutory& e) {
        std::cout << "NotInvolutory: " << e.what() << "\n";
    } catch (const RankNotInvertible& e) {
        std::cout << "RankNotInvertible: " << e.what() << "\n";
    }
    return kFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for finite-dimensional Hopf algebras and their representations"};
    app.require_subcommand(1);
    std::string format = "table";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "machine"}));

    std::string ref, ref2, out, hopf, field;
    bool oracle = false;
    std::uint64_t bound = kDefaultOracleBound;

    auto* check = app.add_subcommand("check", "Run the axiom checker for a catalog id or document");
    check->add_option("object", ref, "Catalog id or document path")->required();

    auto* semisimple = app.add_subcommand("semisimple", "Decide (co)semisimplicity");
    semisimple->add_option("object", ref, "Catalog id or document path")->required();
    semisimple->add_flag("--oracle", oracle, "Cross-check with the brute-force oracle");
    semisimple->add_option("--bound", bound, "Oracle vector cap");

    auto* dual_cmd = app.add_subcommand("dual", "Write the dual object as a document");
    dual_cmd->add_option("object", ref, "Catalog id or document path")->required();
    dual_cmd->add_option("--out", out, "Output path (stdout when omitted)");

    auto* tensor_cmd = app.add_subcommand("tensor", "Write the tensor product as a document");
    tensor_cmd->add_option("left", ref, "Catalog id or document path")->required();
    tensor_cmd->add_option("right", ref2, "Catalog id or document path")->required();
    tensor_cmd->add_option("--out", out, "Output path (stdout when omitted)");

    auto* export_cmd = app.add_subcommand("export", "Write a catalog entry as a document");
    export_cmd->add_option("id", ref, "Catalog id")->required();
    export_cmd->add_option("--out", out, "Output path (stdout when omitted)");

    auto* list = app.add_subcommand("list", "List catalog entries");
    list->add_option("--hopf", hopf, "Only objects over this Hopf algebra");
    list->add_option("--field", field, "Only entries over this field (Q, F5 or Fp:5)");

    auto* certify = app.add_subcommand("certify", "Build and re-verify the strong dual certificates");
    certify->add_option("object", ref, "Catalog id or document path")->required();

    auto* campaign = app.add_subcommand("campaign", "Run the full verification campaign over the catalog");
    std::string category = "all", fault = "none";
    std::vector<std::string> fields;
    unsigned jobs = 1;
    campaign->add_option("--category", category, "all, module, comodule or yd")
        ->check(CLI::IsMember({"all", "module", "comodule", "yd"}));
    campaign->add_option("--field", fields, "Restrict to these fields (repeatable)");
    campaign->add_option("--jobs", jobs, "Worker threads");
    campaign->add_option("--bound", bound, "Oracle vector cap");
    campaign->add_option("--out", out, "Write the machine-readable report here");
    campaign->add_option("--inject-fault", fault, "Test mode: verdict or fixture")
        ->check(CLI::IsMember({"none", "verdict", "fixture"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*check) return cmd_check(ref, format);
        if (*semisimple) return cmd_semisimple(ref, oracle, bound, format);
        if (*dual_cmd) return cmd_dual(ref, out);
        if (*tensor_cmd) return cmd_tensor(ref, ref2, out);
        if (*export_cmd) return cmd_export(ref, out);
        if (*list) return cmd_list(hopf, field);
        if (*certify) return cmd_certify(ref, format);
        if (*campaign) {
            CampaignOptions options;
            if (category != "all") options.category = parse_category(category);
            for (const auto& f : fields) options.fields.push_back(parse_field(f));
            options.jobs = std::max(1u, jobs);
            options.bound = bound;
            options.fault = parse_fault(fault);
            const CampaignReport report = run_campaign(default_catalog(), options);
            if (!out.empty()) emit(dump_canonical(to_json(report)), out);
            if (format == "machine") {
                std::cout << dump_canonical(to_json(report));
            } else {
                std::cout << render_table(report);
            }
            return report.ok() ? kOk : kFailure;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const HopfMismatch& e) {
        std::cerr << "HopfMismatch: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
