#include "serre/document.hpp"

#include "serre/error.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace serre {

json scalar_to_json(const Scalar& s) {
    if (s.field().is_rational()) return s.to_string();
    return s.residue();
}

json field_to_json(Field field) {
    if (field.is_rational()) return "Q";
    return json{{"Fp", field.characteristic()}};
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(scalar_to_json(s));
    return out;
}

json tensor_to_json(const Tensor3& t) {
    json out = json::array();
    for (std::size_t i = 0; i < t.dim0(); ++i) {
        json slab = json::array();
        for (std::size_t j = 0; j < t.dim1(); ++j) {
            json fibre = json::array();
            for (std::size_t k = 0; k < t.dim2(); ++k) fibre.push_back(scalar_to_json(t(i, j, k)));
            slab.push_back(std::move(fibre));
        }
        out.push_back(std::move(slab));
    }
    return out;
}

json hopf_reference(const HopfPtr& hopf, const Catalog& catalog) {
    if (const auto* e = catalog.find(hopf->name()); e && e->kind == EntryKind::Hopf && same_hopf(e->hopf, hopf)) {
        return hopf->name();
    }
    return to_json(*hopf);
}

} // namespace

json to_json(const HopfAlgebra& hopf) {
    json doc;
    doc["name"] = hopf.name();
    doc["field"] = field_to_json(hopf.field());
    doc["dim"] = hopf.dim();
    doc["basis"] = hopf.algebra().basis_labels();
    doc["mult"] = tensor_to_json(hopf.mult());
    doc["comult"] = tensor_to_json(hopf.comult());
    doc["unit"] = vector_to_json(hopf.unit());
    doc["counit"] = vector_to_json(hopf.counit());
    doc["antipode"] = matrix_to_json(hopf.antipode());
    return doc;
}

json to_json(const Object& object, const Catalog& catalog) {
    json doc;
    doc["name"] = name_of(object);
    doc["hopf"] = hopf_reference(hopf_of(object), catalog);
    doc["dim"] = dim_of(object);
    auto actions = [](const ModuleRep& m) {
        json a = json::array();
        for (const auto& x : m.actions()) a.push_back(matrix_to_json(x));
        return a;
    };
    switch (category_of(object)) {
    case Category::Module: doc["action"] = actions(std::get<ModuleRep>(object)); break;
    case Category::Comodule: doc["coaction"] = tensor_to_json(std::get<ComoduleRep>(object).coaction()); break;
    case Category::YD: {
        const auto& y = std::get<YDModuleRep>(object);
        doc["action"] = actions(y.module());
        doc["coaction"] = tensor_to_json(y.comodule().coaction());
        break;
    }
    }
    return doc;
}

json to_json(const SemisimplicityReport& report) {
    json basis = json::array();
    for (const auto& m : report.radical_basis) basis.push_back(matrix_to_json(m));
    return json{{"verdict", report.verdict},
                {"radical_dim", report.radical_dim},
                {"method", to_string(report.method)},
                {"radical_basis", std::move(basis)}};
}

json to_json(const AxiomReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json entry{{"name", c.name}, {"passed", c.passed}};
        if (!c.passed) {
            entry["witness"] = c.witness;
            entry["detail"] = c.detail;
        }
        checks.push_back(std::move(entry));
    }
    return json{{"passed", report.passed()}, {"checks", std::move(checks)}};
}

json to_json(const SerreVerdict& v) {
    return json{{"m", v.m_name},
                {"n", v.n_name},
                {"category", to_string(v.category)},
                {"involutory", v.involutory},
                {"hypothesis_holds", v.hypothesis_holds},
                {"rank_invertible_m", v.rank_invertible_m},
                {"rank_invertible_n", v.rank_invertible_n},
                {"conclusion_m", v.conclusion_m},
                {"conclusion_n", v.conclusion_n},
                {"consistent", v.consistent}};
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError((path.empty() ? std::string("document") : path) + ": " + what);
}

const json& member(const json& doc, const std::string& key, const std::string& path) {
    if (!doc.contains(key)) fail(path, "missing member \"" + key + "\"");
    return doc.at(key);
}

Field parse_field_json(const json& j, const std::string& path) {
    if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
    if (j.is_object() && j.size() == 1 && j.contains("Fp") && j.at("Fp").is_number_unsigned()) {
        try {
            return Field::prime(j.at("Fp").get<std::uint64_t>());
        } catch (const std::invalid_argument& e) {
            fail(path, e.what());
        }
    }
    fail(path, "expected \"Q\" or {\"Fp\": p}");
}

Scalar parse_scalar(const json& j, Field field, const std::string& path) {
    if (field.is_rational()) {
        if (j.is_number_integer()) return Scalar(field, j.get<long>());
        static const std::regex pattern(R"(-?[0-9]+(/[0-9]+)?)");
        if (!j.is_string() || !std::regex_match(j.get<std::string>(), pattern)) {
            fail(path, "expected a rational literal \"a/b\" or \"a\"");
        }
        const std::string text = j.get<std::string>();
        if (const auto slash = text.find('/'); slash != std::string::npos) {
            if (mpz_class(text.substr(slash + 1)) == 0) fail(path, "zero denominator");
        }
        mpq_class q(text);
        q.canonicalize();
        return Scalar(field, q);
    }
    if (!j.is_number_integer()) fail(path, "expected an integer residue");
    const long v = j.get<long>();
    if (v < 0 || v >= static_cast<long>(field.characteristic())) {
        fail(path, "residue " + std::to_string(v) + " outside [0, " + std::to_string(field.characteristic()) + ")");
    }
    return Scalar(field, v);
}

std::size_t parse_size(const json& j, const std::string& path) {
    if (!j.is_number_unsigned()) fail(path, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

void require_array(const json& j, std::size_t n, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    if (j.size() != n) fail(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
}

Vector parse_vector(const json& j, std::size_t n, Field f, const std::string& path) {
    require_array(j, n, path);
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(parse_scalar(j[i], f, path + "[" + std::to_string(i) + "]"));
    return v;
}

Matrix parse_matrix(const json& j, std::size_t rows, std::size_t cols, Field f, const std::string& path) {
    require_array(j, rows, path);
    Matrix m(rows, cols, f);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string row_path = path + "[" + std::to_string(r) + "]";
        require_array(j[r], cols, row_path);
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_scalar(j[r][c], f, row_path + "[" + std::to_string(c) + "]");
    }
    return m;
}

Tensor3 parse_tensor(const json& j, std::size_t d0, std::size_t d1, std::size_t d2, Field f, const std::string& path) {
    require_array(j, d0, path);
    Tensor3 t(d0, d1, d2, f);
    for (std::size_t a = 0; a < d0; ++a) {
        const std::string pa = path + "[" + std::to_string(a) + "]";
        require_array(j[a], d1, pa);
        for (std::size_t b = 0; b < d1; ++b) {
            const std::string pb = pa + "[" + std::to_string(b) + "]";
            require_array(j[a][b], d2, pb);
            for (std::size_t c = 0; c < d2; ++c) t(a, b, c) = parse_scalar(j[a][b][c], f, pb + "[" + std::to_string(c) + "]");
        }
    }
    return t;
}

std::string parse_name(const json& doc, const std::string& path) {
    const json& n = member(doc, "name", path);
    if (!n.is_string()) fail(path + ".name", "expected a string");
    return n.get<std::string>();
}

HopfPtr parse_hopf(const json& doc, const std::string& path) {
    const std::string name = parse_name(doc, path);
    const Field f = parse_field_json(member(doc, "field", path), path + ".field");
    const std::size_t n = parse_size(member(doc, "dim", path), path + ".dim");
    if (n == 0) fail(path + ".dim", "a Hopf algebra has dim >= 1");
    std::vector<std::string> basis;
    if (doc.contains("basis")) {
        require_array(doc.at("basis"), n, path + ".basis");
        for (const auto& b : doc.at("basis")) {
            if (!b.is_string()) fail(path + ".basis", "expected strings");
            basis.push_back(b.get<std::string>());
        }
    }
    Tensor3 mult = parse_tensor(member(doc, "mult", path), n, n, n, f, path + ".mult");
    Tensor3 comult = parse_tensor(member(doc, "comult", path), n, n, n, f, path + ".comult");
    Vector unit = parse_vector(member(doc, "unit", path), n, f, path + ".unit");
    Vector counit = parse_vector(member(doc, "counit", path), n, f, path + ".counit");
    Matrix antipode = parse_matrix(member(doc, "antipode", path), n, n, f, path + ".antipode");
    return make_hopf(HopfAlgebra(Algebra(name, f, std::move(mult), std::move(unit), std::move(basis)),
                                 std::move(comult), std::move(counit), std::move(antipode)),
                     Validation::Unchecked);
}

HopfPtr resolve_hopf(const json& ref, const Catalog& catalog, const std::string& path) {
    if (ref.is_string()) {
        const auto* e = catalog.find(ref.get<std::string>());
        if (!e || e->kind != EntryKind::Hopf) fail(path, "unknown Hopf algebra '" + ref.get<std::string>() + "'");
        return e->hopf;
    }
    if (ref.is_object()) return parse_hopf(ref, path);
    fail(path, "expected a catalog id or an embedded Hopf document");
}

std::vector<Matrix> parse_actions(const json& j, std::size_t n, std::size_t m, Field f, const std::string& path) {
    require_array(j, n, path);
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(parse_matrix(j[i], m, m, f, path + "[" + std::to_string(i) + "]"));
    return out;
}

} // namespace

Document document_from_json(const json& doc, const Catalog& catalog) {
    if (!doc.is_object()) fail("", "expected a JSON object");
    if (doc.contains("mult")) return parse_hopf(doc, "");
    const bool has_action = doc.contains("action");
    const bool has_coaction = doc.contains("coaction");
    if (!has_action && !has_coaction) fail("", "cannot infer the kind: no mult, action or coaction member");
    const std::string name = parse_name(doc, "");
    const HopfPtr h = resolve_hopf(member(doc, "hopf", ""), catalog, "hopf");
    const std::size_t m = parse_size(member(doc, "dim", ""), "dim");
    const Field f = h->field();
    try {
        std::optional<ModuleRep> module;
        std::optional<ComoduleRep> comodule;
        if (has_action) module.emplace(h, name, parse_actions(doc.at("action"), h->dim(), m, f, "action"), m);
        if (has_coaction) comodule.emplace(h, name, parse_tensor(doc.at("coaction"), m, m, h->dim(), f, "coaction"));
        if (module && comodule) return Object(YDModuleRep(*module, *comodule, name));
        if (module) return Object(*module);
        return Object(*comodule);
    } catch (const std::invalid_argument& e) {
        fail("", e.what());
    }
}

Document parse_document(const std::string& text, const Catalog& catalog) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return document_from_json(doc, catalog);
}

Document load_document(const std::string& path, const Catalog& catalog) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_document(buffer.str(), catalog);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string dump_canonical(const json& doc) { return doc.dump(2) + "\n"; }

} // namespace serre
