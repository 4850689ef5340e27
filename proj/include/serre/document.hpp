#pragma once

#include "serre/catalog.hpp"
#include "serre/duality.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace serre {

using json = nlohmann::json;

/// Q scalars as "a/b" or "a" strings, F_p scalars as integers in [0, p).
json scalar_to_json(const Scalar& s);
/// "Q" or {"Fp": p}.
json field_to_json(Field field);
json matrix_to_json(const Matrix& m);

json to_json(const HopfAlgebra& hopf);
/// The "hopf" member is the catalog id when `catalog` holds an identical
/// algebra under that name, otherwise the embedded Hopf document.
json to_json(const Object& object, const Catalog& catalog = default_catalog());
json to_json(const SemisimplicityReport& report);
json to_json(const AxiomReport& report);
json to_json(const SerreVerdict& verdict);

/// The kind is inferred from the members present: mult -> Hopf algebra,
/// action and coaction -> YD module, action -> module, coaction -> comodule.
using Document = std::variant<HopfPtr, Object>;

/// Throws ParseError with the offending member path. Hopf algebras are
/// built unchecked so that axiom failures can be reported as data.
Document document_from_json(const json& doc, const Catalog& catalog = default_catalog());
Document parse_document(const std::string& text, const Catalog& catalog = default_catalog());
Document load_document(const std::string& path, const Catalog& catalog = default_catalog());

/// Sorted keys, two-space indentation, trailing newline.
std::string dump_canonical(const json& doc);

} // namespace serre
