#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "serre/document.hpp"
#include "serre/error.hpp"

using namespace serre;

namespace {

std::string message_of(const std::string& text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("scalar and field encodings") {
    CHECK(scalar_to_json(Scalar(Field::rationals(), mpq_class(-3, 4))) == json("-3/4"));
    CHECK(scalar_to_json(Scalar(Field::rationals(), 5L)) == json("5"));
    CHECK(scalar_to_json(Scalar(Field::prime(7), -1L)) == json(6));
    CHECK(field_to_json(Field::rationals()) == json("Q"));
    CHECK(field_to_json(Field::prime(5)) == json{{"Fp", 5}});
}

TEST_CASE("every catalog entry round-trips bit for bit") {
    for (const auto& e : default_catalog().entries()) {
        INFO(e.id);
        const std::string text =
            e.object ? dump_canonical(to_json(*e.object)) : dump_canonical(to_json(*e.hopf));
        const Document d = parse_document(text);
        if (e.object) {
            const Object& o = std::get<Object>(d);
            CHECK(same_structure(o, *e.object));
            CHECK(check_axioms(o).passed() == check_axioms(*e.object).passed());
            CHECK(dump_canonical(to_json(o)) == text);
        } else {
            const HopfPtr& h = std::get<HopfPtr>(d);
            CHECK(*h == *e.hopf);
            CHECK(check_hopf_axioms(*h).passed());
            CHECK(dump_canonical(to_json(*h)) == text);
        }
    }
}

TEST_CASE("constructed objects round-trip with their Hopf reference") {
    const Object t = tensor(*default_catalog().at("kC2/Q/regular").object, *default_catalog().at("kC2/Q/regular").object);
    const json j = to_json(t);
    CHECK(j.at("hopf") == json("kC2/Q"));
    CHECK(j.at("dim") == json(4));
    CHECK(same_structure(std::get<Object>(document_from_json(j)), t));
}

TEST_CASE("an unknown Hopf algebra is embedded") {
    const HopfPtr h = group_algebra(cyclic_group(5), Field::prime(3));
    const Object o = regular_module(h);
    const json j = to_json(o);
    REQUIRE(j.at("hopf").is_object());
    CHECK(same_structure(std::get<Object>(document_from_json(j)), o));
}

TEST_CASE("broken Hopf documents parse and fail their axioms") {
    json j = to_json(*default_catalog().at("kC2/Q").hopf);
    j["antipode"] = json::array({json::array({"0", "0"}), json::array({"0", "0"})});
    const HopfPtr h = std::get<HopfPtr>(document_from_json(j));
    CHECK_FALSE(check_hopf_axioms(*h).passed("antipode left"));
}

TEST_CASE("parse errors name the offending member") {
    CHECK(message_of("{").find("line") != std::string::npos);
    CHECK(message_of("[]").find("JSON object") != std::string::npos);
    CHECK(message_of(R"({"name": "x"})").find("infer") != std::string::npos);
    CHECK(message_of(R"({"name": "m", "hopf": "kC2/Q", "dim": 1, "action": [[["1"]]]})").find("action") !=
          std::string::npos);
    CHECK(message_of(R"({"name": "m", "hopf": "nope", "dim": 1, "action": [[["1"]], [["1"]]]})").find("hopf") !=
          std::string::npos);
    CHECK(message_of(R"({"name": "m", "hopf": "kC2/F2", "dim": 1, "action": [[[1]], [[2]]]})").find("action") !=
          std::string::npos);
    CHECK(message_of(R"({"name": "m", "hopf": "kC2/Q", "dim": 1, "action": [[["1"]], [["x"]]]})").find("action[1]") !=
          std::string::npos);
}
