#include "serre/report.hpp"

#include <sstream>

namespace serre {

bool AxiomReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

bool AxiomReport::passed(std::string_view name) const {
    const AxiomCheck* c = find(name);
    return c != nullptr && c->passed;
}

const AxiomCheck* AxiomReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

const AxiomCheck* AxiomReport::find(std::string_view name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

void AxiomReport::fail(std::vector<std::size_t> witness, std::string detail) {
    if (checks.empty()) add("unnamed");
    AxiomCheck& c = checks.back();
    if (!c.passed) return;
    c.passed = false;
    c.witness = std::move(witness);
    c.detail = std::move(detail);
}

void AxiomReport::append(const AxiomReport& other, std::string_view prefix) {
    for (auto c : other.checks) {
        if (!prefix.empty()) c.name = std::string(prefix) + c.name;
        checks.push_back(std::move(c));
    }
}

std::string AxiomReport::render() const {
    std::ostringstream out;
    for (const auto& c : checks) {
        out << c.name << ": " << (c.passed ? "PASS" : "FAIL");
        if (!c.passed) {
            if (!c.witness.empty()) {
                out << " at (";
                for (std::size_t i = 0; i < c.witness.size(); ++i) out << (i ? ", " : "") << c.witness[i];
                out << ")";
            }
            if (!c.detail.empty()) out << " " << c.detail;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace serre
