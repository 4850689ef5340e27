#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace serre {

/// Outcome of one named identity, with the first violating index tuple.
struct AxiomCheck {
    std::string name;
    bool passed = true;
    std::vector<std::size_t> witness;
    std::string detail;
};

/// Failures are data: every checker returns one of these instead of throwing.
struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool passed() const;
    /// Looks up the check called `name`; false if absent.
    bool passed(std::string_view name) const;
    const AxiomCheck* first_failure() const;
    const AxiomCheck* find(std::string_view name) const;

    void add(std::string name) { checks.push_back(AxiomCheck{std::move(name), true, {}, {}}); }
    /// Records a violation on the most recently added check, keeping only the first.
    void fail(std::vector<std::size_t> witness, std::string detail = {});
    void append(const AxiomReport& other, std::string_view prefix = {});

    /// One line per check: "<name>: PASS" or "<name>: FAIL at (i, j, ...) detail".
    std::string render() const;
};

} // namespace serre
