#pragma once

#include "serre/object.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace serre {

/// A finite group by its multiplication table; element 0 is the identity.
struct FiniteGroup {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> table;  // table[a][b] = index of a*b

    std::size_t order() const noexcept { return labels.size(); }
    std::size_t inverse(std::size_t a) const;
};

FiniteGroup cyclic_group(std::size_t n);
/// Permutations of {0, 1, 2}: e, s01, s02, s12, c012, c021; (ab)(x) = a(b(x)).
FiniteGroup symmetric_group_3();

/// k[G]: basis G, Delta(g) = g (x) g, epsilon(g) = 1, S(g) = g^-1.
HopfPtr group_algebra(const FiniteGroup& group, Field field);
/// k^G: basis of point functions p_g, p_g p_h = [g = h] p_g,
/// Delta(p_g) = sum_(ab = g) p_a (x) p_b, epsilon(p_g) = [g = e], S(p_g) = p_(g^-1).
HopfPtr dual_group_algebra(const FiniteGroup& group, Field field);
/// Sweedler's four-dimensional algebra on {1, g, x, gx}. Needs char != 2.
HopfPtr sweedler(Field field);

/// Catalog field names: Q, F2, F3, F5, F7.
std::vector<Field> catalog_fields();

enum class EntryKind { Hopf, Module, Comodule, YD };

std::string to_string(EntryKind kind);

struct CatalogEntry {
    std::string id;
    EntryKind kind = EntryKind::Hopf;
    std::string provenance;
    HopfPtr hopf;                 // the entry itself, or the algebra the object lives over
    std::optional<Object> object; // empty for Hopf entries
    /// Empty for ordinary entries; otherwise the check a negative fixture must fail.
    std::string negative_check;

    bool is_negative() const noexcept { return !negative_check.empty(); }
};

class Catalog {
public:
    /// Builds every entry and runs its axiom checker. Throws std::logic_error
    /// when an ordinary entry fails or a negative fixture passes its tagged check.
    Catalog();

    const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
    const CatalogEntry* find(std::string_view id) const;
    /// Throws std::out_of_range for unknown ids.
    const CatalogEntry& at(std::string_view id) const;

    std::vector<const CatalogEntry*> hopf_entries() const;
    /// Objects over the Hopf entry `hopf_id`, optionally of one category, in catalog order.
    std::vector<const CatalogEntry*> objects_over(std::string_view hopf_id, std::optional<Category> category = {},
                                                  bool include_negative = false) const;

private:
    void add(CatalogEntry entry);

    std::vector<CatalogEntry> entries_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

/// Built once on first use; immutable afterwards.
const Catalog& default_catalog();

} // namespace serre
