#include "serre/catalog.hpp"

#include "serre/error.hpp"

#include <array>
#include <stdexcept>

namespace serre {

std::size_t FiniteGroup::inverse(std::size_t a) const {
    for (std::size_t b = 0; b < order(); ++b)
        if (table[a][b] == 0) return b;
    throw std::logic_error("group " + name + ": element " + labels[a] + " has no inverse");
}

FiniteGroup cyclic_group(std::size_t n) {
    FiniteGroup g;
    g.name = "C" + std::to_string(n);
    for (std::size_t k = 0; k < n; ++k) g.labels.push_back(k == 0 ? "e" : k == 1 ? "g" : "g" + std::to_string(k));
    g.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
    return g;
}

namespace {

using Perm = std::array<std::size_t, 3>;

const std::vector<Perm>& s3_perms() {
    static const std::vector<Perm> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    return perms;
}

long perm_sign(const Perm& p) {
    long s = 1;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

} // namespace

FiniteGroup symmetric_group_3() {
    FiniteGroup g;
    g.name = "S3";
    g.labels = {"e", "s01", "s02", "s12", "c012", "c021"};
    const auto& perms = s3_perms();
    g.table.assign(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            Perm c{};
            for (std::size_t x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            for (std::size_t k = 0; k < 6; ++k)
                if (perms[k] == c) g.table[a][b] = k;
        }
    return g;
}

HopfPtr group_algebra(const FiniteGroup& group, Field field) {
    const std::size_t n = group.order();
    Tensor3 mult(n, n, n, field), comult(n, n, n, field);
    Matrix antipode(n, n, field);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) mult(a, b, group.table[a][b]) = Scalar::one(field);
        comult(a, a, a) = Scalar::one(field);
        antipode(group.inverse(a), a) = Scalar::one(field);
    }
    Algebra algebra("k" + group.name + "/" + field.name(), field, std::move(mult), basis_vector(n, 0, field),
                    group.labels);
    return make_hopf(HopfAlgebra(std::move(algebra), std::move(comult), Vector(n, Scalar::one(field)),
                                 std::move(antipode)));
}

HopfPtr dual_group_algebra(const FiniteGroup& group, Field field) {
    const std::size_t n = group.order();
    Tensor3 mult(n, n, n, field), comult(n, n, n, field);
    Matrix antipode(n, n, field);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back("p_" + group.labels[a]);
        mult(a, a, a) = Scalar::one(field);
        for (std::size_t b = 0; b < n; ++b) comult(group.table[a][b], a, b) = Scalar::one(field);
        antipode(group.inverse(a), a) = Scalar::one(field);
    }
    Algebra algebra("k^" + group.name + "/" + field.name(), field, std::move(mult), Vector(n, Scalar::one(field)),
                    std::move(labels));
    return make_hopf(HopfAlgebra(std::move(algebra), std::move(comult), basis_vector(n, 0, field),
                                 std::move(antipode)));
}

HopfPtr sweedler(Field field) {
    if (field.characteristic() == 2) throw std::invalid_argument("Sweedler's algebra needs -1 != 1");
    const std::size_t n = 4;  // 1, g, x, gx
    Tensor3 mult(n, n, n, field), comult(n, n, n, field);
    auto set = [&](Tensor3& t, std::size_t i, std::size_t j, std::size_t k, long v) { t(i, j, k) = Scalar(field, v); };
    set(mult, 0, 0, 0, 1);
    set(mult, 0, 1, 1, 1);
    set(mult, 0, 2, 2, 1);
    set(mult, 0, 3, 3, 1);
    set(mult, 1, 0, 1, 1);
    set(mult, 1, 1, 0, 1);
    set(mult, 1, 2, 3, 1);
    set(mult, 1, 3, 2, 1);
    set(mult, 2, 0, 2, 1);
    set(mult, 2, 1, 3, -1);
    set(mult, 3, 0, 3, 1);
    set(mult, 3, 1, 2, -1);
    set(comult, 0, 0, 0, 1);
    set(comult, 1, 1, 1, 1);
    set(comult, 2, 2, 0, 1);
    set(comult, 2, 1, 2, 1);
    set(comult, 3, 3, 1, 1);
    set(comult, 3, 0, 3, 1);
    Matrix antipode = Matrix::from_rows(field, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
    Algebra algebra("H4/" + field.name(), field, std::move(mult), basis_vector(n, 0, field), {"1", "g", "x", "gx"});
    return make_hopf(HopfAlgebra(std::move(algebra), std::move(comult),
                                 Vector{Scalar::one(field), Scalar::one(field), Scalar::zero(field),
                                        Scalar::zero(field)},
                                 std::move(antipode)));
}

std::vector<Field> catalog_fields() {
    return {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5), Field::prime(7)};
}

std::string to_string(EntryKind kind) {
    switch (kind) {
    case EntryKind::Hopf: return "hopf";
    case EntryKind::Module: return "module";
    case EntryKind::Comodule: return "comodule";
    case EntryKind::YD: return "yd";
    }
    return "unknown";
}

namespace {

using IntMatrix = std::vector<std::vector<long>>;
using GroupRep = std::vector<IntMatrix>;  // one matrix per group element

IntMatrix zeros(std::size_t n) { return IntMatrix(n, std::vector<long>(n, 0)); }

GroupRep trivial_rep(const FiniteGroup& g) { return GroupRep(g.order(), IntMatrix{{1}}); }

GroupRep cyclic_sign_rep(const FiniteGroup& g) {
    GroupRep rep;
    for (std::size_t k = 0; k < g.order(); ++k) rep.push_back({{k % 2 == 0 ? 1L : -1L}});
    return rep;
}

GroupRep cyclic_power_rep(const FiniteGroup& g, const IntMatrix& generator) {
    GroupRep rep;
    const std::size_t d = generator.size();
    IntMatrix power = zeros(d);
    for (std::size_t i = 0; i < d; ++i) power[i][i] = 1;
    for (std::size_t k = 0; k < g.order(); ++k) {
        rep.push_back(power);
        IntMatrix next = zeros(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t l = 0; l < d; ++l) next[i][j] += generator[i][l] * power[l][j];
        power = next;
    }
    return rep;
}

GroupRep s3_sign_rep() {
    GroupRep rep;
    for (const auto& p : s3_perms()) rep.push_back({{perm_sign(p)}});
    return rep;
}

GroupRep s3_permutation_rep() {
    GroupRep rep;
    for (const auto& p : s3_perms()) {
        IntMatrix m = zeros(3);
        for (std::size_t i = 0; i < 3; ++i) m[p[i]][i] = 1;
        rep.push_back(m);
    }
    return rep;
}

// Sum-zero vectors (a, b, c) in the basis v1 = e0 - e1, v2 = e1 - e2 have
// coordinates (a, -c).
GroupRep s3_standard_rep() {
    GroupRep rep;
    for (const auto& p : s3_perms()) {
        IntMatrix m = zeros(2);
        const std::array<std::array<long, 3>, 2> basis{{{1, -1, 0}, {0, 1, -1}}};
        for (std::size_t k = 0; k < 2; ++k) {
            std::array<long, 3> image{};
            for (std::size_t i = 0; i < 3; ++i) image[p[i]] += basis[k][i];
            m[0][k] = image[0];
            m[1][k] = -image[2];
        }
        rep.push_back(m);
    }
    return rep;
}

// Conjugation action on a conjugacy class, optionally twisted by the sign.
GroupRep s3_conjugation_rep(const FiniteGroup& g, const std::vector<std::size_t>& cls, bool signed_action) {
    GroupRep rep;
    const GroupRep sign = s3_sign_rep();
    for (std::size_t h = 0; h < g.order(); ++h) {
        IntMatrix m = zeros(cls.size());
        for (std::size_t a = 0; a < cls.size(); ++a) {
            const std::size_t conj = g.table[g.table[h][cls[a]]][g.inverse(h)];
            for (std::size_t b = 0; b < cls.size(); ++b)
                if (cls[b] == conj) m[b][a] = signed_action ? sign[h][0][0] : 1;
        }
        rep.push_back(m);
    }
    return rep;
}

std::vector<Matrix> to_matrices(const GroupRep& rep, Field field) {
    std::vector<Matrix> out;
    for (const auto& m : rep) out.push_back(Matrix::from_rows(field, m));
    return out;
}

ModuleRep group_module(const HopfPtr& h, const std::string& name, const GroupRep& rep) {
    return ModuleRep(h, h->name() + "/" + name, to_matrices(rep, h->field()), rep.front().size());
}

ComoduleRep graded_comodule(const HopfPtr& h, const std::string& name, const std::vector<std::size_t>& degrees) {
    Tensor3 c(degrees.size(), degrees.size(), h->dim(), h->field());
    for (std::size_t a = 0; a < degrees.size(); ++a) c(a, a, degrees[a]) = Scalar::one(h->field());
    return ComoduleRep(h, h->name() + "/comodule/" + name, std::move(c));
}

// A k[G]-module is a k^G-comodule via rho(m) = sum_g g.m (x) p_g.
ComoduleRep comodule_from_rep(const HopfPtr& dual_h, const std::string& name, const GroupRep& rep) {
    const std::size_t m = rep.front().size();
    Tensor3 c(m, m, dual_h->dim(), dual_h->field());
    for (std::size_t g = 0; g < rep.size(); ++g)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) c(a, b, g) = Scalar(dual_h->field(), rep[g][b][a]);
    return ComoduleRep(dual_h, dual_h->name() + "/comodule/" + name, std::move(c));
}

ModuleRep point_module(const HopfPtr& dual_h, const std::string& name, std::size_t point) {
    std::vector<Matrix> action;
    for (std::size_t g = 0; g < dual_h->dim(); ++g) action.push_back(Matrix::from_rows(dual_h->field(), {{g == point ? 1L : 0L}}));
    return ModuleRep(dual_h, dual_h->name() + "/" + name, std::move(action), 1);
}

YDModuleRep group_yd(const HopfPtr& h, const std::string& name, const GroupRep& rep,
                     const std::vector<std::size_t>& degrees) {
    const std::string id = h->name() + "/yd/" + name;
    return YDModuleRep(ModuleRep(h, id, to_matrices(rep, h->field()), rep.front().size()),
                       graded_comodule(h, name, degrees).renamed(id), id);
}

} // namespace

Catalog::Catalog() {
    const std::vector<Field> fields = catalog_fields();
    const FiniteGroup c2 = cyclic_group(2), c3 = cyclic_group(3), c4 = cyclic_group(4), s3 = symmetric_group_3();
    auto hopf_entry = [&](const HopfPtr& h, std::string provenance) {
        add(CatalogEntry{h->name(), EntryKind::Hopf, std::move(provenance), h, std::nullopt, {}});
    };
    auto object_entry = [&](const HopfPtr& h, Object obj, std::string provenance, std::string negative = {}) {
        const EntryKind kind = static_cast<EntryKind>(static_cast<int>(category_of(obj)) + 1);
        add(CatalogEntry{name_of(obj), kind, std::move(provenance), h, std::move(obj), std::move(negative)});
    };

    for (const Field& f : fields) {
        const std::uint32_t p = f.characteristic();
        const bool odd = p != 2;

        for (const FiniteGroup* g : {&c2, &c3, &c4, &s3}) {
            const HopfPtr h = group_algebra(*g, f);
            hopf_entry(h, "group algebra of " + g->name + " from its multiplication table, group-like basis");
            object_entry(h, trivial_module(h), "epsilon(g) = 1 for every group element");
            object_entry(h, regular_module(h), "left multiplication matrices of the group table");
            if (g != &c3 && odd) {
                const GroupRep sign = g == &s3 ? s3_sign_rep() : cyclic_sign_rep(*g);
                object_entry(h, group_module(h, "sign", sign), "g acts by the sign of g (parity of the exponent)");
            }
            if (g == &c3) {
                object_entry(h, group_module(h, "rotation", cyclic_power_rep(*g, {{0, -1}, {1, -1}})),
                             "g acts by the companion matrix of x^2 + x + 1");
            }
            if (g == &c4) {
                object_entry(h, group_module(h, "rotation", cyclic_power_rep(*g, {{0, -1}, {1, 0}})),
                             "g acts by the companion matrix of x^2 + 1");
            }
            if ((g == &c2 && p == 2) || (g == &c3 && p == 3) || (g == &c4 && p == 2)) {
                object_entry(h, group_module(h, "jordan", cyclic_power_rep(*g, {{1, 1}, {0, 1}})),
                             "g acts by the unipotent Jordan block [[1,1],[0,1]] of order p");
            }
            if (g == &s3) {
                object_entry(h, group_module(h, "permutation", s3_permutation_rep()),
                             "permutation matrices of S3 acting on k^3");
                object_entry(h, group_module(h, "standard", s3_standard_rep()),
                             "sum-zero subspace of k^3 in the basis e0 - e1, e1 - e2");
            }

            object_entry(h, trivial_comodule(h), "rho(a) = a (x) 1_H");
            object_entry(h, regular_comodule(h), "coaction = comultiplication, each g is a degree-g line");
            for (std::size_t d = 1; d < g->order(); ++d) {
                object_entry(h, graded_comodule(h, "deg-" + g->labels[d], {d}),
                             "one-dimensional space graded by " + g->labels[d]);
            }

            object_entry(h, trivial_yd(h), "trivial action and trivial coaction");
            if (g == &c2) {
                const GroupRep plus = trivial_rep(*g);
                object_entry(h, group_yd(h, "line-g-plus", plus, {1}), "degree g, trivial action");
                if (odd) {
                    const GroupRep minus = cyclic_sign_rep(*g);
                    object_entry(h, group_yd(h, "line-e-minus", minus, {0}), "degree e, g acts by -1");
                    object_entry(h, group_yd(h, "line-g-minus", minus, {1}), "degree g, g acts by -1");
                    object_entry(h,
                                 direct_sum(std::get<YDModuleRep>(*find(h->name() + "/yd/line-e-minus")->object),
                                            std::get<YDModuleRep>(*find(h->name() + "/yd/line-g-plus")->object))
                                     .renamed(h->name() + "/yd/sum"),
                                 "direct sum of the lines (e, -1) and (g, +1)");
                } else {
                    object_entry(h,
                                 direct_sum(trivial_yd(h),
                                            std::get<YDModuleRep>(*find(h->name() + "/yd/line-g-plus")->object))
                                     .renamed(h->name() + "/yd/sum"),
                                 "direct sum of the trivial line and the line (g, +1)");
                    object_entry(h, group_yd(h, "nonsplit", cyclic_power_rep(*g, {{1, 1}, {0, 1}}), {0, 0}),
                                 "degree e, g acts by the Jordan block: a non-split extension of trivial by trivial");
                }
            }
            if (g == &s3) {
                if (odd) object_entry(h, group_yd(h, "line-e-sign", s3_sign_rep(), {0}), "degree e, sign action");
                const std::vector<std::size_t> transpositions{1, 2, 3}, cycles{4, 5};
                object_entry(h, group_yd(h, "transpositions", s3_conjugation_rep(*g, transpositions, false), transpositions),
                             "basis v_t graded by the transposition t, h . v_t = v_(h t h^-1)");
                if (odd) {
                    object_entry(h,
                                 group_yd(h, "transpositions-signed", s3_conjugation_rep(*g, transpositions, true),
                                          transpositions),
                                 "as transpositions with h . v_t = sign(h) v_(h t h^-1)");
                }
                object_entry(h, group_yd(h, "three-cycles", s3_conjugation_rep(*g, cycles, false), cycles),
                             "basis v_c graded by the 3-cycle c, h . v_c = v_(h c h^-1)");
                object_entry(h, group_yd(h, "incompatible", s3_permutation_rep(), {1, 1, 1}),
                             "permutation action with every vector graded by s01: grading not conjugation-stable",
                             "yd compatibility");
            }
        }

        for (const FiniteGroup* g : {&c2, &c3, &s3}) {
            const HopfPtr h = dual_group_algebra(*g, f);
            hopf_entry(h, "dual of the group algebra of " + g->name + ": point functions, Delta transposes the group table");
            object_entry(h, trivial_module(h), "p_g acts by [g = e]");
            object_entry(h, regular_module(h), "pointwise multiplication of functions");
            for (std::size_t d = 1; d < g->order(); ++d) {
                object_entry(h, point_module(h, "point-" + g->labels[d], d), "p_h acts by [h = " + g->labels[d] + "]");
            }

            object_entry(h, trivial_comodule(h), "rho(a) = a (x) 1_H");
            object_entry(h, regular_comodule(h), "coaction = comultiplication");
            if (g != &c3 && odd) {
                const GroupRep sign = g == &s3 ? s3_sign_rep() : cyclic_sign_rep(*g);
                object_entry(h, comodule_from_rep(h, "sign", sign), "rho(m) = sum_g g.m (x) p_g for the sign action");
            }
            if (g == &c3) {
                object_entry(h, comodule_from_rep(h, "rotation", cyclic_power_rep(*g, {{0, -1}, {1, -1}})),
                             "rho(m) = sum_g g.m (x) p_g for the order-3 companion matrix");
            }
            if (g == &c2 && p == 2) {
                object_entry(h, comodule_from_rep(h, "nonsplit", cyclic_power_rep(*g, {{1, 1}, {0, 1}})),
                             "rho(m) = sum_g g.m (x) p_g for the Jordan block: non-split extension of trivial by trivial");
            }
            if (g == &c3 && p == 3) {
                object_entry(h, comodule_from_rep(h, "jordan", cyclic_power_rep(*g, {{1, 1}, {0, 1}})),
                             "rho(m) = sum_g g.m (x) p_g for the Jordan block of order 3");
            }
            if (g == &s3) {
                object_entry(h, comodule_from_rep(h, "permutation", s3_permutation_rep()),
                             "rho(m) = sum_g g.m (x) p_g for the permutation action");
                object_entry(h, comodule_from_rep(h, "standard", s3_standard_rep()),
                             "rho(m) = sum_g g.m (x) p_g for the standard action");
            }
            object_entry(h, trivial_yd(h), "trivial action and trivial coaction");
        }

        if (f.characteristic() != 2) {
            const HopfPtr h = sweedler(f);
            hopf_entry(h, "g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x (x) 1 + g (x) x, S(x) = -gx on the basis 1, g, x, gx");
            object_entry(h, trivial_module(h), "g acts by 1, x by 0");
            object_entry(h, regular_module(h), "left multiplication matrices");
            object_entry(h, ModuleRep(h, h->name() + "/sign",
                                      to_matrices({{{1}}, {{-1}}, {{0}}, {{0}}}, f), 1),
                         "g acts by -1, x by 0");
            object_entry(h, ModuleRep(h, h->name() + "/two-dim",
                                      to_matrices({{{1, 0}, {0, 1}}, {{1, 0}, {0, -1}}, {{0, 0}, {1, 0}},
                                                   {{0, 0}, {-1, 0}}},
                                                  f),
                                      2),
                         "g = diag(1, -1), x = E21, gx = g x");
            object_entry(h, trivial_comodule(h), "rho(a) = a (x) 1_H");
            object_entry(h, regular_comodule(h), "coaction = comultiplication");
            Tensor3 span_gx(2, 2, 4, f);
            span_gx(0, 0, 1) = Scalar::one(f);  // rho(g) = g (x) g
            span_gx(1, 1, 0) = Scalar::one(f);  // rho(x) = x (x) 1 + g (x) x
            span_gx(1, 0, 2) = Scalar::one(f);
            object_entry(h, ComoduleRep(h, h->name() + "/comodule/two-dim", std::move(span_gx)),
                         "the subcomodule span(g, x) of H4 over itself");
        }
    }

    // Negative fixtures.
    {
        const HopfPtr h = find("kC2/Q")->hopf;
        std::vector<Matrix> action = regular_module(h).actions();
        action[1](1, 1) = Scalar::one(h->field());
        object_entry(h, ModuleRep(h, "kC2/Q/broken-regular", std::move(action), 2),
                     "regular matrices with the (1, 1) entry of g corrupted", "multiplicativity");
        object_entry(h, ComoduleRep(h, "kC2/Q/comodule/zero-coaction", Tensor3(1, 1, 2, h->field())),
                     "rho = 0 on a line", "counit law");
    }

    for (const auto& e : entries_) {
        if (e.kind == EntryKind::Hopf) continue;
        const AxiomReport report = check_axioms(*e.object);
        if (e.is_negative()) {
            const AxiomCheck* c = report.find(e.negative_check);
            if (!c || c->passed) {
                throw std::logic_error("catalog: negative fixture " + e.id + " does not fail '" + e.negative_check + "'");
            }
        } else if (!report.passed()) {
            throw std::logic_error("catalog: entry " + e.id + " fails its axioms:\n" + report.render());
        }
    }
}

void Catalog::add(CatalogEntry entry) {
    if (index_.count(entry.id)) throw std::logic_error("catalog: duplicate id " + entry.id);
    index_.emplace(entry.id, entries_.size());
    entries_.push_back(std::move(entry));
}

const CatalogEntry* Catalog::find(std::string_view id) const {
    const auto it = index_.find(id);
    return it == index_.end() ? nullptr : &entries_[it->second];
}

const CatalogEntry& Catalog::at(std::string_view id) const {
    if (const auto* e = find(id)) return *e;
    throw std::out_of_range("unknown catalog id '" + std::string(id) + "'");
}

std::vector<const CatalogEntry*> Catalog::hopf_entries() const {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries_)
        if (e.kind == EntryKind::Hopf) out.push_back(&e);
    return out;
}

std::vector<const CatalogEntry*> Catalog::objects_over(std::string_view hopf_id, std::optional<Category> category,
                                                       bool include_negative) const {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries_) {
        if (e.kind == EntryKind::Hopf || e.hopf->name() != hopf_id) continue;
        if (category && category_of(*e.object) != *category) continue;
        if (e.is_negative() && !include_negative) continue;
        out.push_back(&e);
    }
    return out;
}

const Catalog& default_catalog() {
    static const Catalog catalog;
    return catalog;
}

} // namespace serre
