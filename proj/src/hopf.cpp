#include "serre/hopf.hpp"

#include "serre/error.hpp"
#include "sparse.hpp"

#include <stdexcept>

namespace serre {

using detail::SparseFirst;
using detail::SparseLast;

Vector basis_vector(std::size_t n, std::size_t i, Field field) {
    Vector v(n, Scalar::zero(field));
    v.at(i) = Scalar::one(field);
    return v;
}

Algebra::Algebra(std::string name, Field field, Tensor3 mult, Vector unit, std::vector<std::string> basis)
    : name_(std::move(name)), field_(field), mult_(std::move(mult)), unit_(std::move(unit)),
      basis_(std::move(basis)) {
    const std::size_t n = unit_.size();
    if (mult_.dim0() != n || mult_.dim1() != n || mult_.dim2() != n) {
        throw std::invalid_argument("algebra '" + name_ + "': multiplication tensor must be " +
                                    std::to_string(n) + "x" + std::to_string(n) + "x" + std::to_string(n));
    }
    if (mult_.field() != field_) throw FieldMismatch("algebra '" + name_ + "': multiplication over another field");
    for (const auto& s : unit_)
        if (s.field() != field_) throw FieldMismatch("algebra '" + name_ + "': unit over another field");
    if (!basis_.empty() && basis_.size() != n) {
        throw std::invalid_argument("algebra '" + name_ + "': wrong number of basis labels");
    }
}

std::string Algebra::basis_label(std::size_t i) const {
    return basis_.empty() ? "b" + std::to_string(i) : basis_.at(i);
}

Vector Algebra::multiply(const Vector& a, const Vector& b) const {
    const std::size_t n = dim();
    Vector out(n, Scalar::zero(field_));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            const Scalar ab = a[i] * b[j];
            for (std::size_t t = 0; t < n; ++t)
                if (!mult_(i, j, t).is_zero()) out[t].add_mul(ab, mult_(i, j, t));
        }
    }
    return out;
}

Matrix Algebra::left_multiplication(std::size_t i) const {
    const std::size_t n = dim();
    Matrix m(n, n, field_);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t t = 0; t < n; ++t) m(t, j) = mult_(i, j, t);
    return m;
}

bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.unit_ == b.unit_ && a.mult_ == b.mult_;
}

namespace {

// Checks v == expected entrywise; on mismatch records (prefix..., index).
bool equal_or_fail(AxiomReport& report, const Vector& v, const Vector& expected, std::vector<std::size_t> prefix) {
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t] != expected[t]) {
            prefix.push_back(t);
            report.fail(std::move(prefix), "got " + v[t].to_string() + ", expected " + expected[t].to_string());
            return false;
        }
    }
    return true;
}

void check_associativity(const Algebra& a, const SparseLast& m, AxiomReport& report) {
    const std::size_t n = a.dim();
    const Field f = a.field();
    report.add("associativity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector left(n, Scalar::zero(f)), right(n, Scalar::zero(f));
                for (const auto& [s, x] : m(i, j))
                    for (const auto& [t, y] : m(s, k)) left[t].add_mul(x, y);
                for (const auto& [s, x] : m(j, k))
                    for (const auto& [t, y] : m(i, s)) right[t].add_mul(x, y);
                if (!equal_or_fail(report, left, right, {i, j, k})) return;
            }
}

void check_unit(const Algebra& a, AxiomReport& report) {
    const std::size_t n = a.dim();
    report.add("unit");
    for (std::size_t j = 0; j < n; ++j) {
        const Vector e = basis_vector(n, j, a.field());
        if (!equal_or_fail(report, a.multiply(a.unit(), e), e, {j})) return;
        if (!equal_or_fail(report, a.multiply(e, a.unit()), e, {j})) return;
    }
}

} // namespace

AxiomReport check_algebra_axioms(const Algebra& algebra) {
    AxiomReport report;
    const SparseLast m(algebra.mult());
    check_associativity(algebra, m, report);
    check_unit(algebra, report);
    return report;
}

HopfAlgebra::HopfAlgebra(Algebra algebra, Tensor3 comult, Vector counit, Matrix antipode)
    : algebra_(std::move(algebra)), comult_(std::move(comult)), counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
    const std::size_t n = algebra_.dim();
    const Field f = algebra_.field();
    if (comult_.dim0() != n || comult_.dim1() != n || comult_.dim2() != n) {
        throw std::invalid_argument("hopf '" + name() + "': comultiplication tensor has the wrong shape");
    }
    if (counit_.size() != n) throw std::invalid_argument("hopf '" + name() + "': counit has the wrong length");
    if (antipode_.rows() != n || antipode_.cols() != n) {
        throw std::invalid_argument("hopf '" + name() + "': antipode must be " + std::to_string(n) + "x" +
                                    std::to_string(n));
    }
    if (comult_.field() != f || antipode_.field() != f) throw FieldMismatch("hopf '" + name() + "': mixed fields");
    for (const auto& s : counit_)
        if (s.field() != f) throw FieldMismatch("hopf '" + name() + "': counit over another field");

    Tensor3 dual_mult(n, n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) dual_mult(i, j, t) = comult_(t, i, j);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(algebra_.basis_label(i) + "*");
    dual_ = std::make_shared<const Algebra>(name() + "*", f, std::move(dual_mult), counit_, std::move(labels));
}

bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) {
    return a.algebra_ == b.algebra_ && a.comult_ == b.comult_ && a.counit_ == b.counit_ &&
           a.antipode_ == b.antipode_;
}

HopfPtr make_hopf(HopfAlgebra hopf, Validation validation) {
    if (validation == Validation::Checked) {
        const AxiomReport report = check_hopf_axioms(hopf);
        if (const AxiomCheck* bad = report.first_failure()) {
            throw AxiomFailure("hopf '" + hopf.name() + "' violates " + bad->name);
        }
    }
    return std::make_shared<const HopfAlgebra>(std::move(hopf));
}

AxiomReport check_hopf_axioms(const HopfAlgebra& hopf) {
    const Algebra& alg = hopf.algebra();
    const std::size_t n = hopf.dim();
    const Field f = hopf.field();
    const Scalar zero = Scalar::zero(f);
    const SparseLast m(hopf.mult());
    const SparseFirst d(hopf.comult());
    const Vector& eps = hopf.counit();
    const Vector& unit = hopf.unit();

    AxiomReport report;
    check_associativity(alg, m, report);
    check_unit(alg, report);

    // (Delta (x) id) Delta = (id (x) Delta) Delta, compared on H (x) H (x) H.
    report.add("coassociativity");
    for (std::size_t i = 0; i < n && report.checks.back().passed; ++i) {
        Vector left(n * n * n, zero), right(n * n * n, zero);
        for (const auto& [s, c, x] : d[i])
            for (const auto& [a, b, y] : d[s]) left[(a * n + b) * n + c].add_mul(x, y);
        for (const auto& [a, s, x] : d[i])
            for (const auto& [b, c, y] : d[s]) right[(a * n + b) * n + c].add_mul(x, y);
        equal_or_fail(report, left, right, {i});
    }

    report.add("counit");
    for (std::size_t i = 0; i < n && report.checks.back().passed; ++i) {
        Vector left(n, zero), right(n, zero);
        for (const auto& [j, t, x] : d[i]) {
            left[t].add_mul(eps[j], x);
            right[j].add_mul(eps[t], x);
        }
        const Vector e = basis_vector(n, i, f);
        if (equal_or_fail(report, left, e, {i})) equal_or_fail(report, right, e, {i});
    }

    // Delta(h_i h_j) = Delta(h_i) Delta(h_j) in H (x) H.
    report.add("comultiplication multiplicative");
    for (std::size_t i = 0; i < n && report.checks.back().passed; ++i)
        for (std::size_t j = 0; j < n && report.checks.back().passed; ++j) {
            Vector left(n * n, zero), right(n * n, zero);
            for (const auto& [s, x] : m(i, j))
                for (const auto& [a, b, y] : d[s]) left[a * n + b].add_mul(x, y);
            for (const auto& [p, q, x] : d[i])
                for (const auto& [r, u, y] : d[j]) {
                    const Scalar xy = x * y;
                    for (const auto& [a, z] : m(p, r))
                        for (const auto& [b, w] : m(q, u)) right[a * n + b].add_mul(xy * z, w);
                }
            equal_or_fail(report, left, right, {i, j});
        }

    report.add("comultiplication unital");
    {
        Vector left(n * n, zero), right(n * n, zero);
        for (std::size_t i = 0; i < n; ++i) {
            if (unit[i].is_zero()) continue;
            for (const auto& [a, b, y] : d[i]) left[a * n + b].add_mul(unit[i], y);
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) right[a * n + b] = unit[a] * unit[b];
        equal_or_fail(report, left, right, {});
    }

    report.add("counit multiplicative");
    for (std::size_t i = 0; i < n && report.checks.back().passed; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar lhs = zero;
            for (const auto& [t, x] : m(i, j)) lhs.add_mul(x, eps[t]);
            if (lhs != eps[i] * eps[j]) {
                report.fail({i, j}, "epsilon(h_i h_j) = " + lhs.to_string());
                break;
            }
        }

    report.add("counit unital");
    {
        Scalar e1 = zero;
        for (std::size_t i = 0; i < n; ++i) e1.add_mul(unit[i], eps[i]);
        if (!e1.is_one()) report.fail({}, "epsilon(1) = " + e1.to_string());
    }

    // m (S (x) id) Delta = eta epsilon = m (id (x) S) Delta.
    const Matrix& S = hopf.antipode();
    for (int side = 0; side < 2; ++side) {
        report.add(side == 0 ? "antipode left" : "antipode right");
        for (std::size_t i = 0; i < n && report.checks.back().passed; ++i) {
            Vector got(n, zero);
            for (const auto& [j, t, x] : d[i]) {
                for (std::size_t s = 0; s < n; ++s) {
                    const Scalar& coeff = side == 0 ? S(s, j) : S(s, t);
                    if (coeff.is_zero()) continue;
                    const Scalar xs = x * coeff;
                    for (const auto& [u, y] : side == 0 ? m(s, t) : m(j, s)) got[u].add_mul(xs, y);
                }
            }
            Vector expected(n, zero);
            for (std::size_t u = 0; u < n; ++u) expected[u] = eps[i] * unit[u];
            equal_or_fail(report, got, expected, {i});
        }
    }
    return report;
}

std::optional<std::size_t> involution_defect(const HopfAlgebra& hopf) {
    const Matrix s2 = hopf.antipode() * hopf.antipode();
    const std::size_t n = hopf.dim();
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) {
            const Scalar& s = s2(r, c);
            if (r == c ? !s.is_one() : !s.is_zero()) return c;
        }
    return std::nullopt;
}

bool is_involutory(const HopfAlgebra& hopf) { return !involution_defect(hopf).has_value(); }

Algebra dual_algebra(const HopfAlgebra& hopf) {
    Algebra dual = *hopf.dual();
    const AxiomReport report = check_algebra_axioms(dual);
    if (const AxiomCheck* bad = report.first_failure()) {
        throw AxiomFailure("dual of '" + hopf.name() + "' violates " + bad->name +
                           " (comultiplication is not coassociative/counital)");
    }
    return dual;
}

Vector apply_antipode(const HopfAlgebra& hopf, const Vector& v) {
    const std::size_t n = hopf.dim();
    Vector out(n, Scalar::zero(hopf.field()));
    for (std::size_t j = 0; j < n; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
            if (!hopf.antipode()(i, j).is_zero()) out[i].add_mul(hopf.antipode()(i, j), v[j]);
    }
    return out;
}

} // namespace serre
