#include "serre/semisimplicity.hpp"

#include "serre/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace serre {

std::string to_string(RadicalMethod method) {
    switch (method) {
    case RadicalMethod::TraceForm: return "trace-form";
    case RadicalMethod::IteratedTraceForm: return "iterated-trace-form";
    case RadicalMethod::BruteForce: return "brute-force";
    }
    return "unknown";
}

namespace {

// Semi-echelon basis grown one vector at a time. Rows are kept with a
// leading one at their pivot and zeros at the pivots of earlier rows.
class EchelonBuilder {
public:
    explicit EchelonBuilder(Field field) : field_(field) {}

    // Reduces v in place; returns true (and keeps it) when independent.
    bool insert(Vector& v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Scalar c = v[pivots_[r]];
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!rows_[r][k].is_zero()) v[k].sub_mul(c, rows_[r][k]);
        }
        std::size_t p = 0;
        while (p < v.size() && v[p].is_zero()) ++p;
        if (p == v.size()) return false;
        const Scalar inv = v[p].inverse();
        for (auto& x : v) x *= inv;
        rows_.push_back(v);
        pivots_.push_back(p);
        return true;
    }

    std::size_t size() const { return rows_.size(); }

    Matrix stacked(std::size_t width) const {
        Matrix m(rows_.size(), width, field_);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (std::size_t c = 0; c < width; ++c) m(r, c) = rows_[r][c];
        return m;
    }

private:
    Field field_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

Vector entries_of(const Matrix& m) { return Vector(m.data().begin(), m.data().end()); }

std::vector<Matrix> canonical_matrices(const Matrix& stacked_rows, std::size_t dim, Field field) {
    const Matrix basis = row_space_basis(stacked_rows);
    std::vector<Matrix> out;
    out.reserve(basis.rows());
    for (std::size_t r = 0; r < basis.rows(); ++r) out.push_back(Matrix::reshape(basis.row_span(r), dim, dim, field));
    return out;
}

Scalar trace_of_product(const Matrix& x, const Matrix& y) {
    Scalar t = Scalar::zero(x.field());
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c)
            if (!x(r, c).is_zero() && !y(c, r).is_zero()) t.add_mul(x(r, c), y(c, r));
    return t;
}

// Integer matrix arithmetic modulo a small modulus for the generalized traces.
using IntMatrix = std::vector<std::uint64_t>;

IntMatrix multiply_mod(const IntMatrix& a, const IntMatrix& b, std::size_t n, std::uint64_t mod) {
    IntMatrix c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint64_t aik = a[i * n + k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + aik * b[k * n + j]) % mod;
        }
    return c;
}

IntMatrix power_mod(IntMatrix base, std::uint64_t exponent, std::size_t n, std::uint64_t mod) {
    IntMatrix result(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) result[i * n + i] = 1 % mod;
    while (exponent > 0) {
        if (exponent & 1) result = multiply_mod(result, base, n, mod);
        exponent >>= 1;
        if (exponent > 0) base = multiply_mod(base, base, n, mod);
    }
    return result;
}

// g_level(a) = (tr(A^(p^level)) mod p^(level+1)) / p^level for the lift A of a
// with entries in [0, p).
Scalar generalized_trace(const Matrix& a, std::size_t level) {
    const Field f = a.field();
    const std::uint64_t p = f.characteristic();
    const std::size_t n = a.rows();
    std::uint64_t p_level = 1;
    for (std::size_t i = 0; i < level; ++i) p_level *= p;
    const std::uint64_t mod = p_level * p;
    IntMatrix lifted(n * n);
    for (std::size_t i = 0; i < n * n; ++i) lifted[i] = a.data()[i].residue();
    const IntMatrix powered = power_mod(std::move(lifted), p_level, n, mod);
    std::uint64_t trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace = (trace + powered[i * n + i]) % mod;
    if (trace % p_level != 0) {
        throw std::logic_error("generalized trace: tr(A^" + std::to_string(p_level) +
                               ") is not divisible by the level modulus; the chain of ideals is broken");
    }
    return Scalar(f, static_cast<long>(trace / p_level));
}

std::size_t floor_log(std::uint64_t p, std::size_t n) {
    std::size_t l = 0;
    std::uint64_t power = p;
    while (power <= n) {
        ++l;
        power *= p;
    }
    return l;
}

} // namespace

std::vector<Matrix> generated_algebra(std::span<const Matrix> generators, std::size_t dim, Field field) {
    if (dim == 0) return {};
    EchelonBuilder echelon(field);
    std::deque<Matrix> queue;
    const Matrix one = Matrix::identity(dim, field);
    Vector v = entries_of(one);
    echelon.insert(v);
    queue.push_back(one);
    std::vector<Matrix> spanning{one};
    while (!queue.empty()) {
        const Matrix x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            Matrix y = g * x;
            Vector entries = entries_of(y);
            if (echelon.insert(entries)) queue.push_back(std::move(y));
        }
    }
    return canonical_matrices(echelon.stacked(dim * dim), dim, field);
}

std::vector<Matrix> acting_algebra(const ModuleRep& module) {
    return generated_algebra(module.actions(), module.dim(), module.field());
}

std::vector<Matrix> jacobson_radical(std::span<const Matrix> algebra_basis, std::size_t dim, Field field,
                                     RadicalMethod* method_used) {
    const std::size_t d = algebra_basis.size();
    const bool plain_trace = field.is_rational() || field.characteristic() > dim;
    if (method_used) *method_used = plain_trace ? RadicalMethod::TraceForm : RadicalMethod::IteratedTraceForm;
    if (d == 0 || dim == 0) return {};

    std::vector<Matrix> ideal(algebra_basis.begin(), algebra_basis.end());
    const std::size_t levels = plain_trace ? 0 : floor_log(field.characteristic(), dim);
    for (std::size_t level = 0; level <= levels && !ideal.empty(); ++level) {
        // form(k, j) = g_level(x_k b_j); the next ideal is {sum_k c_k x_k : c^T form = 0}.
        Matrix form(ideal.size(), d, field);
        for (std::size_t k = 0; k < ideal.size(); ++k)
            for (std::size_t j = 0; j < d; ++j) {
                if (plain_trace) {
                    form(k, j) = trace_of_product(ideal[k], algebra_basis[j]);
                } else {
                    form(k, j) = generalized_trace(ideal[k] * algebra_basis[j], level);
                }
            }
        std::vector<Matrix> next;
        for (const auto& c : kernel_basis(form.transpose())) {
            Matrix element(dim, dim, field);
            for (std::size_t k = 0; k < ideal.size(); ++k) element.add_scaled(c(k, 0), ideal[k]);
            next.push_back(std::move(element));
        }
        ideal = std::move(next);
    }
    if (ideal.empty()) return {};
    return canonical_matrices(stack_flattened(ideal, field, dim * dim), dim, field);
}

SemisimplicityReport semisimplicity(std::span<const Matrix> generators, std::size_t dim, Field field) {
    SemisimplicityReport report;
    if (dim == 0) return report;
    const std::vector<Matrix> algebra = generated_algebra(generators, dim, field);
    report.radical_basis = jacobson_radical(algebra, dim, field, &report.method);
    report.radical_dim = report.radical_basis.size();
    report.verdict = report.radical_dim == 0;
    return report;
}

SemisimplicityReport is_semisimple(const ModuleRep& module) {
    return semisimplicity(module.actions(), module.dim(), module.field());
}

SemisimplicityReport is_cosemisimple(const ComoduleRep& comodule) {
    return is_semisimple(comodule_to_dual_module(comodule));
}

SemisimplicityReport is_yd_semisimple(const YDModuleRep& yd) {
    const std::vector<Matrix> ops = yd.operators();
    return semisimplicity(ops, yd.dim(), yd.field());
}

// ---------------------------------------------------------------------------
// Brute-force oracle. Works on raw residues with its own elimination so that
// it shares no code path with the radical computation above.

namespace {

using Row = std::vector<std::uint32_t>;

struct Subspace {
    std::vector<Row> rows;  // reduced echelon basis
    auto operator<=>(const Subspace&) const = default;
};

class ResidueSpace {
public:
    ResidueSpace(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim) {}

    std::uint32_t inv(std::uint32_t a) const {
        // a^(p-2) mod p
        std::uint64_t result = 1, base = a, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(result);
    }

    Subspace reduce(std::vector<Row> rows) const {
        std::size_t pivot_row = 0;
        for (std::size_t c = 0; c < dim_ && pivot_row < rows.size(); ++c) {
            std::size_t found = pivot_row;
            while (found < rows.size() && rows[found][c] == 0) ++found;
            if (found == rows.size()) continue;
            std::swap(rows[found], rows[pivot_row]);
            const std::uint64_t s = inv(rows[pivot_row][c]);
            for (auto& x : rows[pivot_row]) x = static_cast<std::uint32_t>(x * s % p_);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == pivot_row || rows[r][c] == 0) continue;
                const std::uint64_t factor = rows[r][c];
                for (std::size_t k = 0; k < dim_; ++k)
                    rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + p_ - factor * rows[pivot_row][k] % p_) % p_);
            }
            ++pivot_row;
        }
        rows.resize(pivot_row);
        return Subspace{std::move(rows)};
    }

    Row apply(const std::vector<std::uint32_t>& op, const Row& v) const {
        Row out(dim_, 0);
        for (std::size_t r = 0; r < dim_; ++r) {
            std::uint64_t s = 0;
            for (std::size_t c = 0; c < dim_; ++c) s += std::uint64_t{op[r * dim_ + c]} * v[c] % p_;
            out[r] = static_cast<std::uint32_t>(s % p_);
        }
        return out;
    }

    // Smallest subspace containing `seed` and stable under every operator.
    Subspace spin(const Row& seed, const std::vector<std::vector<std::uint32_t>>& ops) const {
        std::vector<Row> rows{seed};
        Subspace current = reduce(rows);
        std::deque<Row> queue{seed};
        while (!queue.empty()) {
            const Row v = queue.front();
            queue.pop_front();
            for (const auto& op : ops) {
                Row w = apply(op, v);
                std::vector<Row> extended = current.rows;
                extended.push_back(w);
                Subspace grown = reduce(std::move(extended));
                if (grown.rows.size() > current.rows.size()) {
                    current = std::move(grown);
                    queue.push_back(std::move(w));
                }
            }
        }
        return current;
    }

    Subspace sum(const Subspace& a, const Subspace& b) const {
        std::vector<Row> rows = a.rows;
        rows.insert(rows.end(), b.rows.begin(), b.rows.end());
        return reduce(std::move(rows));
    }

private:
    std::uint64_t p_;
    std::size_t dim_;
};

std::vector<Subspace> invariant_subspaces(std::span<const Matrix> generators, std::size_t dim, Field field,
                                          std::uint64_t bound) {
    if (field.is_rational()) throw std::invalid_argument("brute-force oracle needs a finite field");
    if (!oracle_applicable(field, dim, bound)) {
        throw BoundExceeded("brute-force oracle: " + field.name() + "^" + std::to_string(dim) + " exceeds the bound " +
                            std::to_string(bound));
    }
    const std::uint32_t p = field.characteristic();
    const ResidueSpace space(p, dim);
    std::vector<std::vector<std::uint32_t>> ops;
    for (const auto& g : generators) {
        std::vector<std::uint32_t> raw;
        for (const auto& s : g.data()) raw.push_back(s.residue());
        ops.push_back(std::move(raw));
    }

    std::set<Subspace> seen;
    std::vector<Subspace> all;
    auto record = [&](Subspace s) {
        if (seen.insert(s).second) all.push_back(std::move(s));
    };
    record(Subspace{});

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= p;
    Row v(dim, 0);
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t x = code;
        for (std::size_t i = 0; i < dim; ++i) {
            v[i] = static_cast<std::uint32_t>(x % p);
            x /= p;
        }
        record(space.spin(v, ops));
    }
    // Every invariant subspace is a sum of cyclic ones.
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) record(space.sum(all[i], all[j]));
    return all;
}

} // namespace

bool oracle_applicable(Field field, std::size_t dim, std::uint64_t bound) {
    if (field.is_rational()) return false;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        total *= field.characteristic();
        if (total > bound) return false;
    }
    return true;
}

std::size_t count_invariant_subspaces(std::span<const Matrix> generators, std::size_t dim, Field field,
                                      std::uint64_t bound) {
    return invariant_subspaces(generators, dim, field, bound).size();
}

bool brute_force_semisimple(std::span<const Matrix> generators, std::size_t dim, Field field, std::uint64_t bound) {
    const std::vector<Subspace> subs = invariant_subspaces(generators, dim, field, bound);
    const ResidueSpace space(field.characteristic(), dim);
    for (const auto& u : subs) {
        bool has_complement = false;
        for (const auto& w : subs) {
            if (u.rows.size() + w.rows.size() != dim) continue;
            if (space.sum(u, w).rows.size() == dim) {
                has_complement = true;
                break;
            }
        }
        if (!has_complement) return false;
    }
    return true;
}

bool brute_force_semisimple(const ModuleRep& module, std::uint64_t bound) {
    return brute_force_semisimple(module.actions(), module.dim(), module.field(), bound);
}

bool brute_force_cosemisimple(const ComoduleRep& comodule, std::uint64_t bound) {
    return brute_force_semisimple(comodule.components(), comodule.dim(), comodule.field(), bound);
}

bool brute_force_yd_semisimple(const YDModuleRep& yd, std::uint64_t bound) {
    const std::vector<Matrix> ops = yd.operators();
    return brute_force_semisimple(ops, yd.dim(), yd.field(), bound);
}

} // namespace serre
