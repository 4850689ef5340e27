#pragma once

#include "serre/matrix.hpp"
#include "serre/report.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace serre {

/// A finite-dimensional unital associative algebra given by structure
/// constants: mult(i, j, t) is the coefficient of b_t in b_i * b_j.
class Algebra {
public:
    Algebra(std::string name, Field field, Tensor3 mult, Vector unit, std::vector<std::string> basis = {});

    const std::string& name() const noexcept { return name_; }
    Field field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return unit_.size(); }
    const Tensor3& mult() const noexcept { return mult_; }
    const Vector& unit() const noexcept { return unit_; }
    /// Display label of basis element i ("b<i>" when none were given).
    std::string basis_label(std::size_t i) const;
    const std::vector<std::string>& basis_labels() const noexcept { return basis_; }

    /// Coordinates of a * b.
    Vector multiply(const Vector& a, const Vector& b) const;
    /// Matrix of left multiplication by b_i in the basis (column j = b_i * b_j).
    Matrix left_multiplication(std::size_t i) const;

    friend bool operator==(const Algebra& a, const Algebra& b);

private:
    std::string name_;
    Field field_;
    Tensor3 mult_;
    Vector unit_;
    std::vector<std::string> basis_;
};

/// Associativity and both unit laws.
AxiomReport check_algebra_axioms(const Algebra& algebra);

/// A finite-dimensional Hopf algebra H by structure constants.
///   comult(i, j, t): coefficient of h_j (x) h_t in Delta(h_i)
///   counit[i]      : epsilon(h_i)
///   antipode       : column i holds the coordinates of S(h_i)
/// The constructor only checks shapes; see make_hopf for axiom validation.
class HopfAlgebra {
public:
    HopfAlgebra(Algebra algebra, Tensor3 comult, Vector counit, Matrix antipode);

    const Algebra& algebra() const noexcept { return algebra_; }
    const std::string& name() const noexcept { return algebra_.name(); }
    Field field() const noexcept { return algebra_.field(); }
    std::size_t dim() const noexcept { return algebra_.dim(); }
    const Tensor3& mult() const noexcept { return algebra_.mult(); }
    const Vector& unit() const noexcept { return algebra_.unit(); }
    const Tensor3& comult() const noexcept { return comult_; }
    const Vector& counit() const noexcept { return counit_; }
    const Matrix& antipode() const noexcept { return antipode_; }

    /// The convolution algebra H* on the dual basis, built once at construction.
    const std::shared_ptr<const Algebra>& dual() const noexcept { return dual_; }

    friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b);

private:
    Algebra algebra_;
    Tensor3 comult_;
    Vector counit_;
    Matrix antipode_;
    std::shared_ptr<const Algebra> dual_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

enum class Validation { Checked, Unchecked };

/// Wraps `hopf` in a shared pointer. With Validation::Checked a failing
/// check_hopf_axioms raises AxiomFailure naming the first violated identity.
/// Validation::Unchecked exists for deliberately broken test fixtures.
HopfPtr make_hopf(HopfAlgebra hopf, Validation validation = Validation::Checked);

/// Every Hopf-algebra identity evaluated exactly on the structure constants.
/// Check names: "associativity", "unit", "coassociativity", "counit",
/// "comultiplication multiplicative", "comultiplication unital",
/// "counit multiplicative", "counit unital", "antipode left", "antipode right".
AxiomReport check_hopf_axioms(const HopfAlgebra& hopf);

/// S * S == identity, exactly.
bool is_involutory(const HopfAlgebra& hopf);

/// First basis index i with S(S(h_i)) != h_i, if any.
std::optional<std::size_t> involution_defect(const HopfAlgebra& hopf);

/// The convolution algebra H*: mult*(i, j, t) = comult(t, i, j), unit = counit.
/// Associativity of the result is re-verified (AxiomFailure otherwise).
Algebra dual_algebra(const HopfAlgebra& hopf);

/// Coordinates of S(v).
Vector apply_antipode(const HopfAlgebra& hopf, const Vector& v);

/// The i-th standard basis vector of length n.
Vector basis_vector(std::size_t n, std::size_t i, Field field);

} // namespace serre
