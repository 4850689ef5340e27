#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "serre/error.hpp"
#include "serre/matrix.hpp"

#include <random>

using namespace serre;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F5 = Field::prime(5);
const Field F7 = Field::prime(7);

Scalar q(long num, long den = 1) { return Scalar(Q, mpq_class(num, den)); }

} // namespace

TEST_CASE("field parsing and naming") {
    CHECK(parse_field("Q") == Q);
    CHECK(parse_field("F5") == F5);
    CHECK(parse_field("Fp:7") == F7);
    CHECK(F7.name() == "F7");
    CHECK_THROWS_AS(parse_field("F4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("R"), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(q(1, 3) + q(1, 6) == q(1, 2));
    CHECK(q(2, 3) * q(3, 4) == q(1, 2));
    CHECK((q(1, 3) - q(1, 3)).is_zero());
    CHECK(q(-7, 2).inverse() == q(-2, 7));
    CHECK(q(6, 4).to_string() == "3/2");
    CHECK_THROWS_AS(q(0).inverse(), NotInvertible);
}

TEST_CASE("prime field arithmetic matches integers mod p") {
    // oracle: plain long arithmetic reduced mod p
    for (long a = -6; a <= 6; ++a) {
        for (long b = -6; b <= 6; ++b) {
            const Scalar x(F7, a), y(F7, b);
            CHECK((x + y).residue() == static_cast<std::uint32_t>(((a + b) % 7 + 7) % 7));
            CHECK((x * y).residue() == static_cast<std::uint32_t>(((a * b) % 7 + 7) % 7));
            if (b % 7 != 0) CHECK(x / y * y == x);
        }
    }
    CHECK(Scalar(F2, 1L) + Scalar(F2, 1L) == Scalar::zero(F2));
    CHECK(Scalar(F5, 2L).inverse() == Scalar(F5, 3L));
    // rationals reduce when the denominator is a unit
    CHECK(Scalar(F5, mpq_class(1, 2)) == Scalar(F5, 3L));
    CHECK_THROWS_AS(Scalar(F5, mpq_class(1, 5)), NotInvertible);
}

TEST_CASE("mixing fields is refused") {
    CHECK_THROWS_AS(Scalar(F5, 1L) + Scalar(F7, 1L), FieldMismatch);
    CHECK_THROWS_AS(q(1) * Scalar(F5, 1L), FieldMismatch);
    CHECK_THROWS_AS(Matrix::identity(2, F5) * Matrix::identity(2, F7), FieldMismatch);
}

TEST_CASE("kronecker product puts the second factor fastest") {
    const Matrix p = Matrix::from_rows(Q, {{0, 1}, {1, 0}});
    const Matrix pp = kron(p, p);
    // P (x) P swaps e0e0 <-> e1e1 and e0e1 <-> e1e0
    CHECK(pp == Matrix::from_rows(Q, {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}));
    const Matrix a = Matrix::from_rows(Q, {{1, 2}, {3, 4}});
    const Matrix i = Matrix::identity(2, Q);
    CHECK(kron(a, i)(2, 0) == q(3));
    CHECK(kron(i, a)(0, 1) == q(2));
}

TEST_CASE("rank, kernel and solve over Q") {
    const Matrix a = Matrix::from_rows(Q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(a) == 2);
    const auto ker = kernel_basis(a);
    REQUIRE(ker.size() == 1);
    CHECK((a * ker[0]).is_zero());
    const Matrix b = Matrix::column({q(6), q(12), q(2)}, Q);
    const auto x = solve_linear(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    CHECK_FALSE(solve_linear(a, Matrix::column({q(1), q(0), q(0)}, Q)).has_value());
}

TEST_CASE("rank over F2 differs from rank over Q") {
    const std::vector<std::vector<long>> rows{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    CHECK(rank(Matrix::from_rows(Q, rows)) == 3);
    CHECK(rank(Matrix::from_rows(F2, rows)) == 2);
}

TEST_CASE("random matrices: kernel and inverse properties") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (Field f : {Q, F5, F7}) {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
            std::vector<std::vector<long>> rows(r, std::vector<long>(c));
            for (auto& row : rows)
                for (auto& v : row) v = entry(rng);
            const Matrix a = Matrix::from_rows(f, rows);
            const auto ker = kernel_basis(a);
            CHECK(ker.size() + rank(a) == c);
            for (const auto& k : ker) CHECK((a * k).is_zero());
            if (r == c) {
                const auto inv = inverse(a);
                CHECK(inv.has_value() == (rank(a) == r));
                if (inv) CHECK((a * *inv).is_identity());
            }
        }
    }
}

TEST_CASE("intertwiners of a permutation with itself") {
    // commutant of the 2-cycle on Q^2 is span{I, P}
    const std::vector<Matrix> ops{Matrix::from_rows(Q, {{0, 1}, {1, 0}})};
    const auto basis = intertwiners(ops, ops, 2, 2, Q);
    CHECK(basis.size() == 2);
    for (const auto& g : basis) CHECK(g * ops[0] == ops[0] * g);
}
