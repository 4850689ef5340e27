#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "serre/catalog.hpp"
#include "serre/error.hpp"

#include <array>

using namespace serre;

namespace {

const Field Q = Field::rationals();

// H4 basis g^a x^b at index a + 2b: 1, g, x, gx.
// Normal form: g^a x^b * g^c x^d = (-1)^(bc) g^(a+c) x^(b+d), zero once b + d >= 2.
long h4_product(std::size_t i, std::size_t j, std::size_t t) {
    const std::size_t a = i % 2, b = i / 2, c = j % 2, d = j / 2;
    if (b + d >= 2) return 0;
    const std::size_t target = (a + c) % 2 + 2 * (b + d);
    if (target != t) return 0;
    return (b * c) % 2 ? -1 : 1;
}

HopfAlgebra with_antipode(const HopfAlgebra& h, Matrix s) {
    return HopfAlgebra(h.algebra(), h.comult(), h.counit(), std::move(s));
}

} // namespace

TEST_CASE("Sweedler multiplication matches the normal form") {
    for (Field f : {Q, Field::prime(3), Field::prime(5), Field::prime(7)}) {
        const HopfPtr h = sweedler(f);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t t = 0; t < 4; ++t) CHECK(h->mult()(i, j, t) == Scalar(f, h4_product(i, j, t)));
    }
}

TEST_CASE("Sweedler comultiplication, counit and antipode") {
    const HopfPtr h = sweedler(Q);
    // Delta(x) = x (x) 1 + g (x) x
    CHECK(h->comult()(2, 2, 0) == Scalar::one(Q));
    CHECK(h->comult()(2, 1, 2) == Scalar::one(Q));
    CHECK(h->counit()[1] == Scalar::one(Q));
    CHECK(h->counit()[2].is_zero());
    // S(x) = -gx
    CHECK(h->antipode()(3, 2) == Scalar(Q, -1L));
    CHECK(check_hopf_axioms(*h).passed());
    CHECK_FALSE(is_involutory(*h));
    REQUIRE(involution_defect(*h).has_value());
    CHECK(h->algebra().basis_label(*involution_defect(*h)) == "x");
    // S^2(x) = -x
    const Vector s2x = apply_antipode(*h, apply_antipode(*h, basis_vector(4, 2, Q)));
    CHECK(s2x[2] == Scalar(Q, -1L));
    CHECK_THROWS_AS(sweedler(Field::prime(2)), std::invalid_argument);
}

TEST_CASE("group algebra multiplication follows the group table") {
    const FiniteGroup s3 = symmetric_group_3();
    // oracle: compose permutations of {0,1,2} directly, (ab)(x) = a(b(x))
    const std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto index_of = [&](std::array<int, 3> p) {
        for (std::size_t k = 0; k < perms.size(); ++k)
            if (perms[k] == p) return k;
        return perms.size();
    };
    for (std::size_t a = 0; a < 6; ++a) {
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<int, 3> ab{};
            for (int x = 0; x < 3; ++x) ab[x] = perms[a][perms[b][x]];
            CHECK(s3.table[a][b] == index_of(ab));
        }
    }
    const HopfPtr h = group_algebra(s3, Field::prime(5));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b)
            for (std::size_t t = 0; t < 6; ++t)
                CHECK(h->mult()(a, b, t).is_one() == (t == s3.table[a][b]));
}

TEST_CASE("catalog Hopf algebras pass their axioms with the expected involutory flag") {
    for (const auto* e : default_catalog().hopf_entries()) {
        INFO(e->id);
        CHECK(check_hopf_axioms(*e->hopf).passed());
        const bool sweedler_entry = e->id.rfind("H4/", 0) == 0;
        CHECK(is_involutory(*e->hopf) == !sweedler_entry);
    }
    CHECK(is_involutory(*default_catalog().at("kS3/Q").hopf));
    CHECK(is_involutory(*dual_group_algebra(cyclic_group(3), Q)));
}

TEST_CASE("zero antipode breaks exactly the antipode laws") {
    const HopfPtr h = group_algebra(cyclic_group(2), Q);
    const HopfAlgebra broken = with_antipode(*h, Matrix(2, 2, Q));
    const AxiomReport r = check_hopf_axioms(broken);
    CHECK_FALSE(r.passed("antipode left"));
    CHECK_FALSE(r.passed("antipode right"));
    for (const auto& c : r.checks)
        if (c.name.rfind("antipode", 0) != 0) CHECK_MESSAGE(c.passed, c.name);
    CHECK_THROWS_AS(make_hopf(broken), AxiomFailure);
    CHECK_NOTHROW(make_hopf(broken, Validation::Unchecked));
}

TEST_CASE("dual algebra of Q[C2] is the function algebra") {
    const HopfPtr h = group_algebra(cyclic_group(2), Q);
    const Algebra d = dual_algebra(*h);
    // oracle: point functions multiply pointwise, unit = sum of all of them = counit
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t t = 0; t < 2; ++t) CHECK(d.mult()(i, j, t).is_one() == (i == j && j == t));
    CHECK(d.unit() == Vector{Scalar::one(Q), Scalar::one(Q)});
    // over F2 the same table: e_g * e_g = e_g
    const Algebra d2 = dual_algebra(*group_algebra(cyclic_group(2), Field::prime(2)));
    CHECK(d2.mult()(1, 1, 1).is_one());
    CHECK(d2.mult()(0, 1, 1).is_zero());
}

TEST_CASE("dual algebra of the one-dimensional Hopf algebra is the base field") {
    const Algebra d = dual_algebra(*group_algebra(cyclic_group(1), Q));
    CHECK(d.dim() == 1);
    CHECK(d.mult()(0, 0, 0).is_one());
    CHECK(d.unit()[0].is_one());
}

TEST_CASE("dual of the dual group algebra is the group algebra") {
    const FiniteGroup g = symmetric_group_3();
    const Algebra d = dual_algebra(*dual_group_algebra(g, Q));
    const HopfPtr kg = group_algebra(g, Q);
    CHECK(d.mult() == kg->mult());
    CHECK(d.unit() == kg->unit());
}

TEST_CASE("every single corrupted structure constant is detected") {
    const HopfPtr h = group_algebra(cyclic_group(3), Field::prime(3));
    const Field f = h->field();
    const std::size_t n = h->dim();
    std::size_t caught = 0, total = 0;
    for (std::size_t k = 0; k < n * n * n; ++k) {
        Tensor3 m = h->mult();
        m.data()[k] += Scalar::one(f);
        const HopfAlgebra bad(Algebra("bad", f, m, h->unit()), h->comult(), h->counit(), h->antipode());
        ++total;
        caught += check_hopf_axioms(bad).passed() ? 0 : 1;
    }
    for (std::size_t k = 0; k < n * n; ++k) {
        Matrix s = h->antipode();
        s(k / n, k % n) += Scalar::one(f);
        ++total;
        caught += check_hopf_axioms(with_antipode(*h, s)).passed() ? 0 : 1;
    }
    CHECK(caught == total);
}
