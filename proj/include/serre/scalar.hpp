#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

namespace serre {

/// The base field k: either the rationals or a prime field F_p with p < 2^31.
class Field {
public:
    constexpr Field() = default;

    static constexpr Field rationals() { return Field{}; }
    /// Throws std::invalid_argument unless 2 <= p < 2^31 and p is prime.
    static Field prime(std::uint64_t p);

    /// 0 for Q.
    constexpr std::uint32_t characteristic() const noexcept { return p_; }
    constexpr bool is_rational() const noexcept { return p_ == 0; }

    /// "Q" or "F<p>".
    std::string name() const;

    friend constexpr auto operator<=>(Field, Field) = default;

private:
    explicit constexpr Field(std::uint32_t p) : p_(p) {}

    std::uint32_t p_ = 0;
};

/// Parses "Q", "F5", "Fp:5" (case-sensitive). Throws std::invalid_argument.
Field parse_field(const std::string& text);

bool is_prime(std::uint64_t n);

/// An exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator (mpq canonical form); residues live in [0, p).
class Scalar {
public:
    /// Rational zero.
    Scalar() = default;
    Scalar(Field field, long value);
    Scalar(Field field, const mpq_class& value);

    static Scalar zero(Field field) { return Scalar(field, 0L); }
    static Scalar one(Field field) { return Scalar(field, 1L); }

    Field field() const noexcept { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Throws NotInvertible for zero.
    Scalar inverse() const;

    /// Only valid over Q.
    const mpq_class& rational() const;
    /// Only valid over F_p.
    std::uint32_t residue() const;

    /// "a/b" or "a" over Q, the residue in decimal over F_p.
    std::string to_string() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    /// this -= a * b, without a temporary for the product over F_p.
    void sub_mul(const Scalar& a, const Scalar& b);
    /// this += a * b.
    void add_mul(const Scalar& a, const Scalar& b);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    void require_same_field(const Scalar& other) const;

    Field field_;
    std::variant<mpq_class, std::uint32_t> value_;
};

} // namespace serre
