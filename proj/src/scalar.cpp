#include "serre/scalar.hpp"

#include "serre/error.hpp"

#include <stdexcept>

namespace serre {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
        throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                    " is not a prime below 2^31");
    }
    return Field(static_cast<std::uint32_t>(p));
}

std::string Field::name() const {
    return is_rational() ? std::string("Q") : "F" + std::to_string(p_);
}

Field parse_field(const std::string& text) {
    if (text == "Q") return Field::rationals();
    std::string digits;
    if (text.rfind("Fp:", 0) == 0) {
        digits = text.substr(3);
    } else if (text.size() > 1 && text[0] == 'F') {
        digits = text.substr(1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 12) {
        throw std::invalid_argument("unknown field '" + text + "' (expected Q, F<p> or Fp:<p>)");
    }
    return Field::prime(std::stoull(digits));
}

namespace {

std::uint32_t reduce(long value, std::uint32_t p) {
    long r = value % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    // Extended Euclid on (a, p); p prime and a != 0 guarantee gcd = 1.
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    std::int64_t inv = old_s % static_cast<std::int64_t>(p);
    if (inv < 0) inv += p;
    return static_cast<std::uint32_t>(inv);
}

} // namespace

Scalar::Scalar(Field field, long value) : field_(field) {
    if (field.is_rational()) {
        value_ = mpq_class(value);
    } else {
        value_ = reduce(value, field.characteristic());
    }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
    if (field.is_rational()) {
        mpq_class v(value);
        v.canonicalize();
        value_ = std::move(v);
        return;
    }
    const std::uint32_t p = field.characteristic();
    const std::uint32_t den = reduce(value.get_den(), p);
    if (den == 0) {
        throw NotInvertible("denominator of " + value.get_str() + " vanishes in " + field.name());
    }
    const std::uint64_t num = reduce(value.get_num(), p);
    value_ = static_cast<std::uint32_t>(num * inverse_mod(den, p) % p);
}

bool Scalar::is_zero() const {
    if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<std::uint32_t>(value_) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
    return std::get<std::uint32_t>(value_) == 1;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw NotInvertible("zero is not invertible in " + field_.name());
    Scalar result = *this;
    if (field_.is_rational()) {
        auto& q = std::get<mpq_class>(result.value_);
        q = 1 / q;
    } else {
        auto& r = std::get<std::uint32_t>(result.value_);
        r = inverse_mod(r, field_.characteristic());
    }
    return result;
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw FieldMismatch("rational() called on an element of " + field_.name());
    return std::get<mpq_class>(value_);
}

std::uint32_t Scalar::residue() const {
    if (field_.is_rational()) throw FieldMismatch("residue() called on a rational");
    return std::get<std::uint32_t>(value_);
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
    return std::to_string(std::get<std::uint32_t>(value_));
}

void Scalar::require_same_field(const Scalar& other) const {
    if (field_ != other.field_) {
        throw FieldMismatch("cannot combine elements of " + field_.name() + " and " +
                            other.field_.name());
    }
}

Scalar Scalar::operator-() const {
    Scalar result = *this;
    if (field_.is_rational()) {
        auto& q = std::get<mpq_class>(result.value_);
        q = -q;
    } else {
        auto& r = std::get<std::uint32_t>(result.value_);
        if (r != 0) r = field_.characteristic() - r;
    }
    return result;
}

Scalar& Scalar::operator+=(const Scalar& other) {
    require_same_field(other);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
    } else {
        const std::uint64_t p = field_.characteristic();
        auto& r = std::get<std::uint32_t>(value_);
        r = static_cast<std::uint32_t>((std::uint64_t{r} + std::get<std::uint32_t>(other.value_)) % p);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
    require_same_field(other);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
    } else {
        const std::uint64_t p = field_.characteristic();
        auto& r = std::get<std::uint32_t>(value_);
        r = static_cast<std::uint32_t>((std::uint64_t{r} + p - std::get<std::uint32_t>(other.value_)) % p);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
    require_same_field(other);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
    } else {
        const std::uint64_t p = field_.characteristic();
        auto& r = std::get<std::uint32_t>(value_);
        r = static_cast<std::uint32_t>(std::uint64_t{r} * std::get<std::uint32_t>(other.value_) % p);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
    require_same_field(other);
    return *this *= other.inverse();
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
    require_same_field(a);
    require_same_field(b);
    if (field_.is_rational()) {
        thread_local mpq_class product;
        mpq_mul(product.get_mpq_t(), std::get<mpq_class>(a.value_).get_mpq_t(),
                std::get<mpq_class>(b.value_).get_mpq_t());
        std::get<mpq_class>(value_) -= product;
    } else {
        const std::uint64_t p = field_.characteristic();
        const std::uint64_t prod =
            std::uint64_t{std::get<std::uint32_t>(a.value_)} * std::get<std::uint32_t>(b.value_) % p;
        auto& r = std::get<std::uint32_t>(value_);
        r = static_cast<std::uint32_t>((r + p - prod) % p);
    }
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
    require_same_field(a);
    require_same_field(b);
    if (field_.is_rational()) {
        thread_local mpq_class product;
        mpq_mul(product.get_mpq_t(), std::get<mpq_class>(a.value_).get_mpq_t(),
                std::get<mpq_class>(b.value_).get_mpq_t());
        std::get<mpq_class>(value_) += product;
    } else {
        const std::uint64_t p = field_.characteristic();
        const std::uint64_t prod =
            std::uint64_t{std::get<std::uint32_t>(a.value_)} * std::get<std::uint32_t>(b.value_) % p;
        auto& r = std::get<std::uint32_t>(value_);
        r = static_cast<std::uint32_t>((r + prod) % p);
    }
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    if (a.field_.is_rational()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
    return std::get<std::uint32_t>(a.value_) == std::get<std::uint32_t>(b.value_);
}

} // namespace serre
