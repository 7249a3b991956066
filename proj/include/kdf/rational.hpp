#ifndef KDF_RATIONAL_HPP
#define KDF_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kdf {

using BigInt = mpz_class;

/// Exact rational number, always kept in canonical form (positive
/// denominator, coprime numerator and denominator). Equality is therefore
/// structural.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt &value) : value_(value) {}
    /// Throws DivisionByZero when `den` is zero.
    Rational(const BigInt &num, const BigInt &den);

    /// Parses "p" or "p/q" (optional leading '-' on p only, q > 0).
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// True for 0, -1, -2, ...
    bool is_nonpositive_integer() const { return is_integer() && sign() <= 0; }

    std::string to_string() const;
    double to_double() const { return value_.get_d(); }

    Rational operator-() const;
    Rational &operator+=(const Rational &rhs);
    Rational &operator-=(const Rational &rhs);
    Rational &operator*=(const Rational &rhs);
    Rational &operator/=(const Rational &rhs);

    friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational &lhs, const Rational &rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs)
    {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &q);

private:
    mpq_class value_;
};

} // namespace kdf

#endif
