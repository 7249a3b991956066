#include <kdf/rational.hpp>

#include <cctype>
#include <ostream>

#include <kdf/errors.hpp>

namespace kdf {

Rational::Rational(const BigInt &num, const BigInt &den)
{
    if (den == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    std::string_view den_part = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);

    const bool negative = !num_part.empty() && num_part.front() == '-';
    if (negative) {
        num_part.remove_prefix(1);
    }
    if (!all_digits(num_part) || !all_digits(den_part)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    BigInt num(std::string(num_part), 10);
    BigInt den(std::string(den_part), 10);
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) {
        num = -num;
    }
    return Rational(num, den);
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const
{
    Rational out;
    out.value_ = -value_;
    return out;
}

Rational &Rational::operator+=(const Rational &rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &rhs)
{
    if (rhs.is_zero()) {
        throw DivisionByZero("division by zero rational");
    }
    value_ /= rhs.value_;
    return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &q)
{
    return os << q.to_string();
}

} // namespace kdf
