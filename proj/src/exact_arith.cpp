#include <kdf/exact_arith.hpp>

#include <kdf/errors.hpp>

namespace kdf {

Rational poch(const Rational &a, unsigned k)
{
    Rational out(1);
    Rational factor = a;
    for (unsigned j = 0; j < k; ++j) {
        out *= factor;
        if (out.is_zero()) {
            return out;
        }
        factor += 1;
    }
    return out;
}

Rational list_poch(std::span<const Rational> params, unsigned k)
{
    Rational out(1);
    for (const auto &p : params) {
        out *= poch(p, k);
        if (out.is_zero()) {
            break;
        }
    }
    return out;
}

BigInt binom(unsigned r, unsigned k)
{
    if (k > r) {
        return 0;
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), r, k);
    return out;
}

BigInt factorial(unsigned n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Rational vandermonde_2f1(unsigned r, const Rational &a, const Rational &b)
{
    const Rational den = poch(b, r);
    if (den.is_zero()) {
        throw PoleInParameters("vandermonde_2f1: (" + b.to_string() + ")_" + std::to_string(r) + " = 0");
    }
    return poch(b - a, r) / den;
}

} // namespace kdf
