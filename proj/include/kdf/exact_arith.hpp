#ifndef KDF_EXACT_ARITH_HPP
#define KDF_EXACT_ARITH_HPP

#include <span>

#include <kdf/rational.hpp>

namespace kdf {

/// Rising factorial a (a+1) ... (a+k-1); 1 for k = 0. A zero result is a
/// legitimate value and signals a parameter pole to callers that divide by it.
Rational poch(const Rational &a, unsigned k);

/// Product of poch(p, k) over the list (1 for an empty list).
Rational list_poch(std::span<const Rational> params, unsigned k);

/// Binomial coefficient, 0 when k > r.
BigInt binom(unsigned r, unsigned k);

BigInt factorial(unsigned n);

/// Closed form of 2F1(-r, a; b; 1) = (b - a)_r / (b)_r.
/// Throws PoleInParameters when (b)_r = 0.
Rational vandermonde_2f1(unsigned r, const Rational &a, const Rational &b);

} // namespace kdf

#endif
