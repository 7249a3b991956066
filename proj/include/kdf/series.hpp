#ifndef KDF_SERIES_HPP
#define KDF_SERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <kdf/rational.hpp>

namespace kdf {

/// Exponent vector of a monomial, one entry per formal variable.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t var_count) : exps_(var_count, 0) {}
    MultiIndex(std::initializer_list<unsigned> exps) : exps_(exps) {}
    explicit MultiIndex(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

    static MultiIndex unit(std::size_t var_count, std::size_t var, unsigned power = 1);

    std::size_t size() const { return exps_.size(); }
    unsigned degree() const;

    unsigned operator[](std::size_t i) const { return exps_[i]; }
    unsigned &operator[](std::size_t i) { return exps_[i]; }

    const std::vector<unsigned> &exponents() const { return exps_; }

    MultiIndex &operator+=(const MultiIndex &rhs);
    friend MultiIndex operator+(MultiIndex lhs, const MultiIndex &rhs) { return lhs += rhs; }
    friend bool operator==(const MultiIndex &, const MultiIndex &) = default;

private:
    std::vector<unsigned> exps_;
};

/// Graded lexicographic order: lower total degree first, then the larger
/// exponent of x1 first (so x1^2 < x1 x2 < x2^2).
struct GradedLexLess {
    bool operator()(const MultiIndex &lhs, const MultiIndex &rhs) const;
};

/// Sparse multivariate polynomial over Rational holding a power series
/// truncated at total degree `cap`. Stored coefficients are never zero and
/// never exceed the cap.
class TruncatedSeries {
public:
    using TermMap = std::map<MultiIndex, Rational, GradedLexLess>;

    TruncatedSeries(std::size_t var_count, unsigned cap);

    static TruncatedSeries constant(const Rational &c, std::size_t var_count, unsigned cap);
    static TruncatedSeries one(std::size_t var_count, unsigned cap) { return constant(Rational(1), var_count, cap); }
    static TruncatedSeries monomial(const MultiIndex &m, const Rational &c, unsigned cap);

    std::size_t var_count() const { return var_count_; }
    unsigned cap() const { return cap_; }
    const TermMap &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const MultiIndex &m) const;

    /// Accumulates c into the coefficient of m. Terms above the cap are
    /// dropped; coefficients that cancel to zero are erased.
    void add_term(const MultiIndex &m, const Rational &c);

    /// Copy re-truncated at a cap no larger than the current one.
    TruncatedSeries truncated(unsigned new_cap) const;

    /// Exact equality. Throws ShapeMismatch when var counts or caps differ:
    /// comparing at different caps is a caller bug, never an implicit re-truncation.
    friend bool operator==(const TruncatedSeries &lhs, const TruncatedSeries &rhs);

private:
    std::size_t var_count_;
    unsigned cap_;
    TermMap terms_;
};

TruncatedSeries add(const TruncatedSeries &s, const TruncatedSeries &t);
TruncatedSeries negate(const TruncatedSeries &s);
TruncatedSeries scale(const Rational &c, const TruncatedSeries &s);
TruncatedSeries shift_monomial(const TruncatedSeries &s, const MultiIndex &m);
TruncatedSeries mul(const TruncatedSeries &s, const TruncatedSeries &t);

/// r-fold formal derivative in variable `var`; the result has cap max(0, cap - r).
TruncatedSeries partial_derivative(const TruncatedSeries &s, std::size_t var, unsigned r);

inline TruncatedSeries operator+(const TruncatedSeries &s, const TruncatedSeries &t) { return add(s, t); }
inline TruncatedSeries operator-(const TruncatedSeries &s, const TruncatedSeries &t) { return add(s, negate(t)); }
inline TruncatedSeries operator*(const TruncatedSeries &s, const TruncatedSeries &t) { return mul(s, t); }
inline TruncatedSeries operator*(const Rational &c, const TruncatedSeries &s) { return scale(c, s); }

struct CoefficientMismatch {
    MultiIndex monomial;
    Rational lhs;
    Rational rhs;
};

/// Graded-lex-first monomial whose coefficients differ, if any.
std::optional<CoefficientMismatch> first_mismatch(const TruncatedSeries &lhs, const TruncatedSeries &rhs);

/// Number of monomials of total degree <= cap in var_count variables.
BigInt dense_monomial_count(std::size_t var_count, unsigned cap);

std::string format_monomial(const MultiIndex &m);

/// One "coef * x1^e1 x2^e2" line per term, in graded-lex order.
std::string to_text(const TruncatedSeries &s);

} // namespace kdf

#endif
