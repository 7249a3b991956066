#include <kdf/series.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

#include <kdf/errors.hpp>
#include <kdf/exact_arith.hpp>

namespace kdf {

MultiIndex MultiIndex::unit(std::size_t var_count, std::size_t var, unsigned power)
{
    if (var >= var_count) {
        throw IndexOutOfRange("variable index out of range");
    }
    MultiIndex m(var_count);
    m[var] = power;
    return m;
}

unsigned MultiIndex::degree() const
{
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

MultiIndex &MultiIndex::operator+=(const MultiIndex &rhs)
{
    if (rhs.size() != size()) {
        throw ShapeMismatch("multi-index length mismatch");
    }
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        exps_[i] += rhs.exps_[i];
    }
    return *this;
}

bool GradedLexLess::operator()(const MultiIndex &lhs, const MultiIndex &rhs) const
{
    const unsigned dl = lhs.degree();
    const unsigned dr = rhs.degree();
    if (dl != dr) {
        return dl < dr;
    }
    // Larger leading exponents sort first within a degree.
    return std::lexicographical_compare(rhs.exponents().begin(), rhs.exponents().end(), lhs.exponents().begin(),
                                        lhs.exponents().end());
}

TruncatedSeries::TruncatedSeries(std::size_t var_count, unsigned cap) : var_count_(var_count), cap_(cap)
{
    if (var_count == 0) {
        throw ShapeMismatch("a series needs at least one variable");
    }
}

TruncatedSeries TruncatedSeries::constant(const Rational &c, std::size_t var_count, unsigned cap)
{
    TruncatedSeries s(var_count, cap);
    s.add_term(MultiIndex(var_count), c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const MultiIndex &m, const Rational &c, unsigned cap)
{
    TruncatedSeries s(m.size(), cap);
    s.add_term(m, c);
    return s;
}

Rational TruncatedSeries::coefficient(const MultiIndex &m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(const MultiIndex &m, const Rational &c)
{
    if (m.size() != var_count_) {
        throw ShapeMismatch("monomial length does not match the series variable count");
    }
    if (c.is_zero() || m.degree() > cap_) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

TruncatedSeries TruncatedSeries::truncated(unsigned new_cap) const
{
    if (new_cap > cap_) {
        throw ShapeMismatch("cannot re-truncate to a larger cap");
    }
    TruncatedSeries out(var_count_, new_cap);
    for (const auto &[m, c] : terms_) {
        if (m.degree() > new_cap) {
            break;
        }
        out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
}

namespace {

void require_same_shape(const TruncatedSeries &s, const TruncatedSeries &t)
{
    if (s.var_count() != t.var_count() || s.cap() != t.cap()) {
        throw ShapeMismatch("series shape mismatch: (" + std::to_string(s.var_count()) + " vars, cap "
                            + std::to_string(s.cap()) + ") vs (" + std::to_string(t.var_count()) + " vars, cap "
                            + std::to_string(t.cap()) + ")");
    }
}

} // namespace

bool operator==(const TruncatedSeries &lhs, const TruncatedSeries &rhs)
{
    require_same_shape(lhs, rhs);
    return lhs.terms_ == rhs.terms_;
}

TruncatedSeries add(const TruncatedSeries &s, const TruncatedSeries &t)
{
    require_same_shape(s, t);
    TruncatedSeries out = s;
    for (const auto &[m, c] : t.terms()) {
        out.add_term(m, c);
    }
    return out;
}

TruncatedSeries negate(const TruncatedSeries &s)
{
    return scale(Rational(-1), s);
}

TruncatedSeries scale(const Rational &c, const TruncatedSeries &s)
{
    TruncatedSeries out(s.var_count(), s.cap());
    if (c.is_zero()) {
        return out;
    }
    for (const auto &[m, v] : s.terms()) {
        out.add_term(m, c * v);
    }
    return out;
}

TruncatedSeries shift_monomial(const TruncatedSeries &s, const MultiIndex &m)
{
    if (m.size() != s.var_count()) {
        throw ShapeMismatch("shift length does not match the series variable count");
    }
    TruncatedSeries out(s.var_count(), s.cap());
    for (const auto &[e, c] : s.terms()) {
        out.add_term(e + m, c);
    }
    return out;
}

TruncatedSeries mul(const TruncatedSeries &s, const TruncatedSeries &t)
{
    require_same_shape(s, t);
    TruncatedSeries out(s.var_count(), s.cap());
    for (const auto &[ms, cs] : s.terms()) {
        const unsigned room = s.cap() - ms.degree();
        for (const auto &[mt, ct] : t.terms()) {
            if (mt.degree() > room) {
                break; // graded order: everything after is higher degree
            }
            out.add_term(ms + mt, cs * ct);
        }
    }
    return out;
}

TruncatedSeries partial_derivative(const TruncatedSeries &s, std::size_t var, unsigned r)
{
    if (var >= s.var_count()) {
        throw IndexOutOfRange("derivative variable out of range");
    }
    const unsigned new_cap = s.cap() >= r ? s.cap() - r : 0;
    TruncatedSeries out(s.var_count(), new_cap);
    for (const auto &[m, c] : s.terms()) {
        const unsigned e = m[var];
        if (e < r) {
            continue;
        }
        MultiIndex lowered = m;
        lowered[var] = e - r;
        // e (e-1) ... (e-r+1) = (e-r+1)_r
        out.add_term(lowered, c * poch(Rational(static_cast<long>(e - r + 1)), r));
    }
    return out;
}

std::optional<CoefficientMismatch> first_mismatch(const TruncatedSeries &lhs, const TruncatedSeries &rhs)
{
    require_same_shape(lhs, rhs);
    const GradedLexLess less;
    auto li = lhs.terms().begin();
    auto ri = rhs.terms().begin();
    const auto le = lhs.terms().end();
    const auto re = rhs.terms().end();
    while (li != le || ri != re) {
        if (ri == re || (li != le && less(li->first, ri->first))) {
            return CoefficientMismatch{li->first, li->second, Rational(0)};
        }
        if (li == le || less(ri->first, li->first)) {
            return CoefficientMismatch{ri->first, Rational(0), ri->second};
        }
        if (li->second != ri->second) {
            return CoefficientMismatch{li->first, li->second, ri->second};
        }
        ++li;
        ++ri;
    }
    return std::nullopt;
}

BigInt dense_monomial_count(std::size_t var_count, unsigned cap)
{
    return binom(cap + static_cast<unsigned>(var_count), static_cast<unsigned>(var_count));
}

std::string format_monomial(const MultiIndex &m)
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += "x" + std::to_string(i + 1);
        if (m[i] > 1) {
            out += "^" + std::to_string(m[i]);
        }
    }
    return out.empty() ? "1" : out;
}

std::string to_text(const TruncatedSeries &s)
{
    std::ostringstream os;
    if (s.is_zero()) {
        os << "0\n";
        return os.str();
    }
    for (const auto &[m, c] : s.terms()) {
        os << c;
        if (m.degree() > 0) {
            os << " * " << format_monomial(m);
        }
        os << '\n';
    }
    return os.str();
}

} // namespace kdf
