// Brute-force reference computations for the tests. Nothing here calls the
// library's expansion or Pochhammer code: every coefficient is rebuilt from
// the defining product over a full box of multi-indices.
#ifndef KDF_TESTS_ORACLE_HPP
#define KDF_TESTS_ORACLE_HPP

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include <kdf/identities.hpp>
#include <kdf/kdf_spec.hpp>
#include <kdf/series.hpp>

namespace oracle {

using Q = mpq_class;
using Coefficients = std::map<std::vector<unsigned>, Q>;

inline Q to_q(const kdf::Rational &r)
{
    Q q(r.to_string());
    q.canonicalize();
    return q;
}

inline kdf::Rational from_q(const Q &q)
{
    return kdf::Rational::parse(q.get_str());
}

inline Q rising(const Q &a, unsigned k)
{
    Q out = 1;
    for (unsigned j = 0; j < k; ++j) {
        out *= a + j;
    }
    return out;
}

inline Q row_rising(const kdf::ParamList &row, unsigned k)
{
    Q out = 1;
    for (const auto &c : row) {
        out *= rising(to_q(c), k);
    }
    return out;
}

inline Q fact(unsigned k)
{
    Q out = 1;
    for (unsigned j = 2; j <= k; ++j) {
        out *= j;
    }
    return out;
}

/// Coefficient of prod y_t^{s_t}: Lambda(s) / prod s_t!.
/// Throws std::domain_error when a denominator vanishes.
inline Q term(const kdf::KdfSpec &spec, const std::vector<unsigned> &s)
{
    unsigned total = 0;
    for (unsigned v : s) {
        total += v;
    }
    Q num = row_rising(spec.a, total);
    Q den = row_rising(spec.alpha, total);
    for (std::size_t t = 0; t < s.size(); ++t) {
        num *= row_rising(spec.b[t], s[t]);
        den *= row_rising(spec.beta[t], s[t]) * fact(s[t]);
    }
    if (den == 0) {
        throw std::domain_error("oracle: vanishing denominator");
    }
    return num / den;
}

/// Every s in the box [0, cap]^n, kept when sum_t mult_t s_t <= cap.
inline Coefficients expand(const kdf::KdfSpec &spec, const kdf::SlotBinding &binding, std::size_t vars, unsigned cap)
{
    const std::size_t n = spec.b.size();
    Coefficients out;
    std::vector<unsigned> s(n, 0);
    std::function<void(std::size_t)> walk = [&](std::size_t t) {
        if (t == n) {
            std::vector<unsigned> monomial(vars, 0);
            unsigned degree = 0;
            for (std::size_t u = 0; u < n; ++u) {
                monomial[binding.slots[u].var] += binding.slots[u].mult * s[u];
                degree += binding.slots[u].mult * s[u];
            }
            if (degree > cap) {
                return;
            }
            const Q c = term(spec, s);
            out[monomial] += c;
            return;
        }
        for (unsigned v = 0; v <= cap; ++v) {
            s[t] = v;
            walk(t + 1);
        }
    };
    walk(0);
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

inline Coefficients expand(const kdf::KdfSpec &spec, unsigned cap)
{
    return oracle::expand(spec, kdf::SlotBinding::identity(spec.b.size()), spec.b.size(), cap);
}

inline kdf::TruncatedSeries to_series(const Coefficients &c, std::size_t vars, unsigned cap)
{
    kdf::TruncatedSeries out(vars, cap);
    for (const auto &[m, v] : c) {
        out.add_term(kdf::MultiIndex(std::vector<unsigned>(m)), from_q(v));
    }
    return out;
}

/// 2F1(-r, a; b; 1) as the plain finite sum.
inline Q vandermonde_sum(unsigned r, const Q &a, const Q &b)
{
    Q out = 0;
    for (unsigned k = 0; k <= r; ++k) {
        out += rising(Q(-static_cast<long>(r)), k) * rising(a, k) / (rising(b, k) * fact(k));
    }
    return out;
}

/// Side of an identity rebuilt term by term with the brute-force expansion.
inline kdf::TruncatedSeries side(const kdf::IdentitySide &side, std::size_t vars, unsigned cap)
{
    Coefficients total;
    for (const auto &t : side.terms) {
        const Q coefficient = to_q(t.coefficient);
        if (coefficient == 0) {
            continue;
        }
        for (const auto &[m, v] : oracle::expand(t.spec, side.binding, vars, cap)) {
            std::vector<unsigned> shifted = m;
            shifted[0] += t.x1_power;
            unsigned degree = 0;
            for (unsigned e : shifted) {
                degree += e;
            }
            if (degree <= cap) {
                total[shifted] += coefficient * v;
            }
        }
    }
    return to_series(total, vars, cap);
}

} // namespace oracle

#endif
