#ifndef KDF_NUMEVAL_HPP
#define KDF_NUMEVAL_HPP

#include <span>
#include <string>
#include <vector>

#include <kdf/identities.hpp>
#include <kdf/kdf_spec.hpp>

namespace kdf {

struct EvalResult {
    double value = 0.0;
    unsigned long terms_used = 1;
    /// Magnitude of the highest degree layer. A heuristic, not a bound.
    double tail_estimate = 0.0;
    bool domain_ok = true;
};

/// Whether the slot values y lie where the series converges: slots with
/// delta > 0 are free, delta < 0 needs y = 0, and the delta = 0 slots obey
/// the p > l (sum of roots) or p <= l (max norm) rule.
bool in_domain(const KdfSpec &spec, std::span<const double> slot_values);

/// Partial sum over sum_t mult_t s_t <= cap with slot t evaluated at
/// point[var_t]^mult_t. Throws PoleInParameters.
EvalResult evaluate(const KdfSpec &spec, const SlotBinding &binding, std::span<const double> point, unsigned cap);
EvalResult evaluate(const KdfSpec &spec, std::span<const double> point, unsigned cap);

struct NumericReport {
    VerifyStatus status = VerifyStatus::pass;
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_diff = 0.0;
    std::string note;
};

/// Extra degrees summed beyond the instance cap so truncation error stays
/// far below the usual tolerances at |x| <= 0.05.
inline constexpr unsigned kNumericExtraDegrees = 40;

/// not-applicable when some term is evaluated outside its domain.
NumericReport numeric_verify(const IdentityInstance &instance, std::span<const double> point, double rel_tol);

} // namespace kdf

#endif
