#ifndef KDF_KDF_SPEC_HPP
#define KDF_KDF_SPEC_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <kdf/rational.hpp>
#include <kdf/series.hpp>

namespace kdf {

using ParamList = std::vector<Rational>;

/// Parameter bundle of a generalized Kampe de Feriet series in n slots.
///
/// `a` / `alpha` are the joined numerator / denominator rows, whose
/// Pochhammer symbols run over the total index s1 + ... + sn. `b[t]` /
/// `beta[t]` belong to slot t only and run over s_t.
struct KdfSpec {
    ParamList a;
    ParamList alpha;
    std::vector<ParamList> b;
    std::vector<ParamList> beta;

    std::size_t slots() const { return b.size(); }

    /// Throws ShapeMismatch unless b and beta both have n >= 1 rows.
    void validate() const;

    friend bool operator==(const KdfSpec &, const KdfSpec &) = default;
};

/// Empty-parameter spec with n slots (the series of exp(x1 + ... + xn)).
KdfSpec empty_spec(std::size_t slots);

struct SlotTarget {
    std::size_t var = 0;
    unsigned mult = 1;

    friend bool operator==(const SlotTarget &, const SlotTarget &) = default;
};

/// Slot t contributes x_{var}^{mult * s_t} to the monomial.
struct SlotBinding {
    std::vector<SlotTarget> slots;

    /// Slot t -> variable t, multiplier 1.
    static SlotBinding identity(std::size_t n);
    /// Every slot -> the same variable with the same multiplier.
    static SlotBinding shared(std::size_t n, std::size_t var = 0, unsigned mult = 1);

    void validate(std::size_t n, std::size_t var_count) const;

    friend bool operator==(const SlotBinding &, const SlotBinding &) = default;
};

/// Coefficient of prod x_t^{s_t}/s_t! in the series. Throws PoleInParameters.
Rational lambda_coeff(const KdfSpec &spec, const MultiIndex &s);

/// Truncated expansion: sum over all s with sum_t mult_t s_t <= cap.
/// Poles are reported only when they are reachable inside the cap.
TruncatedSeries expand(const KdfSpec &spec, const SlotBinding &binding, std::size_t var_count, unsigned cap);

/// Identity binding over n variables.
TruncatedSeries expand(const KdfSpec &spec, unsigned cap);

/// Description of the first denominator parameter that makes some
/// coefficient inside the cap undefined, or nullopt when there is none.
std::optional<std::string> find_pole(const KdfSpec &spec, const SlotBinding &binding, unsigned cap);

enum class ConvergenceClass { entire_direction, unit_domain, divergent };

struct SlotConvergence {
    long delta;
    ConvergenceClass cls;
};

struct GlobalDomain {
    enum class Kind { sum_of_roots, max_norm };
    Kind kind;
    /// p - l for sum_of_roots: sum |x_u|^(1/root) < 1.
    unsigned root = 0;
};

struct ConvergenceReport {
    std::vector<SlotConvergence> slots;
    /// Present when every slot has delta = 0.
    std::optional<GlobalDomain> domain;
};

ConvergenceReport convergence_class(const KdfSpec &spec);

std::string to_string(ConvergenceClass cls);

struct ShiftedSpec {
    Rational prefactor;
    KdfSpec spec;
};

/// r-th x1-derivative rule: prefactor [a]_r [b1]_r / ([alpha]_r [beta1]_r)
/// and every joined and slot-1 parameter raised by r.
ShiftedSpec shift_spec(const KdfSpec &spec, unsigned r);

ParamList list_shift(const ParamList &params, const Rational &k);
/// Removes the i-th entry (1-based).
ParamList list_drop(const ParamList &params, std::size_t i);
/// Inserts so that `value` becomes the entry at 1-based `position`.
ParamList list_insert(const ParamList &params, const Rational &value, std::size_t position = 1);

} // namespace kdf

#endif
