#ifndef KDF_IDENTITIES_HPP
#define KDF_IDENTITIES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <kdf/kdf_spec.hpp>
#include <kdf/series.hpp>

namespace kdf {

enum class IdentityId {
    EQ5, EQ6, EQ7, EQ8, EQ9, EQ10, EQ11, EQ12, EQ13,
    EQ14, EQ15, EQ16, EQ17, EQ18, EQ19, EQ20, EQ21,
};

/// Every id in catalog order.
std::span<const IdentityId> all_identity_ids();

std::string to_string(IdentityId id);
/// Accepts "EQ5" ... "EQ21"; throws ParseError otherwise.
IdentityId parse_identity_id(std::string_view text);

/// Which parameter row the 1-based index i ranges over.
enum class IndexDomain {
    none,               // i unused
    joined_upper,       // 1..p
    slot1_upper,        // 1..q1
    slot1_lower,        // 1..m1
    joined_upper_pairs, // 1..p-1
    slot1_upper_pairs,  // 1..q1-1
};

struct IdentityInfo {
    IdentityId id;
    std::string_view family;   // group of formulas sharing one derivation
    std::string_view summary;  // one-line statement of the corrected form
    std::string_view erratum;  // empty when the printed form is used as is
    IndexDomain domain;
    bool uses_power;
};

const IdentityInfo &identity_info(IdentityId id);

/// corrected: the form validated by the expansion oracle.
/// literal: the formula exactly as printed.
enum class Reading { corrected, literal };

std::string to_string(Reading reading);
Reading parse_reading(std::string_view text);

struct IdentityInstance {
    IdentityId id = IdentityId::EQ5;
    KdfSpec spec;
    std::size_t param_index = 1;
    unsigned r = 0;
    std::optional<unsigned> power_alpha;
    Reading reading = Reading::corrected;
    unsigned cap = 7;
};

/// 7, or 2 * powerAlpha + 3 for the power identities.
unsigned default_cap(IdentityId id, std::optional<unsigned> power_alpha = std::nullopt);

struct Condition {
    std::string text;
    bool satisfied;
};

/// Every condition verify needs to run without hitting a pole: explicit
/// divisors of the formula plus a lower-parameter scan of each expanded term.
std::vector<Condition> preconditions(const IdentityInstance &instance);
std::vector<Condition> violations(const IdentityInstance &instance);

/// One summand: coefficient * x1^x1_power * F[spec].
struct KdfTerm {
    Rational coefficient;
    unsigned x1_power = 0;
    KdfSpec spec;
};

struct IdentitySide {
    std::vector<KdfTerm> terms;
    SlotBinding binding;
};

/// Symbolic sides before expansion. Throws NotApplicable / PoleInParameters.
IdentitySide lhs_terms(const IdentityInstance &instance);
IdentitySide rhs_terms(const IdentityInstance &instance);

/// Expands a side over `var_count` formal variables at `cap`.
TruncatedSeries expand_side(const IdentitySide &side, std::size_t var_count, unsigned cap);

TruncatedSeries build_lhs(const IdentityInstance &instance);
TruncatedSeries build_rhs(const IdentityInstance &instance);

enum class VerifyStatus { pass, fail, pole, not_applicable };

std::string to_string(VerifyStatus status);
VerifyStatus parse_status(std::string_view text);

struct VerificationReport {
    VerifyStatus status = VerifyStatus::pass;
    unsigned cap_checked = 0;
    BigInt coefficients_compared = 0;
    std::optional<CoefficientMismatch> first_mismatch;
    std::string note;
};

/// Compares two expanded sides exactly; fail carries the graded-lex-first
/// differing monomial.
VerificationReport compare_sides(const TruncatedSeries &lhs, const TruncatedSeries &rhs);

VerificationReport verify(const IdentityInstance &instance);

/// Throws NotApplicable with the reason when the spec lacks the structure
/// the id needs (or i / powerAlpha are out of range).
void check_applicable(const IdentityInstance &instance);

struct Shape {
    std::size_t p = 0;
    std::size_t l = 0;
    std::vector<std::size_t> q;
    std::vector<std::size_t> m;
};

/// Smallest row lengths the id needs (p, q1, m1).
Shape minimal_shape(IdentityId id, std::size_t n);

/// Child seed for the `index`-th task of stream `stream` under `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

struct RandomInstanceOptions {
    unsigned r_max = 4;
    /// Cap for the instance; nullopt means default_cap for the drawn powerAlpha.
    std::optional<unsigned> cap;
    Reading reading = Reading::corrected;
    unsigned max_retries = 1000;
};

/// Deterministic pole-free instance: parameters p/q with |p| <= 9, q in
/// {1, 2, 3}; r, i and powerAlpha (from {2, 3}) are drawn as well and
/// everything is redrawn until the preconditions hold.
/// Throws NotApplicable for a shape the id cannot use, ExhaustedRetries
/// after `max_retries` rejected draws.
IdentityInstance random_instance(std::uint64_t seed, IdentityId id, const Shape &shape,
                                 const RandomInstanceOptions &options = {});

} // namespace kdf

#endif
