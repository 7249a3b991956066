#ifndef KDF_REDUCTIONS_HPP
#define KDF_REDUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <kdf/identities.hpp>
#include <kdf/kdf_spec.hpp>

namespace kdf {

enum class FamilyKind { F_B, F_D, Xi1, Phi_D, Phi2, Psi2, Phi3 };

std::string to_string(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view text);

/// Named parameter lists of a Lauricella-type family in n variables.
/// Expected lengths per kind:
///   F_B   a: n, b: n,   c: 1        F_D   a: 1, b: n,   c: 1
///   Xi1   a: n, b: n-1, c: 1        Phi_D a: 1, b: n-1, c: 1
///   Phi2  a: 0, b: n,   c: 1        Psi2  a: 1, b: 0,   c: n
///   Phi3  a: 0, b: n-1, c: 1
struct FamilyParams {
    std::size_t n = 1;
    ParamList a;
    ParamList b;
    ParamList c;

    friend bool operator==(const FamilyParams &, const FamilyParams &) = default;
};

/// Throws ShapeMismatch when the list lengths do not fit the kind.
KdfSpec family_spec(FamilyKind kind, const FamilyParams &params);

enum class ConclusionId { EQ22, EQ23, EQ24, EQ25 };

std::span<const ConclusionId> all_conclusion_ids();
std::string to_string(ConclusionId id);
ConclusionId parse_conclusion_id(std::string_view text);
FamilyKind conclusion_family(ConclusionId id);
/// The catalog identity the formula specializes (EQ6 or EQ16).
IdentityId conclusion_parent(ConclusionId id);

/// EQ24/EQ25 fix the joined parameters themselves; only `b` is read there.
struct ConclusionInstance {
    ConclusionId id = ConclusionId::EQ22;
    FamilyParams params;
    unsigned r = 0;
    unsigned cap = 6;
    Reading reading = Reading::corrected;
};

struct ConclusionReport {
    VerificationReport report;
    /// Corrected reading only: both sides equal the parent identity's sides
    /// over family_spec as exact series.
    std::optional<bool> matches_general;
};

/// Parent-identity instance whose sides the conclusion must reproduce.
IdentityInstance general_instance(const ConclusionInstance &instance);

TruncatedSeries conclusion_lhs(const ConclusionInstance &instance);
TruncatedSeries conclusion_rhs(const ConclusionInstance &instance);

ConclusionReport check_conclusion(const ConclusionInstance &instance);

/// Deterministic instance with n variables, redrawn until pole-free.
ConclusionInstance random_conclusion(std::uint64_t seed, ConclusionId id, std::size_t n, unsigned r_max = 4,
                                     unsigned cap = 6, Reading reading = Reading::corrected,
                                     unsigned max_retries = 1000);

} // namespace kdf

#endif
