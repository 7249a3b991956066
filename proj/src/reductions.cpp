#include <kdf/reductions.hpp>

#include <array>
#include <random>

#include <kdf/errors.hpp>
#include <kdf/exact_arith.hpp>

namespace kdf {

namespace {

constexpr std::array kConclusions = {ConclusionId::EQ22, ConclusionId::EQ23, ConclusionId::EQ24,
                                     ConclusionId::EQ25};

void expect_length(const ParamList &list, std::size_t len, const char *name, FamilyKind kind)
{
    if (list.size() != len) {
        throw ShapeMismatch(to_string(kind) + ": '" + name + "' needs " + std::to_string(len) + " entries, got "
                            + std::to_string(list.size()));
    }
}

std::size_t minimum_n(FamilyKind kind)
{
    // Xi1, Phi_D and Phi3 keep n-1 b's, so they need a second variable.
    switch (kind) {
    case FamilyKind::Xi1:
    case FamilyKind::Phi_D:
    case FamilyKind::Phi3:
        return 2;
    default:
        return 1;
    }
}

bool is_confluent_conclusion(ConclusionId id)
{
    return id == ConclusionId::EQ23 || id == ConclusionId::EQ25;
}

bool uses_reciprocal(ConclusionId id)
{
    return id == ConclusionId::EQ24 || id == ConclusionId::EQ25;
}

// F_D / Phi_D with the joined rows supplied by the formula.
FamilyParams with_joined(const FamilyParams &params, const Rational &a, const Rational &c)
{
    FamilyParams out = params;
    out.a = {a};
    out.c = {c};
    return out;
}

TruncatedSeries expand_family(FamilyKind kind, const FamilyParams &params, const SlotBinding &binding,
                              std::size_t vars, unsigned cap)
{
    return expand(family_spec(kind, params), binding, vars, cap);
}

void require_nonzero(const Rational &value, const std::string &what)
{
    if (value.is_zero()) {
        throw PoleInParameters(what);
    }
}

} // namespace

std::string to_string(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::F_B:
        return "F_B";
    case FamilyKind::F_D:
        return "F_D";
    case FamilyKind::Xi1:
        return "Xi1";
    case FamilyKind::Phi_D:
        return "Phi_D";
    case FamilyKind::Phi2:
        return "Phi2";
    case FamilyKind::Psi2:
        return "Psi2";
    case FamilyKind::Phi3:
        return "Phi3";
    }
    return "?";
}

FamilyKind parse_family_kind(std::string_view text)
{
    for (auto k : {FamilyKind::F_B, FamilyKind::F_D, FamilyKind::Xi1, FamilyKind::Phi_D, FamilyKind::Phi2,
                   FamilyKind::Psi2, FamilyKind::Phi3}) {
        if (to_string(k) == text) {
            return k;
        }
    }
    throw ParseError("unknown family kind '" + std::string(text) + "'");
}

KdfSpec family_spec(FamilyKind kind, const FamilyParams &params)
{
    const std::size_t n = params.n;
    if (n < minimum_n(kind)) {
        throw ShapeMismatch(to_string(kind) + " needs n >= " + std::to_string(minimum_n(kind)));
    }
    KdfSpec spec;
    spec.b.assign(n, {});
    spec.beta.assign(n, {});
    switch (kind) {
    case FamilyKind::F_B:
    case FamilyKind::Xi1: {
        const std::size_t nb = kind == FamilyKind::F_B ? n : n - 1;
        expect_length(params.a, n, "a", kind);
        expect_length(params.b, nb, "b", kind);
        expect_length(params.c, 1, "c", kind);
        spec.alpha = params.c;
        for (std::size_t t = 0; t < n; ++t) {
            spec.b[t].push_back(params.a[t]);
            if (t < nb) {
                spec.b[t].push_back(params.b[t]);
            }
        }
        break;
    }
    case FamilyKind::F_D:
    case FamilyKind::Phi_D: {
        const std::size_t nb = kind == FamilyKind::F_D ? n : n - 1;
        expect_length(params.a, 1, "a", kind);
        expect_length(params.b, nb, "b", kind);
        expect_length(params.c, 1, "c", kind);
        spec.a = params.a;
        spec.alpha = params.c;
        for (std::size_t t = 0; t < nb; ++t) {
            spec.b[t].push_back(params.b[t]);
        }
        break;
    }
    case FamilyKind::Phi2:
    case FamilyKind::Phi3: {
        const std::size_t nb = kind == FamilyKind::Phi2 ? n : n - 1;
        expect_length(params.a, 0, "a", kind);
        expect_length(params.b, nb, "b", kind);
        expect_length(params.c, 1, "c", kind);
        spec.alpha = params.c;
        for (std::size_t t = 0; t < nb; ++t) {
            spec.b[t].push_back(params.b[t]);
        }
        break;
    }
    case FamilyKind::Psi2:
        expect_length(params.a, 1, "a", kind);
        expect_length(params.b, 0, "b", kind);
        expect_length(params.c, n, "c", kind);
        spec.a = params.a;
        for (std::size_t t = 0; t < n; ++t) {
            spec.beta[t].push_back(params.c[t]);
        }
        break;
    }
    return spec;
}

std::span<const ConclusionId> all_conclusion_ids()
{
    return kConclusions;
}

std::string to_string(ConclusionId id)
{
    return "EQ" + std::to_string(static_cast<int>(id) + 22);
}

ConclusionId parse_conclusion_id(std::string_view text)
{
    for (auto id : kConclusions) {
        if (to_string(id) == text) {
            return id;
        }
    }
    throw ParseError("unknown conclusion id '" + std::string(text) + "'");
}

FamilyKind conclusion_family(ConclusionId id)
{
    switch (id) {
    case ConclusionId::EQ22:
        return FamilyKind::F_B;
    case ConclusionId::EQ23:
        return FamilyKind::Xi1;
    case ConclusionId::EQ24:
        return FamilyKind::F_D;
    case ConclusionId::EQ25:
        return FamilyKind::Phi_D;
    }
    return FamilyKind::F_B;
}

IdentityId conclusion_parent(ConclusionId id)
{
    return uses_reciprocal(id) ? IdentityId::EQ16 : IdentityId::EQ6;
}

IdentityInstance general_instance(const ConclusionInstance &instance)
{
    IdentityInstance out;
    out.id = conclusion_parent(instance.id);
    out.r = instance.r;
    out.cap = instance.cap;
    out.param_index = 1;
    out.reading = Reading::corrected;
    const FamilyKind kind = conclusion_family(instance.id);
    if (uses_reciprocal(instance.id)) {
        // EQ16 inserts the joined pair itself: start from the bare slot rows.
        KdfSpec spec = family_spec(kind, with_joined(instance.params, Rational(1), Rational(1)));
        spec.a.clear();
        spec.alpha.clear();
        out.spec = std::move(spec);
    } else {
        // i = 1 picks a_1 in slot 1's row (a_1, b_1).
        out.spec = family_spec(kind, instance.params);
    }
    return out;
}

TruncatedSeries conclusion_lhs(const ConclusionInstance &instance)
{
    const FamilyKind kind = conclusion_family(instance.id);
    const FamilyParams &p = instance.params;
    const std::size_t n = p.n;
    const unsigned r = instance.r;
    const bool literal = instance.reading == Reading::literal;
    TruncatedSeries out(n, instance.cap);

    if (uses_reciprocal(instance.id)) {
        const SlotBinding t = SlotBinding::shared(n, 0, 1);
        for (unsigned k = 0; k <= r; ++k) {
            const Rational coefficient = poch(Rational(-static_cast<long>(r)), k) / poch(Rational(1 - 2 * static_cast<long>(r)), k);
            const long upper = literal ? 1 + static_cast<long>(r) : 1 + static_cast<long>(k);
            out = add(out, scale(coefficient, expand_family(kind, with_joined(p, Rational(upper), Rational(1)), t, n,
                                                            instance.cap)));
        }
        return out;
    }

    if (p.b.empty() || p.a.empty() || p.c.empty()) {
        throw NotApplicable(to_string(instance.id) + " needs a_1, b_1 and c");
    }
    const Rational &b1 = p.b[0];
    const Rational &c = p.c[0];
    require_nonzero(poch(c, r), "(c)_r = 0 with c = " + c.to_string());
    const SlotBinding identity = SlotBinding::identity(n);
    for (unsigned k = 0; k <= r; ++k) {
        const Rational kk(static_cast<long>(k));
        const Rational coefficient = Rational(binom(r, k)) * poch(b1, k) / poch(c, k);
        FamilyParams shifted = p;
        shifted.a[0] += kk;
        shifted.b[0] += kk;
        shifted.c[0] += kk;
        TruncatedSeries term = expand_family(kind, shifted, identity, n, instance.cap);
        if (k > 0) {
            term = shift_monomial(term, MultiIndex::unit(n, 0, k));
        }
        out = add(out, scale(coefficient, term));
    }
    return out;
}

TruncatedSeries conclusion_rhs(const ConclusionInstance &instance)
{
    const FamilyKind kind = conclusion_family(instance.id);
    const FamilyParams &p = instance.params;
    const std::size_t n = p.n;
    const unsigned r = instance.r;
    const bool literal = instance.reading == Reading::literal;

    if (uses_reciprocal(instance.id)) {
        const Rational rr(static_cast<long>(r));
        const Rational factor = literal ? Rational(2) : poch(rr + 1, r) / poch(rr, r);
        const FamilyParams joined = with_joined(p, rr * 2 + 1, rr + 1);
        return scale(factor, expand_family(kind, joined, SlotBinding::shared(n, 0, 1), n, instance.cap));
    }

    if (p.a.empty()) {
        throw NotApplicable(to_string(instance.id) + " needs a_1");
    }
    FamilyParams shifted = p;
    shifted.a[0] += Rational(static_cast<long>(r));
    // As printed, every argument of the right-hand side is x1.
    const SlotBinding binding = literal ? SlotBinding::shared(n, 0, 1) : SlotBinding::identity(n);
    return expand_family(kind, shifted, binding, n, instance.cap);
}

ConclusionReport check_conclusion(const ConclusionInstance &instance)
{
    ConclusionReport out;
    out.report.cap_checked = instance.cap;
    try {
        if (instance.params.n < minimum_n(conclusion_family(instance.id))) {
            throw NotApplicable(to_string(instance.id) + " needs n >= "
                                + std::to_string(minimum_n(conclusion_family(instance.id))));
        }
        if (!uses_reciprocal(instance.id) && instance.params.b.empty()) {
            throw NotApplicable(to_string(instance.id) + " needs b_1");
        }
        const TruncatedSeries lhs = conclusion_lhs(instance);
        const TruncatedSeries rhs = conclusion_rhs(instance);
        out.report = compare_sides(lhs, rhs);
        if (instance.reading == Reading::corrected) {
            const IdentityInstance general = general_instance(instance);
            out.matches_general = build_lhs(general) == lhs && build_rhs(general) == rhs;
        }
    } catch (const PoleInParameters &e) {
        out.report.status = VerifyStatus::pole;
        out.report.note = e.what();
    } catch (const NotApplicable &e) {
        out.report.status = VerifyStatus::not_applicable;
        out.report.note = e.what();
    } catch (const ShapeMismatch &e) {
        out.report.status = VerifyStatus::not_applicable;
        out.report.note = e.what();
    }
    return out;
}

ConclusionInstance random_conclusion(std::uint64_t seed, ConclusionId id, std::size_t n, unsigned r_max, unsigned cap,
                                     Reading reading, unsigned max_retries)
{
    const FamilyKind kind = conclusion_family(id);
    if (n < minimum_n(kind)) {
        throw NotApplicable(to_string(id) + " needs n >= " + std::to_string(minimum_n(kind)));
    }
    std::mt19937_64 engine(seed);
    const auto between = [&](long lo, long hi) {
        return lo + static_cast<long>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    const auto draw = [&](std::size_t len) {
        ParamList out;
        for (std::size_t j = 0; j < len; ++j) {
            const long num = between(-9, 9);
            const long den = between(1, 3);
            out.push_back(Rational(BigInt(num), BigInt(den)));
        }
        return out;
    };
    const bool confluent = is_confluent_conclusion(id);
    for (unsigned attempt = 0; attempt < max_retries; ++attempt) {
        ConclusionInstance inst;
        inst.id = id;
        inst.reading = reading;
        inst.cap = cap;
        inst.r = static_cast<unsigned>(between(0, r_max));
        inst.params.n = n;
        const std::size_t nb = confluent ? n - 1 : n;
        if (uses_reciprocal(id)) {
            inst.params.b = draw(nb);
        } else {
            inst.params.a = draw(n);
            inst.params.b = draw(nb);
            inst.params.c = draw(1);
        }
        const ConclusionReport probe = check_conclusion(inst);
        if (probe.report.status != VerifyStatus::pole) {
            return inst;
        }
    }
    throw ExhaustedRetries(to_string(id) + ": no pole-free instance after " + std::to_string(max_retries) + " draws");
}

} // namespace kdf
