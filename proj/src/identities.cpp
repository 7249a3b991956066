#include <kdf/identities.hpp>

#include <array>
#include <functional>
#include <random>

#include <kdf/errors.hpp>
#include <kdf/exact_arith.hpp>

namespace kdf {

namespace {

constexpr std::array kAllIds = {
    IdentityId::EQ5,  IdentityId::EQ6,  IdentityId::EQ7,  IdentityId::EQ8,  IdentityId::EQ9,  IdentityId::EQ10,
    IdentityId::EQ11, IdentityId::EQ12, IdentityId::EQ13, IdentityId::EQ14, IdentityId::EQ15, IdentityId::EQ16,
    IdentityId::EQ17, IdentityId::EQ18, IdentityId::EQ19, IdentityId::EQ20, IdentityId::EQ21,
};

std::size_t id_index(IdentityId id)
{
    return static_cast<std::size_t>(id);
}

Rational rat(long v)
{
    return Rational(v);
}

Rational sign_power(unsigned k)
{
    return k % 2 == 0 ? rat(1) : rat(-1);
}

struct Ratio {
    Rational num;
    Rational den = Rational(1);
};

// Everything a descriptor needs about one instance.
struct Context {
    const KdfSpec &spec;
    std::size_t i;
    unsigned r;
    unsigned power;
    Reading reading;

    std::size_t n() const { return spec.slots(); }
    Rational rr() const { return Rational(static_cast<long>(r)); }
    bool literal() const { return reading == Reading::literal; }

    const Rational &a_i() const { return spec.a.at(i - 1); }
    const Rational &b1_i() const { return spec.b[0].at(i - 1); }
    const Rational &beta1_i() const { return spec.beta[0].at(i - 1); }
};

enum class Binding { identity, reciprocal_all, reciprocal_mixed, power_all, power_slot1 };

SlotBinding make_binding(Binding rule, const Context &ctx)
{
    const std::size_t n = ctx.n();
    switch (rule) {
    case Binding::identity:
        return SlotBinding::identity(n);
    case Binding::reciprocal_all:
        // every slot carries t = 1/x1
        return SlotBinding::shared(n, 0, 1);
    case Binding::reciprocal_mixed:
        return SlotBinding::identity(n);
    case Binding::power_all:
        return SlotBinding::shared(n, 0, ctx.power);
    case Binding::power_slot1: {
        SlotBinding b = SlotBinding::identity(n);
        b.slots[0].mult = ctx.power;
        return b;
    }
    }
    return SlotBinding::identity(n);
}

// Adds upper/lower to a parameter row pair unless they cancel identically.
void insert_pair(ParamList &upper, ParamList &lower, const Rational &up, const Rational &low)
{
    if (up == low) {
        return;
    }
    upper.insert(upper.begin(), up);
    lower.insert(lower.begin(), low);
}

// a + k, alpha + k, b1 + k, beta1 + k.
KdfSpec raise_first_slot(const KdfSpec &spec, unsigned k)
{
    const Rational shift(static_cast<long>(k));
    KdfSpec out = spec;
    out.a = list_shift(spec.a, shift);
    out.alpha = list_shift(spec.alpha, shift);
    out.b[0] = list_shift(spec.b[0], shift);
    out.beta[0] = list_shift(spec.beta[0], shift);
    return out;
}

Condition nonzero(std::string text, const Rational &value)
{
    return {std::move(text), !value.is_zero()};
}

// (c)_k != 0 for all k <= r is the same as (c)_r != 0.
Condition poch_nonzero(const std::string &label, const Rational &c, unsigned r)
{
    return nonzero("(" + label + ")_k != 0 for k <= r  [" + label + " = " + c.to_string() + "]", poch(c, r));
}

Condition derivative_divisors(const Context &ctx)
{
    return nonzero("[alpha]_r [beta1]_r != 0", list_poch(ctx.spec.alpha, ctx.r) * list_poch(ctx.spec.beta[0], ctx.r));
}

struct Descriptor {
    IdentityInfo info;
    Binding lhs_binding;
    Binding rhs_binding;
    // Binding used by the literal reading, when it differs.
    std::optional<Binding> literal_lhs_binding;
    std::optional<Binding> literal_rhs_binding;
    std::function<std::vector<Condition>(const Context &)> divisors;
    std::function<Ratio(const Context &, unsigned)> lhs_coefficient;
    std::function<KdfSpec(const Context &, unsigned)> lhs_spec;
    std::function<unsigned(const Context &, unsigned)> lhs_power;
    std::function<Ratio(const Context &)> rhs_prefactor;
    std::function<KdfSpec(const Context &)> rhs_spec;
    std::function<unsigned(const Context &)> rhs_power;
};

unsigned no_power(const Context &, unsigned)
{
    return 0;
}

unsigned power_k(const Context &, unsigned k)
{
    return k;
}

unsigned rhs_no_power(const Context &)
{
    return 0;
}

Ratio unit_prefactor(const Context &)
{
    return {rat(1)};
}

// Families sharing the "1+k over 1" insertion (joined row or slot 1).
KdfSpec joined_pair(const Context &ctx, const Rational &up, const Rational &low)
{
    KdfSpec s = ctx.spec;
    insert_pair(s.a, s.alpha, up, low);
    return s;
}

KdfSpec slot1_pair(const Context &ctx, const Rational &up, const Rational &low)
{
    KdfSpec s = ctx.spec;
    insert_pair(s.b[0], s.beta[0], up, low);
    return s;
}

Ratio reciprocal_coefficient(const Context &ctx, unsigned k, const Rational &den_base)
{
    return {poch(-ctx.rr(), k), poch(den_base, k)};
}

// (1+r)_r / (r)_r, which is 2 for r >= 1 and 1 for r = 0.
Ratio doubling_factor(const Context &ctx)
{
    if (ctx.literal()) {
        return {rat(2)};
    }
    return {poch(ctx.rr() + 1, ctx.r), poch(ctx.rr(), ctx.r)};
}

std::vector<Descriptor> make_catalog()
{
    std::vector<Descriptor> c;

    // --- derivative family in x1 (identity binding, x1^k prefactors) ---
    c.push_back({
        {IdentityId::EQ5, "x1 derivative", "sum C(r,k)[a^i]_k[b1]_k/([alpha]_k[beta1]_k) x1^k F(+k) = F(slot1: a_i+r / a_i)", "",
         IndexDomain::joined_upper, false},
        Binding::identity, Binding::identity, std::nullopt, std::nullopt,
        [](const Context &ctx) { return std::vector<Condition>{derivative_divisors(ctx)}; },
        [](const Context &ctx, unsigned k) {
            return Ratio{Rational(binom(ctx.r, k)) * list_poch(list_drop(ctx.spec.a, ctx.i), k) * list_poch(ctx.spec.b[0], k),
                         list_poch(ctx.spec.alpha, k) * list_poch(ctx.spec.beta[0], k)};
        },
        [](const Context &ctx, unsigned k) { return raise_first_slot(ctx.spec, k); },
        power_k,
        unit_prefactor,
        [](const Context &ctx) { return slot1_pair(ctx, ctx.a_i() + ctx.rr(), ctx.a_i()); },
        rhs_no_power,
    });

    c.push_back({
        {IdentityId::EQ6, "x1 derivative", "sum C(r,k)[a]_k[b1^i]_k/([alpha]_k[beta1]_k) x1^k F(+k) = F(b1_i -> b1_i+r)",
         "inner Pochhammer subscripts are k, printed as r", IndexDomain::slot1_upper, false},
        Binding::identity, Binding::identity, std::nullopt, std::nullopt,
        [](const Context &ctx) { return std::vector<Condition>{derivative_divisors(ctx)}; },
        [](const Context &ctx, unsigned k) {
            const unsigned j = ctx.literal() ? ctx.r : k;
            return Ratio{Rational(binom(ctx.r, k)) * list_poch(ctx.spec.a, j) * list_poch(list_drop(ctx.spec.b[0], ctx.i), j),
                         list_poch(ctx.spec.alpha, j) * list_poch(ctx.spec.beta[0], j)};
        },
        [](const Context &ctx, unsigned k) { return raise_first_slot(ctx.spec, k); },
        power_k,
        unit_prefactor,
        [](const Context &ctx) {
            KdfSpec s = ctx.spec;
            s.b[0][ctx.i - 1] += ctx.rr();
            return s;
        },
        rhs_no_power,
    });

    c.push_back({
        {IdentityId::EQ7, "x1 derivative, lowered beta",
         "sum C(r,k)[a]_k[b1]_k/((beta1_i-r)_k[alpha]_k[beta1]_k) x1^k F(+k) = F(beta1_i -> beta1_i-r)", "",
         IndexDomain::slot1_lower, false},
        Binding::identity, Binding::identity, std::nullopt, std::nullopt,
        [](const Context &ctx) {
            return std::vector<Condition>{poch_nonzero("beta1_i - r", ctx.beta1_i() - ctx.rr(), ctx.r),
                                          derivative_divisors(ctx)};
        },
        [](const Context &ctx, unsigned k) {
            return Ratio{Rational(binom(ctx.r, k)) * list_poch(ctx.spec.a, k) * list_poch(ctx.spec.b[0], k),
                         poch(ctx.beta1_i() - ctx.rr(), k) * list_poch(ctx.spec.alpha, k)
                             * list_poch(ctx.spec.beta[0], k)};
        },
        [](const Context &ctx, unsigned k) { return raise_first_slot(ctx.spec, k); },
        power_k,
        unit_prefactor,
        [](const Context &ctx) {
            KdfSpec s = ctx.spec;
            s.beta[0][ctx.i - 1] -= ctx.rr();
            return s;
        },
        rhs_no_power,
    });

    c.push_back({
        {IdentityId::EQ8, "x1 derivative, reflected beta",
         "sum C(r,k)(-1)^k(1-beta1_i)_k/(2-beta1_i-r)_k F(beta1_i -> beta1_i-k) = (-1)^r[a]_r[b1]_r/((beta1_i-1)_r[alpha]_r[beta1]_r) x1^r F(+r)",
         "no x1^k inside the sum; the right-hand side carries x1^r", IndexDomain::slot1_lower, false},
        Binding::identity, Binding::identity, std::nullopt, std::nullopt,
        [](const Context &ctx) {
            return std::vector<Condition>{poch_nonzero("2 - beta1_i - r", rat(2) - ctx.beta1_i() - ctx.rr(), ctx.r),
                                          nonzero("(beta1_i - 1)_r != 0", poch(ctx.beta1_i() - 1, ctx.r)),
                                          derivative_divisors(ctx)};
        },
        [](const Context &ctx, unsigned k) {
            return Ratio{Rational(binom(ctx.r, k)) * sign_power(k) * poch(rat(1) - ctx.beta1_i(), k),
                         poch(rat(2) - ctx.beta1_i() - ctx.rr(), k)};
        },
        [](const Context &ctx, unsigned k) {
            KdfSpec s = ctx.spec;
            s.beta[0][ctx.i - 1] -= Rational(static_cast<long>(k));
            return s;
        },
        [](const Context &ctx, unsigned k) { return ctx.literal() ? k : 0u; },
        [](const Context &ctx) {
            return Ratio{sign_power(ctx.r) * list_poch(ctx.spec.a, ctx.r) * list_poch(ctx.spec.b[0], ctx.r),
                         poch(ctx.beta1_i() - 1, ctx.r) * list_poch(ctx.spec.alpha, ctx.r)
                             * list_poch(ctx.spec.beta[0], ctx.r)};
        },
        [](const Context &ctx) { return raise_first_slot(ctx.spec, ctx.r); },
        [](const Context &ctx) { return ctx.literal() ? 0u : ctx.r; },
    });

    c.push_back({
        {IdentityId::EQ9, "x1 derivative, reflected beta",
         "sum C(r,k)(-1)^k(beta1_i+r-1)_k/(beta1_i)_k F(beta1_i -> beta1_i+k) = [a]_r[b1]_r/((beta1_i+r)_r[alpha]_r[beta1]_r) x1^r F(+r, beta1_i+2r)",
         "no x1^k inside the sum", IndexDomain::slot1_lower, false},
        Binding::identity, Binding::identity, std::nullopt, std::nullopt,
        [](const Context &ctx) {
            return std::vector<Condition>{poch_nonzero("beta1_i", ctx.beta1_i(), ctx.r),
                                          nonzero("(beta1_i + r)_r != 0", poch(ctx.beta1_i() + ctx.rr(), ctx.r)),
                                          derivative_divisors(ctx)};
        },
        [](const Context &ctx, unsigned k) {
            return Ratio{Rational(binom(ctx.r, k)) * sign_power(k) * poch(ctx.beta1_i() + ctx.rr() - 1, k),
                         poch(ctx.beta1_i(), k)};
        },
        [](const Context &ctx, unsigned k) {
            KdfSpec s = ctx.spec;
            s.beta[0][ctx.i - 1] += Rational(static_cast<long>(k));
            return s;
        },
        [](const Context &ctx, unsigned k) { return ctx.literal() ? k : 0u; },
        [](const Context &ctx) {
            return Ratio{list_poch(ctx.spec.a, ctx.r) * list_poch(ctx.spec.b[0], ctx.r),
                         poch(ctx.beta1_i() + ctx.rr(), ctx.r) * list_poch(ctx.spec.alpha, ctx.r)
                             * list_poch(ctx.spec.beta[0], ctx.r)};
        },
        [](const Context &ctx) {
            KdfSpec s = raise_first_slot(ctx.spec, ctx.r);
            s.beta[0][ctx.i - 1] = ctx.beta1_i() + ctx.rr() * 2;
            return s;
        },
        [](const Context &ctx) { return ctx.r; },
    });

    // --- reciprocal-argument family (every slot in t = 1/x1) ---
    c.push_back({
        {IdentityId::EQ10, "reciprocal argument",
         "sum (-r)_k/(a_i-r+1)_k F(joined 1+k / 1) = (a_i-r)/a_i F(joined 1-a_i+r / 1-a_i)", "",
         IndexDomain::joined_upper, false},
        Binding::reciprocal_all, Binding::reciprocal_all, std::nullopt, std::nullopt,
        [](const Context &ctx) {
            return std::vector<Condition>{poch_nonzero("a_i - r + 1", ctx.a_i() - ctx.rr() + 1, ctx.r),
                                          nonzero("a_i != 0", ctx.a_i())};
        },
        [](const Context &ctx, unsigned k) { return reciprocal_coefficient(ctx, k, ctx.a_i() - ctx.rr() + 1); },
        [](const Context &ctx, unsigned k) { return joined_pair(ctx, rat(1 + static_cast<long>(k)), rat(1)); },
        no_power,
        [](const Context &ctx) { return Ratio{ctx.a_i() - ctx.rr(), ctx.a_i()}; },
        [](const Context &ctx) { return joined_pair(ctx, rat(1) - ctx.a_i() + ctx.rr(), rat(1) - ctx.a_i()); },
        rhs_no_power,
    });

    c.push_back({
        {IdentityId::EQ11, "reciprocal argument",
         "sum (-r)_k/(b1_i-r+1)_k F(slot1 1+k / 1) = (b1_i-r)/b1_i F(slot1 1-b1_i+r / 1-b1_i)", "",
         IndexDomain::slot1_upper, false},
        Binding::reciprocal_all, Binding::reciprocal_all, Binding::reciprocal_mixed, Binding::reciprocal_mixed,
        [](const Context &ctx) {
            return std::vector<Condition>{poch_nonzero("b1_i - r + 1", ctx.b1_i() - ctx.rr() + 1, ctx.r),
                                          nonzero("b1_i != 0", ctx.b1_i())};
        },
        [](const Context &ctx, unsigned k) { return reciprocal_coefficient(ctx, k, ctx.b1_i() - ctx.rr() + 1); },
        [](const Context &ctx, unsigned k) { return slot1_pair(ctx, rat(1 + static_cast<long>(k)), rat(1)); },
        no_power,
        [](const Context &ctx) { return Ratio{ctx.b1_i() - ctx.rr(), ctx.b1_i()}; },
        [](const Context &ctx) { return slot1_pair(ctx, rat(1) - ctx.b1_i() + ctx.rr(), rat(1) - ctx.b1_i()); },
        rhs_no_power,
    });

    c.push_back({
        {IdentityId::EQ12, "reciprocal argument, shifted upper",
         "sum (-r)_k/(2-a_i-r)_k F(joined 1+k / 1) = (a_i+r-1)/(a_i-1) F(a_i -> a_i+r)", "",
         IndexDomain::joined_upper, false},
        Binding::reciprocal_all, Binding::reciprocal_all, std::nullopt, std::nullopt,
        [](const Context &ctx) {
            return std::vector<Condition>{poch_nonzero("2 - a_i - r", rat(2) - ctx.a_i() - ctx.rr(), ctx.r),
                                          nonzero("a_i != 1", ctx.a_i() - 1)};
        },
        [](const Context &ctx, unsigned k) { return reciprocal_coefficient(ctx, k, rat(2) - ctx.a_i() - ctx.rr()); },
        [](const Context &ctx, unsigned k) { return joined_pair(ctx, rat(1 + static_cast<long>(k)), rat(1)); },
        no_power,
        [](const Context &ctx) { return Ratio{ctx.a_i() + ctx.rr() - 1, ctx.a_i() - 1}; },
        [](const Context &ctx) {
            KdfSpec s = ctx.spec;
            s.a = list_insert(list_drop(ctx.spec.a, ctx.i), ctx.a_i() + ctx.rr());
            return s;
        },
        rhs_no_power,
    });

    c.push_back({
        {IdentityId::EQ13, "reciprocal argument, shifted upper",
         "sum (-r)_k/(2-b1_i-r)_k F(slot1 1+k / 1) = (b1_i+r-1)/(b1_i-1) F(b1_i -> b1_i+r)", "",
         IndexDomain::slot1_upper, false},
        Binding::reciprocal_all, Binding::reciprocal_all, Binding::reciprocal_mixed, Binding::reciprocal_mixed,
        [](const Context &ctx) {
            return std::vector<Condition>{poch_nonzero("2 - b1_i - r", rat(2) - ctx.b1_i() - ctx.rr(), ctx.r),
                                          nonzero("b1_i != 1", ctx.b1_i() - 1)};
        },
        [](const Context &ctx, unsigned k) { return reciprocal_coefficient(ctx, k, rat(2) - ctx.b1_i() - ctx.rr()); },
        [](const Context &ctx, unsigned k) { return slot1_pair(ctx, rat(1 + static_cast<long>(k)), rat(1)); },
        no_power,
        [](const Context &ctx) { return Ratio{ctx.b1_i() + ctx.rr() - 1, ctx.b1_i() - 1}; },
        [](const Context &ctx) {
            KdfSpec s = ctx.spec;
            s.b[0] = list_insert(list_drop(ctx.spec.b[0], ctx.i), ctx.b1_i() + ctx.rr());
            return s;
        },
        rhs_no_power,
    });

    // (2-2r)_k vanishes for some k <= r only at r = 1, where r - 1 = 0 too.
    const auto r_not_one = [](const Context &ctx) {
        return std::vector<Condition>{{"r != 1", ctx.r != 1}};
    };
    c.push_back({
        {IdentityId::EQ14, "reciprocal argument, 2r pair", "sum (-r)_k/(2-2r)_k F(joined 1+k / 1) = (2r-1)/(r-1) F(joined 2r / r)", "",
         IndexDomain::none, false},
        Binding::reciprocal_all, Binding::reciprocal_all, std::nullopt, std::nullopt,
        r_not_one,
        [](const Context &ctx, unsigned k) { return reciprocal_coefficient(ctx, k, rat(2) - ctx.rr() * 2); },
        [](const Context &ctx, unsigned k) { return joined_pair(ctx, rat(1 + static_cast<long>(k)), rat(1)); },
        no_power,
        [](const Context &ctx) { return Ratio{ctx.rr() * 2 - 1, ctx.rr() - 1}; },
        [](const Context &ctx) { return joined_pair(ctx, ctx.rr() * 2, ctx.rr()); },
        rhs_no_power,
    });

    c.push_back({
        {IdentityId::EQ15, "reciprocal argument, 2r pair", "sum (-r)_k/(2-2r)_k F(slot1 1+k / 1) = (2r-1)/(r-1) F(slot1 2r / r)", "",
         IndexDomain::none, false},
        Binding::reciprocal_all, Binding::reciprocal_all, Binding::reciprocal_mixed, Binding::reciprocal_mixed,
        r_not_one,
        [](const Context &ctx, unsigned k) { return reciprocal_coefficient(ctx, k, rat(2) - ctx.rr() * 2); },
        [](const Context &ctx, unsigned k) { return slot1_pair(ctx, rat(1 + static_cast<long>(k)), rat(1)); },
        no_power,
        [](const Context &ctx) { return Ratio{ctx.rr() * 2 - 1, ctx.rr() - 1}; },
        [](const Context &ctx) { return slot1_pair(ctx, ctx.rr() * 2, ctx.rr()); },
        rhs_no_power,
    });

    c.push_back({
        {IdentityId::EQ16, "reciprocal argument, 1+2r pair",
         "sum (-r)_k/(1-2r)_k F(joined 1+k / 1) = (1+r)_r/(r)_r F(joined 1+2r / 1+r)",
         "the printed factor 2 equals (1+r)_r/(r)_r only for r >= 1", IndexDomain::none, false},
        Binding::reciprocal_all, Binding::reciprocal_all, std::nullopt, std::nullopt,
        [](const Context &) { return std::vector<Condition>{}; },
        [](const Context &ctx, unsigned k) { return reciprocal_coefficient(ctx, k, rat(1) - ctx.rr() * 2); },
        [](const Context &ctx, unsigned k) { return joined_pair(ctx, rat(1 + static_cast<long>(k)), rat(1)); },
        no_power,
        doubling_factor,
        [](const Context &ctx) { return joined_pair(ctx, ctx.rr() * 2 + 1, ctx.rr() + 1); },
        rhs_no_power,
    });

    c.push_back({
        {IdentityId::EQ17, "reciprocal argument, 1+2r pair",
         "sum (-r)_k/(1-2r)_k F(slot1 1+k / 1) = (1+r)_r/(r)_r F(slot1 1+2r / 1+r)",
         "the printed factor 2 equals (1+r)_r/(r)_r only for r >= 1", IndexDomain::none, false},
        Binding::reciprocal_all, Binding::reciprocal_all, Binding::reciprocal_mixed, Binding::reciprocal_mixed,
        [](const Context &) { return std::vector<Condition>{}; },
        [](const Context &ctx, unsigned k) { return reciprocal_coefficient(ctx, k, rat(1) - ctx.rr() * 2); },
        [](const Context &ctx, unsigned k) { return slot1_pair(ctx, rat(1 + static_cast<long>(k)), rat(1)); },
        no_power,
        doubling_factor,
        [](const Context &ctx) { return slot1_pair(ctx, ctx.rr() * 2 + 1, ctx.rr() + 1); },
        rhs_no_power,
    });

    // --- power-argument family: arguments x1^P ---
    // Gauss multiplication splits (c)_{P n} into P Pochhammer symbols (c+j-1)/P.
    const auto fractional_rows = [](ParamList &upper, ParamList &lower, const Rational &up_shift,
                                    const Rational &low_shift, unsigned power) {
        const Rational p(static_cast<long>(power));
        for (unsigned j = power; j >= 1; --j) {
            const Rational jj(static_cast<long>(j));
            insert_pair(upper, lower, (jj + up_shift) / p, (jj + low_shift) / p);
        }
    };
    const auto power_coefficient = [](const Context &ctx, unsigned k, const Rational &param) {
        return Ratio{Rational(binom(ctx.r, k)) * sign_power(k) * poch(-ctx.rr(), k), poch(rat(1) + param - ctx.rr(), k)};
    };
    const auto power_prefactor = [](const Context &ctx, const Rational &param) {
        return Ratio{sign_power(ctx.r) * poch(rat(1) + param, ctx.r), poch(-param, ctx.r)};
    };
    const auto power_divisors = [](const Context &ctx, const Rational &param, const std::string &name) {
        return std::vector<Condition>{poch_nonzero("1 + " + name + " - r", rat(1) + param - ctx.rr(), ctx.r),
                                      nonzero("(-" + name + ")_r != 0", poch(-param, ctx.r))};
    };

    c.push_back({
        {IdentityId::EQ18, "power argument",
         "sum C(r,k)(-1)^k(-r)_k/(1+a_i-r)_k F(joined (j+r)/P / (j+r-k)/P) = (-1)^r(1+a_i)_r/(-a_i)_r F(joined (j+a_i+r)/P / (j+a_i)/P)",
         "", IndexDomain::joined_upper, true},
        Binding::power_all, Binding::power_all, std::nullopt, std::nullopt,
        [power_divisors](const Context &ctx) { return power_divisors(ctx, ctx.a_i(), "a_i"); },
        [power_coefficient](const Context &ctx, unsigned k) { return power_coefficient(ctx, k, ctx.a_i()); },
        [fractional_rows](const Context &ctx, unsigned k) {
            KdfSpec s = ctx.spec;
            fractional_rows(s.a, s.alpha, ctx.rr(), ctx.rr() - Rational(static_cast<long>(k)), ctx.power);
            return s;
        },
        no_power,
        [power_prefactor](const Context &ctx) { return power_prefactor(ctx, ctx.a_i()); },
        [fractional_rows](const Context &ctx) {
            KdfSpec s = ctx.spec;
            fractional_rows(s.a, s.alpha, ctx.a_i() + ctx.rr(), ctx.a_i(), ctx.power);
            return s;
        },
        rhs_no_power,
    });

    c.push_back({
        {IdentityId::EQ19, "power argument",
         "sum C(r,k)(-1)^k(-r)_k/(1+b1_i-r)_k F(slot1 (j+r)/P / (j+r-k)/P) = (-1)^r(1+b1_i)_r/(-b1_i)_r F(slot1 (j+b1_i+r)/P / (j+b1_i)/P)",
         "", IndexDomain::slot1_upper, true},
        Binding::power_slot1, Binding::power_slot1, std::nullopt, std::nullopt,
        [power_divisors](const Context &ctx) { return power_divisors(ctx, ctx.b1_i(), "b1_i"); },
        [power_coefficient](const Context &ctx, unsigned k) { return power_coefficient(ctx, k, ctx.b1_i()); },
        [fractional_rows](const Context &ctx, unsigned k) {
            KdfSpec s = ctx.spec;
            fractional_rows(s.b[0], s.beta[0], ctx.rr(), ctx.rr() - Rational(static_cast<long>(k)), ctx.power);
            return s;
        },
        no_power,
        [power_prefactor](const Context &ctx) { return power_prefactor(ctx, ctx.b1_i()); },
        [fractional_rows](const Context &ctx) {
            KdfSpec s = ctx.spec;
            fractional_rows(s.b[0], s.beta[0], ctx.b1_i() + ctx.rr(), ctx.b1_i(), ctx.power);
            return s;
        },
        rhs_no_power,
    });

    // --- rearrangement family: Vandermonde in the inner sum ---
    const auto rearrangement_coefficient = [](const Context &ctx, unsigned k, const Rational &lo, const Rational &hi) {
        const Rational binomial = ctx.literal() ? rat(1) : Rational(binom(ctx.r, k));
        return Ratio{binomial * sign_power(k) * poch(hi, k), poch(hi - lo - ctx.rr() + 1, k)};
    };
    const auto rearrangement_divisors = [](const Context &ctx, const Rational &lo, const Rational &hi,
                                           const std::string &lo_name, const std::string &hi_name) {
        return std::vector<Condition>{
            poch_nonzero(hi_name + " - " + lo_name + " - r + 1", hi - lo - ctx.rr() + 1, ctx.r),
            nonzero("(" + lo_name + " - " + hi_name + ")_r != 0", poch(lo - hi, ctx.r))};
    };

    c.push_back({
        {IdentityId::EQ20, "rearrangement",
         "sum C(r,k)(-1)^k(a_{i+1})_k/(a_{i+1}-a_i-r+1)_k F(a_{i+1} -> a_{i+1}+k) = (a_i)_r/(a_i-a_{i+1})_r F(a_i -> a_i+r)",
         "the binomial C(r,k) is missing from the printed sum", IndexDomain::joined_upper_pairs, false},
        Binding::identity, Binding::identity, std::nullopt, std::nullopt,
        [rearrangement_divisors](const Context &ctx) {
            return rearrangement_divisors(ctx, ctx.spec.a[ctx.i - 1], ctx.spec.a[ctx.i], "a_i", "a_{i+1}");
        },
        [rearrangement_coefficient](const Context &ctx, unsigned k) {
            return rearrangement_coefficient(ctx, k, ctx.spec.a[ctx.i - 1], ctx.spec.a[ctx.i]);
        },
        [](const Context &ctx, unsigned k) {
            KdfSpec s = ctx.spec;
            s.a = list_insert(list_drop(ctx.spec.a, ctx.i + 1), ctx.spec.a[ctx.i] + Rational(static_cast<long>(k)));
            return s;
        },
        no_power,
        [](const Context &ctx) {
            const Rational &lo = ctx.spec.a[ctx.i - 1];
            const Rational &hi = ctx.spec.a[ctx.i];
            return Ratio{poch(lo, ctx.r), poch(lo - hi, ctx.r)};
        },
        [](const Context &ctx) {
            KdfSpec s = ctx.spec;
            s.a = list_insert(list_drop(ctx.spec.a, ctx.i), ctx.spec.a[ctx.i - 1] + ctx.rr());
            return s;
        },
        rhs_no_power,
    });

    c.push_back({
        {IdentityId::EQ21, "rearrangement",
         "sum C(r,k)(-1)^k(b1_{i+1})_k/(b1_{i+1}-b1_i-r+1)_k F(b1_{i+1} -> b1_{i+1}+k) = (b1_i)_r/(b1_i-b1_{i+1})_r F(b1_i -> b1_i+r)",
         "the binomial C(r,k) is missing and the sum drops b1_i instead of b1_{i+1}", IndexDomain::slot1_upper_pairs,
         false},
        Binding::identity, Binding::identity, std::nullopt, std::nullopt,
        [rearrangement_divisors](const Context &ctx) {
            return rearrangement_divisors(ctx, ctx.spec.b[0][ctx.i - 1], ctx.spec.b[0][ctx.i], "b1_i", "b1_{i+1}");
        },
        [rearrangement_coefficient](const Context &ctx, unsigned k) {
            return rearrangement_coefficient(ctx, k, ctx.spec.b[0][ctx.i - 1], ctx.spec.b[0][ctx.i]);
        },
        [](const Context &ctx, unsigned k) {
            KdfSpec s = ctx.spec;
            const std::size_t dropped = ctx.literal() ? ctx.i : ctx.i + 1;
            s.b[0] = list_insert(list_drop(ctx.spec.b[0], dropped), ctx.spec.b[0][ctx.i] + Rational(static_cast<long>(k)));
            return s;
        },
        no_power,
        [](const Context &ctx) {
            const Rational &lo = ctx.spec.b[0][ctx.i - 1];
            const Rational &hi = ctx.spec.b[0][ctx.i];
            return Ratio{poch(lo, ctx.r), poch(lo - hi, ctx.r)};
        },
        [](const Context &ctx) {
            KdfSpec s = ctx.spec;
            s.b[0] = list_insert(list_drop(ctx.spec.b[0], ctx.i), ctx.spec.b[0][ctx.i - 1] + ctx.rr());
            return s;
        },
        rhs_no_power,
    });

    return c;
}

const std::vector<Descriptor> &catalog()
{
    static const std::vector<Descriptor> c = make_catalog();
    return c;
}

const Descriptor &descriptor(IdentityId id)
{
    return catalog().at(id_index(id));
}

Context context_of(const IdentityInstance &instance)
{
    return Context{instance.spec, instance.param_index, instance.r, instance.power_alpha.value_or(1), instance.reading};
}

SlotBinding side_binding(const Descriptor &d, const Context &ctx, bool lhs)
{
    std::optional<Binding> literal = lhs ? d.literal_lhs_binding : d.literal_rhs_binding;
    Binding rule = lhs ? d.lhs_binding : d.rhs_binding;
    if (ctx.literal() && literal) {
        rule = *literal;
    }
    return make_binding(rule, ctx);
}

std::size_t domain_size(IndexDomain domain, const KdfSpec &spec)
{
    switch (domain) {
    case IndexDomain::none:
        return 0;
    case IndexDomain::joined_upper:
        return spec.a.size();
    case IndexDomain::slot1_upper:
        return spec.b[0].size();
    case IndexDomain::slot1_lower:
        return spec.beta[0].size();
    case IndexDomain::joined_upper_pairs:
        return spec.a.empty() ? 0 : spec.a.size() - 1;
    case IndexDomain::slot1_upper_pairs:
        return spec.b[0].empty() ? 0 : spec.b[0].size() - 1;
    }
    return 0;
}

std::string domain_name(IndexDomain domain)
{
    switch (domain) {
    case IndexDomain::none:
        return "none";
    case IndexDomain::joined_upper:
        return "1..p";
    case IndexDomain::slot1_upper:
        return "1..q1";
    case IndexDomain::slot1_lower:
        return "1..m1";
    case IndexDomain::joined_upper_pairs:
        return "1..p-1";
    case IndexDomain::slot1_upper_pairs:
        return "1..q1-1";
    }
    return "?";
}

Rational ratio_value(const Ratio &ratio, const std::string &what)
{
    if (ratio.den.is_zero()) {
        throw PoleInParameters(what + " has a vanishing divisor");
    }
    return ratio.num / ratio.den;
}

} // namespace

std::span<const IdentityId> all_identity_ids()
{
    return kAllIds;
}

std::string to_string(IdentityId id)
{
    return "EQ" + std::to_string(id_index(id) + 5);
}

IdentityId parse_identity_id(std::string_view text)
{
    for (IdentityId id : kAllIds) {
        if (to_string(id) == text) {
            return id;
        }
    }
    throw ParseError("unknown identity id '" + std::string(text) + "'");
}

const IdentityInfo &identity_info(IdentityId id)
{
    return descriptor(id).info;
}

std::string to_string(Reading reading)
{
    return reading == Reading::corrected ? "corrected" : "literal";
}

Reading parse_reading(std::string_view text)
{
    if (text == "corrected") {
        return Reading::corrected;
    }
    if (text == "literal") {
        return Reading::literal;
    }
    throw ParseError("unknown reading '" + std::string(text) + "'");
}

std::string to_string(VerifyStatus status)
{
    switch (status) {
    case VerifyStatus::pass:
        return "pass";
    case VerifyStatus::fail:
        return "fail";
    case VerifyStatus::pole:
        return "pole";
    case VerifyStatus::not_applicable:
        return "not-applicable";
    }
    return "?";
}

VerifyStatus parse_status(std::string_view text)
{
    for (auto s : {VerifyStatus::pass, VerifyStatus::fail, VerifyStatus::pole, VerifyStatus::not_applicable}) {
        if (to_string(s) == text) {
            return s;
        }
    }
    throw ParseError("unknown status '" + std::string(text) + "'");
}

unsigned default_cap(IdentityId id, std::optional<unsigned> power_alpha)
{
    if (identity_info(id).uses_power) {
        return 2 * power_alpha.value_or(2) + 3;
    }
    return 7;
}

void check_applicable(const IdentityInstance &instance)
{
    instance.spec.validate();
    const Descriptor &d = descriptor(instance.id);
    const std::string name = to_string(instance.id);
    if (d.info.uses_power) {
        if (!instance.power_alpha || *instance.power_alpha < 2) {
            throw NotApplicable(name + " needs powerAlpha >= 2");
        }
    } else if (instance.power_alpha) {
        throw NotApplicable(name + " takes no powerAlpha");
    }
    if (d.info.domain == IndexDomain::none) {
        return;
    }
    const std::size_t size = domain_size(d.info.domain, instance.spec);
    if (size == 0) {
        throw NotApplicable(name + " needs index range " + domain_name(d.info.domain) + " to be non-empty");
    }
    if (instance.param_index < 1 || instance.param_index > size) {
        throw NotApplicable(name + ": i = " + std::to_string(instance.param_index) + " outside "
                            + domain_name(d.info.domain) + " (= 1.." + std::to_string(size) + ")");
    }
}

IdentitySide lhs_terms(const IdentityInstance &instance)
{
    check_applicable(instance);
    const Descriptor &d = descriptor(instance.id);
    const Context ctx = context_of(instance);
    IdentitySide side;
    side.binding = side_binding(d, ctx, true);
    for (unsigned k = 0; k <= instance.r; ++k) {
        side.terms.push_back({ratio_value(d.lhs_coefficient(ctx, k), "LHS coefficient k=" + std::to_string(k)),
                              d.lhs_power(ctx, k), d.lhs_spec(ctx, k)});
    }
    return side;
}

IdentitySide rhs_terms(const IdentityInstance &instance)
{
    check_applicable(instance);
    const Descriptor &d = descriptor(instance.id);
    const Context ctx = context_of(instance);
    IdentitySide side;
    side.binding = side_binding(d, ctx, false);
    side.terms.push_back({ratio_value(d.rhs_prefactor(ctx), "RHS prefactor"), d.rhs_power(ctx), d.rhs_spec(ctx)});
    return side;
}

TruncatedSeries expand_side(const IdentitySide &side, std::size_t var_count, unsigned cap)
{
    TruncatedSeries out(var_count, cap);
    for (const auto &term : side.terms) {
        if (term.coefficient.is_zero()) {
            continue;
        }
        TruncatedSeries f = expand(term.spec, side.binding, var_count, cap);
        if (term.x1_power > 0) {
            f = shift_monomial(f, MultiIndex::unit(var_count, 0, term.x1_power));
        }
        out = add(out, scale(term.coefficient, f));
    }
    return out;
}

std::vector<Condition> preconditions(const IdentityInstance &instance)
{
    try {
        check_applicable(instance);
    } catch (const NotApplicable &e) {
        return {{std::string("applicable: ") + e.what(), false}};
    }
    const Descriptor &d = descriptor(instance.id);
    const Context ctx = context_of(instance);
    std::vector<Condition> out = d.divisors(ctx);
    for (const auto &c : out) {
        if (!c.satisfied) {
            return out; // term construction may divide by the failing divisor
        }
    }

    const auto scan = [&](const IdentitySide &side, const std::string &label) {
        for (std::size_t k = 0; k < side.terms.size(); ++k) {
            const auto pole = find_pole(side.terms[k].spec, side.binding, instance.cap);
            std::string text = label + (side.terms.size() > 1 ? " term k=" + std::to_string(k) : std::string{})
                               + " pole-free within cap";
            if (pole) {
                text += ": " + *pole;
            }
            out.push_back({std::move(text), !pole.has_value()});
        }
    };
    scan(lhs_terms(instance), "LHS");
    scan(rhs_terms(instance), "RHS");
    return out;
}

std::vector<Condition> violations(const IdentityInstance &instance)
{
    std::vector<Condition> out;
    for (auto &c : preconditions(instance)) {
        if (!c.satisfied) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

namespace {

void require_pole_free(const IdentityInstance &instance)
{
    const auto bad = violations(instance);
    if (!bad.empty()) {
        throw PoleInParameters(to_string(instance.id) + ": " + bad.front().text);
    }
}

} // namespace

TruncatedSeries build_lhs(const IdentityInstance &instance)
{
    check_applicable(instance);
    require_pole_free(instance);
    return expand_side(lhs_terms(instance), instance.spec.slots(), instance.cap);
}

TruncatedSeries build_rhs(const IdentityInstance &instance)
{
    check_applicable(instance);
    require_pole_free(instance);
    return expand_side(rhs_terms(instance), instance.spec.slots(), instance.cap);
}

VerificationReport compare_sides(const TruncatedSeries &lhs, const TruncatedSeries &rhs)
{
    VerificationReport report;
    report.cap_checked = lhs.cap();
    report.coefficients_compared = dense_monomial_count(lhs.var_count(), lhs.cap());
    report.first_mismatch = first_mismatch(lhs, rhs);
    report.status = report.first_mismatch ? VerifyStatus::fail : VerifyStatus::pass;
    return report;
}

VerificationReport verify(const IdentityInstance &instance)
{
    VerificationReport report;
    report.cap_checked = instance.cap;
    try {
        check_applicable(instance);
    } catch (const NotApplicable &e) {
        report.status = VerifyStatus::not_applicable;
        report.note = e.what();
        return report;
    } catch (const ShapeMismatch &e) {
        report.status = VerifyStatus::not_applicable;
        report.note = e.what();
        return report;
    }
    const auto bad = violations(instance);
    if (!bad.empty()) {
        report.status = VerifyStatus::pole;
        report.note = bad.front().text;
        return report;
    }
    try {
        const std::size_t vars = instance.spec.slots();
        return compare_sides(expand_side(lhs_terms(instance), vars, instance.cap),
                             expand_side(rhs_terms(instance), vars, instance.cap));
    } catch (const PoleInParameters &e) {
        report.status = VerifyStatus::pole;
        report.note = e.what();
        return report;
    }
}

Shape minimal_shape(IdentityId id, std::size_t n)
{
    Shape s;
    s.q.assign(n, 0);
    s.m.assign(n, 0);
    switch (identity_info(id).domain) {
    case IndexDomain::none:
        break;
    case IndexDomain::joined_upper:
        s.p = 1;
        break;
    case IndexDomain::slot1_upper:
        s.q[0] = 1;
        break;
    case IndexDomain::slot1_lower:
        s.m[0] = 1;
        break;
    case IndexDomain::joined_upper_pairs:
        s.p = 2;
        break;
    case IndexDomain::slot1_upper_pairs:
        s.q[0] = 2;
        break;
    }
    return s;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
{
    // splitmix64 finalizer over a combined key
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(seed) ^ stream) ^ index);
}

namespace {

class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [lo, hi]; plain modulo keeps the stream portable.
    long between(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }

    Rational small_rational()
    {
        const long num = between(-9, 9);
        const long den = between(1, 3);
        return Rational(BigInt(num), BigInt(den));
    }

    ParamList row(std::size_t len)
    {
        ParamList out;
        for (std::size_t j = 0; j < len; ++j) {
            out.push_back(small_rational());
        }
        return out;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace

IdentityInstance random_instance(std::uint64_t seed, IdentityId id, const Shape &shape,
                                 const RandomInstanceOptions &options)
{
    const std::size_t n = shape.q.size();
    if (n == 0 || shape.m.size() != n) {
        throw ShapeMismatch("shape needs matching q and m lists with n >= 1 entries");
    }
    const Shape need = minimal_shape(id, n);
    if (shape.p < need.p || shape.q[0] < need.q[0] || shape.m[0] < need.m[0]) {
        throw NotApplicable("shape too small for " + to_string(id));
    }

    const IdentityInfo &info = identity_info(id);
    Draw draw(seed);
    for (unsigned attempt = 0; attempt < options.max_retries; ++attempt) {
        IdentityInstance inst;
        inst.id = id;
        inst.reading = options.reading;
        inst.r = static_cast<unsigned>(draw.between(0, options.r_max));
        if (info.uses_power) {
            inst.power_alpha = static_cast<unsigned>(draw.between(2, 3));
        }
        inst.cap = options.cap.value_or(default_cap(id, inst.power_alpha));
        inst.spec.a = draw.row(shape.p);
        inst.spec.alpha = draw.row(shape.l);
        for (std::size_t t = 0; t < n; ++t) {
            inst.spec.b.push_back(draw.row(shape.q[t]));
            inst.spec.beta.push_back(draw.row(shape.m[t]));
        }
        const std::size_t size = domain_size(info.domain, inst.spec);
        inst.param_index = size == 0 ? 1 : static_cast<std::size_t>(draw.between(1, static_cast<long>(size)));
        if (violations(inst).empty()) {
            return inst;
        }
    }
    throw ExhaustedRetries(to_string(id) + ": no pole-free instance after " + std::to_string(options.max_retries)
                           + " draws");
}

} // namespace kdf
