#include <doctest.h>

#include <random>

#include <kdf/errors.hpp>
#include <kdf/exact_arith.hpp>
#include <kdf/kdf_spec.hpp>

#include "oracle.hpp"
#include "test_support.hpp"

using namespace kdf;

namespace {

KdfSpec one_slot(ParamList a, ParamList alpha, ParamList b, ParamList beta)
{
    return KdfSpec{std::move(a), std::move(alpha), {std::move(b)}, {std::move(beta)}};
}

ParamList random_row(std::mt19937_64 &rng, std::size_t len)
{
    ParamList out;
    for (std::size_t j = 0; j < len; ++j) {
        const long num = static_cast<long>(rng() % 19) - 9;
        const long den = 1 + static_cast<long>(rng() % 3);
        out.push_back(Rational(BigInt(num), BigInt(den)));
    }
    return out;
}

KdfSpec random_spec(std::mt19937_64 &rng, std::size_t n)
{
    KdfSpec s;
    s.a = random_row(rng, rng() % 3);
    s.alpha = random_row(rng, rng() % 3);
    for (std::size_t t = 0; t < n; ++t) {
        s.b.push_back(random_row(rng, rng() % 3));
        s.beta.push_back(random_row(rng, rng() % 3));
    }
    return s;
}

} // namespace

TEST_SUITE("kdf_core") {

TEST_CASE("lambda at the origin is one")
{
    const KdfSpec s = one_slot({q(3)}, {q("1/2")}, {q(-4)}, {q(7)});
    CHECK(lambda_coeff(s, MultiIndex{0}) == q(1));
}

TEST_CASE("lambda from direct Pochhammer products")
{
    const KdfSpec s = one_slot({q(1)}, {}, {q(1)}, {q(1)});
    CHECK(lambda_coeff(s, MultiIndex{2}) == q(2));
    CHECK_THROWS_AS(lambda_coeff(one_slot({}, {}, {}, {q(-1)}), MultiIndex{2}), PoleInParameters);
}

TEST_CASE("empty parameters give the exponential series")
{
    const TruncatedSeries e = expand(empty_spec(2), 2);
    TruncatedSeries expected(2, 2);
    expected.add_term(MultiIndex{0, 0}, q(1));
    expected.add_term(MultiIndex{1, 0}, q(1));
    expected.add_term(MultiIndex{0, 1}, q(1));
    expected.add_term(MultiIndex{2, 0}, q("1/2"));
    expected.add_term(MultiIndex{1, 1}, q(1));
    expected.add_term(MultiIndex{0, 2}, q("1/2"));
    CHECK(e == expected);
}

TEST_CASE("cap zero leaves the constant one")
{
    const KdfSpec s = one_slot({q("2/3")}, {q(5)}, {q(-1), q(4)}, {q("7/2")});
    CHECK(expand(s, 0) == TruncatedSeries::one(1, 0));
}

TEST_CASE("gauss series with unit parameters")
{
    const TruncatedSeries f = expand(one_slot({q(1)}, {}, {q(1)}, {q(2)}), 3);
    for (unsigned s = 0; s <= 3; ++s) {
        CHECK(f.coefficient(MultiIndex{s}) == Rational(BigInt(1), BigInt(s + 1)));
    }
}

TEST_CASE("two slots on one variable collapse onto diagonal sums")
{
    const KdfSpec s{{q("1/2")}, {q(3)}, {{q(2)}, {q("-5/3")}}, {{}, {q("4/3")}}};
    const unsigned cap = 5;
    const TruncatedSeries f = expand(s, SlotBinding::shared(2), 1, cap);
    for (unsigned d = 0; d <= cap; ++d) {
        oracle::Q sum = 0;
        for (unsigned s1 = 0; s1 <= d; ++s1) {
            sum += oracle::term(s, {s1, d - s1});
        }
        CHECK(f.coefficient(MultiIndex{d}) == oracle::from_q(sum));
    }
}

TEST_CASE("expansion equals the brute-force box sum on random specs and bindings")
{
    std::mt19937_64 rng(2024);
    int checked = 0;
    while (checked < 60) {
        const std::size_t n = 1 + rng() % 3;
        const KdfSpec s = random_spec(rng, n);
        SlotBinding binding = SlotBinding::identity(n);
        std::size_t vars = n;
        switch (rng() % 3) {
        case 1:
            binding = SlotBinding::shared(n, 0, 1 + rng() % 2);
            vars = 1;
            break;
        case 2:
            binding.slots[0].mult = 2 + rng() % 2;
            break;
        default:
            break;
        }
        const unsigned cap = 6;
        oracle::Coefficients brute;
        try {
            brute = oracle::expand(s, binding, vars, cap);
        } catch (const std::domain_error &) {
            CHECK(find_pole(s, binding, cap).has_value());
            CHECK_THROWS_AS(expand(s, binding, vars, cap), PoleInParameters);
            continue;
        }
        CHECK_FALSE(find_pole(s, binding, cap).has_value());
        CHECK(expand(s, binding, vars, cap) == oracle::to_series(brute, vars, cap));
        ++checked;
    }
}

TEST_CASE("a pole beyond the cap is not reported")
{
    // (-3)_s vanishes from s = 4 on
    const KdfSpec s = one_slot({}, {}, {q(1)}, {q(-3)});
    CHECK_FALSE(find_pole(s, SlotBinding::identity(1), 3));
    CHECK(find_pole(s, SlotBinding::identity(1), 4));
    CHECK_NOTHROW(expand(s, 3));
}

TEST_CASE("convergence classes")
{
    const auto e = convergence_class(empty_spec(1));
    CHECK(e.slots[0].delta == 1);
    CHECK(e.slots[0].cls == ConvergenceClass::entire_direction);

    const auto u = convergence_class(one_slot({q(1)}, {}, {q(2)}, {q(3)}));
    CHECK(u.slots[0].delta == 0);
    CHECK(u.slots[0].cls == ConvergenceClass::unit_domain);
    REQUIRE(u.domain);
    CHECK(u.domain->kind == GlobalDomain::Kind::sum_of_roots);
    CHECK(u.domain->root == 1);

    const auto d = convergence_class(one_slot({q(1), q(2)}, {}, {q(3)}, {}));
    CHECK(d.slots[0].delta == -2);
    CHECK(d.slots[0].cls == ConvergenceClass::divergent);
    CHECK(to_string(ConvergenceClass::unit_domain) == "unit-domain");
}

TEST_CASE("shift spec for the x1 derivative")
{
    const KdfSpec s = one_slot({q(1)}, {}, {q(1)}, {q(2)});
    const ShiftedSpec zero = shift_spec(s, 0);
    CHECK(zero.prefactor == q(1));
    CHECK(zero.spec == s);
    const ShiftedSpec once = shift_spec(s, 1);
    CHECK(once.prefactor == q("1/2"));
    CHECK(once.spec == one_slot({q(2)}, {}, {q(2)}, {q(3)}));
    CHECK_THROWS_AS(shift_spec(one_slot({}, {q(-1)}, {}, {}), 2), PoleInParameters);
}

TEST_CASE("derivative rule on random specs")
{
    std::mt19937_64 rng(99);
    int checked = 0;
    while (checked < 20) {
        const std::size_t n = 1 + rng() % 3;
        const KdfSpec s = random_spec(rng, n);
        const unsigned r = static_cast<unsigned>(rng() % 4);
        try {
            const TruncatedSeries f = expand(s, 8);
            const ShiftedSpec shifted = shift_spec(s, r);
            CHECK(partial_derivative(f, 0, r) == scale(shifted.prefactor, expand(shifted.spec, 8 - r)));
            ++checked;
        } catch (const PoleInParameters &) {
        }
    }
}

TEST_CASE("parameter list edits")
{
    CHECK(list_shift({}, q(3)).empty());
    CHECK(list_shift({q("1/2"), q(3)}, q(-1)) == ParamList{q("-1/2"), q(2)});
    CHECK(list_drop({q(1), q(2), q(3)}, 2) == ParamList{q(1), q(3)});
    CHECK_THROWS_AS(list_drop({q(1)}, 2), IndexOutOfRange);
    CHECK(list_insert({q(1), q(3)}, q(2), 2) == ParamList{q(1), q(2), q(3)});
    CHECK(list_insert({}, q(5)) == ParamList{q(5)});
}

TEST_CASE("spec and binding validation")
{
    KdfSpec bad;
    CHECK_THROWS_AS(bad.validate(), ShapeMismatch);
    bad.b = {{}};
    CHECK_THROWS_AS(bad.validate(), ShapeMismatch);
    CHECK_THROWS(SlotBinding::identity(2).validate(2, 1));
}

}
