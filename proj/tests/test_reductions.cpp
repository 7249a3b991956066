#include <doctest.h>

#include <kdf/errors.hpp>
#include <kdf/reductions.hpp>

#include "oracle.hpp"
#include "test_support.hpp"

using namespace kdf;

TEST_SUITE("reductions") {

TEST_CASE("F_D in one variable is the Gauss series")
{
    const FamilyParams p{1, {q("1/2")}, {q("-7/3")}, {q("5/2")}};
    const TruncatedSeries f = expand(family_spec(FamilyKind::F_D, p), 6);
    for (unsigned s = 0; s <= 6; ++s) {
        const oracle::Q expected = oracle::rising(oracle::Q(1, 2), s) * oracle::rising(oracle::Q(-7, 3), s)
                                   / (oracle::rising(oracle::Q(5, 2), s) * oracle::fact(s));
        CHECK(f.coefficient(MultiIndex{s}) == oracle::from_q(expected));
    }
}

TEST_CASE("F_B and F_D agree in one variable")
{
    const FamilyParams d{1, {q(3)}, {q("-1/2")}, {q("4/3")}};
    const FamilyParams b{1, {q(3)}, {q("-1/2")}, {q("4/3")}};
    CHECK(expand(family_spec(FamilyKind::F_D, d), 7) == expand(family_spec(FamilyKind::F_B, b), 7));
}

TEST_CASE("Xi1 in two variables term by term")
{
    const FamilyParams p{2, {q("1/2"), q(2)}, {q("-3/2")}, {q("7/3")}};
    const TruncatedSeries f = expand(family_spec(FamilyKind::Xi1, p), 4);
    for (unsigned s1 = 0; s1 <= 4; ++s1) {
        for (unsigned s2 = 0; s1 + s2 <= 4; ++s2) {
            const oracle::Q expected = oracle::rising(oracle::Q(1, 2), s1) * oracle::rising(oracle::Q(-3, 2), s1)
                                       * oracle::rising(oracle::Q(2), s2)
                                       / (oracle::rising(oracle::Q(7, 3), s1 + s2) * oracle::fact(s1) * oracle::fact(s2));
            CHECK(f.coefficient(MultiIndex{s1, s2}) == oracle::from_q(expected));
        }
    }
}

TEST_CASE("confluent constructors have the expected rows")
{
    const KdfSpec phi2 = family_spec(FamilyKind::Phi2, FamilyParams{2, {}, {q(1), q(2)}, {q(3)}});
    CHECK(phi2.a.empty());
    CHECK(phi2.alpha == ParamList{q(3)});
    CHECK(phi2.b[1] == ParamList{q(2)});
    const KdfSpec psi2 = family_spec(FamilyKind::Psi2, FamilyParams{2, {q(1)}, {}, {q(4), q(5)}});
    CHECK(psi2.beta[1] == ParamList{q(5)});
    const KdfSpec phi3 = family_spec(FamilyKind::Phi3, FamilyParams{2, {}, {q(1)}, {q(3)}});
    CHECK(phi3.b[1].empty());
    const KdfSpec phid = family_spec(FamilyKind::Phi_D, FamilyParams{3, {q(1)}, {q(2), q(3)}, {q(4)}});
    CHECK(phid.b[2].empty());
    CHECK_THROWS_AS(family_spec(FamilyKind::F_B, FamilyParams{2, {q(1)}, {q(1), q(2)}, {q(3)}}), ShapeMismatch);
    CHECK_THROWS_AS(family_spec(FamilyKind::Xi1, FamilyParams{1, {q(1)}, {}, {q(3)}}), ShapeMismatch);
}

TEST_CASE("conclusions with r = 0 pass")
{
    ConclusionInstance inst;
    inst.id = ConclusionId::EQ22;
    inst.params = FamilyParams{2, {q(1), q("1/2")}, {q(3), q(-2)}, {q("5/3")}};
    const ConclusionReport report = check_conclusion(inst);
    CHECK(report.report.status == VerifyStatus::pass);
    CHECK(report.matches_general == std::optional<bool>(true));
}

TEST_CASE("F_D conclusion matches the general reciprocal identity")
{
    ConclusionInstance inst;
    inst.id = ConclusionId::EQ24;
    inst.params.n = 2;
    inst.params.b = {q("1/2"), q("1/3")};
    inst.r = 2;
    inst.cap = 6;
    const ConclusionReport report = check_conclusion(inst);
    CHECK(report.report.status == VerifyStatus::pass);
    REQUIRE(report.matches_general);
    CHECK(*report.matches_general);
    const IdentityInstance general = general_instance(inst);
    CHECK(general.id == IdentityId::EQ16);
    CHECK(verify(general).status == VerifyStatus::pass);
    CHECK(build_lhs(general) == conclusion_lhs(inst));
    CHECK(build_rhs(general) == conclusion_rhs(inst));
}

TEST_CASE("Xi1 conclusion with c = -1 is a pole")
{
    ConclusionInstance inst;
    inst.id = ConclusionId::EQ23;
    inst.params = FamilyParams{2, {q(1), q(2)}, {q(3)}, {q(-1)}};
    inst.r = 2;
    CHECK(check_conclusion(inst).report.status == VerifyStatus::pole);
}

TEST_CASE("confluent conclusions need two variables")
{
    ConclusionInstance inst;
    inst.id = ConclusionId::EQ25;
    inst.params.n = 1;
    CHECK(check_conclusion(inst).report.status == VerifyStatus::not_applicable);
}

TEST_CASE("printed argument list x1,...,x1 fails")
{
    ConclusionInstance inst;
    inst.id = ConclusionId::EQ22;
    inst.params = FamilyParams{2, {q(1), q("1/2")}, {q(3), q(-2)}, {q("5/3")}};
    inst.r = 1;
    CHECK(check_conclusion(inst).report.status == VerifyStatus::pass);
    inst.reading = Reading::literal;
    CHECK(check_conclusion(inst).report.status == VerifyStatus::fail);
}

TEST_CASE("random conclusions are pole-free and consistent with the general identities")
{
    for (ConclusionId id : all_conclusion_ids()) {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            CAPTURE(to_string(id));
            const ConclusionInstance inst = random_conclusion(seed, id, 2 + seed % 2);
            const ConclusionReport report = check_conclusion(inst);
            CHECK(report.report.status == VerifyStatus::pass);
            CHECK(report.matches_general == std::optional<bool>(true));
        }
    }
}

}
