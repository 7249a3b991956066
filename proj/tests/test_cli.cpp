#include <doctest.h>

#include <sstream>

#include <kdf/cli.hpp>
#include <kdf/errors.hpp>
#include <kdf/json_io.hpp>

#include "test_support.hpp"

using namespace kdf;

namespace {

const std::string kData = KDF_TEST_DATA_DIR;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_args(std::vector<std::string> args)
{
    args.insert(args.begin(), "kdf");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("json_io") {

TEST_CASE("spec round trip keeps exact rationals")
{
    const KdfSpec s{{q("1/2")}, {q(-3)}, {{q("7/3")}, {}}, {{}, {q("-5/2")}}};
    const auto j = json_io::spec_to_json(s);
    CHECK(j["a"][0] == "1/2");
    CHECK(j["alpha"][0] == "-3");
    CHECK(json_io::spec_from_json(j) == s);
}

TEST_CASE("integers are accepted as rationals")
{
    const auto j = json_io::parse_document(R"({"n":1,"a":[2],"alpha":[],"b":[["1/2"]],"beta":[[]]})");
    CHECK(json_io::spec_from_json(j).a == ParamList{q(2)});
}

TEST_CASE("malformed documents raise ParseError")
{
    CHECK_THROWS_AS(json_io::parse_document("{"), ParseError);
    CHECK_THROWS_AS(json_io::spec_from_json(json_io::parse_document(R"({"n":2,"a":[],"alpha":[],"b":[[]],"beta":[[]]})")),
                    ParseError);
    CHECK_THROWS_AS(json_io::rational_from_json(json_io::parse_document("1.5")), ParseError);
    CHECK_THROWS_AS(json_io::instance_from_json(json_io::parse_document(R"({"id":"EQ99"})")), ParseError);
}

TEST_CASE("instance and report round trips")
{
    IdentityInstance inst;
    inst.id = IdentityId::EQ18;
    inst.spec = KdfSpec{{q(3)}, {}, {{}}, {{}}};
    inst.power_alpha = 3;
    inst.r = 2;
    inst.cap = 9;
    inst.reading = Reading::literal;
    const IdentityInstance back = json_io::instance_from_json(json_io::instance_to_json(inst));
    CHECK(back.id == inst.id);
    CHECK(back.spec == inst.spec);
    CHECK(back.power_alpha == inst.power_alpha);
    CHECK(back.reading == inst.reading);
    CHECK(back.cap == 9);

    VerificationReport report;
    report.status = VerifyStatus::fail;
    report.cap_checked = 6;
    report.coefficients_compared = 28;
    report.first_mismatch = CoefficientMismatch{MultiIndex{1, 0}, q("1/2"), q(3)};
    const auto j = json_io::report_to_json(report);
    CHECK(j["firstMismatch"]["monomial"] == json_io::Json::array({1, 0}));
    const VerificationReport again = json_io::report_from_json(j);
    CHECK(again.status == VerifyStatus::fail);
    CHECK(again.coefficients_compared == 28);
    REQUIRE(again.first_mismatch);
    CHECK(again.first_mismatch->rhs == q(3));
}

TEST_CASE("family documents accept c as a string or a list")
{
    FamilyKind kind;
    const auto one = json_io::family_from_json(
        json_io::parse_document(R"({"kind":"F_D","n":2,"a":["1"],"b":["1/2","2"],"c":"3/2"})"), &kind);
    CHECK(kind == FamilyKind::F_D);
    CHECK(one.c == ParamList{q("3/2")});
    const auto many = json_io::family_from_json(
        json_io::parse_document(R"({"kind":"Psi2","n":2,"a":["1"],"c":["1","2"]})"), &kind);
    CHECK(kind == FamilyKind::Psi2);
    CHECK(many.c.size() == 2);
}

}

TEST_SUITE("cli") {

TEST_CASE("verify an r = 0 instance")
{
    const Outcome o = run_args({"verify", kData + "/r0_instance.json", "--format", "json"});
    CHECK(o.code == 0);
    CHECK(json_io::parse_document(o.out)["status"] == "pass");
}

TEST_CASE("verify the printed first-derivative sum")
{
    const Outcome o = run_args({"verify", kData + "/literal_eq6.json", "--format", "json"});
    CHECK(o.code == 1);
    const auto j = json_io::parse_document(o.out);
    CHECK(j["status"] == "fail");
    CHECK(j.contains("firstMismatch"));
    CHECK(run_args({"verify", kData + "/literal_eq6.json", "--reading", "corrected"}).code == 0);
}

TEST_CASE("parse failures exit with 2")
{
    CHECK(run_args({"verify", kData + "/malformed.json"}).code == 2);
    CHECK(run_args({"verify", kData + "/does_not_exist.json"}).code == 2);
    CHECK(run_args({"fuzz", "--format", "yaml"}).code == 2);
    CHECK(run_args({"fuzz", "--id", "EQ3"}).code == 2);
    CHECK(run_args({}).code == 2);
}

TEST_CASE("expand prints the canonical series")
{
    const Outcome o = run_args({"expand", kData + "/exp_spec.json", "--cap", "2"});
    CHECK(o.code == 0);
    CHECK(o.out == "1\n1 * x1\n1 * x2\n1/2 * x1^2\n1 * x1 x2\n1/2 * x2^2\n");
}

TEST_CASE("fuzz summary rows")
{
    const Outcome o = run_args({"fuzz", "--count", "5", "--seed", "3", "--format", "json"});
    CHECK(o.code == 0);
    const auto j = json_io::parse_document(o.out);
    CHECK(j["rows"].size() == 17);
    for (const auto &row : j["rows"]) {
        CHECK(row["pass"] == 5);
    }
    const Outcome literal = run_args({"fuzz", "--count", "10", "--id", "EQ6", "--reading", "literal"});
    CHECK(literal.code == 1);
}

TEST_CASE("fuzz output does not depend on the worker count")
{
    const Outcome one = run_args({"fuzz", "--count", "6", "--format", "json", "--threads", "1"});
    const Outcome many = run_args({"fuzz", "--count", "6", "--format", "json", "--threads", "8"});
    CHECK(one.out == many.out);
}

TEST_CASE("conclusions from a document and at random")
{
    const Outcome doc = run_args({"conclusions", kData + "/eq24_conclusion.json", "--format", "json"});
    CHECK(doc.code == 0);
    const auto j = json_io::parse_document(doc.out);
    CHECK(j["report"]["status"] == "pass");
    CHECK(j["matchesGeneral"] == true);
    CHECK(run_args({"conclusions", "--count", "5"}).code == 0);
}

TEST_CASE("eval of the exponential spec")
{
    const Outcome o = run_args({"eval", kData + "/exp_spec.json", "--point", "0.1,0.2", "--format", "json"});
    CHECK(o.code == 0);
    const auto j = json_io::parse_document(o.out);
    CHECK(j["value"].get<double>() == doctest::Approx(std::exp(0.3)).epsilon(1e-12));
    CHECK(run_args({"eval", kData + "/exp_spec.json"}).code == 2);
}

TEST_CASE("list and errata")
{
    const Outcome list = run_args({"list", "--format", "json"});
    CHECK(list.code == 0);
    CHECK(json_io::parse_document(list.out).size() == 21);
    const Outcome errata = run_args({"errata", "--format", "json"});
    CHECK(errata.code == 0);
    const auto doc = json_io::parse_document(errata.out);
    for (const auto &row : doc["rows"]) {
        CHECK(row["found"] == true);
    }
}

}
