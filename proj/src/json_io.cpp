#include <kdf/json_io.hpp>

#include <kdf/errors.hpp>

namespace kdf::json_io {

namespace {

[[noreturn]] void fail(const std::string &what)
{
    throw ParseError(what);
}

const Json &field(const Json &j, const char *name)
{
    if (!j.is_object()) {
        fail(std::string("expected an object holding '") + name + "'");
    }
    auto it = j.find(name);
    if (it == j.end()) {
        fail(std::string("missing field '") + name + "'");
    }
    return *it;
}

template <class T>
T unsigned_field(const Json &j, const char *name)
{
    const Json &v = field(j, name);
    if (!v.is_number_unsigned()) {
        fail(std::string("field '") + name + "' must be a nonnegative integer");
    }
    return v.get<T>();
}

std::string string_field(const Json &j, const char *name)
{
    const Json &v = field(j, name);
    if (!v.is_string()) {
        fail(std::string("field '") + name + "' must be a string");
    }
    return v.get<std::string>();
}

Json list_to_json(const ParamList &list)
{
    Json out = Json::array();
    for (const auto &v : list) {
        out.push_back(rational_to_json(v));
    }
    return out;
}

ParamList list_from_json(const Json &j, const char *name)
{
    if (!j.is_array()) {
        fail(std::string("field '") + name + "' must be a list of rationals");
    }
    ParamList out;
    for (const auto &v : j) {
        out.push_back(rational_from_json(v));
    }
    return out;
}

std::vector<ParamList> rows_from_json(const Json &j, const char *name)
{
    if (!j.is_array()) {
        fail(std::string("field '") + name + "' must be a list of lists");
    }
    std::vector<ParamList> out;
    for (const auto &row : j) {
        out.push_back(list_from_json(row, name));
    }
    return out;
}

Json monomial_to_json(const MultiIndex &m)
{
    Json out = Json::array();
    for (unsigned e : m.exponents()) {
        out.push_back(e);
    }
    return out;
}

} // namespace

Json parse_document(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
}

Json rational_to_json(const Rational &value)
{
    return value.to_string();
}

Rational rational_from_json(const Json &j)
{
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    fail("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

Json spec_to_json(const KdfSpec &spec)
{
    Json out;
    out["n"] = spec.slots();
    out["a"] = list_to_json(spec.a);
    out["alpha"] = list_to_json(spec.alpha);
    Json b = Json::array();
    Json beta = Json::array();
    for (std::size_t t = 0; t < spec.slots(); ++t) {
        b.push_back(list_to_json(spec.b[t]));
        beta.push_back(list_to_json(spec.beta[t]));
    }
    out["b"] = std::move(b);
    out["beta"] = std::move(beta);
    return out;
}

KdfSpec spec_from_json(const Json &j)
{
    KdfSpec spec;
    const auto n = unsigned_field<std::size_t>(j, "n");
    spec.a = list_from_json(field(j, "a"), "a");
    spec.alpha = list_from_json(field(j, "alpha"), "alpha");
    spec.b = rows_from_json(field(j, "b"), "b");
    spec.beta = rows_from_json(field(j, "beta"), "beta");
    if (n == 0 || spec.b.size() != n || spec.beta.size() != n) {
        fail("spec: b and beta must each hold n = " + std::to_string(n) + " rows (n >= 1)");
    }
    return spec;
}

Json binding_to_json(const SlotBinding &binding)
{
    Json out = Json::array();
    for (const auto &s : binding.slots) {
        out.push_back({{"var", s.var}, {"mult", s.mult}});
    }
    return out;
}

SlotBinding binding_from_json(const Json &j)
{
    if (!j.is_array()) {
        fail("binding must be a list of {var, mult}");
    }
    SlotBinding out;
    for (const auto &s : j) {
        out.slots.push_back({unsigned_field<std::size_t>(s, "var"), unsigned_field<unsigned>(s, "mult")});
    }
    return out;
}

Json instance_to_json(const IdentityInstance &instance)
{
    Json out;
    out["id"] = to_string(instance.id);
    out["spec"] = spec_to_json(instance.spec);
    out["i"] = instance.param_index;
    out["r"] = instance.r;
    if (instance.power_alpha) {
        out["powerAlpha"] = *instance.power_alpha;
    }
    out["reading"] = to_string(instance.reading);
    out["cap"] = instance.cap;
    return out;
}

IdentityInstance instance_from_json(const Json &j)
{
    IdentityInstance out;
    out.id = parse_identity_id(string_field(j, "id"));
    out.spec = spec_from_json(field(j, "spec"));
    out.param_index = j.contains("i") ? unsigned_field<std::size_t>(j, "i") : 1;
    out.r = unsigned_field<unsigned>(j, "r");
    if (j.contains("powerAlpha")) {
        out.power_alpha = unsigned_field<unsigned>(j, "powerAlpha");
    }
    out.reading = j.contains("reading") ? parse_reading(string_field(j, "reading")) : Reading::corrected;
    out.cap = j.contains("cap") ? unsigned_field<unsigned>(j, "cap") : default_cap(out.id, out.power_alpha);
    return out;
}

Json report_to_json(const VerificationReport &report)
{
    Json out;
    out["status"] = to_string(report.status);
    out["capChecked"] = report.cap_checked;
    out["coefficientsCompared"] = report.coefficients_compared.get_str();
    if (report.first_mismatch) {
        out["firstMismatch"] = {{"monomial", monomial_to_json(report.first_mismatch->monomial)},
                                {"lhs", rational_to_json(report.first_mismatch->lhs)},
                                {"rhs", rational_to_json(report.first_mismatch->rhs)}};
    }
    if (!report.note.empty()) {
        out["note"] = report.note;
    }
    return out;
}

VerificationReport report_from_json(const Json &j)
{
    VerificationReport out;
    out.status = parse_status(string_field(j, "status"));
    out.cap_checked = unsigned_field<unsigned>(j, "capChecked");
    const Json &count = field(j, "coefficientsCompared");
    if (count.is_string()) {
        out.coefficients_compared = Rational::parse(count.get<std::string>()).numerator();
    } else if (count.is_number_unsigned()) {
        out.coefficients_compared = BigInt(count.get<unsigned long>());
    } else {
        fail("coefficientsCompared must be an integer");
    }
    if (j.contains("firstMismatch")) {
        const Json &m = j["firstMismatch"];
        std::vector<unsigned> exps;
        for (const auto &e : field(m, "monomial")) {
            if (!e.is_number_unsigned()) {
                fail("monomial exponents must be nonnegative integers");
            }
            exps.push_back(e.get<unsigned>());
        }
        out.first_mismatch = CoefficientMismatch{MultiIndex(std::move(exps)), rational_from_json(field(m, "lhs")),
                                                 rational_from_json(field(m, "rhs"))};
    }
    if (j.contains("note")) {
        out.note = string_field(j, "note");
    }
    return out;
}

Json series_to_json(const TruncatedSeries &series)
{
    Json out;
    out["vars"] = series.var_count();
    out["cap"] = series.cap();
    Json terms = Json::array();
    for (const auto &[m, c] : series.terms()) {
        terms.push_back({{"monomial", monomial_to_json(m)}, {"coef", rational_to_json(c)}});
    }
    out["terms"] = std::move(terms);
    return out;
}

Json family_to_json(FamilyKind kind, const FamilyParams &params)
{
    Json out;
    out["kind"] = to_string(kind);
    out["n"] = params.n;
    out["a"] = list_to_json(params.a);
    out["b"] = list_to_json(params.b);
    if (params.c.size() == 1) {
        out["c"] = rational_to_json(params.c[0]);
    } else {
        out["c"] = list_to_json(params.c);
    }
    return out;
}

FamilyParams family_from_json(const Json &j, FamilyKind *kind)
{
    FamilyParams out;
    if (kind) {
        *kind = parse_family_kind(string_field(j, "kind"));
    }
    out.n = unsigned_field<std::size_t>(j, "n");
    out.a = j.contains("a") ? list_from_json(j["a"], "a") : ParamList{};
    out.b = j.contains("b") ? list_from_json(j["b"], "b") : ParamList{};
    if (j.contains("c")) {
        const Json &c = j["c"];
        out.c = c.is_array() ? list_from_json(c, "c") : ParamList{rational_from_json(c)};
    }
    return out;
}

Json conclusion_to_json(const ConclusionInstance &instance)
{
    Json out;
    out["id"] = to_string(instance.id);
    out["family"] = family_to_json(conclusion_family(instance.id), instance.params);
    out["r"] = instance.r;
    out["reading"] = to_string(instance.reading);
    out["cap"] = instance.cap;
    return out;
}

ConclusionInstance conclusion_from_json(const Json &j)
{
    ConclusionInstance out;
    out.id = parse_conclusion_id(string_field(j, "id"));
    FamilyKind kind;
    out.params = family_from_json(field(j, "family"), &kind);
    if (kind != conclusion_family(out.id)) {
        fail(to_string(out.id) + " is stated for " + to_string(conclusion_family(out.id)) + ", not "
             + to_string(kind));
    }
    out.r = unsigned_field<unsigned>(j, "r");
    out.reading = j.contains("reading") ? parse_reading(string_field(j, "reading")) : Reading::corrected;
    out.cap = j.contains("cap") ? unsigned_field<unsigned>(j, "cap") : 6;
    return out;
}

Json eval_to_json(const EvalResult &result)
{
    return {{"value", result.value},
            {"termsUsed", result.terms_used},
            {"tailEstimate", result.tail_estimate},
            {"domainOk", result.domain_ok}};
}

Json numeric_to_json(const NumericReport &report)
{
    Json out{{"status", to_string(report.status)},
             {"lhs", report.lhs},
             {"rhs", report.rhs},
             {"relDiff", report.rel_diff}};
    if (!report.note.empty()) {
        out["note"] = report.note;
    }
    return out;
}

} // namespace kdf::json_io
