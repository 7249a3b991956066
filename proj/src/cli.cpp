#include <kdf/cli.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <kdf/errors.hpp>
#include <kdf/json_io.hpp>
#include <kdf/numeval.hpp>
#include <kdf/reductions.hpp>

namespace kdf::cli {

namespace {

using json_io::Json;

constexpr unsigned kErrataCap = 6;
constexpr unsigned kErrataAttempts = 400;

std::string read_input(const RunConfig &config)
{
    if (!config.input_path) {
        throw ParseError("this command needs an input document path");
    }
    std::ifstream in(*config.input_path);
    if (!in) {
        throw ParseError("cannot open '" + *config.input_path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(std::ostream &out, const Json &doc)
{
    out << doc.dump(2) << '\n';
}

std::string describe(const VerificationReport &report)
{
    std::ostringstream s;
    s << to_string(report.status) << "  cap=" << report.cap_checked
      << "  compared=" << report.coefficients_compared.get_str();
    if (report.first_mismatch) {
        s << "  first mismatch at " << format_monomial(report.first_mismatch->monomial)
          << ": lhs=" << report.first_mismatch->lhs << " rhs=" << report.first_mismatch->rhs;
    }
    if (!report.note.empty()) {
        s << "  (" << report.note << ")";
    }
    return s.str();
}

std::vector<IdentityId> selected_ids(const RunConfig &config)
{
    if (config.id) {
        return {parse_identity_id(*config.id)};
    }
    return {all_identity_ids().begin(), all_identity_ids().end()};
}

// Runs job(0..total-1) on a worker pool; results land in their own slots,
// so the merge order never depends on scheduling.
template <class Result, class Job>
std::vector<Result> fan_out(std::size_t total, unsigned threads, Job job)
{
    std::vector<Result> results(total);
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t task = next++; task < total; task = next++) {
                    results[task] = job(task);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return results;
}

unsigned worker_count(const RunConfig &config)
{
    if (config.threads > 0) {
        return config.threads;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// n in {1,2,3}, p, l, q_t, m_t <= 2, then raised to what the id needs.
Shape draw_shape(std::mt19937_64 &engine, IdentityId id)
{
    const auto upto = [&](std::size_t hi) { return static_cast<std::size_t>(engine() % (hi + 1)); };
    const std::size_t n = 1 + upto(2);
    Shape s;
    s.p = upto(2);
    s.l = upto(2);
    for (std::size_t t = 0; t < n; ++t) {
        s.q.push_back(upto(2));
        s.m.push_back(upto(2));
    }
    const Shape need = minimal_shape(id, n);
    s.p = std::max(s.p, need.p);
    s.q[0] = std::max(s.q[0], need.q[0]);
    s.m[0] = std::max(s.m[0], need.m[0]);
    return s;
}

struct FuzzOutcome {
    std::optional<IdentityInstance> instance;
    VerificationReport report;
};

int run_expand(const RunConfig &config, std::ostream &out)
{
    const Json doc = json_io::parse_document(read_input(config));
    // Either a bare spec or {spec, binding?, vars?, cap?}.
    const bool wrapped = doc.is_object() && doc.contains("spec");
    const KdfSpec spec = json_io::spec_from_json(wrapped ? doc["spec"] : doc);
    SlotBinding binding = SlotBinding::identity(spec.slots());
    std::size_t vars = spec.slots();
    unsigned cap = config.cap.value_or(7);
    if (wrapped) {
        if (doc.contains("binding")) {
            binding = json_io::binding_from_json(doc["binding"]);
        }
        if (doc.contains("vars")) {
            vars = doc["vars"].get<std::size_t>();
        }
        if (!config.cap && doc.contains("cap")) {
            cap = doc["cap"].get<unsigned>();
        }
    }
    try {
        const TruncatedSeries series = expand(spec, binding, vars, cap);
        if (config.output == Output::json) {
            emit(out, json_io::series_to_json(series));
        } else {
            out << to_text(series);
        }
    } catch (const PoleInParameters &e) {
        if (config.output == Output::json) {
            emit(out, Json{{"status", "pole"}, {"note", e.what()}});
        } else {
            out << "pole: " << e.what() << '\n';
        }
    }
    return 0;
}

int run_verify(const RunConfig &config, std::ostream &out)
{
    IdentityInstance instance = json_io::instance_from_json(json_io::parse_document(read_input(config)));
    if (config.reading) {
        instance.reading = *config.reading;
    }
    if (config.cap) {
        instance.cap = *config.cap;
    }
    const VerificationReport report = verify(instance);
    if (config.output == Output::json) {
        emit(out, json_io::report_to_json(report));
    } else {
        out << to_string(instance.id) << " (" << to_string(instance.reading) << ")  " << describe(report) << '\n';
    }
    return report.status == VerifyStatus::fail ? 1 : 0;
}

int run_fuzz(const RunConfig &config, std::ostream &out)
{
    const std::vector<IdentityId> ids = selected_ids(config);
    const std::size_t per_id = config.count;
    RandomInstanceOptions options;
    options.reading = config.reading.value_or(Reading::corrected);

    const auto outcomes = fan_out<FuzzOutcome>(ids.size() * per_id, worker_count(config), [&](std::size_t task) {
        const IdentityId id = ids[task / per_id];
        const std::size_t index = task % per_id;
        std::mt19937_64 engine(derive_seed(config.seed, static_cast<std::uint64_t>(id), index));
        RandomInstanceOptions opts = options;
        // the power identities keep their own 2P+3 cap
        opts.cap = identity_info(id).uses_power ? std::nullopt : std::optional<unsigned>(config.cap.value_or(7));
        FuzzOutcome outcome;
        try {
            const Shape shape = draw_shape(engine, id);
            outcome.instance = random_instance(engine(), id, shape, opts);
            outcome.report = verify(*outcome.instance);
        } catch (const ExhaustedRetries &e) {
            outcome.report.status = VerifyStatus::pole;
            outcome.report.note = e.what();
        }
        return outcome;
    });

    bool any_fail = false;
    Json rows = Json::array();
    for (std::size_t k = 0; k < ids.size(); ++k) {
        std::size_t counts[4] = {0, 0, 0, 0};
        Json failures = Json::array();
        for (std::size_t j = 0; j < per_id; ++j) {
            const FuzzOutcome &o = outcomes[k * per_id + j];
            ++counts[static_cast<int>(o.report.status)];
            if (o.report.status == VerifyStatus::fail) {
                Json f{{"index", j}, {"report", json_io::report_to_json(o.report)}};
                if (o.instance) {
                    f["instance"] = json_io::instance_to_json(*o.instance);
                }
                failures.push_back(std::move(f));
            }
        }
        any_fail = any_fail || counts[1] > 0;
        rows.push_back({{"id", to_string(ids[k])},
                        {"total", per_id},
                        {"pass", counts[0]},
                        {"fail", counts[1]},
                        {"pole", counts[2]},
                        {"notApplicable", counts[3]},
                        {"failures", std::move(failures)}});
    }

    if (config.output == Output::json) {
        Json doc;
        doc["command"] = "fuzz";
        doc["seed"] = std::to_string(config.seed);
        doc["count"] = per_id;
        doc["cap"] = config.cap.value_or(7);
        doc["reading"] = to_string(options.reading);
        doc["rows"] = std::move(rows);
        emit(out, doc);
    } else {
        for (const auto &row : rows) {
            out << row["id"].get<std::string>() << "\tpass " << row["pass"] << "/" << row["total"] << "\tfail "
                << row["fail"] << "\tpole " << row["pole"] << "\tn/a " << row["notApplicable"] << '\n';
            for (const auto &f : row["failures"]) {
                out << "  #" << f["index"] << " " << f["report"].dump() << '\n';
            }
        }
    }
    return any_fail ? 1 : 0;
}

Json conclusion_row(const ConclusionInstance &instance, const ConclusionReport &report)
{
    Json row{{"instance", json_io::conclusion_to_json(instance)}, {"report", json_io::report_to_json(report.report)}};
    if (report.matches_general) {
        row["matchesGeneral"] = *report.matches_general;
    }
    return row;
}

bool conclusion_failed(const ConclusionReport &report)
{
    return report.report.status == VerifyStatus::fail || report.matches_general == std::optional<bool>(false);
}

int run_conclusions(const RunConfig &config, std::ostream &out)
{
    if (config.input_path) {
        ConclusionInstance instance = json_io::conclusion_from_json(json_io::parse_document(read_input(config)));
        if (config.reading) {
            instance.reading = *config.reading;
        }
        if (config.cap) {
            instance.cap = *config.cap;
        }
        const ConclusionReport report = check_conclusion(instance);
        if (config.output == Output::json) {
            emit(out, conclusion_row(instance, report));
        } else {
            out << to_string(instance.id) << " (" << to_string(instance.reading) << ")  " << describe(report.report);
            if (report.matches_general) {
                out << "  matches " << to_string(conclusion_parent(instance.id)) << ": "
                    << (*report.matches_general ? "yes" : "NO");
            }
            out << '\n';
        }
        return conclusion_failed(report) ? 1 : 0;
    }

    std::vector<ConclusionId> ids(all_conclusion_ids().begin(), all_conclusion_ids().end());
    if (config.id) {
        ids = {parse_conclusion_id(*config.id)};
    }
    const std::size_t per_id = config.count;
    const Reading reading = config.reading.value_or(Reading::corrected);
    using Outcome = std::pair<ConclusionInstance, ConclusionReport>;
    const auto outcomes = fan_out<Outcome>(ids.size() * per_id, worker_count(config), [&](std::size_t task) {
        const ConclusionId id = ids[task / per_id];
        std::mt19937_64 engine(derive_seed(config.seed, 100 + static_cast<std::uint64_t>(id), task % per_id));
        const bool confluent = id == ConclusionId::EQ23 || id == ConclusionId::EQ25;
        const std::size_t n = confluent ? 2 + engine() % 2 : 1 + engine() % 3;
        ConclusionInstance inst = random_conclusion(engine(), id, n, 4, config.cap.value_or(6), reading);
        return Outcome{inst, check_conclusion(inst)};
    });

    bool any_fail = false;
    Json rows = Json::array();
    for (std::size_t k = 0; k < ids.size(); ++k) {
        std::size_t counts[4] = {0, 0, 0, 0};
        std::size_t matching = 0;
        Json failures = Json::array();
        for (std::size_t j = 0; j < per_id; ++j) {
            const auto &[inst, report] = outcomes[k * per_id + j];
            ++counts[static_cast<int>(report.report.status)];
            matching += report.matches_general.value_or(false) ? 1 : 0;
            if (conclusion_failed(report)) {
                failures.push_back(conclusion_row(inst, report));
            }
        }
        any_fail = any_fail || !failures.empty();
        rows.push_back({{"id", to_string(ids[k])},
                        {"total", per_id},
                        {"pass", counts[0]},
                        {"fail", counts[1]},
                        {"pole", counts[2]},
                        {"notApplicable", counts[3]},
                        {"matchesGeneral", matching},
                        {"failures", std::move(failures)}});
    }
    if (config.output == Output::json) {
        emit(out, Json{{"command", "conclusions"},
                       {"seed", std::to_string(config.seed)},
                       {"count", per_id},
                       {"reading", to_string(reading)},
                       {"rows", std::move(rows)}});
    } else {
        for (const auto &row : rows) {
            out << row["id"].get<std::string>() << "\tpass " << row["pass"] << "/" << row["total"] << "\tfail "
                << row["fail"] << "\tpole " << row["pole"] << "\tmatches general " << row["matchesGeneral"] << '\n';
        }
    }
    return any_fail ? 1 : 0;
}

std::vector<double> point_from(const RunConfig &config, const Json &doc, std::size_t n)
{
    std::vector<double> point = config.point;
    if (point.empty() && doc.contains("point")) {
        point = doc["point"].get<std::vector<double>>();
    }
    if (point.empty()) {
        throw ParseError("eval needs a point (--point x1,x2,... or a \"point\" field)");
    }
    if (point.size() != n) {
        throw ParseError("point has " + std::to_string(point.size()) + " coordinates, expected "
                         + std::to_string(n));
    }
    return point;
}

int run_eval(const RunConfig &config, std::ostream &out)
{
    const Json doc = json_io::parse_document(read_input(config));
    // An identity instance document (has "id") runs the numeric identity check.
    if (doc.is_object() && doc.contains("id")) {
        IdentityInstance instance = json_io::instance_from_json(doc);
        if (config.reading) {
            instance.reading = *config.reading;
        }
        const double tol = doc.contains("relTol") ? doc["relTol"].get<double>() : 1e-8;
        const NumericReport report = numeric_verify(instance, point_from(config, doc, instance.spec.slots()), tol);
        if (config.output == Output::json) {
            emit(out, json_io::numeric_to_json(report));
        } else {
            out << to_string(instance.id) << "  " << to_string(report.status) << "  lhs=" << report.lhs
                << " rhs=" << report.rhs << " rel=" << report.rel_diff;
            if (!report.note.empty()) {
                out << "  (" << report.note << ")";
            }
            out << '\n';
        }
        return report.status == VerifyStatus::fail ? 1 : 0;
    }

    const bool wrapped = doc.is_object() && doc.contains("spec");
    const KdfSpec spec = json_io::spec_from_json(wrapped ? doc["spec"] : doc);
    const unsigned cap = config.cap.value_or(wrapped && doc.contains("cap") ? doc["cap"].get<unsigned>() : 30);
    const std::vector<double> point = point_from(config, wrapped ? doc : Json::object(), spec.slots());
    try {
        const EvalResult result = evaluate(spec, point, cap);
        if (config.output == Output::json) {
            emit(out, json_io::eval_to_json(result));
        } else {
            std::ostringstream value;
            value.precision(17);
            value << result.value;
            out << "value " << value.str() << "  terms " << result.terms_used << "  tail " << result.tail_estimate
                << "  domain " << (result.domain_ok ? "ok" : "violated") << '\n';
        }
    } catch (const PoleInParameters &e) {
        out << "pole: " << e.what() << '\n';
    }
    return 0;
}

int run_list(const RunConfig &config, std::ostream &out)
{
    Json rows = Json::array();
    for (IdentityId id : all_identity_ids()) {
        const IdentityInfo &info = identity_info(id);
        rows.push_back({{"id", to_string(id)},
                        {"family", std::string(info.family)},
                        {"summary", std::string(info.summary)},
                        {"erratum", std::string(info.erratum)},
                        {"powerAlpha", info.uses_power}});
    }
    for (ConclusionId id : all_conclusion_ids()) {
        rows.push_back({{"id", to_string(id)},
                        {"family", to_string(conclusion_family(id))},
                        {"summary", "specialization of " + to_string(conclusion_parent(id)) + " to "
                                        + to_string(conclusion_family(id))},
                        {"erratum", id == ConclusionId::EQ22 || id == ConclusionId::EQ23
                                        ? "right-hand arguments printed as x1,...,x1"
                                        : "sum uses 1+k, printed 1+r; factor (1+r)_r/(r)_r, printed 2"},
                        {"powerAlpha", false}});
    }
    if (config.output == Output::json) {
        emit(out, rows);
    } else {
        for (const auto &row : rows) {
            out << row["id"].get<std::string>() << "\t" << row["summary"].get<std::string>() << '\n';
            if (!row["erratum"].get<std::string>().empty()) {
                out << "\terratum: " << row["erratum"].get<std::string>() << '\n';
            }
        }
    }
    return 0;
}

struct ErrataEntry {
    std::string id;
    std::string erratum;
    Json corrected;
    Json literal;
    Json corrected_report;
    Json literal_report;
    bool found = false;
};

ErrataEntry identity_erratum(IdentityId id, std::uint64_t seed)
{
    ErrataEntry entry;
    entry.id = to_string(id);
    entry.erratum = std::string(identity_info(id).erratum);
    RandomInstanceOptions options;
    options.cap = kErrataCap;
    for (unsigned attempt = 0; attempt < kErrataAttempts && !entry.found; ++attempt) {
        std::mt19937_64 engine(derive_seed(seed, 1000 + static_cast<std::uint64_t>(id), attempt));
        const Shape shape = draw_shape(engine, id);
        IdentityInstance corrected;
        try {
            corrected = random_instance(engine(), id, shape, options);
        } catch (const ExhaustedRetries &) {
            continue;
        }
        IdentityInstance literal = corrected;
        literal.reading = Reading::literal;
        const VerificationReport good = verify(corrected);
        const VerificationReport bad = verify(literal);
        if (good.status == VerifyStatus::pass && bad.status == VerifyStatus::fail) {
            entry.found = true;
            entry.corrected = json_io::instance_to_json(corrected);
            entry.literal = json_io::instance_to_json(literal);
            entry.corrected_report = json_io::report_to_json(good);
            entry.literal_report = json_io::report_to_json(bad);
        }
    }
    return entry;
}

ErrataEntry conclusion_erratum(ConclusionId id, std::uint64_t seed)
{
    ErrataEntry entry;
    entry.id = to_string(id);
    entry.erratum = id == ConclusionId::EQ22 || id == ConclusionId::EQ23
                        ? "right-hand arguments are x1,...,xn, printed x1,...,x1"
                        : "sum uses 1+k, printed 1+r; factor (1+r)_r/(r)_r, printed 2";
    for (unsigned attempt = 0; attempt < kErrataAttempts && !entry.found; ++attempt) {
        std::mt19937_64 engine(derive_seed(seed, 2000 + static_cast<std::uint64_t>(id), attempt));
        const std::size_t n = 2 + engine() % 2;
        ConclusionInstance corrected;
        try {
            corrected = random_conclusion(engine(), id, n, 4, kErrataCap);
        } catch (const ExhaustedRetries &) {
            continue;
        }
        ConclusionInstance literal = corrected;
        literal.reading = Reading::literal;
        const ConclusionReport good = check_conclusion(corrected);
        const ConclusionReport bad = check_conclusion(literal);
        if (good.report.status == VerifyStatus::pass && good.matches_general == std::optional<bool>(true)
            && bad.report.status == VerifyStatus::fail) {
            entry.found = true;
            entry.corrected = json_io::conclusion_to_json(corrected);
            entry.literal = json_io::conclusion_to_json(literal);
            entry.corrected_report = json_io::report_to_json(good.report);
            entry.literal_report = json_io::report_to_json(bad.report);
        }
    }
    return entry;
}

int run_errata(const RunConfig &config, std::ostream &out)
{
    std::vector<IdentityId> ids;
    for (IdentityId id : all_identity_ids()) {
        if (!identity_info(id).erratum.empty()) {
            ids.push_back(id);
        }
    }
    const std::size_t total = ids.size() + all_conclusion_ids().size();
    const auto entries = fan_out<ErrataEntry>(total, worker_count(config), [&](std::size_t task) {
        if (task < ids.size()) {
            return identity_erratum(ids[task], config.seed);
        }
        return conclusion_erratum(all_conclusion_ids()[task - ids.size()], config.seed);
    });

    bool all_found = true;
    Json rows = Json::array();
    for (const auto &e : entries) {
        all_found = all_found && e.found;
        Json row{{"id", e.id}, {"erratum", e.erratum}, {"found", e.found}};
        if (e.found) {
            row["corrected"] = {{"instance", e.corrected}, {"report", e.corrected_report}};
            row["literal"] = {{"instance", e.literal}, {"report", e.literal_report}};
        }
        rows.push_back(std::move(row));
    }
    if (config.output == Output::json) {
        emit(out, Json{{"command", "errata"}, {"seed", std::to_string(config.seed)}, {"cap", kErrataCap}, {"rows", rows}});
    } else {
        for (const auto &row : rows) {
            out << row["id"].get<std::string>() << "\t" << row["erratum"].get<std::string>() << '\n';
            if (!row["found"].get<bool>()) {
                out << "\tno corrected-pass / literal-fail pair found\n";
                continue;
            }
            out << "\tcorrected: " << row["corrected"]["report"]["status"].get<std::string>() << "  "
                << row["corrected"]["instance"].dump() << '\n';
            const Json &lit = row["literal"]["report"];
            out << "\tliteral:   " << lit["status"].get<std::string>() << " at monomial "
                << lit["firstMismatch"]["monomial"].dump() << " lhs=" << lit["firstMismatch"]["lhs"].get<std::string>()
                << " rhs=" << lit["firstMismatch"]["rhs"].get<std::string>() << '\n';
        }
    }
    // The literal failures are the point of this command; only a missing
    // witness counts as a failure.
    return all_found ? 0 : 1;
}

} // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    try {
        if (config.count < 1) {
            throw ParseError("--count must be at least 1");
        }
        switch (config.command) {
        case Command::expand:
            return run_expand(config, out);
        case Command::verify:
            return run_verify(config, out);
        case Command::fuzz:
            return run_fuzz(config, out);
        case Command::conclusions:
            return run_conclusions(config, out);
        case Command::eval:
            return run_eval(config, out);
        case Command::list:
            return run_list(config, out);
        case Command::errata:
            return run_errata(config, out);
        }
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception &e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact truncated-series checks of finite summation formulas for Kampe de Feriet series"};
    app.require_subcommand(1);
    RunConfig config;

    std::string format = "text";
    std::string reading;
    std::string point;
    const std::vector<std::pair<const char *, Command>> commands = {
        {"expand", Command::expand},     {"verify", Command::verify}, {"fuzz", Command::fuzz},
        {"conclusions", Command::conclusions}, {"eval", Command::eval},   {"list", Command::list},
        {"errata", Command::errata},
    };
    const std::map<std::string, const char *> help = {
        {"expand", "print the truncated series of a spec document"},
        {"verify", "verify one identity instance document"},
        {"fuzz", "verify --count random instances per identity"},
        {"conclusions", "check the Lauricella conclusion formulas"},
        {"eval", "evaluate a spec, or numerically check an instance, at --point"},
        {"list", "list the identity catalog"},
        {"errata", "show a corrected-pass / literal-fail pair per erratum"},
    };
    std::vector<CLI::App *> subs;
    for (const auto &[name, cmd] : commands) {
        CLI::App *sub = app.add_subcommand(name, help.at(name));
        sub->add_option("input", config.input_path, "input document (JSON)");
        sub->add_option("--seed", config.seed, "base seed");
        sub->add_option("--count", config.count, "instances per identity")->check(CLI::PositiveNumber);
        sub->add_option("--cap", config.cap, "total-degree truncation");
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--reading", reading, "corrected or literal")->check(CLI::IsMember({"corrected", "literal"}));
        sub->add_option("--id", config.id, "restrict to one id (EQn)");
        sub->add_option("--point", point, "comma-separated coordinates for eval");
        sub->add_option("--threads", config.threads, "worker threads (0 = all cores)");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    }

    for (std::size_t k = 0; k < subs.size(); ++k) {
        if (subs[k]->parsed()) {
            config.command = commands[k].second;
        }
    }
    config.output = format == "json" ? Output::json : Output::text;
    if (!reading.empty()) {
        config.reading = parse_reading(reading);
    }
    if (!point.empty()) {
        std::stringstream s(point);
        std::string item;
        while (std::getline(s, item, ',')) {
            try {
                config.point.push_back(std::stod(item));
            } catch (const std::exception &) {
                err << "parse error: bad --point coordinate '" << item << "'\n";
                return 2;
            }
        }
    }
    return run(config, out, err);
}

} // namespace kdf::cli
