#include <kdf/numeval.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

#include <kdf/errors.hpp>

namespace kdf {

namespace {

double list_poch_double(const ParamList &params, double &running, std::size_t k)
{
    // running holds prod (c)_{k-1}; multiply in the k-1 step
    if (k == 0) {
        running = 1.0;
        return running;
    }
    for (const auto &c : params) {
        running *= c.to_double() + static_cast<double>(k - 1);
    }
    return running;
}

std::vector<double> ratio_table(const ParamList &upper, const ParamList &lower, std::size_t len, bool with_factorial)
{
    std::vector<double> out(len + 1);
    double up = 1.0;
    double low = 1.0;
    double fact = 1.0;
    for (std::size_t k = 0; k <= len; ++k) {
        list_poch_double(upper, up, k);
        list_poch_double(lower, low, k);
        if (with_factorial && k > 0) {
            fact *= static_cast<double>(k);
        }
        out[k] = up / (low * fact);
    }
    return out;
}

} // namespace

bool in_domain(const KdfSpec &spec, std::span<const double> slot_values)
{
    const ConvergenceReport report = convergence_class(spec);
    const long p = static_cast<long>(spec.a.size());
    const long l = static_cast<long>(spec.alpha.size());
    double sum_roots = 0.0;
    double max_norm = 0.0;
    for (std::size_t u = 0; u < report.slots.size(); ++u) {
        const double y = std::abs(slot_values[u]);
        switch (report.slots[u].cls) {
        case ConvergenceClass::entire_direction:
            break;
        case ConvergenceClass::divergent:
            if (y != 0.0) {
                return false;
            }
            break;
        case ConvergenceClass::unit_domain:
            if (p > l) {
                sum_roots += std::pow(y, 1.0 / static_cast<double>(p - l));
            }
            max_norm = std::max(max_norm, y);
            break;
        }
    }
    return p > l ? sum_roots < 1.0 : max_norm < 1.0;
}

EvalResult evaluate(const KdfSpec &spec, const SlotBinding &binding, std::span<const double> point, unsigned cap)
{
    spec.validate();
    const std::size_t n = spec.slots();
    binding.validate(n, point.size());
    if (const auto pole = find_pole(spec, binding, cap)) {
        throw PoleInParameters(*pole);
    }

    std::vector<double> y(n);
    unsigned min_mult = binding.slots[0].mult;
    for (std::size_t t = 0; t < n; ++t) {
        y[t] = std::pow(point[binding.slots[t].var], static_cast<double>(binding.slots[t].mult));
        min_mult = std::min(min_mult, binding.slots[t].mult);
    }
    const std::vector<double> joined = ratio_table(spec.a, spec.alpha, cap / min_mult, false);
    std::vector<std::vector<double>> slot(n);
    for (std::size_t t = 0; t < n; ++t) {
        slot[t] = ratio_table(spec.b[t], spec.beta[t], cap / binding.slots[t].mult, true);
    }

    EvalResult result;
    result.terms_used = 0;
    std::vector<double> layers(cap + 1, 0.0);
    std::function<void(std::size_t, unsigned, unsigned, double)> walk = [&](std::size_t t, unsigned degree,
                                                                              unsigned total, double product) {
        if (t == n) {
            const double term = joined[total] * product;
            if (term != 0.0) {
                layers[degree] += term;
                ++result.terms_used;
            }
            return;
        }
        const unsigned mult = binding.slots[t].mult;
        double power = 1.0;
        for (unsigned s = 0; degree + mult * s <= cap; ++s) {
            walk(t + 1, degree + mult * s, total + s, product * slot[t][s] * power);
            power *= y[t];
            if (power == 0.0) {
                break;
            }
        }
    };
    walk(0, 0, 0, 1.0);

    for (double layer : layers) {
        result.value += layer;
    }
    result.terms_used = std::max(result.terms_used, 1UL);
    result.tail_estimate = std::abs(layers[cap]);
    result.domain_ok = in_domain(spec, y);
    return result;
}

EvalResult evaluate(const KdfSpec &spec, std::span<const double> point, unsigned cap)
{
    return evaluate(spec, SlotBinding::identity(spec.slots()), point, cap);
}

namespace {

double evaluate_side(const IdentitySide &side, std::span<const double> point, unsigned cap, bool &domain_ok)
{
    double total = 0.0;
    for (const auto &term : side.terms) {
        if (term.coefficient.is_zero()) {
            continue;
        }
        const EvalResult r = evaluate(term.spec, side.binding, point, cap);
        domain_ok = domain_ok && r.domain_ok;
        total += term.coefficient.to_double() * std::pow(point[0], static_cast<double>(term.x1_power)) * r.value;
    }
    return total;
}

} // namespace

NumericReport numeric_verify(const IdentityInstance &instance, std::span<const double> point, double rel_tol)
{
    NumericReport report;
    const VerificationReport gate = [&] {
        VerificationReport g;
        try {
            check_applicable(instance);
        } catch (const std::invalid_argument &e) {
            g.status = VerifyStatus::not_applicable;
            g.note = e.what();
            return g;
        }
        if (const auto bad = violations(instance); !bad.empty()) {
            g.status = VerifyStatus::pole;
            g.note = bad.front().text;
        }
        return g;
    }();
    if (gate.status != VerifyStatus::pass) {
        report.status = gate.status;
        report.note = gate.note;
        return report;
    }
    if (point.size() != instance.spec.slots()) {
        throw ShapeMismatch("point needs " + std::to_string(instance.spec.slots()) + " coordinates");
    }

    const unsigned cap = instance.cap + kNumericExtraDegrees;
    bool domain_ok = true;
    try {
        report.lhs = evaluate_side(lhs_terms(instance), point, cap, domain_ok);
        report.rhs = evaluate_side(rhs_terms(instance), point, cap, domain_ok);
    } catch (const PoleInParameters &e) {
        // the wider numeric cap can reach a pole the exact cap does not
        report.status = VerifyStatus::pole;
        report.note = e.what();
        return report;
    }
    if (!domain_ok) {
        report.status = VerifyStatus::not_applicable;
        report.note = "point outside the convergence domain of some term";
        return report;
    }
    const double scale = std::max({std::abs(report.lhs), std::abs(report.rhs), 1e-300});
    report.rel_diff = std::abs(report.lhs - report.rhs) / scale;
    report.status = report.rel_diff <= rel_tol ? VerifyStatus::pass : VerifyStatus::fail;
    return report;
}

} // namespace kdf
