#ifndef KDF_JSON_IO_HPP
#define KDF_JSON_IO_HPP

#include <string_view>

#include <json.hpp>

#include <kdf/identities.hpp>
#include <kdf/kdf_spec.hpp>
#include <kdf/numeval.hpp>
#include <kdf/reductions.hpp>
#include <kdf/series.hpp>

// Document formats. Rationals are "p/q" strings; plain JSON integers are
// accepted on input. Every reader throws ParseError on malformed input.
namespace kdf::json_io {

using Json = nlohmann::ordered_json;

Json parse_document(std::string_view text);

Json rational_to_json(const Rational &value);
Rational rational_from_json(const Json &j);

Json spec_to_json(const KdfSpec &spec);
KdfSpec spec_from_json(const Json &j);

Json binding_to_json(const SlotBinding &binding);
SlotBinding binding_from_json(const Json &j);

Json instance_to_json(const IdentityInstance &instance);
IdentityInstance instance_from_json(const Json &j);

Json report_to_json(const VerificationReport &report);
VerificationReport report_from_json(const Json &j);

Json series_to_json(const TruncatedSeries &series);

Json family_to_json(FamilyKind kind, const FamilyParams &params);
FamilyParams family_from_json(const Json &j, FamilyKind *kind = nullptr);

Json conclusion_to_json(const ConclusionInstance &instance);
ConclusionInstance conclusion_from_json(const Json &j);

Json eval_to_json(const EvalResult &result);
Json numeric_to_json(const NumericReport &report);

} // namespace kdf::json_io

#endif
