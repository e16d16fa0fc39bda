#pragma once

#include "frameseq/constructions.hpp"
#include "frameseq/gram.hpp"
#include "frameseq/hausdorff.hpp"
#include "frameseq/periodization.hpp"
#include "frameseq/spectrum.hpp"
#include "frameseq/translation_set.hpp"

#include <json.hpp>

#include <string>

namespace frameseq::io {

using nlohmann::json;

inline constexpr const char* kSchema = "frameseq/1";

/// Inline JSON when the argument starts with '{' or '[', otherwise a path.
json load_json_arg(const std::string& arg);

/// {"pieces":[{"lo":0,"hi":0.5,"shape":{"const":1}}, ...]}; shapes are
/// {"const":c}, {"affine":{"slope":s,"intercept":t}}, {"sampled":[...]}.
FourierProfile profile_from_json(const json& j);
json to_json(const FourierProfile& profile);

/// {"power":{"a":0.75}}, {"exponential":{"delta":d,"h":{"scale":..,"power":..,"log_power":..}}}
/// or {"tabulated":{"x":[...],"f":[...]}}.
TimeEnvelope envelope_from_json(const json& j);
json to_json(const TimeEnvelope& envelope);

/// "Z", "N" and "mZ" (e.g. "2Z") use the window; JSON generator specs:
/// {"integers":{"N":..}}, {"naturals":{"N":..}}, {"multiples":{"m":..,"N":..}},
/// {"squares":{"n_max":..}}, {"powers":{"k":..,"n_max":..}},
/// {"geometric":{"base":..,"n_max":..}}, {"dyadic":{"alpha":..,"n_max":..}},
/// {"points":[...]}.
TranslationSet lambda_from_spec(const std::string& spec, long window);

/// Numbers with non-finite values written as strings ("inf", "-inf", "nan").
json number(double v);

json to_json(const EssentialBounds& b);
json to_json(const FrameReport& report);
json to_json(const CoverEstimate& cover);

/// FNV-1a 64-bit hash of the compact dump, as 16 hex digits.
std::string config_hash(const json& config);

/// Report envelope: schema, config, config hash and seed.
json make_report(const json& config, std::uint64_t seed);

/// Pretty dump with a trailing newline.
std::string dump(const json& j);

} // namespace frameseq::io
