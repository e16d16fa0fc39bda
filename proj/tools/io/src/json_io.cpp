#include "frameseq_io/json_io.hpp"

#include "frameseq/error.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

namespace frameseq::io {
namespace {

const json& require(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidArgument(std::string(where) + ": missing key \"" + key + "\"");
    }
    return j.at(key);
}

double require_number(const json& j, const char* key, const char* where) {
    const json& v = require(j, key, where);
    if (!v.is_number()) {
        throw InvalidArgument(std::string(where) + ": \"" + key + "\" must be a number");
    }
    return v.get<double>();
}

long require_integer(const json& j, const char* key, const char* where) {
    const json& v = require(j, key, where);
    if (!v.is_number_integer()) {
        throw InvalidArgument(std::string(where) + ": \"" + key + "\" must be an integer");
    }
    return v.get<long>();
}

std::vector<double> number_array(const json& v, const char* where) {
    if (!v.is_array()) {
        throw InvalidArgument(std::string(where) + " must be an array of numbers");
    }
    std::vector<double> out;
    for (const auto& e : v) {
        if (!e.is_number()) {
            throw InvalidArgument(std::string(where) + " must be an array of numbers");
        }
        out.push_back(e.get<double>());
    }
    return out;
}

// Single-key object {"name": body}.
std::pair<std::string, const json*> tagged(const json& j, const char* where) {
    if (!j.is_object() || j.size() != 1) {
        throw InvalidArgument(std::string(where) + " must be an object with exactly one key");
    }
    return {j.begin().key(), &j.begin().value()};
}

} // namespace

json load_json_arg(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    try {
        if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
            return json::parse(arg);
        }
        std::ifstream in(arg);
        if (!in) {
            throw InvalidArgument("cannot open JSON file: " + arg);
        }
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("JSON parse error: ") + e.what());
    }
}

FourierProfile profile_from_json(const json& j) {
    const json& pieces = require(j, "pieces", "profile");
    if (!pieces.is_array()) {
        throw InvalidArgument("profile: \"pieces\" must be an array");
    }
    std::vector<Piece> out;
    for (const auto& p : pieces) {
        Piece piece;
        piece.lo = require_number(p, "lo", "profile piece");
        piece.hi = require_number(p, "hi", "profile piece");
        const auto [kind, body] = tagged(require(p, "shape", "profile piece"), "profile shape");
        if (kind == "const") {
            if (!body->is_number()) {
                throw InvalidArgument("profile shape \"const\" must be a number");
            }
            piece.shape = ConstantShape{body->get<double>()};
        } else if (kind == "affine") {
            piece.shape = AffineShape{require_number(*body, "slope", "affine shape"),
                                      require_number(*body, "intercept", "affine shape")};
        } else if (kind == "sampled") {
            piece.shape = SampledShape{number_array(*body, "sampled shape")};
        } else {
            throw InvalidArgument("unknown profile shape \"" + kind + "\"");
        }
        out.push_back(std::move(piece));
    }
    return FourierProfile(std::move(out));
}

json to_json(const FourierProfile& profile) {
    json pieces = json::array();
    for (const auto& p : profile.pieces()) {
        json shape = std::visit(
            [](const auto& s) -> json {
                using S = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<S, ConstantShape>) {
                    return {{"const", s.value}};
                } else if constexpr (std::is_same_v<S, AffineShape>) {
                    return {{"affine", {{"slope", s.slope}, {"intercept", s.intercept}}}};
                } else {
                    return {{"sampled", s.cells}};
                }
            },
            p.shape);
        pieces.push_back({{"lo", p.lo}, {"hi", p.hi}, {"shape", shape}});
    }
    return {{"pieces", pieces}};
}

TimeEnvelope envelope_from_json(const json& j) {
    const auto [kind, body] = tagged(j, "envelope");
    if (kind == "power") {
        return TimeEnvelope::power(require_number(*body, "a", "power envelope"));
    }
    if (kind == "exponential") {
        const json& h = require(*body, "h", "exponential envelope");
        RateFunction rate;
        rate.scale = h.value("scale", 1.0);
        rate.power = h.value("power", 1.0);
        rate.log_power = h.value("log_power", 0.0);
        return TimeEnvelope::exponential(require_number(*body, "delta", "exponential envelope"), rate);
    }
    if (kind == "tabulated") {
        return TimeEnvelope::tabulated(number_array(require(*body, "x", "tabulated envelope"), "tabulated x"),
                                       number_array(require(*body, "f", "tabulated envelope"), "tabulated f"));
    }
    throw InvalidArgument("unknown envelope kind \"" + kind + "\"");
}

json to_json(const TimeEnvelope& e) {
    switch (e.kind()) {
    case TimeEnvelope::Kind::power:
        return {{"power", {{"a", *e.power_exponent()}}}};
    case TimeEnvelope::Kind::exponential:
        return {{"exponential",
                 {{"delta", e.delta()},
                  {"h", {{"scale", e.rate().scale}, {"power", e.rate().power}, {"log_power", e.rate().log_power}}}}}};
    case TimeEnvelope::Kind::tabulated:
        return {{"tabulated",
                 {{"x", std::vector<double>(e.knots_x().begin(), e.knots_x().end())},
                  {"f", std::vector<double>(e.knots_f().begin(), e.knots_f().end())}}}};
    }
    return nullptr;
}

TranslationSet lambda_from_spec(const std::string& spec, long window) {
    if (spec == "Z") {
        return TranslationSet::integers(window);
    }
    if (spec == "N") {
        return TranslationSet::naturals(window);
    }
    static const std::regex multiples(R"(^([0-9]+)Z$)");
    std::smatch match;
    if (std::regex_match(spec, match, multiples)) {
        return TranslationSet::multiples(std::stol(match[1].str()), window);
    }
    const json j = load_json_arg(spec);
    const auto [kind, body] = tagged(j, "translation set");
    if (kind == "integers") {
        return TranslationSet::integers(require_integer(*body, "N", "integers"));
    }
    if (kind == "naturals") {
        return TranslationSet::naturals(require_integer(*body, "N", "naturals"));
    }
    if (kind == "multiples") {
        return TranslationSet::multiples(require_integer(*body, "m", "multiples"), require_integer(*body, "N", "multiples"));
    }
    if (kind == "squares") {
        return TranslationSet::powers(2, require_integer(*body, "n_max", "squares"));
    }
    if (kind == "powers") {
        return TranslationSet::powers(static_cast<int>(require_integer(*body, "k", "powers")),
                                      require_integer(*body, "n_max", "powers"));
    }
    if (kind == "geometric") {
        return TranslationSet::geometric(require_integer(*body, "base", "geometric"),
                                         require_integer(*body, "n_max", "geometric"));
    }
    if (kind == "dyadic") {
        return TranslationSet::dyadic(require_number(*body, "alpha", "dyadic"), require_integer(*body, "n_max", "dyadic"));
    }
    if (kind == "points") {
        return TranslationSet::explicit_points(number_array(*body, "points"));
    }
    throw InvalidArgument("unknown translation set generator \"" + kind + "\"");
}

json number(double v) {
    if (std::isfinite(v)) {
        return v;
    }
    if (std::isnan(v)) {
        return "nan";
    }
    return v > 0 ? "inf" : "-inf";
}

json to_json(const EssentialBounds& b) {
    return {{"inf_nonzero", number(b.inf_nonzero)}, {"sup", number(b.sup)}, {"zero_fraction", number(b.zero_fraction)}};
}

json to_json(const FrameReport& r) {
    json evidence = json::array();
    for (const auto& e : r.evidence) {
        json values = json::object();
        for (const auto& [k, v] : e.values) {
            values[k] = number(v);
        }
        evidence.push_back({{"criterion", e.criterion}, {"rule", e.rule}, {"values", values}});
    }
    return {{"classification", to_string(r.classification)},
            {"A_est", number(r.A_est)},
            {"B_est", number(r.B_est)},
            {"numerical_rank", r.numerical_rank},
            {"A_phi", number(r.A_phi)},
            {"B_phi", number(r.B_phi)},
            {"b", r.b},
            {"spacing", r.spacing},
            {"grid_size", r.grid_size},
            {"window", r.window},
            {"evidence", evidence}};
}

json to_json(const CoverEstimate& c) {
    json per_depth = json::array();
    for (const auto& [d, s] : c.per_depth) {
        per_depth.push_back({{"depth", d}, {"measure_sum", number(s)}});
    }
    return {{"alpha", c.alpha},
            {"epsilon", c.epsilon},
            {"depth", c.depth},
            {"measure_sum", number(c.measure_sum)},
            {"boxes", c.intervals.size()},
            {"covered_points", c.covered_points},
            {"full_circle", c.full_circle},
            {"per_depth", per_depth}};
}

std::string config_hash(const json& config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : config.dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json make_report(const json& config, std::uint64_t seed) {
    return {{"schema", kSchema}, {"config", config}, {"config_hash", config_hash(config)}, {"seed", seed}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace frameseq::io
