#include "mink4r/io/config.hpp"

#include <cmath>
#include <initializer_list>

#include <json.hpp>

namespace mink4r::io {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (auto a : allowed) ok = ok || key == a;
        if (!ok) throw ValidationError("unknown key \"" + key + "\"" + std::string(where));
    }
}

double number_at(const json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ValidationError(std::string("missing required key \"") + key + "\"");
    if (!it->is_number()) throw ValidationError(std::string("key \"") + key + "\" must be a number");
    const double v = it->get<double>();
    if (!std::isfinite(v)) throw ValidationError(std::string("key \"") + key + "\" must be finite");
    return v;
}

double positive_at(const json& obj, const char* key) {
    const double v = number_at(obj, key);
    if (!(v > 0.0)) throw ValidationError(std::string("key \"") + key + "\" must be positive");
    return v;
}

}  // namespace

SolveMode parse_mode(std::string_view s) {
    if (s == "strict") return SolveMode::Strict;
    if (s == "extended") return SolveMode::Extended;
    throw ValidationError("mode must be \"strict\" or \"extended\", got \"" + std::string(s) + "\"");
}

void validate_sweep(const SweepRange& s) {
    if (s.steps < 2) throw ValidationError("sweep steps must be at least 2");
    if (!std::isfinite(s.lo) || !std::isfinite(s.hi) || !(s.lo < s.hi))
        throw ValidationError("sweep range must satisfy lo < hi");
}

JobConfig parse_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("config must be a JSON object");
    reject_unknown(doc, {"a", "b", "g", "h", "mode", "tol", "point", "sweep"}, "");

    JobConfig cfg;
    cfg.params = LinkageParams{positive_at(doc, "a"), positive_at(doc, "b"), positive_at(doc, "g"),
                               positive_at(doc, "h")};

    if (auto it = doc.find("mode"); it != doc.end()) {
        if (!it->is_string()) throw ValidationError("key \"mode\" must be a string");
        cfg.mode = parse_mode(it->get<std::string>());
    }
    if (doc.contains("tol")) {
        cfg.tol = number_at(doc, "tol");
        if (cfg.tol < 0.0) throw ValidationError("key \"tol\" must be non-negative");
    }
    if (auto it = doc.find("point"); it != doc.end()) {
        if (!it->is_object()) throw ValidationError("key \"point\" must be an object");
        reject_unknown(*it, {"x", "y"}, " in \"point\"");
        cfg.point = CouplerPoint{number_at(*it, "x"), number_at(*it, "y")};
    }
    if (auto it = doc.find("sweep"); it != doc.end()) {
        if (!it->is_object()) throw ValidationError("key \"sweep\" must be an object");
        reject_unknown(*it, {"lo", "hi", "steps"}, " in \"sweep\"");
        SweepRange s;
        s.lo = number_at(*it, "lo");
        s.hi = number_at(*it, "hi");
        const auto steps = it->find("steps");
        if (steps == it->end() || !steps->is_number_integer() || steps->get<long long>() < 0)
            throw ValidationError("key \"steps\" must be a non-negative integer");
        s.steps = steps->get<std::size_t>();
        validate_sweep(s);
        cfg.sweep = s;
    }
    return cfg;
}

}  // namespace mink4r::io
