#include "mink4r/io/report.hpp"

#include <sstream>

#include <json.hpp>

#include "mink4r/io/config.hpp"
#include "mink4r/io/format.hpp"

namespace mink4r::io {

using nlohmann::json;

AnalysisReport analyze(const LinkageParams& p, double tol) { return {p, classify(p, tol)}; }

std::string to_json(const AnalysisReport& r) {
    const auto& c = r.classification;
    json doc;
    doc["params"] = {{"a", r.params.a()}, {"b", r.params.b()}, {"g", r.params.g()}, {"h", r.params.h()}};
    doc["limits"] = {
        {"ch_theta_min", c.limits.ch_theta_min},   {"ch_theta_max", c.limits.ch_theta_max},
        {"ch_psi_min", c.limits.ch_psi_min},       {"ch_psi_max", c.limits.ch_psi_max},
        {"theta_min_exists", c.limits.theta_min_exists}, {"theta_max_exists", c.limits.theta_max_exists},
        {"psi_min_exists", c.limits.psi_min_exists},     {"psi_max_exists", c.limits.psi_max_exists},
    };
    doc["t"] = {{"T1", c.t.T1}, {"T2", c.t.T2}, {"T3", c.t.T3}, {"T4", c.t.T4}, {"T5", c.t.T5}};
    doc["branching"] = {
        {"kind", to_string(c.branching.kind)},
        {"ch_theta", c.branching.ch_theta},
        {"realizable", c.branching.realizable},
    };
    doc["subclass"] = to_string(c.subclass);
    doc["input_type"] = to_string(c.input_type);
    doc["output_type"] = to_string(c.output_type);
    doc["linkage_type"] = linkage_type_name(c.input_type, c.output_type);
    doc["grashof"] = c.grashof;
    return doc.dump(2) + "\n";
}

namespace {

template <typename Enum, std::size_t N>
Enum enum_from(const json& v, const Enum (&values)[N], const char* what) {
    const auto s = v.get<std::string>();
    for (Enum e : values)
        if (s == to_string(e)) return e;
    throw ValidationError(std::string("report: bad ") + what + " \"" + s + "\"");
}

}  // namespace

AnalysisReport report_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
    try {
        const json& pr = doc.at("params");
        const LinkageParams p{pr.at("a").get<double>(), pr.at("b").get<double>(), pr.at("g").get<double>(),
                              pr.at("h").get<double>()};
        const json& lim = doc.at("limits");
        const json& t = doc.at("t");
        const json& br = doc.at("branching");

        static constexpr Subclass kSub[] = {Subclass::Strange, Subclass::Rigid, Subclass::Reducible,
                                            Subclass::Irreducible};
        static constexpr CrankType kCrank[] = {CrankType::Crank, CrankType::Rocker, CrankType::Superrocker};
        static constexpr BranchingKind kBranch[] = {BranchingKind::Discrete, BranchingKind::NoBranching,
                                                    BranchingKind::AllPointsBranching};

        ClassificationReport c{
            TParams{t.at("T1").get<double>(), t.at("T2").get<double>(), t.at("T3").get<double>(),
                    t.at("T4").get<double>(), t.at("T5").get<double>()},
            enum_from(doc.at("subclass"), kSub, "subclass"),
            enum_from(doc.at("input_type"), kCrank, "input_type"),
            enum_from(doc.at("output_type"), kCrank, "output_type"),
            LimitReport{lim.at("ch_theta_min").get<double>(), lim.at("ch_theta_max").get<double>(),
                        lim.at("ch_psi_min").get<double>(), lim.at("ch_psi_max").get<double>(),
                        lim.at("theta_min_exists").get<bool>(), lim.at("theta_max_exists").get<bool>(),
                        lim.at("psi_min_exists").get<bool>(), lim.at("psi_max_exists").get<bool>()},
            BranchingPoints{enum_from(br.at("kind"), kBranch, "branching kind"), br.at("ch_theta").get<double>(),
                            br.at("realizable").get<bool>()},
            doc.at("grashof").get<bool>(),
        };
        return {p, c};
    } catch (const json::exception& e) {
        throw ValidationError(std::string("report: ") + e.what());
    }
}

namespace {

const char* type_word(CrankType t) { return to_string(t); }

std::string limit_line(const char* name, double v, bool exists) {
    return std::string(name) + " = " + format_number(v) + (exists ? "" : "  (no real angle)") + "\n";
}

}  // namespace

std::string render_text(const AnalysisReport& r) {
    const auto& c = r.classification;
    std::ostringstream os;
    os << "linkage: a=" << format_number(r.params.a()) << " b=" << format_number(r.params.b())
       << " g=" << format_number(r.params.g()) << " h=" << format_number(r.params.h()) << "\n";
    os << limit_line("ch(theta_min)", c.limits.ch_theta_min, c.limits.theta_min_exists);
    os << limit_line("ch(theta_max)", c.limits.ch_theta_max, c.limits.theta_max_exists);
    os << limit_line("ch(psi_min)", c.limits.ch_psi_min, c.limits.psi_min_exists);
    os << limit_line("ch(psi_max)", c.limits.ch_psi_max, c.limits.psi_max_exists);
    os << "T1 = " << format_number(c.t.T1) << ", T2 = " << format_number(c.t.T2) << ", T3 = " << format_number(c.t.T3)
       << ", T4 = " << format_number(c.t.T4) << ", T5 = " << format_number(c.t.T5) << "\n";
    switch (c.branching.kind) {
        case BranchingKind::Discrete:
            os << "branching: ch(theta) = " << format_number(c.branching.ch_theta)
               << (c.branching.realizable ? "" : "  (no real angle, no branching points)") << "\n";
            break;
        case BranchingKind::NoBranching: os << "branching: none (g = b, h != a)\n"; break;
        case BranchingKind::AllPointsBranching: os << "branching: every position (g = b, h = a)\n"; break;
    }
    os << "subclass: " << to_string(c.subclass) << "\n";
    os << "type: " << type_word(c.input_type) << "–" << type_word(c.output_type) << "\n";
    os << "grashof analog (l + s >= p + q): " << (c.grashof ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace mink4r::io
