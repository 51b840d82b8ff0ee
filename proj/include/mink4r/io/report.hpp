#pragma once

#include <string>
#include <string_view>

#include "mink4r/classify.hpp"

namespace mink4r::io {

/// Everything the analyze command reports about one linkage.
struct AnalysisReport {
    LinkageParams params;
    ClassificationReport classification;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const LinkageParams& p, double tol);

/// Stable-keyed JSON document (keys sorted, two-space indent, LF endings).
std::string to_json(const AnalysisReport& r);

/// Inverse of to_json. Throws ParseError / ValidationError.
AnalysisReport report_from_json(std::string_view text);

std::string render_text(const AnalysisReport& r);

}  // namespace mink4r::io
