#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "mink4r/coupler_curve.hpp"
#include "mink4r/errors.hpp"
#include "mink4r/fourbar.hpp"

namespace mink4r::io {

/// Malformed JSON.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed input that violates the job schema.
class ValidationError : public Error {
public:
    using Error::Error;
};

struct SweepRange {
    double lo = -3.0;
    double hi = 3.0;
    std::size_t steps = 601;
};

enum class OutputFormat { Csv, Svg };

struct JobConfig {
    LinkageParams params{1.0, 1.0, 1.0, 1.0};
    SolveMode mode = SolveMode::Strict;
    double tol = 1e-9;
    std::optional<CouplerPoint> point;
    std::optional<SweepRange> sweep;

    // Set from the command line only.
    std::optional<std::string> out_path;
    OutputFormat format = OutputFormat::Csv;
    bool json = false;
    std::size_t samples = 100;
    std::size_t frames = 24;
    std::string out_dir = "frames";

    SweepRange sweep_or_default() const { return sweep.value_or(SweepRange{}); }
    SolverOptions solver_options() const {
        SolverOptions o;
        o.mode = mode;
        return o;
    }
};

/// Parses a JSON job description. Required keys a, b, g, h (positive
/// numbers); optional mode ("strict" | "extended"), tol, point {x, y},
/// sweep {lo, hi, steps}. Unknown keys are rejected by name.
JobConfig parse_config(std::string_view text);

/// Checks steps >= 2 and lo < hi. Throws ValidationError.
void validate_sweep(const SweepRange& s);

SolveMode parse_mode(std::string_view s);

}  // namespace mink4r::io
