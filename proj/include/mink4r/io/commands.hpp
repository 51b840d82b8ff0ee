#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mink4r/coupler_curve.hpp"
#include "mink4r/io/config.hpp"

// The CLI subcommands as pure functions from a job to file contents; the
// executable only handles flags and file IO.

namespace mink4r::io {

/// Throws ValidationError when a command's preconditions on the job fail.
std::string analyze_text(const JobConfig& cfg);
std::string analyze_json(const JobConfig& cfg);

struct SweepOutput {
    std::string csv;
    std::size_t samples = 0;
    std::size_t feasible_samples = 0;
};

/// Header theta,root,branch,psi,phi,zeta,feasible. One row per solution,
/// or a single feasible=0 row for a sample without solutions.
SweepOutput sweep_csv(const JobConfig& cfg);

struct TraceOutput {
    std::string content;
    CouplerTrace trace;
    std::size_t points = 0;
};

/// Header theta,root,branch,X,Y in sample order. Requires cfg.point.
TraceOutput trace_csv(const JobConfig& cfg);
TraceOutput trace_svg(const JobConfig& cfg);

struct SexticOutput {
    std::string text;
    SexticCurve curve;
    double max_residual = 0.0;
    std::size_t evaluated = 0;
};

/// Normalized coefficient table plus a residual summary over cfg.samples
/// theta values of the sweep range.
SexticOutput sextic_report(const JobConfig& cfg);

struct AnimationOutput {
    /// (file name, SVG) per rendered frame.
    std::vector<std::pair<std::string, std::string>> frames;
    /// CSV frame,theta,status with one row per requested frame.
    std::string manifest;
};

/// cfg.frames values of theta spread over the sweep range (its low end when
/// frames == 1); draws the first solution of each feasible frame.
AnimationOutput animate(const JobConfig& cfg);

}  // namespace mink4r::io
