#include "mink4r/io/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "mink4r/io/format.hpp"
#include "mink4r/io/report.hpp"
#include "mink4r/io/svg.hpp"

namespace mink4r::io {

namespace {

double sample_theta(const SweepRange& s, std::size_t k) {
    if (s.steps < 2) return s.lo;
    return s.lo + (s.hi - s.lo) * static_cast<double>(k) / static_cast<double>(s.steps - 1);
}

const CouplerPoint& require_point(const JobConfig& cfg) {
    if (!cfg.point) throw ValidationError("this command needs a coupler point (--px/--py or \"point\")");
    return *cfg.point;
}

const char* color_for(Root r, Branch b) {
    if (b == Branch::Standard) return r == Root::Plus ? "#000000" : "#1f77b4";
    return r == Root::Plus ? "#d62728" : "#ff7f0e";
}

std::string frame_name(std::size_t k) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "frame_%04zu.svg", k);
    return buf;
}

}  // namespace

std::string analyze_text(const JobConfig& cfg) { return render_text(analyze(cfg.params, cfg.tol)); }

std::string analyze_json(const JobConfig& cfg) { return to_json(analyze(cfg.params, cfg.tol)); }

SweepOutput sweep_csv(const JobConfig& cfg) {
    if (!cfg.sweep) throw ValidationError("sweep needs a theta range (--theta-lo/--theta-hi/--steps or \"sweep\")");
    const SweepRange s = *cfg.sweep;
    validate_sweep(s);
    const SolverOptions opts = cfg.solver_options();

    SweepOutput out;
    out.samples = s.steps;
    std::ostringstream os;
    os << "theta,root,branch,psi,phi,zeta,feasible\n";
    for (std::size_t k = 0; k < s.steps; ++k) {
        const double theta = sample_theta(s, k);
        const OutputSolve solved = solve_output_angle(cfg.params, theta, opts);
        if (solved.solutions.empty()) {
            os << format_number(theta) << ",,,,,,0\n";
            continue;
        }
        ++out.feasible_samples;
        std::string zeta;
        try {
            zeta = format_number(transmission_angle(cfg.params, theta).zeta);
        } catch (const DomainError&) {
        }
        for (const OutputSolution& sol : solved.solutions) {
            std::string phi;
            try {
                phi = format_number(coupler_frame(cfg.params, theta, sol).phi);
            } catch (const Error&) {
            }
            os << format_number(theta) << ',' << to_string(sol.root) << ',' << to_string(sol.branch) << ','
               << format_number(sol.psi) << ',' << phi << ',' << zeta << ",1\n";
        }
    }
    out.csv = os.str();
    return out;
}

namespace {

CouplerTrace run_trace(const JobConfig& cfg) {
    const SweepRange s = cfg.sweep_or_default();
    validate_sweep(s);
    return trace_curve(cfg.params, require_point(cfg), s.lo, s.hi, s.steps, cfg.solver_options());
}

}  // namespace

TraceOutput trace_csv(const JobConfig& cfg) {
    TraceOutput out;
    out.trace = run_trace(cfg);

    std::vector<std::tuple<double, Root, Branch, double, double>> rows;
    for (const Polyline& pl : out.trace.polylines)
        for (const TraceSample& t : pl.points) rows.emplace_back(t.theta, pl.root, pl.branch, t.X, t.Y);
    std::sort(rows.begin(), rows.end(), [](const auto& l, const auto& r) {
        return std::tie(std::get<0>(l), std::get<1>(l), std::get<2>(l)) <
               std::tie(std::get<0>(r), std::get<1>(r), std::get<2>(r));
    });

    std::ostringstream os;
    os << "theta,root,branch,X,Y\n";
    for (const auto& [theta, root, branch, X, Y] : rows)
        os << format_number(theta) << ',' << to_string(root) << ',' << to_string(branch) << ',' << format_number(X)
           << ',' << format_number(Y) << '\n';
    out.content = os.str();
    out.points = rows.size();
    return out;
}

TraceOutput trace_svg(const JobConfig& cfg) {
    TraceOutput out;
    out.trace = run_trace(cfg);

    const Point2 O{0.0, 0.0};
    const Point2 C{cfg.params.g(), 0.0};
    std::vector<Point2> all{O, C};
    for (const Polyline& pl : out.trace.polylines)
        for (const TraceSample& t : pl.points) all.push_back({t.X, t.Y});
    out.points = all.size() - 2;

    SvgDocument svg(Bounds::of(all).with_margin(0.05));
    svg.light_cone();
    for (const Polyline& pl : out.trace.polylines) {
        std::vector<Point2> pts;
        pts.reserve(pl.points.size());
        for (const TraceSample& t : pl.points) pts.push_back({t.X, t.Y});
        svg.polyline(pts, color_for(pl.root, pl.branch));
    }
    svg.dot(O, "#000000");
    svg.label(O, "O");
    svg.dot(C, "#000000");
    svg.label(C, "C");
    out.content = svg.str();
    return out;
}

SexticOutput sextic_report(const JobConfig& cfg) {
    const CouplerPoint pt = require_point(cfg);
    SexticOutput out;
    out.curve = sextic_coefficients(cfg.params, pt);

    SweepRange s = cfg.sweep_or_default();
    s.steps = std::max<std::size_t>(cfg.samples, 2);
    validate_sweep(s);
    const CouplerTrace tr = trace_curve(cfg.params, pt, s.lo, s.hi, s.steps, cfg.solver_options());
    for (const Polyline& pl : tr.polylines)
        for (const TraceSample& t : pl.points) {
            out.max_residual = std::max(out.max_residual, sextic_residual(out.curve, t.X, t.Y));
            ++out.evaluated;
        }

    std::ostringstream os;
    os << "coupler point: x=" << format_number(pt.x) << " y=" << format_number(pt.y) << "\n";
    os << "degree: " << out.curve.max_total_degree() << "\n";
    os << "normalization: " << format_number(out.curve.scale()) << "\n";
    os << "monomial,coefficient\n";
    for (int d = SexticCurve::kDegree; d >= 0; --d)
        for (int i = d; i >= 0; --i) {
            const int j = d - i;
            os << "X^" << i << "Y^" << j << ',' << format_number(out.curve.coefficient(i, j)) << "\n";
        }
    os << "residual samples: " << s.steps << "\n";
    os << "residual points: " << out.evaluated << "\n";
    os << "max normalized residual: " << format_number(out.max_residual) << "\n";
    out.text = os.str();
    return out;
}

AnimationOutput animate(const JobConfig& cfg) {
    if (cfg.frames < 1) throw ValidationError("animate needs at least one frame");
    SweepRange s = cfg.sweep_or_default();
    if (cfg.frames > 1) validate_sweep(s);
    s.steps = cfg.frames;

    AnimationOutput out;
    std::ostringstream manifest;
    manifest << "frame,theta,status\n";
    const LinkageParams& p = cfg.params;
    for (std::size_t k = 0; k < cfg.frames; ++k) {
        const double theta = sample_theta(s, k);
        const OutputSolve solved = solve_output_angle(p, theta, cfg.solver_options());
        manifest << k << ',' << format_number(theta) << ',';
        if (solved.solutions.empty()) {
            manifest << to_string(solved.status) << "\n";
            continue;
        }
        const OutputSolution& sol = solved.solutions.front();
        const Pose ps = pose(p, theta, sol);
        const Point2 quad[] = {ps.O, ps.A, ps.B, ps.C};

        SvgDocument svg(Bounds::of(quad).with_margin(0.05));
        svg.light_cone();
        svg.line(ps.O, ps.C, "#555555", 1.5, true);
        svg.line(ps.O, ps.A, "#1f77b4", 2.5);
        svg.line(ps.A, ps.B, "#000000", 2.5);
        svg.line(ps.C, ps.B, "#d62728", 2.5);
        const auto mid = [](const Point2& u, const Point2& v) { return 0.5 * (u + v); };
        svg.label(mid(ps.O, ps.C), "g=" + format_number(p.g()));
        svg.label(mid(ps.O, ps.A), "a=" + format_number(p.a()));
        svg.label(mid(ps.A, ps.B), "h=" + format_number(p.h()));
        svg.label(mid(ps.C, ps.B), "b=" + format_number(p.b()));
        const char* names[] = {"O", "A", "B", "C"};
        for (int i = 0; i < 4; ++i) {
            svg.dot(quad[i], "#000000");
            svg.label(quad[i], names[i]);
        }
        svg.label(ps.O + Point2{0.0, -0.1 * std::abs(p.g())},
                  "theta=" + format_number(theta) + " psi=" + format_number(sol.psi) + " (" + to_string(sol.root) +
                      ", " + to_string(sol.branch) + ")");
        out.frames.emplace_back(frame_name(k), svg.str());
        manifest << "rendered\n";
    }
    out.manifest = manifest.str();
    return out;
}

}  // namespace mink4r::io
