// mink4r: position analysis and classification of the Minkowskian planar 4R.
//
//   mink4r analyze --a 1 --b 1 --g 4 --h 1 [--json]
//   mink4r sweep   --config job.json --theta-lo -2 --theta-hi 2 --steps 9 --out sweep.csv
//   mink4r trace   --config job.json --px 0.5 --py 0 --format svg --out curve.svg
//   mink4r sextic  --config job.json --px 0.5 --py 0 --samples 200
//   mink4r animate --config job.json --frames 24 --out-dir frames
//
// Exit codes: 0 success, 2 config/validation error, 3 domain error,
// 4 IO error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mink4r/io/commands.hpp"
#include "mink4r/io/config.hpp"

namespace fs = std::filesystem;
using namespace mink4r;
using namespace mink4r::io;

namespace {

enum Exit { kOk = 0, kConfig = 2, kDomain = 3, kIo = 4 };

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Flags {
    std::string config;
    std::optional<double> a, b, g, h;
    std::optional<std::string> mode;
    std::optional<double> tol;
    bool json = false;
    std::optional<std::string> out;
    std::optional<double> theta_lo, theta_hi;
    std::optional<std::size_t> steps;
    std::optional<double> px, py;
    std::string format = "csv";
    std::optional<std::size_t> samples;
    std::optional<std::size_t> frames;
    std::string out_dir = "frames";
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot write " + path.string());
    out << content;
    if (!out) throw IoFailure("write failed: " + path.string());
}

void emit(const Flags& f, const std::string& content) {
    if (f.out)
        write_file(*f.out, content);
    else
        std::cout << content;
}

JobConfig build_config(const Flags& f) {
    JobConfig cfg;
    if (!f.config.empty()) {
        cfg = parse_config(read_file(f.config));
    } else if (!(f.a && f.b && f.g && f.h)) {
        throw ValidationError("give --config or all of --a --b --g --h");
    }
    if (f.a || f.b || f.g || f.h) {
        try {
            cfg.params = LinkageParams{f.a.value_or(cfg.params.a()), f.b.value_or(cfg.params.b()),
                                       f.g.value_or(cfg.params.g()), f.h.value_or(cfg.params.h())};
        } catch (const InvalidParams& e) {
            throw ValidationError(e.what());
        }
    }
    if (f.mode) cfg.mode = parse_mode(*f.mode);
    if (f.tol) {
        if (*f.tol < 0.0) throw ValidationError("--tol must be non-negative");
        cfg.tol = *f.tol;
    }
    if (f.theta_lo || f.theta_hi || f.steps) {
        SweepRange s = cfg.sweep_or_default();
        if (f.theta_lo) s.lo = *f.theta_lo;
        if (f.theta_hi) s.hi = *f.theta_hi;
        if (f.steps) s.steps = *f.steps;
        cfg.sweep = s;
    }
    if (f.px || f.py) {
        CouplerPoint pt = cfg.point.value_or(CouplerPoint{});
        if (f.px) pt.x = *f.px;
        if (f.py) pt.y = *f.py;
        cfg.point = pt;
    }
    if (f.format == "csv")
        cfg.format = OutputFormat::Csv;
    else if (f.format == "svg")
        cfg.format = OutputFormat::Svg;
    else
        throw ValidationError("--format must be csv or svg");
    cfg.json = f.json;
    cfg.out_path = f.out;
    if (f.samples) cfg.samples = *f.samples;
    if (f.frames) cfg.frames = *f.frames;
    cfg.out_dir = f.out_dir;
    return cfg;
}

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config, "JSON job file");
    cmd->add_option("--a", f.a, "input crank length |OA|");
    cmd->add_option("--b", f.b, "output crank length |CB|");
    cmd->add_option("--g", f.g, "ground length |OC|");
    cmd->add_option("--h", f.h, "coupler length |AB|");
    cmd->add_option("--mode", f.mode, "strict | extended (default strict)");
    cmd->add_option("--tol", f.tol, "classification tolerance (default 1e-9)");
    cmd->add_flag("--json", f.json, "machine-readable report");
    cmd->add_option("--out", f.out, "output file (default stdout)");
}

void add_sweep(CLI::App* cmd, Flags& f) {
    cmd->add_option("--theta-lo", f.theta_lo, "lowest input angle");
    cmd->add_option("--theta-hi", f.theta_hi, "highest input angle");
    cmd->add_option("--steps", f.steps, "number of samples (>= 2)");
}

void add_point(CLI::App* cmd, Flags& f) {
    cmd->add_option("--px", f.px, "coupler point x in the coupler frame");
    cmd->add_option("--py", f.py, "coupler point y in the coupler frame");
    cmd->add_option("--format", f.format, "csv | svg");
    cmd->add_option("--samples", f.samples, "residual samples (sextic, default 100)");
}

int run(const std::string& name, const Flags& flags) {
    const JobConfig cfg = build_config(flags);

    if (name == "analyze") {
        emit(flags, cfg.json ? analyze_json(cfg) : analyze_text(cfg));
        return kOk;
    }
    if (name == "sweep") {
        const SweepOutput out = sweep_csv(cfg);
        emit(flags, out.csv);
        if (out.feasible_samples == 0) {
            std::cerr << "mink4r: no feasible sample in the sweep range\n";
            return kDomain;
        }
        return kOk;
    }
    if (name == "trace") {
        const TraceOutput out = cfg.format == OutputFormat::Svg ? trace_svg(cfg) : trace_csv(cfg);
        emit(flags, out.content);
        std::cerr << "trace: samples=" << out.trace.samples << " points=" << out.points
                  << " polylines=" << out.trace.polylines.size() << " skipped=" << out.trace.skipped << "\n";
        if (out.points == 0) {
            std::cerr << "mink4r: no feasible trace point\n";
            return kDomain;
        }
        return kOk;
    }
    if (name == "sextic") {
        const SexticOutput out = sextic_report(cfg);
        emit(flags, out.text);
        return out.evaluated == 0 ? kDomain : kOk;
    }
    if (name == "animate") {
        const AnimationOutput out = animate(cfg);
        std::error_code ec;
        fs::create_directories(cfg.out_dir, ec);
        if (ec) throw IoFailure("cannot create " + cfg.out_dir + ": " + ec.message());
        for (const auto& [file, svg] : out.frames) write_file(fs::path(cfg.out_dir) / file, svg);
        write_file(fs::path(cfg.out_dir) / "manifest.csv", out.manifest);
        std::cout << "animate: " << out.frames.size() << " of " << cfg.frames << " frames rendered into "
                  << cfg.out_dir << "\n";
        return out.frames.empty() ? kDomain : kOk;
    }
    return kConfig;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Position analysis and classification of the planar 4R chain on the Minkowskian plane"};
    // -h would clash with the coupler length flag --h
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    Flags flags;

    auto* analyze = app.add_subcommand("analyze", "limits, T parameters, branching points and linkage type");
    add_common(analyze, flags);

    auto* sweep = app.add_subcommand("sweep", "transmission function psi(theta) as CSV");
    add_common(sweep, flags);
    add_sweep(sweep, flags);

    auto* trace = app.add_subcommand("trace", "coupler curve of a coupler point as CSV or SVG");
    add_common(trace, flags);
    add_sweep(trace, flags);
    add_point(trace, flags);

    auto* sextic = app.add_subcommand("sextic", "implicit degree-6 coupler curve and its residual");
    add_common(sextic, flags);
    add_sweep(sextic, flags);
    add_point(sextic, flags);

    auto* animate = app.add_subcommand("animate", "SVG frames of the moving linkage");
    add_common(animate, flags);
    add_sweep(animate, flags);
    animate->add_option("--frames", flags.frames, "number of frames (default 24)");
    animate->add_option("--out-dir", flags.out_dir, "frame directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        return run(name, flags);
    } catch (const ParseError& e) {
        std::cerr << "mink4r: " << e.what() << "\n";
        return kConfig;
    } catch (const ValidationError& e) {
        std::cerr << "mink4r: " << e.what() << "\n";
        return kConfig;
    } catch (const IoFailure& e) {
        std::cerr << "mink4r: " << e.what() << "\n";
        return kIo;
    } catch (const Error& e) {
        std::cerr << "mink4r: " << e.what() << "\n";
        return kDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "mink4r: " << e.what() << "\n";
        return kConfig;
    }
}
