#include "socam/cli.hpp"

#include "socam/errors.hpp"
#include "socam/io.hpp"
#include "socam/kinematics.hpp"
#include "socam/mechanism.hpp"
#include "socam/optimizer.hpp"

#include "CLI11.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

namespace socam::cli
{

namespace
{

/// All flags; lengths in mm, torque in N*m and angles in degrees as typed.
struct RunConfig
{
    double p = 50.0;
    std::optional<double> eta;
    std::optional<double> a4;
    double b = 9.5;
    double L = 10.0;
    double tau_Nm = 1.2;
    double E = 2.0e5;
    std::string mechanism = "coaxial";
    int samples = default_samples;
    std::string format;
    std::string out = "-";
    double threshold_deg = 30.0;

    // profile
    std::string curve = "cam";
    // sweep
    std::string preset;
    std::vector<double> etas;
    std::string round = "full";
    unsigned threads = 0;
    // optimize
    double eta_min = inv_pi;
    double eta_max = 0.9;

    [[nodiscard]] PinSpec pin() const { return {L, tau_Nm * 1000.0, E}; }
};

/// Raised inside a verb to leave with an exit code after printing a message.
struct Exit
{
    int code;
    std::string message;
};

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.out.empty() || cfg.out == "-")
    {
        out << text;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file)
        throw Exit{exit_invalid, "cannot open output file '" + cfg.out + "'"};
    file << text;
}

double require_eta(const RunConfig& cfg)
{
    if (!cfg.eta)
        throw Exit{exit_invalid, "--eta is required for this command"};
    return *cfg.eta;
}

DesignParams design_from(const RunConfig& cfg)
{
    const double eta = require_eta(cfg);
    if (std::abs(eta - 1.0 / two_pi) < eta_singularity_tol)
        throw InvalidParameter("eta = " + fmt::format("{}", eta) +
                               " is at the singularity 1/(2 pi) of b3 and delta "
                               "(2 pi eta - 1 = 0)");
    const double a4 = cfg.a4 ? *cfg.a4 : max_roller_radius(cfg.p, cfg.b, eta);
    return DesignParams(cfg.p, eta, a4, cfg.b);
}

std::string failing_flags(const FeasibilityReport& f)
{
    std::string out;
    const auto add = [&out](bool ok, const char* name) {
        if (!ok)
            out += std::string(out.empty() ? "" : ", ") + name;
    };
    add(f.eta_ok_lower, "eta > 1/(2 pi)");
    add(f.roller_fits_pitch, "a4/p < 1/2");
    add(f.roller_clears_shaft, "a4/p <= eta - b/p");
    add(f.convex_pitch, "convex pitch curve (eta >= 1/pi)");
    add(f.no_undercut, "no undercutting");
    return out;
}

int cmd_profile(const RunConfig& cfg, std::ostream& out)
{
    const DesignParams d = design_from(cfg);
    const FeasibilityReport f = feasibility(d);
    if (!f.all_ok)
        throw Exit{exit_infeasible, "infeasible geometry: " + failing_flags(f)};

    std::vector<ProfileCurve> curves;
    if (cfg.curve == "cam" || cfg.curve == "both")
        curves.push_back(sample_profile(d, CurveKind::CamProfile, cfg.samples));
    if (cfg.curve == "pitch" || cfg.curve == "both")
        curves.push_back(sample_profile(d, CurveKind::PitchCurve, cfg.samples));

    const std::string format = cfg.format.empty() ? "csv" : cfg.format;
    if (format == "csv")
    {
        if (curves.size() != 1)
            throw Exit{exit_invalid, "csv output holds one curve; use --curve cam or --curve pitch"};
        emit(cfg, io::profile_to_csv(curves.front()), out);
    }
    else if (format == "svg")
    {
        emit(cfg, io::profiles_to_svg(curves), out);
    }
    else if (format == "json")
    {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : curves)
            j.push_back(io::profile_to_json(c));
        emit(cfg, j.dump(2) + "\n", out);
    }
    else
    {
        throw Exit{exit_invalid, "profile supports --format csv, svg or json"};
    }
    return exit_ok;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out)
{
    const DesignParams d = design_from(cfg);
    const AnalysisReport r =
        design_report(d, cfg.pin(), parse_mechanism(cfg.mechanism), io::rad(cfg.threshold_deg));
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    if (format == "text")
        emit(cfg, io::report_to_text(r), out);
    else if (format == "json")
        emit(cfg, io::report_to_json(r).dump(2) + "\n", out);
    else
        throw Exit{exit_invalid, "analyze supports --format text or json"};
    if (!r.feasibility.all_ok || !r.errors.empty())
        return exit_infeasible;
    return exit_ok;
}

int cmd_sweep(const RunConfig& cfg, bool mechanism_given, std::ostream& out)
{
    std::vector<double> etas = cfg.etas;
    Mechanism mech = parse_mechanism(cfg.mechanism);
    if (!cfg.preset.empty())
    {
        if (!etas.empty())
            throw Exit{exit_invalid, "--preset and --etas are mutually exclusive"};
        if (cfg.preset == "table1")
        {
            etas = io::table1_etas();
            if (!mechanism_given)
                mech = Mechanism::CoaxialConjugate;
        }
        else if (cfg.preset == "table2")
        {
            etas = io::table2_etas();
            if (!mechanism_given)
                mech = Mechanism::NonCoaxialTriple;
        }
        else
        {
            throw Exit{exit_invalid, "unknown preset '" + cfg.preset + "' (table1 or table2)"};
        }
    }
    if (etas.empty())
        throw Exit{exit_invalid, "sweep needs --etas or --preset"};

    SweepOptions opt;
    opt.p = cfg.p;
    opt.b = cfg.b;
    opt.pin = cfg.pin();
    opt.mechanism = mech;
    opt.threshold = io::rad(cfg.threshold_deg);
    opt.threads = cfg.threads;
    const auto rows = sweep(etas, opt);

    const std::string format = cfg.format.empty() ? "csv" : cfg.format;
    if (format != "csv")
        throw Exit{exit_invalid, "sweep supports --format csv"};
    emit(cfg, io::sweep_to_csv(rows, cfg.round == "table" ? io::Rounding::Table : io::Rounding::Full),
         out);
    return exit_ok;
}

int cmd_optimize(const RunConfig& cfg, std::ostream& out)
{
    const OptimizationResult r =
        optimize(cfg.p, cfg.b, {cfg.eta_min, cfg.eta_max}, parse_mechanism(cfg.mechanism));
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    if (format == "text")
        emit(cfg, io::optimization_to_text(r), out);
    else if (format == "json")
        emit(cfg, io::optimization_to_json(r).dump(2) + "\n", out);
    else
        throw Exit{exit_invalid, "optimize supports --format text or json"};
    return exit_ok;
}

int cmd_layout(const RunConfig& cfg, std::ostream& out)
{
    const DesignParams d = design_from(cfg);
    const Mechanism mech = parse_mechanism(cfg.mechanism);
    const Layout lay = layout(d, mech);
    const DriveSchedule sched = drive_schedule(d, mech);
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    if (format == "text")
        emit(cfg, io::layout_to_text(lay, sched), out);
    else if (format == "json")
        emit(cfg, io::layout_to_json(lay, sched).dump(2) + "\n", out);
    else
        throw Exit{exit_invalid, "layout supports --format text or json"};
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Slide-O-Cam cam synthesis, analysis and design optimisation", "socam"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value file; flags on the command line override it");

    app.add_option("--p", cfg.p, "pitch, mm")->capture_default_str();
    app.add_option("--eta", cfg.eta, "offset ratio e/p");
    app.add_option("--a4", cfg.a4, "roller radius, mm (default: largest feasible)");
    app.add_option("--b", cfg.b, "camshaft radius, mm")->capture_default_str();
    app.add_option("--L", cfg.L, "pin free length, mm")->capture_default_str();
    app.add_option("--tau", cfg.tau_Nm, "motor torque, N*m")->capture_default_str();
    app.add_option("--E", cfg.E, "Young modulus, MPa")->capture_default_str();
    auto* mech_opt = app.add_option("--mechanism", cfg.mechanism, "coaxial | noncoaxial3")
                         ->check(CLI::IsMember({"coaxial", "noncoaxial3"}))
                         ->capture_default_str();
    app.add_option("--samples", cfg.samples, "profile sample count")
        ->check(CLI::Range(min_samples, 10'000'000))
        ->capture_default_str();
    app.add_option("--format", cfg.format, "csv | svg | json | text")
        ->check(CLI::IsMember({"csv", "svg", "json", "text"}));
    app.add_option("--out", cfg.out, "output file, '-' for stdout")->capture_default_str();
    app.add_option("--threshold-deg", cfg.threshold_deg, "pressure-angle limit for the service factor")
        ->capture_default_str();

    auto* profile = app.add_subcommand("profile", "export cam profile / pitch curve geometry");
    profile->add_option("--curve", cfg.curve, "cam | pitch | both")
        ->check(CLI::IsMember({"cam", "pitch", "both"}))
        ->capture_default_str();

    auto* analyze = app.add_subcommand("analyze", "pressure angle, service factor, pin deflection");

    auto* sweep_cmd = app.add_subcommand("sweep", "design table over a list of eta values");
    sweep_cmd->add_option("--preset", cfg.preset, "table1 | table2");
    sweep_cmd->add_option("--etas", cfg.etas, "comma separated eta values")->delimiter(',');
    sweep_cmd->add_option("--round", cfg.round, "full | table")
        ->check(CLI::IsMember({"full", "table"}))
        ->capture_default_str();
    sweep_cmd->add_option("--threads", cfg.threads, "worker threads, 0 = all cores")
        ->capture_default_str();

    auto* optimize_cmd = app.add_subcommand("optimize", "minimise roller-pin deflection objective z");
    optimize_cmd->add_option("--eta-min", cfg.eta_min, "lower eta bound")->capture_default_str();
    optimize_cmd->add_option("--eta-max", cfg.eta_max, "upper eta bound")->capture_default_str();

    auto* layout_cmd = app.add_subcommand("layout", "cam phases, shaft offsets and drive schedule");

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::ParseError& ex)
    {
        err << "error: " << ex.what() << "\n";
        return exit_invalid;
    }

    try
    {
        if (*profile)
            return cmd_profile(cfg, out);
        if (*analyze)
            return cmd_analyze(cfg, out);
        if (*sweep_cmd)
            return cmd_sweep(cfg, mech_opt->count() > 0, out);
        if (*optimize_cmd)
            return cmd_optimize(cfg, out);
        if (*layout_cmd)
            return cmd_layout(cfg, out);
    }
    catch (const Exit& ex)
    {
        err << "error: " << ex.message << "\n";
        return ex.code;
    }
    catch (const InvalidParameter& ex)
    {
        err << "error: " << ex.what() << "\n";
        return exit_invalid;
    }
    catch (const Error& ex)
    {
        err << "error: " << ex.what() << "\n";
        return exit_infeasible;
    }
    return exit_invalid;
}

} // namespace socam::cli
