#include "socam/io.hpp"

#include "socam/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

namespace socam::io
{

using nlohmann::json;

std::vector<double> table1_etas()
{
    return {0.69, 0.5, 0.4, 0.39, 0.38, 0.37, 0.36, 0.35, 0.34, 0.33, inv_pi};
}

std::vector<double> table2_etas()
{
    return {0.5, 0.4, 0.39, 0.38, 0.37, 0.36, 0.35, 0.34, 0.33, inv_pi};
}

double deg(double rad) noexcept { return rad * 180.0 / pi; }
double rad(double deg) noexcept { return deg * pi / 180.0; }

namespace
{

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size())
    {
        const std::size_t nl = text.find('\n', pos);
        const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        lines.push_back(text.substr(pos, end - pos));
        pos = end + 1;
    }
    return lines;
}

// Splits one CSV record; double quotes protect commas, "" is a literal quote.
std::vector<std::string> split_fields(std::string_view line)
{
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i)
    {
        const char ch = line[i];
        if (quoted)
        {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"')
            {
                fields.back() += '"';
                ++i;
            }
            else if (ch == '"')
                quoted = false;
            else
                fields.back() += ch;
        }
        else if (ch == '"')
            quoted = true;
        else if (ch == ',')
            fields.emplace_back();
        else
            fields.back() += ch;
    }
    return fields;
}

std::string quote_field(std::string_view s)
{
    if (s.find_first_of(",\"\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (char ch : s)
    {
        if (ch == '"')
            out += '"';
        out += ch == '\n' ? ' ' : ch;
    }
    out += '"';
    return out;
}

double parse_double(std::string_view s)
{
    if (s.empty())
        return std::numeric_limits<double>::quiet_NaN();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw InvalidParameter("malformed number in CSV: '" + std::string(s) + "'");
    return v;
}

std::string_view kind_name(CurveKind k)
{
    return k == CurveKind::CamProfile ? "cam_profile" : "pitch_curve";
}

} // namespace

std::string profile_to_csv(const ProfileCurve& curve)
{
    std::string out(profile_csv_header);
    out += '\n';
    for (const auto& s : curve.samples)
        out += fmt::format("{:.9g},{:.9g},{:.9g}\n", s.psi, s.u, s.v);
    return out;
}

ProfileCurve profile_from_csv(std::string_view text, CurveKind kind)
{
    const auto lines = split_lines(text);
    if (lines.empty() || lines.front() != profile_csv_header)
        throw InvalidParameter("profile CSV must start with header '" +
                               std::string(profile_csv_header) + "'");
    ProfileCurve curve{kind, {}};
    for (std::size_t i = 1; i < lines.size(); ++i)
    {
        const auto f = split_fields(lines[i]);
        if (f.size() != 3)
            throw InvalidParameter("profile CSV row " + std::to_string(i) + " needs 3 fields");
        curve.samples.push_back({parse_double(f[0]), parse_double(f[1]), parse_double(f[2])});
    }
    return curve;
}

std::string profiles_to_svg(std::span<const ProfileCurve> curves)
{
    double umin = std::numeric_limits<double>::infinity();
    double umax = -umin;
    double vmin = umin;
    double vmax = -umin;
    for (const auto& c : curves)
    {
        for (const auto& s : c.samples)
        {
            umin = std::min(umin, s.u);
            umax = std::max(umax, s.u);
            vmin = std::min(vmin, -s.v);
            vmax = std::max(vmax, -s.v);
        }
    }
    if (!(umin <= umax))
        umin = umax = vmin = vmax = 0.0;
    constexpr double margin = 2.0;
    const double x0 = umin - margin;
    const double y0 = vmin - margin;
    const double w = umax - umin + 2.0 * margin;
    const double h = vmax - vmin + 2.0 * margin;

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.6g}mm\" "
                       "height=\"{:.6g}mm\" viewBox=\"{:.6g} {:.6g} {:.6g} {:.6g}\">\n",
                       w, h, x0, y0, w, h);
    for (const auto& c : curves)
    {
        std::string d;
        for (std::size_t i = 0; i < c.samples.size(); ++i)
            d += fmt::format("{}{:.6f},{:.6f} ", i == 0 ? "M" : "L", c.samples[i].u, -c.samples[i].v);
        d += "Z";
        out += fmt::format("  <path id=\"{}\" d=\"{}\" fill=\"none\" stroke=\"black\" "
                           "stroke-width=\"0.2\"/>\n",
                           kind_name(c.kind), d);
    }
    out += "</svg>\n";
    return out;
}

json profile_to_json(const ProfileCurve& curve)
{
    json samples = json::array();
    for (const auto& s : curve.samples)
        samples.push_back({s.psi, s.u, s.v});
    return {{"kind", kind_name(curve.kind)}, {"columns", {"psi_rad", "u_mm", "v_mm"}},
            {"samples", std::move(samples)}};
}

// Sweep ---------------------------------------------------------------------

namespace
{

std::string num_full(double v)
{
    if (std::isnan(v))
        return {};
    return fmt::format("{:.17g}", v);
}

std::string num_fixed(double v, int digits)
{
    if (std::isnan(v))
        return {};
    return fmt::format("{:.{}f}", v, digits);
}

std::string z_table(double z)
{
    if (std::isnan(z))
        return {};
    return z >= 1e6 ? fmt::format("{:.3g}", z) : fmt::format("{:.0f}", z);
}

} // namespace

std::string sweep_to_csv(std::span<const SweepRow> rows, Rounding rounding)
{
    std::string out(sweep_csv_header);
    out += '\n';
    for (const auto& r : rows)
    {
        const double vl_um = r.vL_max * 1000.0;
        const double mu_min = deg(r.mu_min);
        const double mu_max = deg(r.mu_max);
        const double pct = r.service * 100.0;
        if (rounding == Rounding::Full)
        {
            out += fmt::format("{},{},{},{},{},{},{},{},{}\n", num_full(r.eta), num_full(r.a4),
                               num_full(r.a5), num_full(r.z), num_full(vl_um), num_full(mu_min),
                               num_full(mu_max), num_full(pct), quote_field(r.error));
        }
        else
        {
            out += fmt::format("{},{},{},{},{},{},{},{},{}\n",
                               std::isnan(r.eta) ? std::string{} : fmt::format("{:.4g}", r.eta),
                               num_fixed(r.a4, 2), num_fixed(r.a5, 2), z_table(r.z),
                               num_fixed(vl_um, 2), num_fixed(mu_min, 2), num_fixed(mu_max, 2),
                               num_fixed(pct, 2), quote_field(r.error));
        }
    }
    return out;
}

std::vector<SweepRow> sweep_from_csv(std::string_view text)
{
    const auto lines = split_lines(text);
    if (lines.empty() || lines.front() != sweep_csv_header)
        throw InvalidParameter("sweep CSV must start with header '" + std::string(sweep_csv_header) +
                               "'");
    std::vector<SweepRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i)
    {
        const auto f = split_fields(lines[i]);
        if (f.size() != 9)
            throw InvalidParameter("sweep CSV row " + std::to_string(i) + " needs 9 fields");
        SweepRow r;
        r.eta = parse_double(f[0]);
        r.a4 = parse_double(f[1]);
        r.a5 = parse_double(f[2]);
        r.z = parse_double(f[3]);
        r.vL_max = parse_double(f[4]) / 1000.0;
        r.mu_min = rad(parse_double(f[5]));
        r.mu_max = rad(parse_double(f[6]));
        r.service = parse_double(f[7]) / 100.0;
        r.error = f[8];
        rows.push_back(std::move(r));
    }
    return rows;
}

// Reports -------------------------------------------------------------------

namespace
{

json opt_to_json(const std::optional<double>& v)
{
    return v ? json(*v) : json(nullptr);
}

std::optional<double> opt_from_json(const json& j)
{
    if (j.is_null())
        return std::nullopt;
    return j.get<double>();
}

} // namespace

json report_to_json(const AnalysisReport& r)
{
    json drives = json::array();
    for (const auto& d : r.schedule.drives)
        drives.push_back({{"cam", d.cam}, {"start_rad", d.start}, {"end_rad", d.end}});
    const auto& f = r.feasibility;
    return {
        {"mechanism", to_string(r.mechanism)},
        {"params", {{"p_mm", r.p}, {"eta", r.eta}, {"a4_mm", r.a4}, {"b_mm", r.b}}},
        {"pin", {{"L_mm", r.pin.L}, {"tau_Nmm", r.pin.tau}, {"E_MPa", r.pin.E}}},
        {"a5_mm", opt_to_json(r.a5)},
        {"delta_rad", opt_to_json(r.delta)},
        {"psi_start_rad", opt_to_json(r.psi_start)},
        {"psi_end_rad", opt_to_json(r.psi_end)},
        {"mu_min_rad", opt_to_json(r.mu_min)},
        {"mu_max_rad", opt_to_json(r.mu_max)},
        {"service_factor", opt_to_json(r.service)},
        {"vL_max_mm", opt_to_json(r.vL_max)},
        {"z", opt_to_json(r.z)},
        {"schedule", std::move(drives)},
        {"feasibility",
         {{"eta_ok_lower", f.eta_ok_lower},
          {"roller_fits_pitch", f.roller_fits_pitch},
          {"roller_clears_shaft", f.roller_clears_shaft},
          {"convex_pitch", f.convex_pitch},
          {"no_undercut", f.no_undercut},
          {"all_ok", f.all_ok}}},
        {"errors", r.errors},
    };
}

AnalysisReport report_from_json(const json& j)
{
    AnalysisReport r;
    try
    {
        r.mechanism = parse_mechanism(j.at("mechanism").get<std::string>());
        const auto& pj = j.at("params");
        r.p = pj.at("p_mm").get<double>();
        r.eta = pj.at("eta").get<double>();
        r.a4 = pj.at("a4_mm").get<double>();
        r.b = pj.at("b_mm").get<double>();
        const auto& pin = j.at("pin");
        r.pin = {pin.at("L_mm").get<double>(), pin.at("tau_Nmm").get<double>(),
                 pin.at("E_MPa").get<double>()};
        r.a5 = opt_from_json(j.at("a5_mm"));
        r.delta = opt_from_json(j.at("delta_rad"));
        r.psi_start = opt_from_json(j.at("psi_start_rad"));
        r.psi_end = opt_from_json(j.at("psi_end_rad"));
        r.mu_min = opt_from_json(j.at("mu_min_rad"));
        r.mu_max = opt_from_json(j.at("mu_max_rad"));
        r.service = opt_from_json(j.at("service_factor"));
        r.vL_max = opt_from_json(j.at("vL_max_mm"));
        r.z = opt_from_json(j.at("z"));
        for (const auto& d : j.at("schedule"))
            r.schedule.drives.push_back(
                {d.at("cam").get<int>(), d.at("start_rad").get<double>(), d.at("end_rad").get<double>()});
        const auto& f = j.at("feasibility");
        r.feasibility = {f.at("eta_ok_lower").get<bool>(),      f.at("roller_fits_pitch").get<bool>(),
                         f.at("roller_clears_shaft").get<bool>(), f.at("convex_pitch").get<bool>(),
                         f.at("no_undercut").get<bool>(),       f.at("all_ok").get<bool>()};
        r.errors = j.at("errors").get<std::vector<std::string>>();
    }
    catch (const json::exception& ex)
    {
        throw InvalidParameter(std::string("malformed report JSON: ") + ex.what());
    }
    return r;
}

namespace
{

std::string flag(bool ok) { return ok ? "ok" : "FAIL"; }

template <class F>
std::string or_na(const std::optional<double>& v, F&& fmt_fn)
{
    return v ? fmt_fn(*v) : std::string("n/a");
}

} // namespace

std::string report_to_text(const AnalysisReport& r)
{
    std::string out;
    out += fmt::format("mechanism           {}\n", to_string(r.mechanism));
    out += fmt::format("design              p={:g} mm  eta={:.6g}  a4={:.6g} mm  b={:g} mm\n", r.p,
                       r.eta, r.a4, r.b);
    out += fmt::format("pin                 L={:g} mm  tau={:g} N*m  E={:g} MPa  a5={}\n", r.pin.L,
                       r.pin.tau / 1000.0, r.pin.E,
                       or_na(r.a5, [](double v) { return fmt::format("{:.4f} mm", v); }));
    out += fmt::format("extended angle      {}\n", or_na(r.delta, [](double v) {
                           return fmt::format("{:.6f} rad ({:.4f} deg)", v, deg(v));
                       }));
    if (r.psi_start && r.psi_end)
        out += fmt::format("driving interval    [{:.6f}, {:.6f}] rad\n", *r.psi_start, *r.psi_end);
    out += fmt::format("|mu| min            {}\n",
                       or_na(r.mu_min, [](double v) { return fmt::format("{:.2f} deg", deg(v)); }));
    out += fmt::format("|mu| max            {}\n",
                       or_na(r.mu_max, [](double v) { return fmt::format("{:.2f} deg", deg(v)); }));
    out += fmt::format("service factor      {}\n",
                       or_na(r.service, [](double v) { return fmt::format("{:.2f} %", v * 100.0); }));
    out += fmt::format("vL max              {}\n",
                       or_na(r.vL_max, [](double v) { return fmt::format("{:.2f} um", v * 1000.0); }));
    out += fmt::format("z                   {}\n",
                       or_na(r.z, [](double v) { return fmt::format("{:.6g}", v); }));
    for (const auto& d : r.schedule.drives)
        out += fmt::format("cam {} drives        [{:.4f}, {:.4f}) rad\n", d.cam, d.start, d.end);
    const auto& f = r.feasibility;
    out += "feasibility\n";
    out += fmt::format("  eta > 1/(2 pi)            {}\n", flag(f.eta_ok_lower));
    out += fmt::format("  a4/p < 1/2                {}\n", flag(f.roller_fits_pitch));
    out += fmt::format("  a4/p <= eta - b/p         {}\n", flag(f.roller_clears_shaft));
    out += fmt::format("  convex pitch (eta>=1/pi)  {}\n", flag(f.convex_pitch));
    out += fmt::format("  no undercut               {}\n", flag(f.no_undercut));
    out += fmt::format("  all                       {}\n", flag(f.all_ok));
    for (const auto& e : r.errors)
        out += fmt::format("error: {}\n", e);
    return out;
}

json optimization_to_json(const OptimizationResult& r)
{
    const auto& c = r.constraints;
    return {{"eta", r.eta_opt},
            {"a4_mm", r.a4_opt},
            {"a5_mm", r.a5_opt},
            {"z", r.z_opt},
            {"iterations", r.iterations},
            {"constraints",
             {{"g1", c.g1}, {"g2", c.g2}, {"g3", opt_to_json(c.g3)}, {"g4", c.g4}, {"g5", c.g5}}},
            {"active", c.active},
            {"feasible", c.feasible()}};
}

std::string optimization_to_text(const OptimizationResult& r)
{
    const auto& c = r.constraints;
    std::string active;
    for (int id : c.active)
        active += fmt::format("{}g{}", active.empty() ? "" : " ", id);
    std::string out;
    out += fmt::format("eta        {:.6f}\n", r.eta_opt);
    out += fmt::format("a4         {:.4f} mm\n", r.a4_opt);
    out += fmt::format("a5         {:.4f} mm\n", r.a5_opt);
    out += fmt::format("z          {:.6g}\n", r.z_opt);
    out += fmt::format("g1..g5     {:.3e} {:.3e} {} {:.3e} {:.3e}\n", c.g1, c.g2,
                       c.g3 ? fmt::format("{:.3e}", *c.g3) : std::string("n/a"), c.g4, c.g5);
    out += fmt::format("active     {}\n", active.empty() ? "none" : active);
    out += fmt::format("iterations {}\n", r.iterations);
    return out;
}

json layout_to_json(const Layout& lay, const DriveSchedule& sched)
{
    json cams = json::array();
    for (std::size_t k = 0; k < lay.cam_count(); ++k)
        cams.push_back({{"cam", k + 1}, {"phase_deg", deg(lay.phases[k])}, {"offset_y_mm", lay.offsets_y[k]}});
    json drives = json::array();
    for (const auto& d : sched.drives)
        drives.push_back({{"cam", d.cam}, {"start_rad", d.start}, {"end_rad", d.end}});
    return {{"mechanism", to_string(lay.kind)}, {"cams", std::move(cams)}, {"schedule", std::move(drives)}};
}

std::string layout_to_text(const Layout& lay, const DriveSchedule& sched)
{
    std::string out = fmt::format("mechanism {}\n", to_string(lay.kind));
    for (std::size_t k = 0; k < lay.cam_count(); ++k)
        out += fmt::format("cam {}  phase {:7.2f} deg  shaft at y = {:.3f} mm\n", k + 1,
                           deg(lay.phases[k]), lay.offsets_y[k]);
    for (const auto& d : sched.drives)
        out += fmt::format("cam {} drives [{:.6f}, {:.6f}) rad = [{:.2f}, {:.2f}) deg\n", d.cam,
                           d.start, d.end, deg(d.start), deg(d.end));
    return out;
}

} // namespace socam::io
