#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "s34/critical.hpp"
#include "s34/fit.hpp"
#include "s34/lensing.hpp"
#include "s34/painleve.hpp"
#include "s34/param_domain.hpp"
#include "s34/parametrix.hpp"
#include "s34/spectral_curve.hpp"
#include "s34/tau_expansion.hpp"

namespace s34cli {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

// Runs fn(i) for i in [0, n) on up to `jobs` threads; results keep index order.
template <class R>
std::vector<R> parallel_map(std::size_t n, int jobs, const std::function<R(std::size_t)>& fn)
{
    std::vector<R> out(n);
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), std::max<std::size_t>(n, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

std::map<std::string, Axis> parse_grids(const Options& o, const std::vector<std::string>& allowed)
{
    std::map<std::string, Axis> m;
    for (const auto& g : o.grids) {
        Axis a = parse_axis(g);
        if (std::find(allowed.begin(), allowed.end(), a.name) == allowed.end())
            throw ConfigError("grid axis '" + a.name + "' is not used by this command");
        if (m.count(a.name)) throw ConfigError("grid axis '" + a.name + "' given twice");
        m[a.name] = a;
    }
    return m;
}

std::vector<double> axis_values(const std::map<std::string, Axis>& grids, const std::string& name,
                                const std::optional<double>& point, const std::vector<double>& fallback)
{
    auto it = grids.find(name);
    if (it != grids.end()) return it->second.values();
    if (point) {
        if (!std::isfinite(*point)) throw ConfigError("--" + name + " must be finite");
        return {*point};
    }
    return fallback;
}

std::vector<s34::Params> param_grid(const Options& o, const std::vector<double>& de, const std::vector<double>& dm,
                                    const std::vector<double>& dn)
{
    const auto grids = parse_grids(o, {"eta", "mu", "nu"});
    const auto E = axis_values(grids, "eta", o.eta, de);
    const auto M = axis_values(grids, "mu", o.mu, dm);
    const auto N = axis_values(grids, "nu", o.nu, dn);
    std::vector<s34::Params> pts;
    for (double e : E)
        for (double m : M)
            for (double n : N) pts.push_back({e, m, n});
    return pts;
}

void require_interior_flags(const Options& o, const char* cmd)
{
    if (o.stratum != "interior" && std::string(cmd) != "certify")
        throw ConfigError(std::string("--stratum is only used by certify"));
}

double max3(const std::array<double, 3>& a) { return std::max({a[0], a[1], a[2]}); }

std::string json_escape(const std::string& s) { return nlohmann::json(s).dump(); }

} // namespace

// ----------------------------------------------------------------------------
// Grid and output plumbing

std::vector<double> Axis::values() const
{
    std::vector<double> v;
    for (int i = 0; i < count; ++i) {
        const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        v.push_back(log ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))) : lo + t * (hi - lo));
    }
    if (count > 1) v.back() = hi;
    return v;
}

Axis parse_axis(const std::string& spec)
{
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("grid spec '" + spec + "' must look like name=min:max:count[:log]");
    Axis a;
    a.name = spec.substr(0, eq);
    std::vector<std::string> parts;
    std::string rest = spec.substr(eq + 1);
    std::size_t pos = 0;
    while (true) {
        const auto c = rest.find(':', pos);
        parts.push_back(rest.substr(pos, c == std::string::npos ? std::string::npos : c - pos));
        if (c == std::string::npos) break;
        pos = c + 1;
    }
    if (parts.size() < 3 || parts.size() > 4) throw ConfigError("grid spec '" + spec + "' needs min:max:count[:log]");
    try {
        std::size_t used = 0;
        a.lo = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument("min");
        a.hi = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument("max");
        const long c = std::stol(parts[2], &used);
        if (used != parts[2].size() || c > 1000000) throw std::invalid_argument("count");
        a.count = static_cast<int>(c);
    } catch (const std::exception&) {
        throw ConfigError("grid spec '" + spec + "' has a malformed number");
    }
    if (parts.size() == 4) {
        if (parts[3] != "log" && parts[3] != "lin") throw ConfigError("grid spacing must be 'log' or 'lin'");
        a.log = parts[3] == "log";
    }
    if (!std::isfinite(a.lo) || !std::isfinite(a.hi)) throw ConfigError("grid range must be finite");
    if (a.count < 1) throw ConfigError("grid '" + a.name + "' is empty (count < 1)");
    if (a.hi < a.lo) throw ConfigError("grid '" + a.name + "' is empty (max < min)");
    if (a.count > 1 && a.hi == a.lo) throw ConfigError("grid '" + a.name + "' has zero width with count > 1");
    if (a.log && !(a.lo > 0)) throw ConfigError("log grid '" + a.name + "' needs a positive range");
    return a;
}

std::string format_number(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0; // drop the sign of zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string cell_text(const Cell& c, bool json)
{
    if (auto d = std::get_if<double>(&c)) return (json && !std::isfinite(*d)) ? "null" : format_number(*d);
    if (auto i = std::get_if<long long>(&c)) return std::to_string(*i);
    if (auto b = std::get_if<bool>(&c)) return *b ? "true" : "false";
    const auto& s = std::get<std::string>(c);
    return json ? json_escape(s) : s;
}

} // namespace

void write_csv(std::ostream& os, const Table& t)
{
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell_text(r[i], false);
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& t)
{
    os << "[";
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
        os << (k ? ",\n " : "\n ") << "{";
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            os << (i ? ", " : "") << json_escape(t.columns[i]) << ": " << cell_text(t.rows[k][i], true);
        os << "}";
    }
    os << (t.rows.empty() ? "]\n" : "\n]\n");
}

// ----------------------------------------------------------------------------
// sigma

RunResult cmd_sigma(const Options& o)
{
    require_interior_flags(o, "sigma");
    const auto pts = param_grid(o, {1.0}, {0.0}, {0.0});
    RunResult r;
    r.table.columns = {"eta", "mu", "nu", "sigma", "margin", "in_D"};
    using Row = std::vector<Cell>;
    r.table.rows = parallel_map<Row>(pts.size(), o.jobs, [&](std::size_t i) {
        const s34::DomainReport d = s34::in_domain_D(pts[i]);
        const bool have = d.reason.empty() || d.path_ok;
        return Row{pts[i].eta, pts[i].mu, pts[i].nu, have ? d.sigma : nan, have ? d.margin : nan, d.in_D};
    });
    return r;
}

// ----------------------------------------------------------------------------
// certify

namespace {

struct Check {
    std::string name;
    double value = 0;
    double tolerance = 0;
    bool pass = false;
};

Check upper_bound(const std::string& name, double value, double tol)
{
    return {name, value, tol, std::isfinite(value) && value <= tol};
}

std::vector<Check> certify_curve(const s34::SpectralCurve& c, double ts)
{
    std::vector<Check> out;
    const auto reps = s34::verify_inequalities(c, s34::default_contours(c, 1000));
    double worst = std::numeric_limits<double>::infinity();
    bool all = true;
    for (const auto& s : reps) {
        worst = std::min(worst, s.min_signed_value);
        all = all && s.all_pass;
    }
    out.push_back({"lensing_min", worst, 0.0, all && worst > 0});
    const auto dec = s34::check_g_asymptotics(c);
    out.push_back(upper_bound("g_asymptotic_slope", dec.worst_slope_error, 0.02 * ts));
    return out;
}

std::vector<Check> certify_point(const s34::Params& p, double ts)
{
    const s34::SpectralCurve c = s34::build_curve(p);
    std::vector<Check> out = certify_curve(c, ts);
    const s34::GlobalParametrix g{c};
    const auto j = s34::jump_residuals(g, 20);
    out.push_back(upper_bound("jump_alpha", j.alpha_cut, 1e-10 * ts));
    out.push_back(upper_bound("jump_beta", j.beta_cut, 1e-10 * ts));
    out.push_back(upper_bound("normalization_slope", std::abs(s34::normalization_decay(g).slope + 1.0), 0.05 * ts));
    out.push_back(upper_bound("det_spread", s34::det_constancy(g).spread, 1e-10 * ts));
    const auto dl = s34::dlogtau_consistency(p);
    out.push_back(upper_bound("dlogtau_gradient", max3(dl.gradient), 1e-6 * ts));
    out.push_back(upper_bound("dlogtau_closedness", max3(dl.closedness), 1e-6 * ts));
    out.push_back(upper_bound("flow_compatibility", max3(s34::flow_compatibility(p).analytic), 1e-10 * ts));
    return out;
}

} // namespace

RunResult cmd_certify(const Options& o)
{
    std::vector<s34::Params> pts;
    bool boundary = false;
    if (o.stratum == "interior") {
        pts = param_grid(o, {0.5, 1.0, 2.0}, {-0.02, 0.0, 0.02}, {-0.5, 0.0, 0.05});
    } else if (o.stratum == "gamma_plus") {
        boundary = true;
        if (o.mu || o.nu) throw ConfigError("gamma_plus certification fixes mu and nu");
        const auto grids = parse_grids(o, {"eta"});
        for (double e : axis_values(grids, "eta", o.eta, {0.5, 1.0, 2.0})) {
            if (!(e > 0)) throw ConfigError("gamma_plus needs eta > 0");
            pts.push_back({e, 0.0, 125.0 / 108.0 * e * e * e});
        }
    } else {
        throw ConfigError("--stratum must be 'interior' or 'gamma_plus'");
    }

    // Stokes data is shared by all points; the debug flag perturbs s_1
    // (s_4 and s_7 are free along this plane, so perturbing them would go unnoticed).
    std::array<long long, 7> s7{0, -1, 0, 0, 1, -1, 0};
    if (o.corrupt_stokes) s7[0] = 1;
    const bool stokes_ok = s34::stokes_check(s34::stokes_data(s7)) && s34::stokes_antisymmetric(s34::stokes_data(s7));

    RunResult r;
    r.table.columns = {"eta", "mu", "nu", "check", "value", "tolerance", "pass", "annotation"};
    using Rows = std::vector<std::vector<Cell>>;
    const auto blocks = parallel_map<Rows>(pts.size(), o.jobs, [&](std::size_t i) {
        const s34::Params& p = pts[i];
        Rows rows;
        std::string note = boundary ? "boundary" : "";
        std::vector<Check> checks;
        try {
            if (boundary) {
                checks = certify_curve(s34::build_curve_at(p, 5.0L * p.eta / 3.0L), o.tol_scale);
            } else {
                const auto d = s34::in_domain_D(p);
                if (!d.in_D) {
                    note = "outside D: " + d.reason;
                } else {
                    checks = certify_point(p, o.tol_scale);
                }
            }
        } catch (const s34::S34Error& e) {
            checks.push_back({"evaluation", nan, 0.0, false});
            note = e.what();
        }
        checks.push_back({"stokes_relation", stokes_ok ? 0.0 : 1.0, 0.0, stokes_ok});
        for (const auto& c : checks) rows.push_back({p.eta, p.mu, p.nu, c.name, c.value, c.tolerance, c.pass, note});
        return rows;
    });
    for (const auto& b : blocks)
        for (const auto& row : b) {
            if (!std::get<bool>(row[6])) ++r.failures;
            r.table.rows.push_back(row);
        }
    return r;
}

// ----------------------------------------------------------------------------
// surface

RunResult cmd_surface(const Options& o)
{
    if (o.eta || o.mu || o.nu) throw ConfigError("surface is driven by --grid, not point flags");
    const std::string table = o.table.empty() ? "mesh" : o.table;
    RunResult r;
    const double ts = o.tol_scale;
    if (table == "mesh") {
        const auto grids = parse_grids(o, {"sigma", "eta"});
        const auto S = axis_values(grids, "sigma", std::nullopt, s34::linspace(0.1, 3.0, 30));
        const auto E = axis_values(grids, "eta", std::nullopt, s34::linspace(-1.0, 1.0, 21));
        r.table.columns = {"sigma", "eta", "nu", "mu_plus", "mu_minus", "D_plus", "D_minus", "scale", "ok"};
        int skipped = 0;
        for (double s : S)
            for (double e : E) {
                if (s < std::max(5.0 * e / 3.0, 0.0)) {
                    ++skipped;
                    continue;
                }
                const auto sp = s34::surface_param(s, e);
                const double Dp = s34::surface_discriminant({e, sp.mu_plus, sp.nu});
                const double Dm = s34::surface_discriminant({e, sp.mu_minus, sp.nu});
                const double sc = std::max(s34::surface_discriminant_scale({e, sp.mu_plus, sp.nu}), 1e-300);
                const bool ok = std::max(std::abs(Dp), std::abs(Dm)) < 1e-10 * sc * ts;
                if (!ok) ++r.failures;
                r.table.rows.push_back({s, e, sp.nu, sp.mu_plus, sp.mu_minus, Dp, Dm, sc, ok});
            }
        if (skipped) r.notes.push_back(std::to_string(skipped) + " grid points with sigma < max(5 eta/3, 0) skipped");
    } else if (table == "gamma") {
        const auto grids = parse_grids(o, {"eta"});
        const auto E = axis_values(grids, "eta", std::nullopt, s34::linspace(-1.0, 1.0, 21));
        r.table.columns = {"stratum", "eta", "sigma", "nu", "mu", "D", "scale", "ok"};
        for (double e : E) {
            if (e == 0.0) continue;
            const double s = e > 0 ? 5.0 * e / 3.0 : 0.0;
            const auto sp = s34::surface_param(s, e);
            const double D = s34::surface_discriminant({e, sp.mu_plus, sp.nu});
            const double sc = s34::surface_discriminant_scale({e, sp.mu_plus, sp.nu});
            const bool ok = std::abs(D) <= 1e-10 * sc * ts;
            if (!ok) ++r.failures;
            r.table.rows.push_back({std::string(e > 0 ? "gamma_plus" : "gamma_minus"), e, s, sp.nu, sp.mu_plus, D, sc, ok});
        }
    } else if (table == "gauss") {
        const auto grids = parse_grids(o, {"eta"});
        const auto E = axis_values(grids, "eta", std::nullopt, s34::logspace(1e-3, 2.0, 200));
        r.table.columns = {"kind", "eta", "angle"};
        for (double e : E) {
            if (!(e > 0)) throw ConfigError("gauss profile needs eta > 0");
            r.table.rows.push_back({std::string("profile"), e, s34::gauss_angle(e)});
        }
        const auto m = s34::gauss_angle_max();
        r.table.rows.push_back({std::string("max"), m.eta, m.angle});
    } else {
        throw ConfigError("surface --table must be mesh, gamma or gauss");
    }
    return r;
}

// ----------------------------------------------------------------------------
// tau

RunResult cmd_tau(const Options& o)
{
    require_interior_flags(o, "tau");
    const auto pts = param_grid(o, {1.0}, {0.0}, {0.0});
    RunResult r;
    r.table.columns = {"eta", "mu", "nu", "sigma", "h1_0", "h2_0", "h5_0", "varpi0", "chi", "gradient_error",
                       "closedness_error", "pass"};
    using Row = std::vector<Cell>;
    r.table.rows = parallel_map<Row>(pts.size(), o.jobs, [&](std::size_t i) {
        const s34::Params& p = pts[i];
        const auto d = s34::in_domain_D(p);
        if (!d.in_D) return Row{p.eta, p.mu, p.nu, nan, nan, nan, nan, nan, nan, nan, nan, false};
        const auto h = s34::leading_hamiltonians(p);
        const auto t = s34::tau_leading(p);
        const auto dl = s34::dlogtau_consistency(p);
        const double ge = max3(dl.gradient), ce = max3(dl.closedness);
        const bool ok = ge <= 1e-6 * o.tol_scale && ce <= 1e-6 * o.tol_scale;
        return Row{p.eta, p.mu, p.nu, d.sigma, h.h1_0, h.h2_0, h.h5_0, t.varpi0, t.chi, ge, ce, ok};
    });
    for (const auto& row : r.table.rows)
        if (!std::get<bool>(row.back())) ++r.failures;
    return r;
}

// ----------------------------------------------------------------------------
// parametrix

RunResult cmd_parametrix(const Options& o)
{
    require_interior_flags(o, "parametrix");
    const auto pts = param_grid(o, {1.0}, {0.0}, {0.0});
    RunResult r;
    r.table.columns = {"eta", "mu", "nu", "jump_alpha", "jump_beta", "gap", "normalization_slope", "det_re", "det_im",
                       "det_spread", "reflection", "pairing", "pairing_oracle", "pass"};
    const double ts = o.tol_scale;
    using Row = std::vector<Cell>;
    r.table.rows = parallel_map<Row>(pts.size(), o.jobs, [&](std::size_t i) {
        const s34::Params& p = pts[i];
        if (!s34::in_domain_D(p).in_D) return Row{p.eta, p.mu, p.nu, nan, nan, nan, nan, nan, nan, nan, nan, nan, nan, false};
        const s34::GlobalParametrix g{s34::build_curve(p)};
        const auto j = s34::jump_residuals(g, 20);
        const auto n = s34::normalization_decay(g);
        const auto d = s34::det_constancy(g);
        const std::vector<s34::cplx> lams{{0.7, 1.3}, {-2.0, 0.4}, {3.0, -2.5}, {-0.3, -1.1}};
        const double refl = s34::reflection_residual(p, lams, false);
        const auto pr = s34::pairing_check(p);
        const bool ok = std::max(j.alpha_cut, j.beta_cut) <= 1e-10 * ts && j.gap <= 1e-10 * ts
                        && std::abs(n.slope + 1.0) <= 0.05 * ts && d.spread <= 1e-10 * ts && refl <= 1e-12 * ts;
        return Row{p.eta,      p.mu,        p.nu, j.alpha_cut, j.beta_cut, j.gap,     n.slope,
                   d.value.real(), d.value.imag(), d.spread, refl,    pr.value,   pr.oracle, ok};
    });
    for (const auto& row : r.table.rows)
        if (!std::get<bool>(row.back())) ++r.failures;
    return r;
}

// ----------------------------------------------------------------------------
// critical

RunResult cmd_critical(const Options& o)
{
    if (o.eta || o.mu || o.nu) throw ConfigError("critical takes its points from --grid eta0=...");
    const auto grids = parse_grids(o, {"eta0"});
    const auto E = axis_values(grids, "eta0", std::nullopt, {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0});
    RunResult r;
    r.table.columns = {"eta0",         "matching_slope_error", "matching_exact", "g_vs_critical", "C",
                       "scaling_limit", "zeta_prime",          "tritronquee",    "tauhat0",       "varpi0",
                       "tauhat0_grad_eta", "tauhat0_grad_nu",  "half_h5_0",      "half_h1_0"};
    using Row = std::vector<Cell>;
    r.table.rows = parallel_map<Row>(E.size(), o.jobs, [&](std::size_t i) {
        const double e0 = E[i];
        if (e0 == 0.0) throw ConfigError("eta0 = 0 is not a critical point of either stratum");
        if (e0 < 0) {
            const double s = -e0;
            const auto m = s34::modified_curve(e0, e0, std::pow(5.0 * s / 6.0, 0.2) * std::pow(1e-3, 0.8) * -1.0);
            const auto dec = s34::modified_asymptotics(m);
            return Row{e0, dec.worst_slope_error, dec.exact, nan, nan, nan, nan,
                       s34::tritronquee_constant(e0, s34::Stratum::gamma_minus), nan, nan, nan, nan, nan, nan};
        }
        const double nu0 = 125.0 / 108.0 * e0 * e0 * e0;
        const double C = s34::scaling_constant(e0, 0.0, -1.0);
        const double shift = C * -1.0 * std::pow(1e-3, 0.8);
        const auto m = s34::modified_curve(e0, e0, nu0 + shift);
        const auto dec = s34::modified_asymptotics(m);
        const auto grad = s34::tauhat0_gradient(e0, nu0, e0);
        const auto h = s34::leading_hamiltonians_at({e0, 0.0, nu0}, 5.0 * e0 / 3.0);
        return Row{e0,
                   dec.worst_slope_error,
                   dec.exact,
                   s34::modified_vs_critical(e0),
                   C,
                   s34::scaling_limit_plus(e0, 0.0, -1.0, -1.0, 1e-3),
                   s34::zeta_derivative_plus(e0),
                   s34::tritronquee_constant(e0, s34::Stratum::gamma_plus),
                   s34::tauhat0_exponent(e0, nu0, e0),
                   s34::tau_leading_at({e0, 0.0, nu0}, 5.0 * e0 / 3.0).varpi0,
                   grad[0],
                   grad[1],
                   0.5 * h.h5_0,
                   0.5 * h.h1_0};
    });
    return r;
}

// ----------------------------------------------------------------------------
// pi

RunResult cmd_pi(const Options& o)
{
    if (o.eta || o.mu || o.nu || !o.grids.empty()) throw ConfigError("pi takes --x-start, --x-end and --step only");
    const std::string table = o.table.empty() ? "trajectory" : o.table;
    RunResult r;
    if (table == "trajectory") {
        if (!(o.x_start <= s34::pi_seed_limit))
            throw ConfigError("--x-start must be <= " + format_number(s34::pi_seed_limit) + " (asymptotic seed region)");
        if (!(o.x_end > o.x_start) || !(o.step > 0)) throw ConfigError("pi: empty integration range");
        const auto tr = s34::pi_integrate(o.x_start, o.x_end, o.step, true);
        const auto res = s34::pi_hamiltonian_residuals(tr);
        r.table.columns = {"x", "q", "qprime", "H", "H_residual"};
        for (std::size_t i = 0; i < tr.states.size(); ++i) {
            const auto& s = tr.states[i];
            r.table.rows.push_back({s.x, s.q, s.qprime, s.H, res[i]});
            if (!std::isnan(res[i]) && res[i] > 1e-8 * o.tol_scale) ++r.failures;
        }
        if (tr.pole)
            r.notes.push_back("trajectory stopped at the pole guard |q| > 1e6 near x = " + format_number(tr.pole_x));
    } else if (table == "constants") {
        r.table.columns = {"stratum", "eta0", "n_eta", "n_nu", "c_lead", "target", "abs_error", "pass"};
        struct Case {
            s34::Stratum side;
            double e0, ne, nn;
        };
        const std::vector<Case> cases{{s34::Stratum::gamma_plus, 1.0, 0.0, -1.0}, {s34::Stratum::gamma_plus, 1.0, 1.0, 0.0},
                                      {s34::Stratum::gamma_plus, 1.0, 1.0, 1.0},  {s34::Stratum::gamma_plus, 0.5, 0.0, -1.0},
                                      {s34::Stratum::gamma_plus, 2.0, 0.0, -1.0}, {s34::Stratum::gamma_minus, -0.5, 0.0, 0.0},
                                      {s34::Stratum::gamma_minus, -1.0, 0.0, 0.0}, {s34::Stratum::gamma_minus, -2.0, 0.0, 0.0}};
        const double target = 1.0 / std::sqrt(6.0);
        using Row = std::vector<Cell>;
        r.table.rows = parallel_map<Row>(cases.size(), o.jobs, [&](std::size_t i) {
            const auto& c = cases[i];
            const bool plus = c.side == s34::Stratum::gamma_plus;
            const double v = plus ? s34::tritronquee_constant(c.e0, c.side, c.ne, c.nn)
                                  : s34::tritronquee_constant(c.e0, c.side);
            const double err = std::abs(v - target);
            return Row{std::string(plus ? "gamma_plus" : "gamma_minus"), c.e0, plus ? c.ne : nan, plus ? c.nn : nan,
                       v, target, err, err <= 1e-6 * o.tol_scale};
        });
        for (const auto& row : r.table.rows)
            if (!std::get<bool>(row.back())) ++r.failures;
    } else {
        throw ConfigError("pi --table must be trajectory or constants");
    }
    return r;
}

} // namespace s34cli
