// Command-line front end: parameter sweeps, certification runs and data export.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"
#include "s34/types.hpp"

#ifndef S34_VERSION
#define S34_VERSION "0.0.0"
#endif

namespace {

int run(const std::string& name, const std::function<s34cli::RunResult(const s34cli::Options&)>& cmd,
        const s34cli::Options& o)
{
    const auto t0 = std::chrono::steady_clock::now();
    const s34cli::RunResult r = cmd(o);
    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) throw s34cli::ConfigError("cannot open output file " + o.out);
    }
    std::ostream& os = o.out.empty() ? std::cout : file;
    if (o.format == "json")
        s34cli::write_json(os, r.table);
    else
        s34cli::write_csv(os, r.table);
    os.flush();

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& n : r.notes) std::cerr << "note: " << n << '\n';
    std::cerr << "s34cli " << S34_VERSION << " " << name << ": " << r.table.rows.size() << " records, " << r.failures
              << " failed, " << wall << " s\n";
    return r.failures > 0 ? 1 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sweeps and certification runs for the (3,4) string equation asymptotics"};
    app.set_version_flag("--version", S34_VERSION);
    app.set_config("--config", "", "Flat key = value file; command-line flags take precedence");
    app.require_subcommand(1);

    s34cli::Options o;
    double eta = 0, mu = 0, nu = 0;
    auto* oeta = app.add_option("--eta", eta, "Point mode: eta");
    auto* omu = app.add_option("--mu", mu, "Point mode: mu");
    auto* onu = app.add_option("--nu", nu, "Point mode: nu");
    app.add_option("--grid", o.grids, "Axis grid name=min:max:count[:log]; repeatable")->take_all();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", o.out, "Output path (default: stdout)");
    app.add_option("--jobs", o.jobs, "Worker threads; output order is by grid index")->check(CLI::Range(1, 1024));
    app.add_option("--tol-scale", o.tol_scale, "Multiplier on the documented tolerances")
        ->check(CLI::PositiveNumber);
    app.add_option("--stratum", o.stratum, "certify: interior or gamma_plus");
    app.add_option("--table", o.table, "surface: mesh|gamma|gauss; pi: trajectory|constants");
    app.add_option("--x-start", o.x_start, "pi: left end of the trajectory (<= -20)");
    app.add_option("--x-end", o.x_end, "pi: right end of the trajectory");
    app.add_option("--step", o.step, "pi: output grid spacing");
    app.add_flag("--debug-corrupt-stokes", o.corrupt_stokes, "certify: perturb the Stokes data (negative control)");

    const std::map<std::string, std::pair<std::string, std::function<s34cli::RunResult(const s34cli::Options&)>>> cmds{
        {"sigma", {"Solve the branch equation and report domain membership", s34cli::cmd_sigma}},
        {"certify", {"Run the invariant suite at the configured points", s34cli::cmd_certify}},
        {"surface", {"Critical-surface mesh, boundary curves and Gauss-angle profile", s34cli::cmd_surface}},
        {"tau", {"Leading tau data and differential consistency", s34cli::cmd_tau}},
        {"parametrix", {"Global parametrix jump, normalization and symmetry residuals", s34cli::cmd_parametrix}},
        {"critical", {"Modified curves, scaling maps and degeneration constants", s34cli::cmd_critical}},
        {"pi", {"Painleve I trajectories and the tritronquee constant table", s34cli::cmd_pi}},
    };
    for (const auto& [name, entry] : cmds) app.add_subcommand(name, entry.first)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (oeta->count()) o.eta = eta;
    if (omu->count()) o.mu = mu;
    if (onu->count()) o.nu = nu;

    for (const auto& [name, entry] : cmds) {
        if (!app.got_subcommand(name)) continue;
        try {
            return run(name, entry.second, o);
        } catch (const s34cli::ConfigError& e) {
            std::cerr << "config error: " << e.what() << '\n';
            return 2;
        } catch (const s34::DomainError& e) {
            std::cerr << "config error: " << e.what() << '\n';
            return 2;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 1;
        }
    }
    return 2;
}
