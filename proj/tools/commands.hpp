#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace s34cli {

// Usage or configuration problem; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Axis {
    std::string name;
    double lo = 0;
    double hi = 0;
    int count = 1;
    bool log = false;

    std::vector<double> values() const;
};

// "name=min:max:count[:log]"
Axis parse_axis(const std::string& spec);

struct Options {
    std::optional<double> eta, mu, nu;
    std::vector<std::string> grids;
    std::string format = "csv";
    std::string out;
    int jobs = 1;
    double tol_scale = 1.0;
    std::string stratum = "interior"; // certify: interior | gamma_plus
    std::string table;                // surface: mesh | gamma | gauss; pi: trajectory | constants
    double x_start = -24.0;
    double x_end = -1.0;
    double step = 1e-3;
    bool corrupt_stokes = false;
};

using Cell = std::variant<double, long long, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct RunResult {
    Table table;
    int failures = 0;
    std::vector<std::string> notes;
};

RunResult cmd_sigma(const Options& o);
RunResult cmd_certify(const Options& o);
RunResult cmd_surface(const Options& o);
RunResult cmd_tau(const Options& o);
RunResult cmd_parametrix(const Options& o);
RunResult cmd_critical(const Options& o);
RunResult cmd_pi(const Options& o);

// 17 significant digits; -0 printed as 0.
std::string format_number(double v);
void write_csv(std::ostream& os, const Table& t);
// Array of objects mirroring the CSV columns; non-finite numbers become null.
void write_json(std::ostream& os, const Table& t);

} // namespace s34cli
