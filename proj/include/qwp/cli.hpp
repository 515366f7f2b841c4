// cli.hpp
// Command-line front end: experiment configuration, dispatch, and CSV/JSON
// emission. Kept stream-based so the whole surface is testable in-process.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qwp/game.hpp"

namespace qwp {

// Exit codes of the CLI.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;    // bad flags, bad config, bad values
inline constexpr int exit_verify = 2;   // a verification tolerance was violated

// Inclusive arithmetic grid in degrees: start, start+step, ..., stop.
// step = 0 marks an unset grid (command-specific default applies).
struct grid_spec {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;

    bool is_set() const { return step != 0.0; }
    std::vector<double> values() const;  // throws std::invalid_argument if empty/invalid

    friend bool operator==(const grid_spec&, const grid_spec&) = default;
};

// One experiment, fully described. Serializes to a flat JSON document;
// parsing that document back reproduces the config exactly.
struct experiment_config {
    std::string command;  // simulate | sweep | series | verify | presets
    std::string preset;   // built-in game name; expands into the schedule fields

    // schedule
    bool periodic = false;
    coin_angles coin_a;
    coin_angles coin_b;
    int q = 3;
    a_site_rule a_sites = a_site_rule::all_multiples;

    int steps = 100;
    spinor initial = symmetric_initial_spinor();

    std::string sweep_kind;            // beta | alpha-b | alpha-a-gamma-b | gamma-a-gamma-b
    std::string series_kind = "steps"; // steps | q
    grid_spec axis1;
    grid_spec axis2;
    std::string output;                // CSV path ("" = none)
    bool even_only = true;

    // verify controls
    bool factorization = false;  // neither flag set -> run both suites
    bool flatness = false;
    std::optional<double> verify_beta;  // restrict the factorization suite
    std::optional<int> verify_t;
    int samples = 20;
    unsigned seed = 12345;
    double tol_factorization = 1e-9;
    double tol_flatness = 1e-6;

    friend bool operator==(const experiment_config&, const experiment_config&) = default;
};

std::string config_to_json(const experiment_config& cfg);
experiment_config config_from_json(const std::string& text);  // throws on malformed input

// Flag-string parsers (also used for config round-trips in tests).
coin_angles parse_angles(const std::string& text);      // "a,b,g[,t]"
spinor parse_spinor(const std::string& text);           // "down_re,down_im,up_re,up_im"
grid_spec parse_grid(const std::string& text);          // "start:stop:step"

// 12 significant digits, locale-independent.
std::string format_digits(double value);

// Parses and runs one invocation; argv-style args without the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwp
