#include "qwp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "qwp/oracle.hpp"
#include "qwp/sweeps.hpp"

namespace qwp {

using nlohmann::json;

// ---------------------------------------------------------------------------
// formatting and parsing helpers

std::string format_digits(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

namespace {

std::vector<double> split_numbers(const std::string& text, char sep, const char* what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(sep, pos), text.size());
        const std::string token = text.substr(pos, end - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": cannot parse number '" + token +
                                        "' in '" + text + "'");
        }
        pos = end + 1;
    }
    return out;
}

int round_to_int(double v, const char* what) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9) {
        throw std::invalid_argument(std::string(what) + ": expected an integer, got " +
                                    format_digits(v));
    }
    return static_cast<int>(r);
}

std::string a_sites_name(a_site_rule rule) {
    return rule == a_site_rule::all_multiples ? "all-multiples" : "nonnegative-multiples";
}

a_site_rule a_sites_from_name(const std::string& name) {
    if (name == "all-multiples") return a_site_rule::all_multiples;
    if (name == "nonnegative-multiples") return a_site_rule::nonnegative_multiples;
    throw std::invalid_argument("a-sites: expected 'all-multiples' or 'nonnegative-multiples', got '" +
                                name + "'");
}

}  // namespace

coin_angles parse_angles(const std::string& text) {
    const std::vector<double> v = split_numbers(text, ',', "angles");
    if (v.size() != 3 && v.size() != 4) {
        throw std::invalid_argument("angles: expected 'alpha,beta,gamma[,theta]' in degrees, got '" +
                                    text + "'");
    }
    return {v[0], v[1], v[2], v.size() == 4 ? v[3] : 0.0};
}

spinor parse_spinor(const std::string& text) {
    const std::vector<double> v = split_numbers(text, ',', "spinor");
    if (v.size() != 4) {
        throw std::invalid_argument("spinor: expected 'down_re,down_im,up_re,up_im', got '" + text +
                                    "'");
    }
    return {{v[0], v[1]}, {v[2], v[3]}};
}

grid_spec parse_grid(const std::string& text) {
    const std::vector<double> v = split_numbers(text, ':', "grid");
    if (v.size() != 2 && v.size() != 3) {
        throw std::invalid_argument("grid: expected 'start:stop[:step]', got '" + text + "'");
    }
    grid_spec g{v[0], v[1], v.size() == 3 ? v[2] : 1.0};
    g.values();  // validate now
    return g;
}

std::vector<double> grid_spec::values() const {
    if (!(step > 0.0)) {
        throw std::invalid_argument("grid: step must be positive");
    }
    if (stop < start) {
        throw std::invalid_argument("grid: stop must be >= start");
    }
    const std::size_t count = static_cast<std::size_t>((stop - start) / step + 1e-9) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
}

// ---------------------------------------------------------------------------
// config serialization

namespace {

json angles_to_json(const coin_angles& a) { return json::array({a.alpha, a.beta, a.gamma, a.theta}); }

coin_angles angles_from_json(const json& j) {
    if (!j.is_array() || (j.size() != 3 && j.size() != 4)) {
        throw std::invalid_argument("config: coin angles must be an array [alpha,beta,gamma(,theta)]");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
            j.size() == 4 ? j[3].get<double>() : 0.0};
}

json grid_to_json(const grid_spec& g) {
    return json{{"start", g.start}, {"stop", g.stop}, {"step", g.step}};
}

grid_spec grid_from_json(const json& j) {
    grid_spec g;
    g.start = j.value("start", 0.0);
    g.stop = j.value("stop", 0.0);
    g.step = j.value("step", 0.0);
    return g;
}

}  // namespace

std::string config_to_json(const experiment_config& cfg) {
    json j;
    j["command"] = cfg.command;
    j["preset"] = cfg.preset;
    j["periodic"] = cfg.periodic;
    j["coin_a"] = angles_to_json(cfg.coin_a);
    j["coin_b"] = angles_to_json(cfg.coin_b);
    j["q"] = cfg.q;
    j["a_sites"] = a_sites_name(cfg.a_sites);
    j["steps"] = cfg.steps;
    j["spinor"] = json{{"down", {cfg.initial.down.real(), cfg.initial.down.imag()}},
                       {"up", {cfg.initial.up.real(), cfg.initial.up.imag()}}};
    j["sweep_kind"] = cfg.sweep_kind;
    j["series_kind"] = cfg.series_kind;
    j["axis1"] = grid_to_json(cfg.axis1);
    j["axis2"] = grid_to_json(cfg.axis2);
    j["output"] = cfg.output;
    j["even_only"] = cfg.even_only;
    j["factorization"] = cfg.factorization;
    j["flatness"] = cfg.flatness;
    if (cfg.verify_beta) j["verify_beta"] = *cfg.verify_beta;
    if (cfg.verify_t) j["verify_t"] = *cfg.verify_t;
    j["samples"] = cfg.samples;
    j["seed"] = cfg.seed;
    j["tol_factorization"] = cfg.tol_factorization;
    j["tol_flatness"] = cfg.tol_flatness;
    return j.dump(2) + "\n";
}

experiment_config config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: malformed JSON: ") + e.what());
    }
    experiment_config cfg;
    cfg.command = j.value("command", cfg.command);
    cfg.preset = j.value("preset", cfg.preset);
    cfg.periodic = j.value("periodic", cfg.periodic);
    if (j.contains("coin_a")) cfg.coin_a = angles_from_json(j["coin_a"]);
    if (j.contains("coin_b")) cfg.coin_b = angles_from_json(j["coin_b"]);
    cfg.q = j.value("q", cfg.q);
    if (j.contains("a_sites")) cfg.a_sites = a_sites_from_name(j["a_sites"].get<std::string>());
    cfg.steps = j.value("steps", cfg.steps);
    if (j.contains("spinor")) {
        const json& s = j["spinor"];
        cfg.initial = {{s["down"][0].get<double>(), s["down"][1].get<double>()},
                       {s["up"][0].get<double>(), s["up"][1].get<double>()}};
    }
    cfg.sweep_kind = j.value("sweep_kind", cfg.sweep_kind);
    cfg.series_kind = j.value("series_kind", cfg.series_kind);
    if (j.contains("axis1")) cfg.axis1 = grid_from_json(j["axis1"]);
    if (j.contains("axis2")) cfg.axis2 = grid_from_json(j["axis2"]);
    cfg.output = j.value("output", cfg.output);
    cfg.even_only = j.value("even_only", cfg.even_only);
    cfg.factorization = j.value("factorization", cfg.factorization);
    cfg.flatness = j.value("flatness", cfg.flatness);
    if (j.contains("verify_beta")) cfg.verify_beta = j["verify_beta"].get<double>();
    if (j.contains("verify_t")) cfg.verify_t = j["verify_t"].get<int>();
    cfg.samples = j.value("samples", cfg.samples);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.tol_factorization = j.value("tol_factorization", cfg.tol_factorization);
    cfg.tol_flatness = j.value("tol_flatness", cfg.tol_flatness);
    return cfg;
}

// ---------------------------------------------------------------------------
// output writers

namespace {

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    return f;
}

std::string sidecar_path(const std::string& csv_path) {
    if (csv_path.size() >= 4 && csv_path.ends_with(".csv")) {
        return csv_path.substr(0, csv_path.size() - 4) + ".json";
    }
    return csv_path + ".json";
}

void write_distribution_csv(const std::string& path, const walk_state& state) {
    std::ofstream f = open_output(path);
    f << "x,p,amp_down_re,amp_down_im,amp_up_re,amp_up_im\n";
    for (const auto& [x, p] : position_distribution(state)) {
        const cplx down = state.amplitude(x, chirality::down);
        const cplx up = state.amplitude(x, chirality::up);
        f << x << ',' << format_digits(p) << ',' << format_digits(down.real()) << ','
          << format_digits(down.imag()) << ',' << format_digits(up.real()) << ','
          << format_digits(up.imag()) << '\n';
    }
}

void write_series_csv(const std::string& path, const series_result& series) {
    std::ofstream f = open_output(path);
    f << series.index_name << ",payoff\n";
    for (std::size_t i = 0; i < series.index.size(); ++i) {
        f << format_digits(series.index[i]) << ',' << format_digits(series.payoffs[i]) << '\n';
    }
}

void write_grid_csv(const std::string& path, const sweep_grid& grid) {
    std::ofstream f = open_output(path);
    f << grid.axis1_name << ',' << grid.axis2_name << ",payoff\n";
    for (std::size_t i = 0; i < grid.axis1.size(); ++i) {
        for (std::size_t j = 0; j < grid.axis2.size(); ++j) {
            f << format_digits(grid.axis1[i]) << ',' << format_digits(grid.axis2[j]) << ','
              << format_digits(grid.value_at(i, j)) << '\n';
        }
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream f = open_output(path);
    f << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// command implementations

schedule_spec schedule_from_config(const experiment_config& cfg) {
    if (cfg.periodic) return periodic_spec(cfg.q, cfg.coin_a, cfg.coin_b, cfg.a_sites);
    return homogeneous_spec(cfg.coin_a);
}

int cmd_simulate(const experiment_config& cfg, std::ostream& out) {
    const schedule_spec spec = schedule_from_config(cfg);
    if (cfg.steps < 0) throw std::invalid_argument("simulate: steps must be non-negative");
    walk_state state = initial_state(cfg.initial, cfg.steps);
    evolve(state, make_schedule(spec), cfg.steps);
    const payoff_record rec = payoff(state);
    out << "P_R     = " << format_digits(rec.p_right) << '\n'
        << "P_L     = " << format_digits(rec.p_left) << '\n'
        << "payoff  = " << format_digits(rec.payoff) << '\n'
        << "verdict = " << to_string(rec.result) << '\n'
        << "mean_x  = " << format_digits(mean_position(state)) << '\n';
    if (!cfg.output.empty()) {
        write_distribution_csv(cfg.output, state);
        out << "distribution written to " << cfg.output << '\n';
    }
    return exit_ok;
}

int cmd_sweep(const experiment_config& cfg, std::ostream& out, unsigned threads) {
    if (cfg.output.empty()) throw std::invalid_argument("sweep: --output is required");
    grid_spec axis1 = cfg.axis1;
    grid_spec axis2 = cfg.axis2;
    json meta;
    meta["command"] = "sweep";
    meta["kind"] = cfg.sweep_kind;
    meta["steps"] = cfg.steps;

    if (cfg.sweep_kind == "beta") {
        if (!axis1.is_set()) axis1 = {0, 90, 1};
        series_result series =
            beta_scan(cfg.steps, cfg.coin_a.alpha, cfg.coin_a.gamma, axis1.values());
        write_series_csv(cfg.output, series);
        const std::size_t best = static_cast<std::size_t>(
            std::max_element(series.payoffs.begin(), series.payoffs.end()) -
            series.payoffs.begin());
        meta["alpha_deg"] = cfg.coin_a.alpha;
        meta["gamma_deg"] = cfg.coin_a.gamma;
        meta["argmax"] = {{"beta_deg", series.index[best]}, {"payoff", series.payoffs[best]}};
    } else if (cfg.sweep_kind == "alpha-b") {
        if (!axis1.is_set()) axis1 = {-180, 180, 1};
        flatness_result flat = alpha_b_flatness(cfg.steps, cfg.q, cfg.coin_a, cfg.coin_b.beta,
                                                cfg.coin_b.gamma, axis1.values());
        write_series_csv(cfg.output, flat.series);
        const std::size_t best = static_cast<std::size_t>(
            std::max_element(flat.series.payoffs.begin(), flat.series.payoffs.end()) -
            flat.series.payoffs.begin());
        meta["q"] = cfg.q;
        meta["coin_a"] = angles_to_json(cfg.coin_a);
        meta["beta_b_deg"] = cfg.coin_b.beta;
        meta["gamma_b_deg"] = cfg.coin_b.gamma;
        meta["spread"] = flat.spread;
        meta["argmax"] = {{"alpha_b_deg", flat.series.index[best]},
                          {"payoff", flat.series.payoffs[best]}};
    } else if (cfg.sweep_kind == "alpha-a-gamma-b" || cfg.sweep_kind == "gamma-a-gamma-b") {
        if (!axis1.is_set()) axis1 = {-180, 0, 1};
        if (!axis2.is_set()) axis2 = {-180, 0, 1};
        const sweep_mode mode = cfg.sweep_kind == "alpha-a-gamma-b" ? sweep_mode::alpha_a_gamma_b
                                                                    : sweep_mode::gamma_a_gamma_b;
        const sweep_grid grid = sweep2d(mode, cfg.coin_a.beta, cfg.coin_b.beta, cfg.q, cfg.steps,
                                        axis1.values(), axis2.values(), threads);
        write_grid_csv(cfg.output, grid);
        meta["q"] = cfg.q;
        meta["beta_a_deg"] = cfg.coin_a.beta;
        meta["beta_b_deg"] = cfg.coin_b.beta;
        meta["argmax"] = {{grid.axis1_name, grid.axis1[grid.argmax_i]},
                          {grid.axis2_name, grid.axis2[grid.argmax_j]},
                          {"payoff", grid.argmax_value}};
    } else {
        throw std::invalid_argument(
            "sweep: --kind must be one of beta, alpha-b, alpha-a-gamma-b, gamma-a-gamma-b");
    }

    write_json_file(sidecar_path(cfg.output), meta);
    out << "sweep written to " << cfg.output << " (argmax in " << sidecar_path(cfg.output)
        << ")\n";
    return exit_ok;
}

int cmd_series(const experiment_config& cfg, std::ostream& out) {
    if (cfg.output.empty()) throw std::invalid_argument("series: --output is required");
    series_result series;
    if (cfg.series_kind == "steps") {
        if (cfg.steps < 1) throw std::invalid_argument("series: steps must be >= 1");
        series = step_series(schedule_from_config(cfg), cfg.steps, cfg.even_only);
    } else if (cfg.series_kind == "q") {
        grid_spec axis = cfg.axis1.is_set() ? cfg.axis1 : grid_spec{2, 10, 1};
        std::vector<int> qs;
        for (double v : axis.values()) qs.push_back(round_to_int(v, "series q grid"));
        if (!qs.empty() && qs.front() < 1) throw std::invalid_argument("series: q must be >= 1");
        series = q_series(cfg.coin_a, cfg.coin_b, qs, cfg.steps);
    } else {
        throw std::invalid_argument("series: --kind must be 'steps' or 'q'");
    }
    write_series_csv(cfg.output, series);
    out << "series written to " << cfg.output << '\n';
    return exit_ok;
}

int cmd_verify(const experiment_config& cfg, std::ostream& out) {
    const bool run_factorization = cfg.factorization || !cfg.flatness;
    const bool run_flatness = cfg.flatness || !cfg.factorization;
    bool ok = true;

    if (run_factorization) {
        const std::vector<double> betas =
            cfg.verify_beta ? std::vector<double>{*cfg.verify_beta} : std::vector<double>{15, 45, 88};
        const std::vector<int> ts =
            cfg.verify_t ? std::vector<int>{*cfg.verify_t} : std::vector<int>{10, 57, 100};
        std::mt19937 rng(cfg.seed);
        std::uniform_real_distribution<double> angle(-180.0, 180.0);
        for (double beta : betas) {
            for (int t : ts) {
                std::vector<std::pair<double, double>> samples;
                samples.reserve(static_cast<std::size_t>(std::max(cfg.samples, 3)));
                for (int i = 0; i < std::max(cfg.samples, 3); ++i) {
                    samples.emplace_back(angle(rng), angle(rng));
                }
                const factorization_report rep = verify_factorization(beta, t, samples);
                const bool pass = rep.max_residual < cfg.tol_factorization;
                ok = ok && pass;
                out << "factorization beta=" << format_digits(beta) << " t=" << t
                    << " M=" << format_digits(rep.scale)
                    << " max_residual=" << format_digits(rep.max_residual)
                    << " tol=" << format_digits(cfg.tol_factorization) << (pass ? " PASS" : " FAIL")
                    << '\n';
            }
        }
    }
    if (run_flatness) {
        const grid_spec axis = cfg.axis1.is_set() ? cfg.axis1 : grid_spec{-180, 180, 1};
        const flatness_result flat =
            alpha_b_flatness(cfg.steps, cfg.q, {15, 45, 30}, 88, 0, axis.values());
        const bool pass = flat.spread < cfg.tol_flatness;
        ok = ok && pass;
        out << "alpha-b flatness q=" << cfg.q << " t=" << cfg.steps
            << " spread=" << format_digits(flat.spread)
            << " tol=" << format_digits(cfg.tol_flatness) << (pass ? " PASS" : " FAIL") << '\n';
    }
    out << "verify: " << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? exit_ok : exit_verify;
}

int cmd_presets(std::ostream& out) {
    for (const game_preset& p : builtin_presets()) {
        const schedule_spec& s = p.schedule;
        out << p.name << ": q=" << s.q << " A=(" << format_digits(s.coin_a.alpha) << ','
            << format_digits(s.coin_a.beta) << ',' << format_digits(s.coin_a.gamma) << ") B=("
            << format_digits(s.coin_b.alpha) << ',' << format_digits(s.coin_b.beta) << ','
            << format_digits(s.coin_b.gamma) << ") steps=" << p.default_steps << '\n';
    }
    return exit_ok;
}

}  // namespace

// ---------------------------------------------------------------------------
// argument parsing and dispatch

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    experiment_config cfg;

    // The config file seeds every field; explicit flags then override.
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        if (args[i].starts_with("--config=")) path = args[i].substr(9);
        if (!path.empty()) {
            std::ifstream f(path);
            if (!f) {
                err << "error: cannot read config file '" << path << "'\n";
                return exit_usage;
            }
            std::stringstream buffer;
            buffer << f.rdbuf();
            try {
                cfg = config_from_json(buffer.str());
            } catch (const std::exception& e) {
                err << "error: " << e.what() << '\n';
                return exit_usage;
            }
        }
    }

    CLI::App app{"one-dimensional quantum-walk simulator and Parrondo game analysis"};
    app.name("qwp");

    // raw strings for composite flags, applied after preset expansion
    std::string config_path, coin_str, coin_a_str, coin_b_str, spinor_str;
    std::string grid1_str, grid2_str, a_sites_str, preset_name;
    unsigned threads = 0;

    auto add_config_flag = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path,
                        "JSON config file; explicit flags override it (already applied)");
    };
    add_config_flag(&app);

    auto add_schedule_flags = [&](CLI::App* cmd) {
        cmd->add_option("--preset", preset_name, "built-in game (see 'presets')");
        cmd->add_option("--coin", coin_str, "homogeneous coin angles 'alpha,beta,gamma[,theta]'");
        cmd->add_option("--coin-a", coin_a_str, "game A coin angles (periodic schedule)");
        cmd->add_option("--coin-b", coin_b_str, "game B coin angles (periodic schedule)");
        cmd->add_option("--q", cfg.q, "period: coin A acts at multiples of q");
        cmd->add_option("--a-sites", a_sites_str,
                        "which multiples of q get coin A: all-multiples | nonnegative-multiples");
    };

    CLI::App* sim = app.add_subcommand("simulate", "run one walk and report the payoff");
    add_config_flag(sim);
    add_schedule_flags(sim);
    sim->add_option("--steps", cfg.steps, "number of walk steps");
    sim->add_option("--spinor", spinor_str, "initial spinor 'down_re,down_im,up_re,up_im'");
    sim->add_option("-o,--output", cfg.output, "write the position distribution CSV here");

    CLI::App* swp = app.add_subcommand("sweep", "payoff over an angle grid, CSV + argmax JSON");
    add_config_flag(swp);
    swp->add_option("--kind", cfg.sweep_kind,
                    "beta | alpha-b | alpha-a-gamma-b | gamma-a-gamma-b");
    swp->add_option("--alpha", cfg.coin_a.alpha, "fixed alpha for the beta scan");
    swp->add_option("--gamma", cfg.coin_a.gamma, "fixed gamma for the beta scan");
    swp->add_option("--coin-a", coin_a_str, "game A angles (fixed components)");
    swp->add_option("--coin-b", coin_b_str, "game B angles (fixed components)");
    swp->add_option("--q", cfg.q, "period");
    swp->add_option("--steps", cfg.steps, "walk steps per grid point");
    swp->add_option("--grid1", grid1_str, "first axis 'start:stop[:step]' in degrees");
    swp->add_option("--grid2", grid2_str, "second axis 'start:stop[:step]' in degrees");
    swp->add_option("--threads", threads, "worker threads (0 = all cores)");
    swp->add_option("-o,--output", cfg.output, "CSV output path (required)");

    CLI::App* ser = app.add_subcommand("series", "payoff vs step count or vs period q");
    add_config_flag(ser);
    ser->add_option("--kind", cfg.series_kind, "steps | q");
    add_schedule_flags(ser);
    ser->add_option("--steps", cfg.steps, "t_max for the step series; fixed t for the q series");
    ser->add_option("--q-grid", grid1_str, "q values 'start:stop[:step]' for the q series");
    ser->add_flag("--all-steps", "record every step, not just even ones");
    ser->add_option("-o,--output", cfg.output, "CSV output path (required)");

    CLI::App* ver = app.add_subcommand("verify", "payoff-factorization and flatness checks");
    add_config_flag(ver);
    ver->add_flag("--factorization", "run only the factorization suite");
    ver->add_flag("--alpha-b-flatness", "run only the alpha_B flatness suite");
    double verify_beta = 0.0;
    int verify_t = 0;
    ver->add_option("--beta", verify_beta, "restrict the factorization suite to this beta");
    ver->add_option("--t", verify_t, "restrict the factorization suite to this step count");
    ver->add_option("--samples", cfg.samples, "random (alpha, gamma) samples per configuration");
    ver->add_option("--seed", cfg.seed, "RNG seed for the samples");
    ver->add_option("--grid1", grid1_str, "alpha_B grid for the flatness suite");
    ver->add_option("--tol-factorization", cfg.tol_factorization, "factorization residual tolerance");
    ver->add_option("--tol-flatness", cfg.tol_flatness, "flatness spread tolerance");

    app.add_subcommand("presets", "list the built-in games");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        // layering: defaults < config file < preset < explicit flags
        if (!preset_name.empty()) cfg.preset = preset_name;
        if (!cfg.preset.empty()) {
            const game_preset* p = find_preset(cfg.preset);
            if (p == nullptr) {
                err << "error: unknown preset '" << cfg.preset << "'\n";
                return exit_usage;
            }
            cfg.periodic = p->schedule.periodic;
            cfg.coin_a = p->schedule.coin_a;
            cfg.coin_b = p->schedule.coin_b;
            cfg.a_sites = p->schedule.rule;
            CLI::App* active = sim->parsed() ? sim
                               : ser->parsed() ? ser
                               : swp->parsed() ? swp
                                               : nullptr;
            if (active == nullptr || active->count("--q") == 0) cfg.q = p->schedule.q;
        }
        if (!coin_str.empty()) {
            cfg.coin_a = parse_angles(coin_str);
            cfg.periodic = false;
        }
        if (!coin_a_str.empty()) cfg.coin_a = parse_angles(coin_a_str);
        if (!coin_b_str.empty()) cfg.coin_b = parse_angles(coin_b_str);
        if ((!coin_a_str.empty() || !coin_b_str.empty()) && coin_str.empty() &&
            cfg.preset.empty()) {
            cfg.periodic = true;
        }
        if (!a_sites_str.empty()) cfg.a_sites = a_sites_from_name(a_sites_str);
        if (!spinor_str.empty()) cfg.initial = parse_spinor(spinor_str);
        if (!grid1_str.empty()) cfg.axis1 = parse_grid(grid1_str);
        if (!grid2_str.empty()) cfg.axis2 = parse_grid(grid2_str);
        if (ser->count("--all-steps") > 0) cfg.even_only = false;
        if (ver->count("--factorization") > 0) cfg.factorization = true;
        if (ver->count("--alpha-b-flatness") > 0) cfg.flatness = true;
        if (ver->count("--beta") > 0) cfg.verify_beta = verify_beta;
        if (ver->count("--t") > 0) cfg.verify_t = verify_t;

        if (app.get_subcommands().size() == 1) {
            cfg.command = app.get_subcommands().front()->get_name();
        }
        if (cfg.command == "simulate") return cmd_simulate(cfg, out);
        if (cfg.command == "sweep") return cmd_sweep(cfg, out, threads);
        if (cfg.command == "series") return cmd_series(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out);
        if (cfg.command == "presets") return cmd_presets(out);
        err << "error: no command given (try 'qwp --help')\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace qwp
