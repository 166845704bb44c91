// Command-line frontend: orbit generation, bifurcation/Lyapunov sweeps,
// gate-configuration search, functionality-space comparison, transfer-curve
// dumps. Exit codes: 0 success, 1 runtime failure, 2 usage/validation.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "gnm/analysis.hpp"
#include "gnm/chaogate.hpp"
#include "gnm/funcspace.hpp"
#include "gnm/map.hpp"
#include "gnm/oscillator.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct MapOpts {
    std::string map = "gnm";
    double r = 3.9;
    double m = 1.9;
    double a = 0.9;
    double mu1 = 0.95;
    double mu2 = 0.0;
    double mu3 = 0.0;
    double gamma = 0.0;
    std::string file;

    gnm::MapDescriptor build() const {
        if (map == "logistic") return gnm::MapDescriptor::logistic(r);
        if (map == "tent") return gnm::MapDescriptor::tent(m);
        if (map == "sine") return gnm::MapDescriptor::sine(a);
        if (map == "gnm") {
            gnm::SurrogateConstants c;
            c.gamma = gamma;
            return gnm::MapDescriptor::gnm({mu1, mu2, mu3}, c);
        }
        if (map == "tabulated") {
            if (file.empty())
                throw gnm::config_error("--map tabulated requires --file");
            return gnm::load_tabulated(file);
        }
        throw gnm::config_error("unknown map variant: " + map);
    }

    void to_json(ordered_json& j) const {
        j["map"] = map;
        if (map == "logistic") j["r"] = r;
        if (map == "tent") j["m"] = m;
        if (map == "sine") j["a"] = a;
        if (map == "gnm") {
            j["mu1"] = mu1;
            j["mu2"] = mu2;
            j["mu3"] = mu3;
            j["gamma"] = gamma;
        }
        if (map == "tabulated") j["file"] = file;
    }
};

struct FeedbackOpts {
    std::string feedback = "buffer";
    double fb_mu1 = 0.95;
    double fb_mu2 = 0.0;
    double fb_mu3 = 0.0;
    std::string fb_file;

    gnm::Topology build() const {
        if (feedback == "buffer") return gnm::Topology::buffer();
        if (feedback == "gnm")
            return gnm::Topology::map_feedback(
                gnm::MapDescriptor::gnm({fb_mu1, fb_mu2, fb_mu3}));
        if (feedback == "tabulated") {
            if (fb_file.empty())
                throw gnm::config_error("--feedback tabulated requires --fb-file");
            return gnm::Topology::map_feedback(gnm::load_tabulated(fb_file));
        }
        throw gnm::config_error("unknown feedback variant: " + feedback);
    }

    void to_json(ordered_json& j) const {
        j["feedback"] = feedback;
        if (feedback == "gnm") {
            j["fb_mu1"] = fb_mu1;
            j["fb_mu2"] = fb_mu2;
            j["fb_mu3"] = fb_mu3;
        }
        if (feedback == "tabulated") j["fb_file"] = fb_file;
    }
};

void add_map_flags(CLI::App* cmd, MapOpts& o) {
    cmd->add_option("--map", o.map, "map variant")
        ->check(CLI::IsMember({"logistic", "tent", "sine", "gnm", "tabulated"}));
    cmd->add_option("--r", o.r, "logistic parameter")->check(CLI::NonNegativeNumber);
    cmd->add_option("--m", o.m, "tent parameter")->check(CLI::NonNegativeNumber);
    cmd->add_option("--a", o.a, "sine parameter")->check(CLI::NonNegativeNumber);
    cmd->add_option("--mu1", o.mu1, "TIA gain, MOhm")->check(CLI::PositiveNumber);
    cmd->add_option("--mu2", o.mu2, "n-channel top-gate bias, V")
        ->check(CLI::Range(-gnm::kBiasBoundV, gnm::kBiasBoundV));
    cmd->add_option("--mu3", o.mu3, "p-channel top-gate bias, V")
        ->check(CLI::Range(-gnm::kBiasBoundV, gnm::kBiasBoundV));
    cmd->add_option("--gamma", o.gamma, "surrogate asymmetry")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--file", o.file, "tabulated map CSV");
}

void add_feedback_flags(CLI::App* cmd, FeedbackOpts& o) {
    cmd->add_option("--feedback", o.feedback, "feedback path")
        ->check(CLI::IsMember({"buffer", "gnm", "tabulated"}));
    cmd->add_option("--fb-mu1", o.fb_mu1, "feedback map mu1, MOhm")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--fb-mu2", o.fb_mu2, "feedback map mu2, V");
    cmd->add_option("--fb-mu3", o.fb_mu3, "feedback map mu3, V");
    cmd->add_option("--fb-file", o.fb_file, "feedback tabulated map CSV");
}

// Config file support: JSON object, flags given on the command line win.
ordered_json load_config(const std::string& path,
                         const std::set<std::string>& allowed) {
    std::ifstream in(path);
    if (!in) throw gnm::config_error("cannot open config file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw gnm::config_error("config parse failure: " + std::string(e.what()));
    }
    if (!j.is_object()) throw gnm::config_error("config must be a JSON object");
    if (j.contains("schema_version") && j["schema_version"] != kSchemaVersion)
        throw gnm::config_error("unsupported config schema_version");
    for (const auto& [key, value] : j.items()) {
        if (key == "schema_version" || key == "subcommand") continue;
        if (!allowed.count(key))
            throw gnm::config_error("unknown config key: " + key);
    }
    return j;
}

// Applies a config value unless the flag was given explicitly.
template <typename T>
void apply(const CLI::App* cmd, const ordered_json& cfg,
           const std::string& flag, const std::string& key, T& var) {
    if (cfg.contains(key) && cmd->count(flag) == 0) var = cfg[key].get<T>();
}

void write_config(const ordered_json& body, const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    out << body.dump(2) << '\n';
}

std::set<std::string> map_keys() {
    return {"map", "r", "m", "a", "mu1", "mu2", "mu3", "gamma", "file"};
}
std::set<std::string> feedback_keys() {
    return {"feedback", "fb_mu1", "fb_mu2", "fb_mu3", "fb_file"};
}

void apply_map(const CLI::App* cmd, const ordered_json& cfg, MapOpts& o) {
    apply(cmd, cfg, "--map", "map", o.map);
    apply(cmd, cfg, "--r", "r", o.r);
    apply(cmd, cfg, "--m", "m", o.m);
    apply(cmd, cfg, "--a", "a", o.a);
    apply(cmd, cfg, "--mu1", "mu1", o.mu1);
    apply(cmd, cfg, "--mu2", "mu2", o.mu2);
    apply(cmd, cfg, "--mu3", "mu3", o.mu3);
    apply(cmd, cfg, "--gamma", "gamma", o.gamma);
    apply(cmd, cfg, "--file", "file", o.file);
}

void apply_feedback(const CLI::App* cmd, const ordered_json& cfg,
                    FeedbackOpts& o) {
    apply(cmd, cfg, "--feedback", "feedback", o.feedback);
    apply(cmd, cfg, "--fb-mu1", "fb_mu1", o.fb_mu1);
    apply(cmd, cfg, "--fb-mu2", "fb_mu2", o.fb_mu2);
    apply(cmd, cfg, "--fb-mu3", "fb_mu3", o.fb_mu3);
    apply(cmd, cfg, "--fb-file", "fb_file", o.fb_file);
}

// ---------------------------------------------------------------- orbit

struct OrbitCmd {
    MapOpts map;
    FeedbackOpts fb;
    double x0 = kNaN;
    int n = 1000;
    int transient = 0;
    std::string config_file;
    std::string output = "orbit.csv";

    void run(const CLI::App* cmd) {
        if (!config_file.empty()) {
            auto keys = map_keys();
            keys.merge(feedback_keys());
            keys.insert({"x0", "n", "transient", "output"});
            const auto cfg = load_config(config_file, keys);
            apply_map(cmd, cfg, map);
            apply_feedback(cmd, cfg, fb);
            apply(cmd, cfg, "--x0", "x0", x0);
            apply(cmd, cfg, "--n", "n", n);
            apply(cmd, cfg, "--transient", "transient", transient);
            apply(cmd, cfg, "--output", "output", output);
        }
        const auto fw = map.build();
        const double seed = std::isnan(x0) ? fw.domain().mid() : x0;
        const auto orbit = gnm::iterate(fw, fb.build(), seed, n, transient);
        gnm::write_orbit_csv(orbit, output);
        if (orbit.clipped)
            std::cerr << "warning: orbit clipped at the interval boundary\n";
        std::cout << "wrote " << orbit.samples.size() << " samples to "
                  << output << '\n';
    }
};

// ---------------------------------------------------------------- sweeps

struct SweepCmd {
    bool lyapunov = false;
    MapOpts map;
    FeedbackOpts fb;
    std::string axis = "mu1";
    double from = 0.6;
    double to = 1.05;
    int steps = 100;
    double x0 = kNaN;
    int transient = 1000;
    int retained = 3000;
    long n = 10000;
    long burn = 1000;
    int workers = 1;
    std::string config_file;
    std::string outdir = ".";

    void run(const CLI::App* cmd) {
        if (!config_file.empty()) {
            auto keys = map_keys();
            keys.merge(feedback_keys());
            keys.insert({"axis", "from", "to", "steps", "x0", "transient",
                         "retained", "n", "burn", "workers", "outdir"});
            const auto cfg = load_config(config_file, keys);
            apply_map(cmd, cfg, map);
            apply_feedback(cmd, cfg, fb);
            apply(cmd, cfg, "--axis", "axis", axis);
            apply(cmd, cfg, "--from", "from", from);
            apply(cmd, cfg, "--to", "to", to);
            apply(cmd, cfg, "--steps", "steps", steps);
            apply(cmd, cfg, "--x0", "x0", x0);
            apply(cmd, cfg, "--transient", "transient", transient);
            apply(cmd, cfg, "--retained", "retained", retained);
            apply(cmd, cfg, "--n", "n", n);
            apply(cmd, cfg, "--burn", "burn", burn);
            apply(cmd, cfg, "--workers", "workers", workers);
            apply(cmd, cfg, "--outdir", "outdir", outdir);
        }

        gnm::SweepSpec spec;
        spec.axis = gnm::axis_from_string(axis);
        spec.lo = from;
        spec.hi = to;
        spec.steps = steps;
        spec.base = map.build();
        spec.topology = fb.build();
        spec.x0 = x0;
        spec.transient = transient;
        spec.retained = retained;
        spec.workers = workers;

        fs::create_directories(outdir);
        const fs::path dir(outdir);

        ordered_json cfg_out;
        cfg_out["schema_version"] = kSchemaVersion;
        cfg_out["subcommand"] = lyapunov ? "lyapunov" : "bifurcation";
        map.to_json(cfg_out);
        fb.to_json(cfg_out);
        cfg_out["axis"] = axis;
        cfg_out["from"] = from;
        cfg_out["to"] = to;
        cfg_out["steps"] = steps;
        if (!std::isnan(x0)) cfg_out["x0"] = x0;
        cfg_out["transient"] = transient;
        cfg_out["retained"] = retained;
        cfg_out["n"] = n;
        cfg_out["burn"] = burn;
        cfg_out["workers"] = workers;
        cfg_out["outdir"] = outdir;

        if (lyapunov) {
            const auto curve = gnm::lyapunov_sweep(spec, n, burn);
            gnm::write_lyapunov_csv(curve, (dir / "lyapunov.csv").string());
            gnm::write_lyapunov_plot("lyapunov.csv", spec.axis,
                                     (dir / "lyapunov.gp").string());
            write_config(cfg_out, dir / "config.json");
            const auto regions = gnm::classify_regions(curve);
            for (const auto& reg : regions) {
                const char* label = reg.label == gnm::RegionLabel::chaotic
                                        ? "chaotic"
                                        : reg.label == gnm::RegionLabel::periodic
                                              ? "periodic"
                                              : "marginal";
                std::printf("[%g, %g] %s\n", reg.lo, reg.hi, label);
            }
        } else {
            const auto data = gnm::bifurcation_sweep(spec);
            gnm::write_bifurcation_csv(data, (dir / "bifurcation.csv").string());
            gnm::write_bifurcation_plot("bifurcation.csv", spec.axis,
                                        (dir / "bifurcation.gp").string());
            write_config(cfg_out, dir / "config.json");
            std::size_t rows = 0;
            for (const auto& r : data.rows) rows += r.samples.size();
            std::cout << "wrote " << rows << " bifurcation rows to " << outdir
                      << '\n';
        }
    }
};

// ------------------------------------------------------------ gate-search

struct GateSearchCmd {
    std::string target;
    double mu1_from = 0.90, mu1_to = 1.05;
    int mu1_steps = 16;
    std::vector<double> mu2{-0.3, 0.0, 0.3};
    std::vector<double> mu3{-0.3, 0.0, 0.3};
    std::vector<int> cb{0, 1};
    double vref_from = 0.5, vref_to = 1.6, vref_step = 0.1;
    int n_min = 1, n_max = 8;
    double min_margin = 0.0;
    int limit = 10;
    int workers = 1;
    std::string format = "json";
    std::string config_file;
    std::string outdir = ".";

    void run(const CLI::App* cmd) {
        if (!config_file.empty()) {
            const std::set<std::string> keys = {
                "target",    "mu1_from", "mu1_to", "mu1_steps", "mu2",
                "mu3",       "cb",       "vref_from", "vref_to", "vref_step",
                "n_min",     "n_max",    "min_margin", "limit",  "workers",
                "format",    "outdir"};
            const auto cfg = load_config(config_file, keys);
            apply(cmd, cfg, "--target", "target", target);
            apply(cmd, cfg, "--mu1-from", "mu1_from", mu1_from);
            apply(cmd, cfg, "--mu1-to", "mu1_to", mu1_to);
            apply(cmd, cfg, "--mu1-steps", "mu1_steps", mu1_steps);
            apply(cmd, cfg, "--mu2", "mu2", mu2);
            apply(cmd, cfg, "--mu3", "mu3", mu3);
            apply(cmd, cfg, "--cb", "cb", cb);
            apply(cmd, cfg, "--vref-from", "vref_from", vref_from);
            apply(cmd, cfg, "--vref-to", "vref_to", vref_to);
            apply(cmd, cfg, "--vref-step", "vref_step", vref_step);
            apply(cmd, cfg, "--n-min", "n_min", n_min);
            apply(cmd, cfg, "--n-max", "n_max", n_max);
            apply(cmd, cfg, "--min-margin", "min_margin", min_margin);
            apply(cmd, cfg, "--limit", "limit", limit);
            apply(cmd, cfg, "--workers", "workers", workers);
            apply(cmd, cfg, "--format", "format", format);
            apply(cmd, cfg, "--outdir", "outdir", outdir);
        }
        if (target.empty()) throw gnm::config_error("--target is required");
        const auto fn = gnm::FunctionId::from_string(target);

        gnm::SearchGrid grid;
        if (mu1_steps < 1) throw gnm::config_error("--mu1-steps must be >= 1");
        for (int i = 0; i < mu1_steps; ++i)
            grid.mu1.push_back(mu1_steps == 1 ? mu1_from
                                              : mu1_from + (mu1_to - mu1_from) *
                                                               i / (mu1_steps - 1));
        grid.mu2 = mu2;
        grid.mu3 = mu3;
        grid.cb = cb;
        if (vref_step <= 0) throw gnm::config_error("--vref-step must be > 0");
        for (double v = vref_from; v <= vref_to + 1e-12; v += vref_step)
            grid.vref.push_back(v);
        grid.n_min = n_min;
        grid.n_max = n_max;

        std::cout << "grid size: " << grid.size() << " configurations\n";
        const auto results =
            gnm::search_configurations(fn, grid, min_margin, limit, workers);

        fs::create_directories(outdir);
        const fs::path dir(outdir);
        const std::string out_name = format == "csv" ? "results.csv"
                                                     : "results.json";
        if (format == "csv")
            gnm::write_results_csv(results, (dir / out_name).string());
        else if (format == "json")
            gnm::write_results_json(results, (dir / out_name).string());
        else
            throw gnm::config_error("unknown format: " + format);

        ordered_json cfg_out;
        cfg_out["schema_version"] = kSchemaVersion;
        cfg_out["subcommand"] = "gate-search";
        cfg_out["target"] = target;
        cfg_out["mu1_from"] = mu1_from;
        cfg_out["mu1_to"] = mu1_to;
        cfg_out["mu1_steps"] = mu1_steps;
        cfg_out["mu2"] = mu2;
        cfg_out["mu3"] = mu3;
        cfg_out["cb"] = cb;
        cfg_out["vref_from"] = vref_from;
        cfg_out["vref_to"] = vref_to;
        cfg_out["vref_step"] = vref_step;
        cfg_out["n_min"] = n_min;
        cfg_out["n_max"] = n_max;
        cfg_out["min_margin"] = min_margin;
        cfg_out["limit"] = limit;
        cfg_out["workers"] = workers;
        cfg_out["format"] = format;
        cfg_out["outdir"] = outdir;
        write_config(cfg_out, dir / "config.json");

        std::cout << results.size() << " configuration(s) for "
                  << fn.mnemonic() << " written to "
                  << (dir / out_name).string() << '\n';
    }
};

// -------------------------------------------------------------- funcspace

struct FuncspaceCmd {
    int c = 1;
    int nmu = 2;
    int nmu1 = -1, nmu2 = -1, nmu3 = -1;  // default to nmu
    int nvref = 2;
    int n_min = 1;
    int n_max = 1;
    std::string config_file;
    std::string output = "funcspace.csv";

    void run(const CLI::App* cmd) {
        if (!config_file.empty()) {
            const std::set<std::string> keys = {"c",    "nmu",   "nmu1",
                                                "nmu2", "nmu3",  "nvref",
                                                "n_min", "n_max", "output"};
            const auto cfg = load_config(config_file, keys);
            apply(cmd, cfg, "--c", "c", c);
            apply(cmd, cfg, "--nmu", "nmu", nmu);
            apply(cmd, cfg, "--nmu1", "nmu1", nmu1);
            apply(cmd, cfg, "--nmu2", "nmu2", nmu2);
            apply(cmd, cfg, "--nmu3", "nmu3", nmu3);
            apply(cmd, cfg, "--nvref", "nvref", nvref);
            apply(cmd, cfg, "--n-min", "n_min", n_min);
            apply(cmd, cfg, "--n-max", "n_max", n_max);
            apply(cmd, cfg, "--output", "output", output);
        }
        gnm::SpaceParams p;
        p.c = c;
        p.n_mu = nmu;
        p.n_mu1 = nmu1 < 0 ? nmu : nmu1;
        p.n_mu2 = nmu2 < 0 ? nmu : nmu2;
        p.n_mu3 = nmu3 < 0 ? nmu : nmu3;
        p.n_vref = nvref;
        const auto rows = gnm::compare_spaces(p, n_min, n_max);
        gnm::write_compare_csv(rows, output);
        std::cout << "ordering assumes N_mu1=N_mu2=N_mu3 levels shared with "
                     "the single-parameter design\n";
        std::cout << "wrote " << rows.size() << " rows to " << output << '\n';
    }
};

// --------------------------------------------------------------- map-dump

struct MapDumpCmd {
    MapOpts map;
    int samples = 512;
    std::string config_file;
    std::string output = "map.csv";

    void run(const CLI::App* cmd) {
        if (!config_file.empty()) {
            auto keys = map_keys();
            keys.insert({"samples", "output"});
            const auto cfg = load_config(config_file, keys);
            apply_map(cmd, cfg, map);
            apply(cmd, cfg, "--samples", "samples", samples);
            apply(cmd, cfg, "--output", "output", output);
        }
        if (samples < 2) throw gnm::config_error("--samples must be >= 2");
        const auto m = map.build();
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot open output file: " + output);
        out << "x_volts,y_volts\n";
        char buf[80];
        for (int i = 0; i < samples; ++i) {
            const double x =
                m.domain().lo + m.domain().width() * i / (samples - 1);
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", x, m.eval(x));
            out << buf;
        }
        std::cout << "wrote " << samples << " samples to " << output << '\n';
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chaotic-map oscillator and reconfigurable-gate toolkit"};
    app.require_subcommand(1);

    OrbitCmd orbit;
    auto* orbit_cmd = app.add_subcommand("orbit", "iterate the oscillator");
    add_map_flags(orbit_cmd, orbit.map);
    add_feedback_flags(orbit_cmd, orbit.fb);
    orbit_cmd->add_option("--x0", orbit.x0, "seed voltage (default mid-domain)");
    orbit_cmd->add_option("--n", orbit.n, "iterations")->check(CLI::PositiveNumber);
    orbit_cmd->add_option("--transient", orbit.transient, "discarded iterations")
        ->check(CLI::NonNegativeNumber);
    orbit_cmd->add_option("--config", orbit.config_file, "JSON config file");
    orbit_cmd->add_option("-o,--output", orbit.output, "orbit CSV path");

    SweepCmd bifurcation;
    SweepCmd lyapunov;
    lyapunov.lyapunov = true;
    auto add_sweep = [](CLI::App* cmd, SweepCmd& o) {
        add_map_flags(cmd, o.map);
        add_feedback_flags(cmd, o.fb);
        cmd->add_option("--axis", o.axis, "sweep axis: mu1|mu2|mu3|r|m|a");
        cmd->add_option("--from", o.from, "axis start");
        cmd->add_option("--to", o.to, "axis end");
        cmd->add_option("--steps", o.steps, "axis samples")
            ->check(CLI::Range(2, 1000000));
        cmd->add_option("--x0", o.x0, "seed voltage (default mid-domain)");
        cmd->add_option("--transient", o.transient, "discarded iterations")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--retained", o.retained, "retained iterations")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--n", o.n, "lyapunov iterations")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--burn", o.burn, "lyapunov burn-in")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--workers", o.workers, "worker threads")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--config", o.config_file, "JSON config file");
        cmd->add_option("-O,--outdir", o.outdir, "output directory");
    };
    auto* bif_cmd =
        app.add_subcommand("bifurcation", "steady-state orbit sweep");
    add_sweep(bif_cmd, bifurcation);
    auto* lya_cmd =
        app.add_subcommand("lyapunov", "Lyapunov-exponent sweep");
    add_sweep(lya_cmd, lyapunov);

    GateSearchCmd search;
    auto* search_cmd =
        app.add_subcommand("gate-search", "grid search for gate configurations");
    search_cmd->add_option("--target", search.target,
                           "function id 0..15 or mnemonic (AND, XOR, ...)");
    search_cmd->add_option("--mu1-from", search.mu1_from, "mu1 range start, MOhm");
    search_cmd->add_option("--mu1-to", search.mu1_to, "mu1 range end, MOhm");
    search_cmd->add_option("--mu1-steps", search.mu1_steps, "mu1 levels");
    search_cmd->add_option("--mu2", search.mu2, "mu2 levels, V")->delimiter(',');
    search_cmd->add_option("--mu3", search.mu3, "mu3 levels, V")->delimiter(',');
    search_cmd->add_option("--cb", search.cb, "control-bit values")->delimiter(',');
    search_cmd->add_option("--vref-from", search.vref_from, "vref start, V");
    search_cmd->add_option("--vref-to", search.vref_to, "vref end, V");
    search_cmd->add_option("--vref-step", search.vref_step, "vref step, V");
    search_cmd->add_option("--n-min", search.n_min, "min iteration")
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--n-max", search.n_max, "max iteration")
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--min-margin", search.min_margin,
                           "minimum noise margin, V")
        ->check(CLI::NonNegativeNumber);
    search_cmd->add_option("--limit", search.limit, "max results")
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--workers", search.workers, "worker threads")
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--format", search.format, "results format")
        ->check(CLI::IsMember({"json", "csv"}));
    search_cmd->add_option("--config", search.config_file, "JSON config file");
    search_cmd->add_option("-O,--outdir", search.outdir, "output directory");

    FuncspaceCmd funcspace;
    auto* fs_cmd =
        app.add_subcommand("funcspace", "functionality-space comparison");
    fs_cmd->add_option("--c", funcspace.c, "control-bit count")
        ->check(CLI::NonNegativeNumber);
    fs_cmd->add_option("--nmu", funcspace.nmu, "mu levels")
        ->check(CLI::PositiveNumber);
    fs_cmd->add_option("--nmu1", funcspace.nmu1, "mu1 levels (default --nmu)");
    fs_cmd->add_option("--nmu2", funcspace.nmu2, "mu2 levels (default --nmu)");
    fs_cmd->add_option("--nmu3", funcspace.nmu3, "mu3 levels (default --nmu)");
    fs_cmd->add_option("--nvref", funcspace.nvref, "vref levels")
        ->check(CLI::PositiveNumber);
    fs_cmd->add_option("--n-min", funcspace.n_min, "first iteration count")
        ->check(CLI::PositiveNumber);
    fs_cmd->add_option("--n-max", funcspace.n_max, "last iteration count")
        ->check(CLI::PositiveNumber);
    fs_cmd->add_option("--config", funcspace.config_file, "JSON config file");
    fs_cmd->add_option("-o,--output", funcspace.output, "comparison CSV path");

    MapDumpCmd dump;
    auto* dump_cmd =
        app.add_subcommand("map-dump", "sample the transfer curve");
    add_map_flags(dump_cmd, dump.map);
    dump_cmd->add_option("--samples", dump.samples, "sample count");
    dump_cmd->add_option("--config", dump.config_file, "JSON config file");
    dump_cmd->add_option("-o,--output", dump.output, "transfer-curve CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (orbit_cmd->parsed()) orbit.run(orbit_cmd);
        if (bif_cmd->parsed()) bifurcation.run(bif_cmd);
        if (lya_cmd->parsed()) lyapunov.run(lya_cmd);
        if (search_cmd->parsed()) search.run(search_cmd);
        if (fs_cmd->parsed()) funcspace.run(fs_cmd);
        if (dump_cmd->parsed()) dump.run(dump_cmd);
    } catch (const gnm::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
