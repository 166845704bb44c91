#include "gnm/chaogate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <thread>

#include <nlohmann/json.hpp>

namespace gnm {

namespace {

constexpr std::array<std::pair<int, int>, 4> kDataInputs{
    {{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

const std::vector<std::pair<std::string, int>>& mnemonics() {
    static const std::vector<std::pair<std::string, int>> table = {
        {"AND", kFunctionAnd},   {"OR", kFunctionOr},
        {"XOR", kFunctionXor},   {"NAND", kFunctionNand},
        {"NOR", kFunctionNor},   {"XNOR", kFunctionXnor},
    };
    return table;
}

MapDescriptor config_map(const GateConfig& config) {
    return MapDescriptor::gnm(config.params(), config.consts);
}

}  // namespace

FunctionId FunctionId::from_string(const std::string& s) {
    for (const auto& [name, value] : mnemonics())
        if (s == name) return {value};
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (!end || *end != '\0' || s.empty())
        throw config_error("unknown function: " + s);
    if (v < 0 || v > 15)
        throw config_error("function id out of range [0,15]: " + s);
    return {static_cast<int>(v)};
}

std::string FunctionId::mnemonic() const {
    for (const auto& [name, v] : mnemonics())
        if (v == value) return name;
    return std::to_string(value);
}

double dac_encode(int b1, int b0, int cb, const DacSpec& dac) {
    if ((b1 | b0 | cb) < 0 || b1 > 1 || b0 > 1 || cb > 1)
        throw config_error("dac_encode: bits must be 0 or 1");
    if (dac.step <= 0.0) throw config_error("dac_encode: step must be > 0");
    const int code = 4 * b1 + 2 * b0 + cb;
    return dac.vmin + code * dac.step;
}

int comparator(double x, double vref) { return x > vref ? 1 : 0; }

GateEvaluation gate_function(const GateConfig& config, int upto_n) {
    if (upto_n < 1) throw config_error("gate_function: need upto_n >= 1");
    if (config.schedule.empty())
        throw config_error("gate_function: empty schedule");
    const bool scheduled = config.schedule.size() > 1;
    if (scheduled && config.schedule.size() < static_cast<std::size_t>(upto_n))
        throw config_error("gate_function: schedule shorter than upto_n");

    const MapDescriptor fw = config_map(config);

    GateEvaluation eval;
    eval.voltages.resize(upto_n);
    std::array<Orbit, 4> orbits;
    for (int in = 0; in < 4; ++in) {
        const auto [b1, b0] = kDataInputs[in];
        const double x0 = dac_encode(b1, b0, config.cb, config.dac);
        if (!fw.domain().contains(x0, 1e-12))
            throw config_error("gate_function: DAC seed " + std::to_string(x0) +
                               " V outside map domain");
        if (scheduled) {
            Schedule sched(config.schedule.begin(),
                           config.schedule.begin() + upto_n);
            orbits[in] = iterate_scheduled(sched, config.consts,
                                           config.topology, x0, upto_n, 0);
        } else {
            orbits[in] = iterate(fw, config.topology, x0, upto_n, 0);
        }
        eval.clipped |= orbits[in].clipped;
        for (int k = 0; k < upto_n; ++k)
            eval.voltages[k][in] = orbits[in].samples[k];
    }
    eval.per_iteration.reserve(upto_n);
    for (int k = 0; k < upto_n; ++k) {
        int id = 0;
        for (int in = 0; in < 4; ++in)
            id = 2 * id + comparator(eval.voltages[k][in], config.vref);
        eval.per_iteration.push_back({id});
    }
    return eval;
}

double noise_margin(const GateConfig& config) {
    const GateEvaluation eval = gate_function(config, config.n);
    double margin = std::numeric_limits<double>::infinity();
    for (double v : eval.voltages[config.n - 1])
        margin = std::min(margin, std::abs(v - config.vref));
    return margin;
}

SearchGrid SearchGrid::defaults() {
    SearchGrid g;
    for (int i = 0; i < 16; ++i) g.mu1.push_back(0.90 + 0.01 * i);
    g.mu2 = {-0.3, 0.0, 0.3};
    g.mu3 = {-0.3, 0.0, 0.3};
    g.cb = {0, 1};
    for (int i = 0; i <= 11; ++i) g.vref.push_back(0.5 + 0.1 * i);
    g.n_min = 1;
    g.n_max = 8;
    return g;
}

std::uint64_t SearchGrid::size() const {
    return static_cast<std::uint64_t>(mu1.size()) * mu2.size() * mu3.size() *
           cb.size() * vref.size() *
           static_cast<std::uint64_t>(n_max - n_min + 1);
}

std::vector<SearchResult> search_configurations(FunctionId target,
                                                const SearchGrid& grid,
                                                double min_margin, int limit,
                                                int workers) {
    if (target.value < 0 || target.value > 15)
        throw config_error("search: target function out of range [0,15]");
    if (grid.mu1.empty() || grid.mu2.empty() || grid.mu3.empty() ||
        grid.cb.empty() || grid.vref.empty() || grid.n_min < 1 ||
        grid.n_max < grid.n_min)
        throw config_error("search: empty grid axis");
    if (limit < 1) throw config_error("search: limit must be >= 1");
    if (grid.size() > grid.cap)
        throw config_error("search: grid size " + std::to_string(grid.size()) +
                           " exceeds cap " + std::to_string(grid.cap));

    const int n_count = grid.n_max - grid.n_min + 1;
    const std::size_t outer = grid.mu1.size() * grid.mu2.size() *
                              grid.mu3.size() * grid.cb.size();

    struct Hit {
        std::uint64_t index;
        std::size_t outer_idx;
        int iv, in;
        double margin;
        int function;
    };
    std::vector<std::vector<Hit>> hits(outer);

    auto evaluate_outer = [&](std::size_t o) {
        std::size_t rem = o;
        const int icb = rem % grid.cb.size(); rem /= grid.cb.size();
        const int i3 = rem % grid.mu3.size(); rem /= grid.mu3.size();
        const int i2 = rem % grid.mu2.size(); rem /= grid.mu2.size();
        const int i1 = rem;

        GnmParams p{grid.mu1[i1], grid.mu2[i2], grid.mu3[i3]};
        MapDescriptor fw = MapDescriptor::gnm(p, grid.consts);

        // One orbit per data input covers every (vref, n) cell.
        std::array<Orbit, 4> orbits;
        for (int in = 0; in < 4; ++in) {
            const auto [b1, b0] = kDataInputs[in];
            const double x0 = dac_encode(b1, b0, grid.cb[icb], grid.dac);
            if (!fw.domain().contains(x0, 1e-12)) return;  // infeasible cell
            orbits[in] = iterate(fw, Topology::buffer(), x0, grid.n_max, 0);
        }

        for (std::size_t iv = 0; iv < grid.vref.size(); ++iv) {
            const double vref = grid.vref[iv];
            for (int k = 0; k < n_count; ++k) {
                const int n = grid.n_min + k;
                int id = 0;
                double margin = std::numeric_limits<double>::infinity();
                for (int in = 0; in < 4; ++in) {
                    const double v = orbits[in].samples[n - 1];
                    id = 2 * id + comparator(v, vref);
                    margin = std::min(margin, std::abs(v - vref));
                }
                if (id == target.value && margin >= min_margin) {
                    const std::uint64_t index =
                        (static_cast<std::uint64_t>(o) * grid.vref.size() + iv) *
                            n_count + k;
                    hits[o].push_back({index, o, static_cast<int>(iv), n,
                                       margin, id});
                }
            }
        }
    };

    workers = std::clamp(workers, 1, static_cast<int>(outer));
    if (workers == 1) {
        for (std::size_t o = 0; o < outer; ++o) evaluate_outer(o);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t o = w; o < outer; o += workers)
                    evaluate_outer(o);
            });
        for (auto& t : pool) t.join();
    }

    std::vector<Hit> all;
    for (auto& v : hits) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end(), [](const Hit& a, const Hit& b) {
        if (a.margin != b.margin) return a.margin > b.margin;
        return a.index < b.index;
    });
    if (all.size() > static_cast<std::size_t>(limit)) all.resize(limit);

    std::vector<SearchResult> results;
    results.reserve(all.size());
    for (const Hit& h : all) {
        std::size_t rem = h.outer_idx;
        const int icb = rem % grid.cb.size(); rem /= grid.cb.size();
        const int i3 = rem % grid.mu3.size(); rem /= grid.mu3.size();
        const int i2 = rem % grid.mu2.size(); rem /= grid.mu2.size();
        const int i1 = rem;
        GateConfig config;
        config.schedule = {GnmParams{grid.mu1[i1], grid.mu2[i2], grid.mu3[i3]}};
        config.consts = grid.consts;
        config.cb = grid.cb[icb];
        config.vref = grid.vref[h.iv];
        config.n = h.in;
        config.dac = grid.dac;
        results.push_back({std::move(config), {h.function}, h.margin});
    }
    return results;
}

namespace {

nlohmann::ordered_json result_json(const SearchResult& r) {
    return nlohmann::ordered_json{
        {"mu1_mohm", r.config.params().mu1_mohm},
        {"mu2_v", r.config.params().mu2_v},
        {"mu3_v", r.config.params().mu3_v},
        {"cb", r.config.cb},
        {"vref_v", r.config.vref},
        {"n", r.config.n},
        {"function", r.function.value},
        {"margin_v", r.margin},
    };
}

}  // namespace

void write_results_json(const std::vector<SearchResult>& results,
                        const std::string& path) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) arr.push_back(result_json(r));
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << arr.dump(2) << '\n';
}

void write_results_csv(const std::vector<SearchResult>& results,
                       const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "mu1_mohm,mu2_v,mu3_v,cb,vref_v,n,function,margin_v\n";
    char buf[200];
    for (const auto& r : results) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%d,%.17g,%d,%d,%.17g\n",
                      r.config.params().mu1_mohm, r.config.params().mu2_v,
                      r.config.params().mu3_v, r.config.cb, r.config.vref,
                      r.config.n, r.function.value, r.margin);
        out << buf;
    }
}

}  // namespace gnm
