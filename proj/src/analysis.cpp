#include "gnm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <thread>

namespace gnm {

namespace {

// Runs fn(i) for i in [0, count) across `workers` threads. Each index
// writes only its own output slot, so results are independent of the
// worker count.
template <typename Fn>
void parallel_for(int count, int workers, Fn&& fn) {
    workers = std::clamp(workers, 1, count);
    if (workers == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

Axis axis_from_string(const std::string& s) {
    if (s == "mu1") return Axis::mu1;
    if (s == "mu2") return Axis::mu2;
    if (s == "mu3") return Axis::mu3;
    if (s == "r") return Axis::r;
    if (s == "m") return Axis::m;
    if (s == "a") return Axis::a;
    throw config_error("unknown sweep axis: " + s);
}

std::string axis_name(Axis a) {
    switch (a) {
        case Axis::mu1: return "mu1";
        case Axis::mu2: return "mu2";
        case Axis::mu3: return "mu3";
        case Axis::r: return "r";
        case Axis::m: return "m";
        case Axis::a: return "a";
    }
    return "?";
}

MapDescriptor map_with_axis(const MapDescriptor& base, Axis axis,
                            double value) {
    const auto& v = base.variant();
    switch (axis) {
        case Axis::mu1:
        case Axis::mu2:
        case Axis::mu3: {
            const auto* g = std::get_if<maps::GnmSurrogate>(&v);
            if (!g)
                throw config_error("axis " + axis_name(axis) +
                                   " requires the gnm map");
            GnmParams p = g->params;
            if (axis == Axis::mu1) p.mu1_mohm = value;
            if (axis == Axis::mu2) p.mu2_v = value;
            if (axis == Axis::mu3) p.mu3_v = value;
            return MapDescriptor::gnm(p, g->consts);
        }
        case Axis::r:
            if (!std::holds_alternative<maps::Logistic>(v))
                throw config_error("axis r requires the logistic map");
            return MapDescriptor::logistic(value);
        case Axis::m:
            if (!std::holds_alternative<maps::Tent>(v))
                throw config_error("axis m requires the tent map");
            return MapDescriptor::tent(value);
        case Axis::a:
            if (!std::holds_alternative<maps::Sine>(v))
                throw config_error("axis a requires the sine map");
            return MapDescriptor::sine(value);
    }
    throw config_error("unknown axis");
}

void SweepSpec::validate() const {
    if (!(lo < hi)) throw config_error("sweep: need lo < hi");
    if (steps < 2) throw config_error("sweep: need steps >= 2");
    if (transient <= 0 || retained <= 0)
        throw config_error("sweep: transient and retained must be > 0");
    if (workers < 1) throw config_error("sweep: workers must be >= 1");
    map_with_axis(base, axis, lo);  // axis/variant compatibility
}

LyapunovEstimate lyapunov_exponent(const MapDescriptor& fw,
                                   const Topology& topo, double x0,
                                   long n, long burn) {
    if (n <= 0 || burn < 0)
        throw config_error("lyapunov: need n > 0 and burn >= 0");
    if (!fw.domain().contains(x0, 1e-12))
        throw domain_error("lyapunov: seed x0 outside map domain");

    long clipped_steps = 0;
    double sum = 0.0;

    if (topo.is_buffer()) {
        double u = std::clamp(fw.to_u(x0), 0.0, 1.0);
        for (long i = 0; i < burn; ++i) {
            bool c = false;
            u = fw.step_u(u, c);
            clipped_steps += c;
        }
        for (long i = 0; i < n; ++i) {
            sum += std::log(std::abs(fw.derivative(fw.from_u(u)).value));
            bool c = false;
            u = fw.step_u(u, c);
            clipped_steps += c;
        }
    } else {
        const auto& fb = *topo.feedback;
        double x = x0;
        auto composite_step = [&](bool accumulate) {
            if (!fw.domain().contains(x)) {
                ++clipped_steps;
                x = fw.domain().clamp(x);
            }
            if (accumulate) sum += std::log(std::abs(fw.derivative(x).value));
            double y = fw.eval(x);
            if (!fb.domain().contains(y)) {
                ++clipped_steps;
                y = fb.domain().clamp(y);
            }
            if (accumulate) sum += std::log(std::abs(fb.derivative(y).value));
            x = fb.eval(y);
        };
        for (long i = 0; i < burn; ++i) composite_step(false);
        for (long i = 0; i < n; ++i) composite_step(true);
    }

    LyapunovEstimate est;
    est.lambda = sum / static_cast<double>(n);
    est.clip_warning = clipped_steps * 100 > n + burn;
    return est;
}

BifurcationData bifurcation_sweep(const SweepSpec& spec) {
    spec.validate();
    BifurcationData data;
    data.rows.resize(spec.steps);
    parallel_for(spec.steps, spec.workers, [&](int i) {
        const double value = spec.axis_value(i);
        const MapDescriptor fw = map_with_axis(spec.base, spec.axis, value);
        const double x0 = std::isnan(spec.x0) ? fw.domain().mid() : spec.x0;
        Orbit orbit = iterate(fw, spec.topology, x0,
                              spec.transient + spec.retained, spec.transient);
        data.rows[i] = {value, std::move(orbit.samples)};
    });
    return data;
}

LyapunovCurve lyapunov_sweep(const SweepSpec& spec, long n, long burn) {
    spec.validate();
    LyapunovCurve curve;
    curve.rows.resize(spec.steps);
    parallel_for(spec.steps, spec.workers, [&](int i) {
        const double value = spec.axis_value(i);
        const MapDescriptor fw = map_with_axis(spec.base, spec.axis, value);
        const double x0 = std::isnan(spec.x0) ? fw.domain().mid() : spec.x0;
        const auto est = lyapunov_exponent(fw, spec.topology, x0, n, burn);
        curve.rows[i] = {value, est.lambda, est.clip_warning};
    });
    return curve;
}

std::vector<Region> classify_regions(const LyapunovCurve& curve, double tol) {
    if (curve.rows.empty())
        throw config_error("classify_regions: empty curve");
    if (tol < 0.0) throw config_error("classify_regions: tol must be >= 0");

    auto label_of = [tol](double lambda) {
        if (lambda > tol) return RegionLabel::chaotic;
        if (lambda < -tol) return RegionLabel::periodic;
        return RegionLabel::marginal;
    };

    std::vector<Region> regions;
    for (const auto& row : curve.rows) {
        const RegionLabel label = label_of(row.lambda);
        if (!regions.empty() && regions.back().label == label)
            regions.back().hi = row.axis_value;
        else
            regions.push_back({row.axis_value, row.axis_value, label});
    }
    return regions;
}

int count_clusters(std::vector<double> samples, double tol) {
    if (samples.empty()) return 0;
    std::sort(samples.begin(), samples.end());
    int clusters = 1;
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (samples[i] - samples[i - 1] > tol) ++clusters;
    return clusters;
}

void write_bifurcation_csv(const BifurcationData& data,
                           const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "axis_value,sample\n";
    char buf[80];
    for (const auto& row : data.rows)
        for (double s : row.samples) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", row.axis_value, s);
            out << buf;
        }
}

void write_lyapunov_csv(const LyapunovCurve& curve, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "axis_value,lambda\n";
    char buf[80];
    for (const auto& row : curve.rows) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", row.axis_value,
                      row.lambda);
        out << buf;
    }
}

void write_bifurcation_plot(const std::string& csv_name, Axis axis,
                            const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "set datafile separator ','\n"
        << "set terminal pngcairo size 1000,700\n"
        << "set output 'bifurcation.png'\n"
        << "set xlabel '" << axis_name(axis) << "'\n"
        << "set ylabel 'x (V)'\n"
        << "set pointsize 0.1\n"
        << "plot '" << csv_name
        << "' skip 1 using 1:2 with dots lc rgb 'black' notitle\n";
}

void write_lyapunov_plot(const std::string& csv_name, Axis axis,
                         const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "set datafile separator ','\n"
        << "set terminal pngcairo size 1000,500\n"
        << "set output 'lyapunov.png'\n"
        << "set xlabel '" << axis_name(axis) << "'\n"
        << "set ylabel 'lambda (nats/iter)'\n"
        << "set grid\n"
        << "plot '" << csv_name
        << "' skip 1 using 1:2 with lines lc rgb 'blue' notitle, 0 lc rgb "
           "'red' notitle\n";
}

}  // namespace gnm
