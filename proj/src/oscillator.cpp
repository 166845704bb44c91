#include "gnm/oscillator.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace gnm {

namespace {

void check_iteration_args(const MapDescriptor& fw, const Topology& topo,
                          double x0, int n, int transient) {
    if (n <= 0 || transient < 0 || transient >= n)
        throw config_error("iterate: need n > transient >= 0");
    if (!fw.domain().contains(x0, 1e-12))
        throw domain_error("iterate: seed x0 outside map domain");
    if (!topo.is_buffer()) {
        const auto& fb = topo.feedback->domain();
        const auto& d = fw.domain();
        if (fb.lo > d.lo + 1e-9 || fb.hi < d.hi - 1e-9)
            throw config_error(
                "iterate: feedback map domain does not cover forward map domain");
    }
}

// Buffer topology runs in the normalized coordinate so orbits of
// rescaled parameterizations stay bit-identical.
Orbit iterate_buffer(const MapDescriptor& fw, double x0, int n, int transient) {
    Orbit orbit;
    orbit.x0 = x0;
    orbit.transient_count = transient;
    orbit.samples.reserve(n - transient);
    double u = std::clamp(fw.to_u(x0), 0.0, 1.0);
    for (int k = 0; k < n; ++k) {
        bool clipped = false;
        u = fw.step_u(u, clipped);
        orbit.clipped |= clipped;
        if (k >= transient) orbit.samples.push_back(fw.from_u(u));
    }
    return orbit;
}

Orbit iterate_map_feedback(const MapDescriptor& fw, const MapDescriptor& fb,
                           double x0, int n, int transient) {
    Orbit orbit;
    orbit.x0 = x0;
    orbit.transient_count = transient;
    orbit.samples.reserve(n - transient);
    double x = x0;
    for (int k = 0; k < n; ++k) {
        if (!fw.domain().contains(x)) {
            orbit.clipped = true;
            x = fw.domain().clamp(x);
        }
        const double y = fw.eval(x);
        if (k >= transient) orbit.samples.push_back(y);
        double yin = y;
        if (!fb.domain().contains(yin)) {
            orbit.clipped = true;
            yin = fb.domain().clamp(yin);
        }
        x = fb.eval(yin);
    }
    return orbit;
}

bool same_params(const GnmParams& a, const GnmParams& b) {
    return a.mu1_mohm == b.mu1_mohm && a.mu2_v == b.mu2_v && a.mu3_v == b.mu3_v;
}

}  // namespace

Orbit iterate(const MapDescriptor& fw, const Topology& topo, double x0,
              int n, int transient) {
    check_iteration_args(fw, topo, x0, n, transient);
    if (topo.is_buffer()) return iterate_buffer(fw, x0, n, transient);
    return iterate_map_feedback(fw, *topo.feedback, x0, n, transient);
}

Orbit iterate_scheduled(const Schedule& sched, const SurrogateConstants& c,
                        const Topology& topo, double x0, int n,
                        int transient) {
    if (sched.empty())
        throw config_error("iterate_scheduled: empty schedule");
    if (sched.size() != 1 && sched.size() != static_cast<std::size_t>(n))
        throw config_error("iterate_scheduled: schedule length must be 1 or n");

    const bool constant = std::all_of(
        sched.begin(), sched.end(),
        [&](const GnmParams& p) { return same_params(p, sched.front()); });
    if (constant)
        return iterate(MapDescriptor::gnm(sched.front(), c), topo, x0, n,
                       transient);

    if (n <= 0 || transient < 0 || transient >= n)
        throw config_error("iterate: need n > transient >= 0");

    Orbit orbit;
    orbit.x0 = x0;
    orbit.transient_count = transient;
    orbit.samples.reserve(n - transient);
    double x = x0;
    for (int k = 0; k < n; ++k) {
        const MapDescriptor fw = MapDescriptor::gnm(sched[k], c);
        if (k == 0 && !fw.domain().contains(x, 1e-12))
            throw domain_error("iterate_scheduled: seed x0 outside map domain");
        if (!fw.domain().contains(x)) {
            orbit.clipped = true;
            x = fw.domain().clamp(x);
        }
        const double y = fw.eval(x);
        if (k >= transient) orbit.samples.push_back(y);
        if (topo.is_buffer()) {
            x = y;
        } else {
            const auto& fb = *topo.feedback;
            double yin = y;
            if (!fb.domain().contains(yin)) {
                orbit.clipped = true;
                yin = fb.domain().clamp(yin);
            }
            x = fb.eval(yin);
        }
    }
    return orbit;
}

void write_orbit_csv(const Orbit& orbit, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "k,x_volts\n";
    char buf[64];
    for (std::size_t i = 0; i < orbit.samples.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%d,%.17g\n",
                      orbit.transient_count + static_cast<int>(i),
                      orbit.samples[i]);
        out << buf;
    }
}

}  // namespace gnm
