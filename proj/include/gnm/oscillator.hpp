#ifndef GNM_OSCILLATOR_HPP
#define GNM_OSCILLATOR_HPP

#include <optional>
#include <vector>

#include "gnm/map.hpp"

namespace gnm {

// Feedback path of the oscillator loop. BufferFeedback returns the map
// output unchanged; MapFeedback passes it through a second map on the
// return path. The observable sequence is always the forward-map output.
struct Topology {
    std::optional<MapDescriptor> feedback;  // empty -> buffer

    static Topology buffer() { return {}; }
    static Topology map_feedback(MapDescriptor fb) {
        return {std::move(fb)};
    }
    bool is_buffer() const { return !feedback.has_value(); }
};

// Per-iteration parameter schedule; size 1 means constant.
using Schedule = std::vector<GnmParams>;

struct Orbit {
    double x0 = 0.0;
    int transient_count = 0;
    std::vector<double> samples;  // retained forward-map outputs, volt
    bool clipped = false;         // some raw iterate left the interval
};

// Runs n iterations from x0 and keeps the outputs after the first
// `transient`. Deterministic: identical arguments give bit-identical
// orbits.
Orbit iterate(const MapDescriptor& fw, const Topology& topo, double x0,
              int n, int transient);

// As iterate, but the forward map for iteration k is rebuilt from
// sched[k] (or sched[0] when the schedule is constant).
Orbit iterate_scheduled(const Schedule& sched, const SurrogateConstants& c,
                        const Topology& topo, double x0, int n,
                        int transient = 0);

// Writes `k,x_volts` rows, k starting at the orbit's transient count.
void write_orbit_csv(const Orbit& orbit, const std::string& path);

}  // namespace gnm

#endif
