#ifndef GNM_ANALYSIS_HPP
#define GNM_ANALYSIS_HPP

#include <limits>
#include <string>
#include <vector>

#include "gnm/map.hpp"
#include "gnm/oscillator.hpp"

namespace gnm {

// Sweepable parameter axes. mu1/mu2/mu3 apply to the surrogate map,
// r/m/a to the classical reference maps.
enum class Axis { mu1, mu2, mu3, r, m, a };

Axis axis_from_string(const std::string& s);
std::string axis_name(Axis a);

// Rebuilds `base` with the axis parameter set to `value`. Throws
// config_error when the axis does not apply to the map variant.
MapDescriptor map_with_axis(const MapDescriptor& base, Axis axis, double value);

struct SweepSpec {
    Axis axis = Axis::mu1;
    double lo = 0.0;
    double hi = 1.0;
    int steps = 2;
    MapDescriptor base = MapDescriptor::logistic(4.0);  // fixed params, variant
    Topology topology;
    double x0 = std::numeric_limits<double>::quiet_NaN();  // NaN -> mid-domain
    int transient = 1000;
    int retained = 3000;
    int workers = 1;

    void validate() const;
    double axis_value(int i) const {
        return lo + (hi - lo) * i / (steps - 1);
    }
};

struct BifurcationData {
    struct Row {
        double axis_value;
        std::vector<double> samples;
    };
    std::vector<Row> rows;
};

struct LyapunovEstimate {
    double lambda = 0.0;
    bool clip_warning = false;  // >1% of steps clipped
};

struct LyapunovCurve {
    struct Row {
        double axis_value;
        double lambda;
        bool clip_warning;
    };
    std::vector<Row> rows;
};

// Average of ln|f'(x_i)| over n post-burn iterates. A superstable orbit
// yields -infinity, reported as-is.
LyapunovEstimate lyapunov_exponent(const MapDescriptor& fw,
                                   const Topology& topo, double x0,
                                   long n = 100000, long burn = 1000);

BifurcationData bifurcation_sweep(const SweepSpec& spec);
LyapunovCurve lyapunov_sweep(const SweepSpec& spec, long n = 10000,
                             long burn = 1000);

enum class RegionLabel { chaotic, periodic, marginal };

struct Region {
    double lo;
    double hi;
    RegionLabel label;
};

// Maximal contiguous runs: lambda > tol chaotic, lambda < -tol periodic,
// otherwise marginal.
std::vector<Region> classify_regions(const LyapunovCurve& curve,
                                     double tol = 0.0);

// Number of clusters in a sample set at the given resolution.
int count_clusters(std::vector<double> samples, double tol);

void write_bifurcation_csv(const BifurcationData& data,
                           const std::string& path);
void write_lyapunov_csv(const LyapunovCurve& curve, const std::string& path);

// Gnuplot scripts referencing the CSVs above.
void write_bifurcation_plot(const std::string& csv_name, Axis axis,
                            const std::string& path);
void write_lyapunov_plot(const std::string& csv_name, Axis axis,
                         const std::string& path);

}  // namespace gnm

#endif
