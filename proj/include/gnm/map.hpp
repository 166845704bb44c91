#ifndef GNM_MAP_HPP
#define GNM_MAP_HPP

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace gnm {

// Error taxonomy. config_error covers anything a caller could have
// validated up front (bad parameters, out-of-range inputs); parse_error
// covers malformed input files.
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct domain_error : config_error {
    using config_error::config_error;
};

// Closed voltage interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    double width() const { return hi - lo; }
    bool contains(double x, double tol = 0.0) const {
        return x >= lo - tol && x <= hi + tol;
    }
    double clamp(double x) const {
        if (x < lo) return lo;
        if (x > hi) return hi;
        return x;
    }
    double mid() const { return lo + 0.5 * width(); }
};

// The three tunable knobs of the map circuit: TIA gain and the two
// top-gate bias voltages.
struct GnmParams {
    double mu1_mohm = 1.0;  // transimpedance gain, megaohm
    double mu2_v = 0.0;     // n-channel top-gate bias, volt
    double mu3_v = 0.0;     // p-channel top-gate bias, volt
};

// Coefficients of the unimodal transfer-curve surrogate.
//
//   V_c = vc0 + a_n*mu2 - a_p*mu3          (cutoff voltage, domain top)
//   k   = k0*(1 + b_n*mu2)*(1 - b_p*mu3)   (peak-current scale)
//   f(x) = clip(mu1 * k * u*(1-u)*(1 + gamma*u), 0, V_c),  u = x/V_c
//
// With gamma = 0 this is exactly conjugate to the logistic map with
// r = mu1*k/V_c, which all the analytic test anchors rely on.
struct SurrogateConstants {
    double vc0 = 2.63;     // V
    double k0 = 10e-6;     // A
    double a_n = 0.5;      // V/V
    double a_p = 0.5;      // V/V
    double b_n = 0.3;      // 1/V
    double b_p = 0.3;      // 1/V
    double gamma = 0.0;    // dimensionless asymmetry

    double cutoff_voltage(const GnmParams& p) const {
        return vc0 + a_n * p.mu2_v - a_p * p.mu3_v;
    }
    double current_scale(const GnmParams& p) const {
        return k0 * (1.0 + b_n * p.mu2_v) * (1.0 - b_p * p.mu3_v);
    }
};

// Default bias bounds for mu2/mu3.
inline constexpr double kBiasBoundV = 0.5;

struct DerivativeResult {
    double value = 0.0;
    bool one_sided = false;  // kink or clip boundary, one-sided slope
};

namespace maps {
struct Logistic { double r; };        // r*x*(1-x) on [0,1]
struct Tent     { double m; };        // m*min(x, 1-x) on [0,1]
struct Sine     { double a; };        // a*sin(pi*x) on [0,1]
struct GnmSurrogate {
    GnmParams params;
    SurrogateConstants consts;
};
struct Tabulated {
    std::vector<double> x;  // strictly increasing knots, volt
    std::vector<double> y;  // map output at knots, volt
    std::vector<double> d;  // shape-preserving knot slopes (precomputed)
};
}  // namespace maps

using MapVariant = std::variant<maps::Logistic, maps::Tent, maps::Sine,
                                maps::GnmSurrogate, maps::Tabulated>;

// Immutable discrete map of an interval, x_{n+1} = f(x_n).
//
// Iteration state is kept in the normalized coordinate u = (x-lo)/width,
// so that parameterizations related by a pure rescaling of the interval
// produce bit-identical normalized orbits. eval() is defined in terms of
// the same normalized step.
class MapDescriptor {
public:
    static MapDescriptor logistic(double r);
    static MapDescriptor tent(double m);
    static MapDescriptor sine(double a);
    static MapDescriptor gnm(const GnmParams& p,
                             const SurrogateConstants& c = {});
    static MapDescriptor tabulated(std::vector<double> x,
                                   std::vector<double> y);

    const Interval& domain() const { return domain_; }
    const MapVariant& variant() const { return variant_; }

    bool is_gnm() const {
        return std::holds_alternative<maps::GnmSurrogate>(variant_);
    }
    bool is_tabulated() const {
        return std::holds_alternative<maps::Tabulated>(variant_);
    }

    // One normalized iteration step, u in [0,1] -> [0,1]. Sets `clipped`
    // when the raw image fell outside the interval.
    double step_u(double u, bool& clipped) const;

    // Map evaluation in voltage coordinates. Throws domain_error when x
    // is outside the domain by more than 1e-12 V.
    double eval(double x) const;

    // Slope df/dx (equals the normalized slope du'/du).
    DerivativeResult derivative(double x) const;

    double to_u(double x) const { return (x - domain_.lo) / domain_.width(); }
    double from_u(double u) const { return domain_.lo + domain_.width() * u; }

private:
    MapDescriptor(MapVariant v, Interval d)
        : variant_(std::move(v)), domain_(d) {}

    MapVariant variant_;
    Interval domain_;
};

// Conjugate logistic parameter of the surrogate, r = mu1*k/V_c.
// Only meaningful for gamma = 0; throws config_error otherwise.
double gnm_effective_r(const GnmParams& p, const SurrogateConstants& c = {});

// Loads a two-column CSV (x_volts,y_volts; optional header) into a
// tabulated map with a monotone-cubic interpolant. Throws parse_error
// with the offending row number on malformed input.
MapDescriptor load_tabulated(const std::string& path);

}  // namespace gnm

#endif
