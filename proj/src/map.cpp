#include "gnm/map.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

namespace gnm {

namespace {

constexpr double kDomainTol = 1e-12;

void require(bool ok, const std::string& msg) {
    if (!ok) throw config_error(msg);
}

int sgn(double v) { return (v > 0) - (v < 0); }

// Fritsch-Carlson shape-preserving slopes. Flat slope at any knot where
// the adjacent secants disagree in sign, so no interpolation overshoot
// can introduce spurious critical points.
std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> h(n - 1), delta(n - 1), d(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        delta[i] = (y[i + 1] - y[i]) / h[i];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    auto edge = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (sgn(s) != sgn(d0))
            s = 0.0;
        else if (sgn(d0) != sgn(d1) && std::abs(s) > 3.0 * std::abs(d0))
            s = 3.0 * d0;
        return s;
    };
    d[0] = edge(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = edge(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    return d;
}

double pchip_eval(const maps::Tabulated& t, double x) {
    const auto& xs = t.x;
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t i = (it == xs.begin()) ? 0 : (it - xs.begin()) - 1;
    if (i + 1 >= xs.size()) i = xs.size() - 2;
    const double h = xs[i + 1] - xs[i];
    const double s = (x - xs[i]) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    return t.y[i] * (2.0 * s3 - 3.0 * s2 + 1.0) +
           h * t.d[i] * (s3 - 2.0 * s2 + s) +
           t.y[i + 1] * (-2.0 * s3 + 3.0 * s2) +
           h * t.d[i + 1] * (s3 - s2);
}

// mu1*k/V_c; with gamma = 0 this is the conjugate logistic r.
double gnm_ratio(const maps::GnmSurrogate& g) {
    return g.params.mu1_mohm * 1e6 * g.consts.current_scale(g.params) /
           g.consts.cutoff_voltage(g.params);
}

double clip01(double v, bool& clipped) {
    if (v < 0.0) { clipped = true; return 0.0; }
    if (v > 1.0) { clipped = true; return 1.0; }
    return v;
}

}  // namespace

MapDescriptor MapDescriptor::logistic(double r) {
    require(std::isfinite(r) && r >= 0.0, "logistic: r must be finite and >= 0");
    return MapDescriptor(maps::Logistic{r}, Interval{0.0, 1.0});
}

MapDescriptor MapDescriptor::tent(double m) {
    require(std::isfinite(m) && m >= 0.0, "tent: m must be finite and >= 0");
    return MapDescriptor(maps::Tent{m}, Interval{0.0, 1.0});
}

MapDescriptor MapDescriptor::sine(double a) {
    require(std::isfinite(a) && a >= 0.0, "sine: a must be finite and >= 0");
    return MapDescriptor(maps::Sine{a}, Interval{0.0, 1.0});
}

MapDescriptor MapDescriptor::gnm(const GnmParams& p,
                                 const SurrogateConstants& c) {
    require(std::isfinite(p.mu1_mohm) && p.mu1_mohm > 0.0, "gnm: mu1 must be > 0");
    require(std::abs(p.mu2_v) <= kBiasBoundV, "gnm: mu2 outside bias bounds");
    require(std::abs(p.mu3_v) <= kBiasBoundV, "gnm: mu3 outside bias bounds");
    require(c.vc0 > 0.0 && c.k0 > 0.0, "gnm: Vc0 and k0 must be > 0");
    require(c.a_n >= 0.0 && c.a_p >= 0.0 && c.b_n >= 0.0 && c.b_p >= 0.0,
            "gnm: sensitivities must be >= 0");
    require(c.gamma >= 0.0, "gnm: gamma must be >= 0");
    const double vc = c.cutoff_voltage(p);
    require(vc > 0.0, "gnm: cutoff voltage must be > 0");
    return MapDescriptor(maps::GnmSurrogate{p, c}, Interval{0.0, vc});
}

MapDescriptor MapDescriptor::tabulated(std::vector<double> x,
                                       std::vector<double> y) {
    if (x.size() != y.size()) throw config_error("tabulated: x/y size mismatch");
    if (x.size() < 4) throw parse_error("tabulated: insufficient knots (need >= 4)");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i]))
            throw config_error("tabulated: non-finite knot");
        if (i > 0 && x[i] <= x[i - 1])
            throw parse_error("tabulated: knots not strictly increasing at index " +
                              std::to_string(i));
    }
    maps::Tabulated t{std::move(x), std::move(y), {}};
    t.d = pchip_slopes(t.x, t.y);
    const Interval dom{t.x.front(), t.x.back()};
    return MapDescriptor(std::move(t), dom);
}

double MapDescriptor::step_u(double u, bool& clipped) const {
    struct Visitor {
        const MapDescriptor& m;
        double u;
        bool& clipped;
        double operator()(const maps::Logistic& l) const {
            return clip01(l.r * u * (1.0 - u), clipped);
        }
        double operator()(const maps::Tent& t) const {
            return clip01(u <= 0.5 ? t.m * u : t.m * (1.0 - u), clipped);
        }
        double operator()(const maps::Sine& s) const {
            return clip01(s.a * std::sin(std::numbers::pi * u), clipped);
        }
        double operator()(const maps::GnmSurrogate& g) const {
            const double r = gnm_ratio(g);
            double w = r * u * (1.0 - u);
            if (g.consts.gamma != 0.0) w *= 1.0 + g.consts.gamma * u;
            return clip01(w, clipped);
        }
        double operator()(const maps::Tabulated& t) const {
            const double x = m.from_u(u);
            const double y = pchip_eval(t, x);
            return clip01(m.to_u(y), clipped);
        }
    };
    return std::visit(Visitor{*this, u, clipped}, variant_);
}

double MapDescriptor::eval(double x) const {
    if (!domain_.contains(x, kDomainTol)) {
        if (is_tabulated())
            throw domain_error("eval_map: x outside tabulated knot range (extrapolation)");
        throw domain_error("eval_map: x outside map domain");
    }
    bool clipped = false;
    double u = to_u(x);
    if (u < 0.0) u = 0.0;
    if (u > 1.0) u = 1.0;
    return from_u(step_u(u, clipped));
}

DerivativeResult MapDescriptor::derivative(double x) const {
    if (!domain_.contains(x, kDomainTol))
        throw domain_error("map_derivative: x outside map domain");
    const double u = std::clamp(to_u(x), 0.0, 1.0);

    struct Visitor {
        const MapDescriptor& m;
        double u;
        DerivativeResult operator()(const maps::Logistic& l) const {
            return {l.r * (1.0 - 2.0 * u), false};
        }
        DerivativeResult operator()(const maps::Tent& t) const {
            if (u == 0.5) return {t.m, true};  // left-hand slope at the kink
            return {u < 0.5 ? t.m : -t.m, false};
        }
        DerivativeResult operator()(const maps::Sine& s) const {
            return {s.a * std::numbers::pi * std::cos(std::numbers::pi * u), false};
        }
        DerivativeResult operator()(const maps::GnmSurrogate& g) const {
            const double r = gnm_ratio(g);
            const double gamma = g.consts.gamma;
            double raw = r * u * (1.0 - u);
            if (gamma != 0.0) raw *= 1.0 + gamma * u;
            const double slope =
                r * (1.0 - 2.0 * u + gamma * (2.0 * u - 3.0 * u * u));
            if (raw < 0.0 || raw > 1.0) return {0.0, true};  // clipped branch
            return {slope, false};
        }
        DerivativeResult operator()(const maps::Tabulated& t) const {
            const double w = m.domain().width();
            const double h = 1e-6 * w;
            double xl = m.from_u(u) - h;
            double xr = m.from_u(u) + h;
            bool one_sided = false;
            if (xl < m.domain().lo) { xl = m.domain().lo; one_sided = true; }
            if (xr > m.domain().hi) { xr = m.domain().hi; one_sided = true; }
            return {(pchip_eval(t, xr) - pchip_eval(t, xl)) / (xr - xl),
                    one_sided};
        }
    };
    return std::visit(Visitor{*this, u}, variant_);
}

double gnm_effective_r(const GnmParams& p, const SurrogateConstants& c) {
    if (c.gamma != 0.0)
        throw config_error("gnm_effective_r: surrogate with gamma != 0 is not "
                           "conjugate to the logistic map");
    return p.mu1_mohm * 1e6 * c.current_scale(p) / c.cutoff_voltage(p);
}

MapDescriptor load_tabulated(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open tabulated map file: " + path);

    std::vector<double> xs, ys;
    std::string line;
    int row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw parse_error("row " + std::to_string(row) +
                              ": expected two comma-separated columns");
        auto parse_cell = [&](const std::string& cell, double& out) {
            char* end = nullptr;
            out = std::strtod(cell.c_str(), &end);
            while (end && *end != '\0' && std::isspace((unsigned char)*end)) ++end;
            return end && *end == '\0' && !cell.empty();
        };
        double x, y;
        const bool ok = parse_cell(line.substr(0, comma), x) &&
                        parse_cell(line.substr(comma + 1), y);
        if (!ok) {
            if (row == 1 && xs.empty()) continue;  // optional header row
            throw parse_error("row " + std::to_string(row) + ": non-numeric cell");
        }
        if (!xs.empty() && x <= xs.back())
            throw parse_error("row " + std::to_string(row) +
                              ": x not strictly increasing");
        xs.push_back(x);
        ys.push_back(y);
    }
    if (xs.size() < 4)
        throw parse_error("insufficient knots: need >= 4 data rows, got " +
                          std::to_string(xs.size()));
    return MapDescriptor::tabulated(std::move(xs), std::move(ys));
}

}  // namespace gnm
