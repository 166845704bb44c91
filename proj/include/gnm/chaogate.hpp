#ifndef GNM_CHAOGATE_HPP
#define GNM_CHAOGATE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gnm/map.hpp"
#include "gnm/oscillator.hpp"

namespace gnm {

// Linear DAC over a 3-bit code (two data bits plus one control bit,
// control bit least significant): x0 = vmin + code*step.
struct DacSpec {
    double vmin = 0.1;     // V
    double step = 0.3285;  // V
    int bits = 3;
};

// Truth table of a 2-input gate packed as 8*O(00)+4*O(01)+2*O(10)+O(11).
struct FunctionId {
    int value = 0;

    static FunctionId from_string(const std::string& s);  // decimal or mnemonic
    std::string mnemonic() const;  // "AND", "7", ...
    bool operator==(const FunctionId&) const = default;
};

inline constexpr int kFunctionAnd = 1;
inline constexpr int kFunctionXor = 6;
inline constexpr int kFunctionOr = 7;
inline constexpr int kFunctionNor = 8;
inline constexpr int kFunctionXnor = 9;
inline constexpr int kFunctionNand = 14;

// Full gate configuration. `schedule` has size 1 for a constant
// parameter set, or size n for per-iteration parameters.
struct GateConfig {
    Schedule schedule{GnmParams{}};
    SurrogateConstants consts;
    int cb = 0;          // control bit
    double vref = 1.25;  // comparator reference, V
    int n = 1;           // decision iteration, first fed-back output is n=1
    Topology topology;
    DacSpec dac;

    const GnmParams& params() const { return schedule.front(); }
};

double dac_encode(int b1, int b0, int cb, const DacSpec& dac);
int comparator(double x, double vref);  // 1 iff x > vref

struct GateEvaluation {
    std::vector<FunctionId> per_iteration;  // function at iteration 1..upto_n
    // decision-node voltages, inputs (00,01,10,11) by column, iteration by row
    std::vector<std::array<double, 4>> voltages;
    bool clipped = false;
};

// Evaluates the gate for all four data inputs through upto_n iterations.
GateEvaluation gate_function(const GateConfig& config, int upto_n);

// min over the four data inputs of |x_n - vref| at the decision iteration.
double noise_margin(const GateConfig& config);

struct SearchGrid {
    std::vector<double> mu1;   // MOhm
    std::vector<double> mu2;   // V
    std::vector<double> mu3;   // V
    std::vector<int> cb;
    std::vector<double> vref;  // V
    int n_min = 1;
    int n_max = 8;
    SurrogateConstants consts;
    DacSpec dac;
    std::uint64_t cap = 10'000'000;

    // mu1 in [0.90, 1.05] x 16, mu2/mu3 in {-0.3, 0, 0.3}, cb in {0,1},
    // vref 0.5..1.6 step 0.1, n in [1,8].
    static SearchGrid defaults();

    std::uint64_t size() const;
};

struct SearchResult {
    GateConfig config;
    FunctionId function;
    double margin = 0.0;  // V
};

// Deterministic row-major enumeration over (mu1, mu2, mu3, cb, vref, n).
// Returns up to `limit` configurations realizing `target` with margin >=
// min_margin, sorted by descending margin then enumeration order.
std::vector<SearchResult> search_configurations(FunctionId target,
                                                const SearchGrid& grid,
                                                double min_margin = 0.0,
                                                int limit = 10,
                                                int workers = 1);

void write_results_json(const std::vector<SearchResult>& results,
                        const std::string& path);
void write_results_csv(const std::vector<SearchResult>& results,
                       const std::string& path);

}  // namespace gnm

#endif
