#ifndef GNM_FUNCSPACE_HPP
#define GNM_FUNCSPACE_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gnm/map.hpp"

namespace gnm {

using BigInt = boost::multiprecision::cpp_int;

// Level counts for the functionality-space formulas. Counting is exact
// integer arithmetic throughout; the totals overflow 64 bits quickly.
struct SpaceParams {
    int c = 1;        // control-bit count
    int n_mu = 2;     // levels, single-parameter design
    int n_mu1 = 2;
    int n_mu2 = 2;
    int n_mu3 = 2;
    int n_vref = 2;   // comparator reference levels
    int n = 1;        // iteration count

    void validate() const;
};

// Configuration counts of the four designs:
//   f1 = 2^c * N_mu * n                     (single parameter + control bits)
//   f2 = N_vref * N_mu^n * n                (per-iteration parameter, threshold)
//   f3 = N_vref * 2^c * (N_mu1 N_mu2 N_mu3)^n * n
//   f4 = N_vref * 2^c * (N_mu1 N_mu2 N_mu3)^(2n) * n   (map in feedback path)
BigInt f1(const SpaceParams& p);
BigInt f2(const SpaceParams& p);
BigInt f3(const SpaceParams& p);
BigInt f4(const SpaceParams& p);

struct SpaceRow {
    int n;
    BigInt f1, f2, f3, f4;
    double log10_f1, log10_f2, log10_f3, log10_f4;
};

// Rows for n in [n_lo, n_hi], other parameters fixed.
std::vector<SpaceRow> compare_spaces(const SpaceParams& p, int n_lo, int n_hi);

// log10 of an exact positive integer.
double big_log10(const BigInt& v);

// `n,f1,f2,f3,f4,log10_f1,log10_f2,log10_f3,log10_f4`
void write_compare_csv(const std::vector<SpaceRow>& rows,
                       const std::string& path);

}  // namespace gnm

#endif
