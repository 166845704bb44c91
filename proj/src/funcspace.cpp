#include "gnm/funcspace.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace gnm {

namespace {

BigInt ipow(const BigInt& base, int exp) {
    BigInt out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

void SpaceParams::validate() const {
    if (c < 0) throw config_error("funcspace: control-bit count must be >= 0");
    if (n_mu < 1 || n_mu1 < 1 || n_mu2 < 1 || n_mu3 < 1 || n_vref < 1)
        throw config_error("funcspace: level counts must be >= 1");
    if (n < 1) throw config_error("funcspace: n must be >= 1");
}

BigInt f1(const SpaceParams& p) {
    p.validate();
    return ipow(2, p.c) * p.n_mu * p.n;
}

BigInt f2(const SpaceParams& p) {
    p.validate();
    return BigInt(p.n_vref) * ipow(p.n_mu, p.n) * p.n;
}

BigInt f3(const SpaceParams& p) {
    p.validate();
    return BigInt(p.n_vref) * ipow(2, p.c) * ipow(p.n_mu1, p.n) *
           ipow(p.n_mu2, p.n) * ipow(p.n_mu3, p.n) * p.n;
}

BigInt f4(const SpaceParams& p) {
    p.validate();
    return BigInt(p.n_vref) * ipow(2, p.c) * ipow(p.n_mu1, 2 * p.n) *
           ipow(p.n_mu2, 2 * p.n) * ipow(p.n_mu3, 2 * p.n) * p.n;
}

double big_log10(const BigInt& v) {
    if (v <= 0) throw config_error("big_log10: value must be positive");
    const std::string s = v.str();
    // mantissa from the leading digits, exponent from the digit count
    const std::size_t head = std::min<std::size_t>(s.size(), 17);
    const double mant = std::stod(s.substr(0, head));
    return std::log10(mant) + static_cast<double>(s.size() - head);
}

std::vector<SpaceRow> compare_spaces(const SpaceParams& p, int n_lo, int n_hi) {
    if (n_lo < 1 || n_hi < n_lo)
        throw config_error("compare_spaces: need 1 <= n_lo <= n_hi");
    std::vector<SpaceRow> rows;
    rows.reserve(n_hi - n_lo + 1);
    for (int n = n_lo; n <= n_hi; ++n) {
        SpaceParams q = p;
        q.n = n;
        SpaceRow row;
        row.n = n;
        row.f1 = f1(q);
        row.f2 = f2(q);
        row.f3 = f3(q);
        row.f4 = f4(q);
        row.log10_f1 = big_log10(row.f1);
        row.log10_f2 = big_log10(row.f2);
        row.log10_f3 = big_log10(row.f3);
        row.log10_f4 = big_log10(row.f4);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_compare_csv(const std::vector<SpaceRow>& rows,
                       const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "n,f1,f2,f3,f4,log10_f1,log10_f2,log10_f3,log10_f4\n";
    char buf[120];
    for (const auto& r : rows) {
        out << r.n << ',' << r.f1.str() << ',' << r.f2.str() << ','
            << r.f3.str() << ',' << r.f4.str();
        std::snprintf(buf, sizeof(buf), ",%.6f,%.6f,%.6f,%.6f\n", r.log10_f1,
                      r.log10_f2, r.log10_f3, r.log10_f4);
        out << buf;
    }
}

}  // namespace gnm
