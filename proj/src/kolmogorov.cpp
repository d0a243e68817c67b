#include "arscb/kolmogorov.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

namespace arscb {

namespace {
constexpr double kTermTol = 1e-14;
constexpr int kMaxTerms = 10000;
} // namespace

double kolmogorov_cdf(double q) {
    if (!(q > 0.0)) throw std::invalid_argument("kolmogorov_cdf: Q must be > 0");
    const double pi = std::numbers::pi;
    double value;
    if (q < 0.2) {
        double sum = 0.0;
        for (int j = 1; j <= kMaxTerms; ++j) {
            const double m = 2.0 * j - 1.0;
            const double term = std::exp(-m * m * pi * pi / (8.0 * q * q));
            sum += term;
            if (term < kTermTol) break;
        }
        value = std::sqrt(2.0 * pi) / q * sum;
    } else {
        double sum = 0.0;
        double sign = 1.0;
        for (int j = 1; j <= kMaxTerms; ++j) {
            const double term = std::exp(-2.0 * j * j * q * q);
            sum += sign * term;
            sign = -sign;
            if (term < kTermTol) break;
        }
        value = 1.0 - 2.0 * sum;
    }
    return std::clamp(value, 0.0, 1.0);
}

double kolmogorov_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("kolmogorov_quantile: p must lie in (0,1)");
    double lo = 0.01, hi = 5.0;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (kolmogorov_cdf(mid) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double Band::lower(double z) const {
    return std::max(0.0, center(z) - halfwidth);
}

double Band::upper(double z) const {
    return std::min(1.0, center(z) + halfwidth);
}

Band build_band(SmoothCdf center, Eigen::Index n, double alpha) {
    if (n < 1) throw std::invalid_argument("build_band: n must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("build_band: alpha must lie in (0,1)");
    if (n < 50)
        std::cerr << "warning: asymptotic Kolmogorov constants are tabulated for n >= 50; "
                     "proceeding with n = " << n << "\n";
    Band band;
    band.center = std::move(center);
    band.level = 1.0 - alpha;
    band.halfwidth = kolmogorov_quantile(1.0 - alpha) / std::sqrt(static_cast<double>(n));
    return band;
}

bool covers(const Band& band, const std::function<double(double)>& truth,
            const Eigen::VectorXd& grid) {
    if (grid.size() == 0) throw std::invalid_argument("covers: empty grid");
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        const double t = truth(grid[i]);
        if (t < band.lower(grid[i]) || t > band.upper(grid[i])) return false;
    }
    return true;
}

Eigen::VectorXd coverage_grid(const SmoothCdf& center,
                              const std::function<double(double)>& truth_quantile) {
    const Eigen::VectorXd base = evaluation_grid(center);
    constexpr int kQuantiles = 201;
    Eigen::VectorXd grid(base.size() + kQuantiles);
    grid.head(base.size()) = base;
    for (int k = 1; k <= kQuantiles; ++k)
        grid[base.size() + k - 1] = truth_quantile(static_cast<double>(k) / (kQuantiles + 1));
    std::sort(grid.begin(), grid.end());
    return grid;
}

} // namespace arscb
