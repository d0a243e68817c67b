#include "arscb/kernel_cdf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arscb/errors.hpp"

namespace arscb {

double quartic_density(double u) {
    if (u <= -1.0 || u >= 1.0) return 0.0;
    const double w = 1.0 - u * u;
    return 15.0 / 16.0 * w * w;
}

double quartic_G(double u) {
    if (u <= -1.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return 15.0 / 16.0 * (u - 2.0 * u * u * u / 3.0 + u * u * u * u * u / 5.0) + 0.5;
}

Kernel Kernel::quartic() {
    Kernel k;
    k.kind = KernelKind::Quartic;
    k.density = [](double u) { return quartic_density(u); };
    k.integrated = [](double u) { return quartic_G(u); };
    return k;
}

Kernel Kernel::custom(std::function<double(double)> density,
                      std::function<double(double)> integrated) {
    if (!density || !integrated)
        throw std::invalid_argument("Kernel::custom: density and integrated are required");
    Kernel k;
    k.kind = KernelKind::Custom;
    k.density = std::move(density);
    k.integrated = std::move(integrated);
    return k;
}

SmoothCdf::SmoothCdf(Eigen::VectorXd centers, double h, Kernel kernel)
    : centers_(std::move(centers)), h_(h), kernel_(std::move(kernel)) {
    if (centers_.size() < 1) throw std::invalid_argument("SmoothCdf: need at least one center");
    if (!(h_ > 0.0)) throw std::invalid_argument("SmoothCdf: bandwidth must be > 0");
    std::sort(centers_.begin(), centers_.end());
}

double SmoothCdf::operator()(double z) const {
    const double* begin = centers_.data();
    const double* end = begin + centers_.size();
    // Centers <= z - h contribute exactly 1, centers >= z + h contribute 0.
    const double* lo = std::lower_bound(begin, end, z - h_);
    const double* hi = std::upper_bound(lo, end, z + h_);
    double sum = static_cast<double>(lo - begin);
    if (kernel_.kind == KernelKind::Quartic) {
        for (const double* c = lo; c != hi; ++c) sum += quartic_G((z - *c) / h_);
    } else {
        for (const double* c = lo; c != hi; ++c) sum += kernel_.integrated((z - *c) / h_);
    }
    return sum / static_cast<double>(centers_.size());
}

StepCdf::StepCdf(Eigen::VectorXd points) : points_(std::move(points)) {
    if (points_.size() < 1) throw std::invalid_argument("StepCdf: need at least one point");
    std::sort(points_.begin(), points_.end());
}

double StepCdf::operator()(double z) const {
    const double* begin = points_.data();
    const double* end = begin + points_.size();
    return static_cast<double>(std::upper_bound(begin, end, z) - begin) /
           static_cast<double>(points_.size());
}

double sample_quantile(const Eigen::VectorXd& x, double p) {
    if (x.size() < 1) throw std::invalid_argument("sample_quantile: empty sample");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_quantile: p outside [0,1]");
    Eigen::VectorXd s = x;
    std::sort(s.begin(), s.end());
    const Eigen::Index n = s.size();
    if (n == 1) return s[0];
    const double pos = p * static_cast<double>(n - 1);
    const auto lo = static_cast<Eigen::Index>(std::floor(pos));
    if (lo >= n - 1) return s[n - 1];
    const double frac = pos - static_cast<double>(lo);
    return s[lo] + frac * (s[lo + 1] - s[lo]);
}

double bandwidth_rule(const Eigen::VectorXd& residuals) {
    const Eigen::Index n = residuals.size();
    if (n < 4) throw std::invalid_argument("bandwidth_rule: need at least 4 residuals");
    const double iqr = sample_quantile(residuals, 0.75) - sample_quantile(residuals, 0.25);
    if (!(iqr > 0.0)) throw DegenerateError("degenerate residual spread: zero IQR");
    return iqr * std::pow(static_cast<double>(n), -1.0 / 3.0);
}

SmoothCdf smooth_cdf(Eigen::VectorXd centers, double h, Kernel kernel) {
    return SmoothCdf(std::move(centers), h, std::move(kernel));
}

StepCdf step_cdf(Eigen::VectorXd points) {
    return StepCdf(std::move(points));
}

double quantile(const SmoothCdf& cdf, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("quantile: alpha must lie in (0,1)");
    double lo = cdf.support_min();
    double hi = cdf.support_max();
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // floating-point resolution reached
        if (cdf(mid) >= alpha)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

Eigen::VectorXd evaluation_grid(const SmoothCdf& cdf) {
    const Eigen::VectorXd& c = cdf.centers();
    const double h = cdf.bandwidth();
    const Eigen::Index n = c.size();
    constexpr Eigen::Index kSpan = 512;

    Eigen::VectorXd grid(3 * n + kSpan);
    grid.head(n) = c;
    grid.segment(n, n) = c.array() - h;
    grid.segment(2 * n, n) = c.array() + h;
    const double lo = c[0] - 3.0 * h;
    const double hi = c[n - 1] + 3.0 * h;
    grid.tail(kSpan) = Eigen::VectorXd::LinSpaced(kSpan, lo, hi);
    std::sort(grid.begin(), grid.end());
    return grid;
}

} // namespace arscb
