#ifndef ARSCB_METRICS_HPP
#define ARSCB_METRICS_HPP

#include <stdexcept>
#include <utility>

#include <Eigen/Core>

#include "arscb/kernel_cdf.hpp"

namespace arscb {

/// Sup-distance and integrated squared error of one estimator against a
/// reference, as accumulated by the experiment driver.
struct DeviationReport {
    double d_sup = 0.0;
    double argmax_z = 0.0;
    double ise = 0.0;
};

/// max_z |f1(z) - f2(z)| over the grid, with the attaining z.
/// The grid must be sorted and nonempty; callers comparing against a
/// StepCdf should pass it through with_step_jumps first so the left
/// limits at jumps are seen.
template <class F1, class F2>
std::pair<double, double> sup_distance(const F1& f1, const F2& f2,
                                       const Eigen::VectorXd& grid) {
    if (grid.size() == 0) throw std::invalid_argument("sup_distance: empty grid");
    double best = -1.0;
    double arg = grid[0];
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        const double d = std::abs(f1(grid[i]) - f2(grid[i]));
        if (d > best) {
            best = d;
            arg = grid[i];
        }
    }
    return {best, arg};
}

/// Grid joined with the step function's jump points and points just
/// below each jump (jump - 1e-12), where the sup against a continuous
/// CDF is attained.
Eigen::VectorXd with_step_jumps(const Eigen::VectorXd& grid, const StepCdf& step);

/// Composite Simpson quadrature of (f1 - f2)^2 over [lo, hi].
/// panels is rounded up to an even count; at least 64 are required.
template <class F1, class F2>
double ise(const F1& f1, const F2& f2, double lo, double hi, int panels) {
    if (!(lo < hi)) throw std::invalid_argument("ise: need lo < hi");
    if (panels < 64) throw std::invalid_argument("ise: need at least 64 panels");
    if (panels % 2 != 0) ++panels;
    const double dz = (hi - lo) / panels;
    auto sq = [&](double z) {
        const double d = f1(z) - f2(z);
        return d * d;
    };
    // Kahan-compensated accumulation keeps the reduction order-stable.
    double sum = sq(lo) + sq(hi);
    double carry = 0.0;
    for (int i = 1; i < panels; ++i) {
        const double term = (i % 2 == 1 ? 4.0 : 2.0) * sq(lo + i * dz);
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum * dz / 3.0;
}

/// Integrated squared error against a reference law in probability
/// scale: int_0^1 (estimate(Q(u)) - u)^2 du with Q the law's quantile
/// function, i.e. int (F_est - F)^2 dF after substituting u = F(z).
/// Simpson on u in [1e-6, 1 - 1e-6].
template <class F, class Q>
double quantile_scale_ise(const F& estimate, const Q& truth_quantile, int panels) {
    if (panels < 64) throw std::invalid_argument("quantile_scale_ise: need at least 64 panels");
    if (panels % 2 != 0) ++panels;
    const double lo = 1e-6, hi = 1.0 - 1e-6;
    const double du = (hi - lo) / panels;
    auto sq = [&](double u) {
        const double d = estimate(truth_quantile(u)) - u;
        return d * d;
    };
    double sum = sq(lo) + sq(hi);
    double carry = 0.0;
    for (int i = 1; i < panels; ++i) {
        const double term = (i % 2 == 1 ? 4.0 : 2.0) * sq(lo + i * du);
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum * du / 3.0;
}

} // namespace arscb

#endif
