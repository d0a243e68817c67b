#ifndef ARSCB_KOLMOGOROV_HPP
#define ARSCB_KOLMOGOROV_HPP

#include <functional>

#include <Eigen/Core>

#include "arscb/kernel_cdf.hpp"

namespace arscb {

/// Kolmogorov limit distribution
/// L(Q) = 1 - 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 Q^2), Q > 0.
/// For Q < 0.2 the theta-function dual form
/// sqrt(2 pi)/Q sum_{j>=1} exp(-(2j-1)^2 pi^2 / (8 Q^2)) is used, which
/// converges fast exactly where the alternating series cancels badly.
double kolmogorov_cdf(double q);

/// Inverse of L, solved by bisection on [0.01, 5] to width 1e-10.
double kolmogorov_quantile(double p);

/// Simultaneous confidence band: the smooth estimator plus/minus the
/// Kolmogorov halfwidth L_{1-alpha}/sqrt(n), clamped to [0, 1].
struct Band {
    SmoothCdf center;
    double halfwidth = 0.0;
    double level = 0.0; // 1 - alpha

    double lower(double z) const;
    double upper(double z) const;
};

/// Builds the band for a smooth CDF estimated from n values. Warns on
/// stderr for n < 50, where the asymptotic constants are not tabulated.
Band build_band(SmoothCdf center, Eigen::Index n, double alpha);

/// True iff lower(z) <= truth(z) <= upper(z) at every grid point.
bool covers(const Band& band, const std::function<double(double)>& truth,
            const Eigen::VectorXd& grid);

/// Grid for coverage checks: the band's evaluation grid joined with 201
/// equispaced quantiles (levels k/202) of the true law.
Eigen::VectorXd coverage_grid(const SmoothCdf& center,
                              const std::function<double(double)>& truth_quantile);

} // namespace arscb

#endif
