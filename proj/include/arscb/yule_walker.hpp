#ifndef ARSCB_YULE_WALKER_HPP
#define ARSCB_YULE_WALKER_HPP

#include <Eigen/Core>

#include "arscb/ar_process.hpp"

namespace arscb {

/// Sample autocovariances gamma(0..p) computed as
/// gamma(l) = n^{-1} sum_{i=1-p}^{n-l} X_i X_{i+l} with the body length
/// n as the divisor. The pre-sample enters the sums but not the divisor.
struct AutocovSet {
    Eigen::VectorXd gamma_hat; // gamma(0), ..., gamma(p)
    Eigen::Index n = 0;        // divisor
};

/// Yule-Walker fit: phi_hat solves the p x p symmetric Toeplitz system
/// built from gamma_hat.
struct FittedAr {
    Eigen::VectorXd phi_hat;
    AutocovSet gamma;
    int order = 0;
};

/// Residuals z_hat[t] = X_t - sum_r phi_hat[r] X_{t-r}, t = 1..n.
struct ResidualSet {
    Eigen::VectorXd z_hat;
    FittedAr fit;
};

AutocovSet autocov(const Series& series, int p);

/// Solves the Yule-Walker system by the Levinson-Durbin recursion with
/// a dense fallback. Throws DegenerateError when the autocovariance
/// matrix is numerically singular (condition estimate above 1e12).
FittedAr fit(const Series& series, int p);

ResidualSet residuals(const Series& series, const FittedAr& fit);

} // namespace arscb

#endif
