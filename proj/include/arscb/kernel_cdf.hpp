#ifndef ARSCB_KERNEL_CDF_HPP
#define ARSCB_KERNEL_CDF_HPP

#include <functional>

#include <Eigen/Core>

namespace arscb {

/// Quartic (biweight) kernel K(u) = 15 (1 - u^2)^2 / 16 on [-1, 1].
double quartic_density(double u);

/// Integrated quartic kernel G(u) = int_{-inf}^u K. Zero below -1, one
/// above 1, (15/16)(u - 2u^3/3 + u^5/5) + 1/2 in between.
double quartic_G(double u);

enum class KernelKind { Quartic, Custom };

/// A symmetric probability-density kernel supported on [-1, 1] together
/// with its analytic antiderivative. Custom kernels must supply both;
/// nothing is integrated numerically at evaluation time.
struct Kernel {
    KernelKind kind = KernelKind::Quartic;
    std::function<double(double)> density;
    std::function<double(double)> integrated;

    static Kernel quartic();
    static Kernel custom(std::function<double(double)> density,
                         std::function<double(double)> integrated);
};

/// Smoothed CDF estimator n^{-1} sum_t G((z - c_t) / h) over centers
/// c_t. Immutable once built; evaluation is O(log n + window).
class SmoothCdf {
  public:
    SmoothCdf() = default;
    SmoothCdf(Eigen::VectorXd centers, double h, Kernel kernel);

    double operator()(double z) const;

    const Eigen::VectorXd& centers() const { return centers_; } // ascending
    double bandwidth() const { return h_; }
    const Kernel& kernel() const { return kernel_; }
    double support_min() const { return centers_[0] - h_; }
    double support_max() const { return centers_[centers_.size() - 1] + h_; }

  private:
    Eigen::VectorXd centers_;
    double h_ = 1.0;
    Kernel kernel_;
};

/// Right-continuous empirical CDF (#points <= z) / n.
class StepCdf {
  public:
    StepCdf() = default;
    explicit StepCdf(Eigen::VectorXd points);

    double operator()(double z) const;

    const Eigen::VectorXd& jump_points() const { return points_; } // ascending

  private:
    Eigen::VectorXd points_;
};

/// Sample quantile by linear interpolation of order statistics at
/// plotting position (k-1)/(n-1) (the common "type 7" rule).
double sample_quantile(const Eigen::VectorXd& x, double p);

/// Bandwidth rule h = IQR * n^{-1/3} with the type-7 sample IQR.
/// Throws DegenerateError when the IQR is zero.
double bandwidth_rule(const Eigen::VectorXd& residuals);

SmoothCdf smooth_cdf(Eigen::VectorXd centers, double h, Kernel kernel = Kernel::quartic());
StepCdf step_cdf(Eigen::VectorXd points);

/// Smallest z with cdf(z) >= alpha, by bisection over the kernel
/// support to interval width 1e-10.
double quantile(const SmoothCdf& cdf, double alpha);

/// Deterministic grid for sup-norm work: the sorted union of the
/// centers, centers +- h, and 512 equispaced points spanning
/// [min - 3h, max + 3h].
Eigen::VectorXd evaluation_grid(const SmoothCdf& cdf);

} // namespace arscb

#endif
