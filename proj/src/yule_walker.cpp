#include "arscb/yule_walker.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "arscb/errors.hpp"

namespace arscb {

namespace {

constexpr double kConditionLimit = 1e12;
constexpr double kReflectionLimit = 1.0 - 1e-12;
constexpr double kResidualTol = 1e-10;

Eigen::MatrixXd toeplitz(const Eigen::VectorXd& gamma, int p) {
    Eigen::MatrixXd g(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) g(i, j) = gamma[std::abs(i - j)];
    return g;
}

// Levinson-Durbin recursion for the Yule-Walker system. Returns false when
// a reflection coefficient approaches the unit circle and the caller should
// fall back to a dense solve.
bool levinson_durbin(const Eigen::VectorXd& gamma, int p, Eigen::VectorXd& phi) {
    if (gamma[0] <= 0.0) return false;
    phi.resize(p);
    double err = gamma[0];
    Eigen::VectorXd prev(p);
    for (int m = 1; m <= p; ++m) {
        double acc = gamma[m];
        for (int j = 1; j < m; ++j) acc -= phi[j - 1] * gamma[m - j];
        const double k = acc / err;
        if (!(std::abs(k) < kReflectionLimit)) return false;
        prev.head(m - 1) = phi.head(m - 1);
        for (int j = 0; j < m - 1; ++j) phi[j] = prev[j] - k * prev[m - 2 - j];
        phi[m - 1] = k;
        err *= 1.0 - k * k;
        if (!(err > 0.0)) return false;
    }
    return true;
}

} // namespace

AutocovSet autocov(const Series& series, int p) {
    if (p < 1) throw std::invalid_argument("autocov: order p must be >= 1");
    const Eigen::Index n = series.body.size();
    if (series.presample.size() < p)
        throw std::invalid_argument(
            "autocov: presample has " + std::to_string(series.presample.size()) +
            " values but order " + std::to_string(p) + " needs " + std::to_string(p));
    if (n < p + 1)
        throw std::invalid_argument("autocov: body length must be at least p + 1");

    // X_{1-p}, ..., X_0, X_1, ..., X_n contiguously; only the last p
    // pre-sample values enter the sums.
    Eigen::VectorXd x(n + p);
    x.head(p) = series.presample.tail(p);
    x.tail(n) = series.body;

    AutocovSet out;
    out.n = n;
    out.gamma_hat.resize(p + 1);
    for (int l = 0; l <= p; ++l) {
        const Eigen::Index len = n + p - l;
        out.gamma_hat[l] = x.head(len).dot(x.segment(l, len)) / static_cast<double>(n);
    }
    return out;
}

FittedAr fit(const Series& series, int p) {
    AutocovSet acv = autocov(series, p);
    const Eigen::MatrixXd gamma_mat = toeplitz(acv.gamma_hat, p);
    const Eigen::VectorXd rhs = acv.gamma_hat.tail(p);

    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(gamma_mat);
    const double smin = svd.singularValues()(p - 1);
    const double smax = svd.singularValues()(0);
    if (!(smin > 0.0) || smax / smin > kConditionLimit)
        throw DegenerateError("degenerate autocovariance: condition estimate " +
                              std::to_string(smin > 0.0 ? smax / smin : 0.0) +
                              " exceeds 1e12");

    FittedAr out;
    out.order = p;
    const double rhs_norm = rhs.norm();
    bool ok = levinson_durbin(acv.gamma_hat, p, out.phi_hat);
    if (ok && rhs_norm > 0.0)
        ok = (gamma_mat * out.phi_hat - rhs).norm() <= kResidualTol * rhs_norm;
    if (!ok) {
        // Dense solve with one step of iterative refinement.
        const Eigen::PartialPivLU<Eigen::MatrixXd> lu(gamma_mat);
        out.phi_hat = lu.solve(rhs);
        out.phi_hat += lu.solve(rhs - gamma_mat * out.phi_hat);
    }
    out.gamma = std::move(acv);
    return out;
}

ResidualSet residuals(const Series& series, const FittedAr& fit) {
    const int p = fit.order;
    if (series.presample.size() < p)
        throw std::invalid_argument("residuals: fit order exceeds presample length");
    const Eigen::Index n = series.body.size();

    Eigen::VectorXd x(n + p);
    x.head(p) = series.presample.tail(p);
    x.tail(n) = series.body;

    ResidualSet out;
    out.fit = fit;
    out.z_hat.resize(n);
    for (Eigen::Index t = 0; t < n; ++t) {
        const Eigen::Index k = p + t;
        double acc = 0.0;
        for (int r = 1; r <= p; ++r) acc += fit.phi_hat[r - 1] * x[k - r];
        out.z_hat[t] = x[k] - acc;
    }
    return out;
}

} // namespace arscb
