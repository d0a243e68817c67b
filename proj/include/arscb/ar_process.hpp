#ifndef ARSCB_AR_PROCESS_HPP
#define ARSCB_AR_PROCESS_HPP

#include <Eigen/Core>

#include "arscb/error_law.hpp"

namespace arscb {

/// AR(p) model X_t = phi_1 X_{t-1} + ... + phi_p X_{t-p} + Z_t with
/// innovation scale sigma.
struct ArModel {
    Eigen::VectorXd phi;
    double sigma = 1.0;

    int order() const { return static_cast<int>(phi.size()); }
};

/// A realization split into the p pre-sample values X_{1-p},...,X_0 and
/// the body X_1,...,X_n.
struct Series {
    Eigen::VectorXd presample;
    Eigen::VectorXd body;

    Eigen::Index n() const { return body.size(); }
};

/// A simulated realization together with the innovations Z_1,...,Z_n
/// that drive the body. The innovations are stored as X_t minus the
/// autoregressive part, so refitting with the true coefficients
/// recovers them bit for bit.
struct SimulatedSeries {
    Series series;
    Eigen::VectorXd innovations;
};

/// Moduli of the roots of 1 - phi_1 z - ... - phi_p z^p, ascending.
/// Trailing zero coefficients are trimmed; an all-zero phi has no roots
/// and yields an empty vector.
Eigen::VectorXd char_root_moduli(const Eigen::VectorXd& phi);

/// True iff every root of the characteristic polynomial lies strictly
/// outside the closed unit disk (min modulus > 1 + 1e-8).
bool check_causal(const Eigen::VectorXd& phi);

/// Simulates n + p values of a causal AR(p) after discarding a burn-in
/// of 500 + 50 p draws started from zero. Throws for non-causal models.
SimulatedSeries simulate(const ArModel& model, const ErrorLaw& law, Eigen::Index n,
                         RngState rng);

/// First k coefficients of the causal moving-average expansion
/// X_t = sum_j psi_j Z_{t-j}: psi_0 = 1,
/// psi_j = sum_{i=1}^{min(j,p)} phi_i psi_{j-i}.
Eigen::VectorXd ma_coefficients(const ArModel& model, Eigen::Index k);

} // namespace arscb

#endif
