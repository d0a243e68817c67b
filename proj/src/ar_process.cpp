#include "arscb/ar_process.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace arscb {

namespace {
constexpr double kRootTol = 1e-8;
}

Eigen::VectorXd char_root_moduli(const Eigen::VectorXd& phi) {
    if (phi.size() == 0)
        throw std::invalid_argument("char_root_moduli: order p must be >= 1");
    if (!phi.allFinite())
        throw std::invalid_argument("char_root_moduli: coefficients must be finite");

    Eigen::Index deg = phi.size();
    while (deg > 0 && phi[deg - 1] == 0.0) --deg;
    if (deg == 0) return Eigen::VectorXd(); // polynomial == 1, no roots

    // Roots of 1 - phi_1 z - ... - phi_deg z^deg via the companion matrix
    // of the monic normalization (divide by the leading coefficient
    // -phi_deg). The coefficient of z^j is 1 for j = 0 and -phi_j for
    // j >= 1.
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    const double lead = -phi[deg - 1];
    for (Eigen::Index j = 0; j < deg; ++j) {
        const double coeff = (j == 0) ? 1.0 : -phi[j - 1];
        companion(j, deg - 1) = -coeff / lead;
    }
    for (Eigen::Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;

    Eigen::VectorXd moduli =
        Eigen::EigenSolver<Eigen::MatrixXd>(companion, /*computeEigenvectors=*/false)
            .eigenvalues()
            .cwiseAbs();
    std::sort(moduli.begin(), moduli.end());
    return moduli;
}

bool check_causal(const Eigen::VectorXd& phi) {
    const Eigen::VectorXd moduli = char_root_moduli(phi);
    if (moduli.size() == 0) return true; // all-zero phi: white noise
    return moduli[0] > 1.0 + kRootTol;
}

SimulatedSeries simulate(const ArModel& model, const ErrorLaw& law, Eigen::Index n,
                         RngState rng) {
    if (n < 1) throw std::invalid_argument("simulate: n must be >= 1");
    if (model.sigma <= 0.0) throw std::invalid_argument("simulate: sigma must be > 0");
    if (!check_causal(model.phi))
        throw std::invalid_argument("simulate: model is not causal");

    const Eigen::Index p = model.phi.size();
    const Eigen::Index burn = 500 + 50 * p;
    const Eigen::Index total = burn + p + n;

    Rng gen(rng);
    Eigen::VectorXd x(total);
    Eigen::VectorXd innovations(n);
    for (Eigen::Index t = 0; t < total; ++t) {
        double acc = 0.0;
        for (Eigen::Index r = 1; r <= p; ++r) {
            if (t - r >= 0) acc += model.phi[r - 1] * x[t - r];
        }
        double z;
        switch (law.kind) {
            case LawKind::StandardNormal: z = gen.normal(); break;
            case LawKind::StandardDoubleExponential: z = gen.laplace(); break;
            default:
                if (!law.sampler)
                    throw std::invalid_argument("simulate: custom law has no sampler");
                z = law.sampler(gen);
        }
        x[t] = acc + model.sigma * z;
        // Store the innovation implied by the rounded value of x[t]; this
        // keeps X_t == sum(phi_r X_{t-r}) + Z_t exact in floating point.
        if (t >= burn + p) innovations[t - burn - p] = x[t] - acc;
    }

    SimulatedSeries out;
    out.series.presample = x.segment(burn, p);
    out.series.body = x.tail(n);
    out.innovations = std::move(innovations);
    return out;
}

Eigen::VectorXd ma_coefficients(const ArModel& model, Eigen::Index k) {
    if (k < 1) throw std::invalid_argument("ma_coefficients: k must be >= 1");
    if (!check_causal(model.phi))
        throw std::invalid_argument("ma_coefficients: model is not causal");
    const Eigen::Index p = model.phi.size();
    Eigen::VectorXd psi = Eigen::VectorXd::Zero(k);
    psi[0] = 1.0;
    for (Eigen::Index j = 1; j < k; ++j) {
        double acc = 0.0;
        for (Eigen::Index i = 1; i <= std::min(j, p); ++i)
            acc += model.phi[i - 1] * psi[j - i];
        psi[j] = acc;
    }
    return psi;
}

} // namespace arscb
