#include "arscb/error_law.hpp"

#include <cmath>
#include <stdexcept>

namespace arscb {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

std::uint64_t mix_stream(std::uint64_t base, std::uint64_t word) {
    std::uint64_t x = base + 0x9E3779B97F4A7C15ull * (word + 1);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

Rng::Rng(RngState state) {
    std::uint64_t x = state.seed ^ mix_stream(state.stream, 0x243F6A8885A308D3ull);
    for (auto& s : s_) s = splitmix64(x);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1; // xoshiro forbids all-zero state
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
    return normal_quantile(uniform_open());
}

double Rng::laplace() {
    const double u = uniform_open();
    return u < 0.5 ? std::log(2.0 * u) : -std::log(2.0 * (1.0 - u));
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

// Wichura's algorithm AS 241 (PPND16), accurate to ~1e-16 relative.
double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("normal_quantile: p must lie in (0,1)");
    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                     6.7265770927008700853e4) * r +
                    4.5921953931549871457e4) * r +
                   1.3731693765509461125e4) * r +
                  1.9715909503065514427e3) * r +
                 1.3314166789178437745e2) * r +
                3.3871328727963666080e0) /
               (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                     3.9307895800092710610e4) * r +
                    2.1213794301586595867e4) * r +
                   5.3941960214247511077e3) * r +
                  6.8718700749205790830e2) * r +
                 4.2313330701600911252e1) * r +
                1.0);
    }
    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double value;
    if (r <= 5.0) {
        r -= 1.6;
        value = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                      2.41780725177450611770e-1) * r +
                     1.27045825245236838258e0) * r +
                    3.64784832476320460504e0) * r +
                   5.76949722146069140550e0) * r +
                  4.63033784615654529590e0) * r +
                 1.42343711074968357734e0) /
                (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                      1.51986665636164571966e-2) * r +
                     1.48103976427480074590e-1) * r +
                    6.89767334985100004550e-1) * r +
                   1.67638483018380384940e0) * r +
                  2.05319162663775882187e0) * r +
                 1.0);
    } else {
        r -= 5.0;
        value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                      1.24266094738807843860e-3) * r +
                     2.65321895265761230930e-2) * r +
                    2.96560571828504891230e-1) * r +
                   1.78482653991729133580e0) * r +
                  5.46378491116411436990e0) * r +
                 6.65790464350110377720e0) /
                (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                      1.84631831751005468180e-5) * r +
                     7.86869131145613259100e-4) * r +
                    1.48753612908506148525e-2) * r +
                   1.36929880922735805310e-1) * r +
                  5.99832206555887937690e-1) * r +
                 1.0);
    }
    return q < 0.0 ? -value : value;
}

namespace {

double laplace_cdf(double z) {
    return z < 0.0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
}

double laplace_quantile(double p) {
    return p < 0.5 ? std::log(2.0 * p) : -std::log(2.0 * (1.0 - p));
}

} // namespace

ErrorLaw ErrorLaw::standard_normal() {
    ErrorLaw law;
    law.kind = LawKind::StandardNormal;
    law.cdf = [](double z) { return normal_cdf(z); };
    law.sampler = [](Rng& rng) { return rng.normal(); };
    law.quantile = [](double p) { return normal_quantile(p); };
    return law;
}

ErrorLaw ErrorLaw::standard_double_exponential() {
    ErrorLaw law;
    law.kind = LawKind::StandardDoubleExponential;
    law.cdf = [](double z) { return laplace_cdf(z); };
    law.sampler = [](Rng& rng) { return rng.laplace(); };
    law.quantile = [](double p) { return laplace_quantile(p); };
    return law;
}

ErrorLaw ErrorLaw::custom(std::function<double(double)> cdf,
                          std::function<double(Rng&)> sampler,
                          std::function<double(double)> quantile) {
    ErrorLaw law;
    law.kind = LawKind::Custom;
    law.cdf = std::move(cdf);
    law.sampler = std::move(sampler);
    law.quantile = std::move(quantile);
    return law;
}

Eigen::VectorXd sample_errors(const ErrorLaw& law, Eigen::Index n, RngState state) {
    if (n < 1) throw std::invalid_argument("sample_errors: n must be >= 1");
    Rng rng(state);
    Eigen::VectorXd z(n);
    switch (law.kind) {
        case LawKind::StandardNormal:
            for (Eigen::Index i = 0; i < n; ++i) z[i] = rng.normal();
            break;
        case LawKind::StandardDoubleExponential:
            for (Eigen::Index i = 0; i < n; ++i) z[i] = rng.laplace();
            break;
        case LawKind::Custom:
            if (!law.sampler)
                throw std::invalid_argument("sample_errors: custom law has no sampler");
            for (Eigen::Index i = 0; i < n; ++i) z[i] = law.sampler(rng);
            break;
    }
    return z;
}

double reference_cdf(const ErrorLaw& law, double z) {
    switch (law.kind) {
        case LawKind::StandardNormal:
            return normal_cdf(z);
        case LawKind::StandardDoubleExponential:
            return laplace_cdf(z);
        case LawKind::Custom:
            break;
    }
    if (!law.cdf) throw std::invalid_argument("reference_cdf: custom law has no cdf");
    return law.cdf(z);
}

double reference_quantile(const ErrorLaw& law, double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("reference_quantile: p must lie in (0,1)");
    switch (law.kind) {
        case LawKind::StandardNormal:
            return normal_quantile(p);
        case LawKind::StandardDoubleExponential:
            return laplace_quantile(p);
        case LawKind::Custom:
            break;
    }
    if (law.quantile) return law.quantile(p);
    if (!law.cdf) throw std::invalid_argument("reference_quantile: custom law has no cdf");
    // bisection fallback on an expanding bracket
    double lo = -1.0, hi = 1.0;
    while (law.cdf(lo) > p) lo *= 2.0;
    while (law.cdf(hi) < p) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-12 * (1.0 + std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        (law.cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace arscb
