#ifndef ARSCB_ERROR_LAW_HPP
#define ARSCB_ERROR_LAW_HPP

#include <cstdint>
#include <functional>

#include <Eigen/Core>

namespace arscb {

/// Seed/stream pair identifying a reproducible random sequence.
///
/// Identical (seed, stream) values reproduce identical draws on every
/// platform and under any thread count; distinct streams are
/// statistically independent.
struct RngState {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/// Derives a child stream id by mixing words into the parent state.
/// Used to give each Monte Carlo replication its own substream.
std::uint64_t mix_stream(std::uint64_t base, std::uint64_t word);

/// Deterministic 64-bit generator (xoshiro256++ seeded by SplitMix64
/// hashes of the RngState). Value type, cheap to copy around worker
/// threads, bit-identical on every platform.
class Rng {
  public:
    explicit Rng(RngState state);

    std::uint64_t next_u64();

    /// Uniform on the open interval (0, 1); never returns an endpoint,
    /// so inverse-CDF transforms stay finite.
    double uniform_open();

    double normal();   // standard normal via inverse CDF
    double laplace();  // standard Laplace via inverse CDF

  private:
    std::uint64_t s_[4];
};

enum class LawKind { StandardNormal, StandardDoubleExponential, Custom };

/// An innovation distribution: a CDF and a matching sampler.
///
/// The two built-in laws are the standard normal and the standard
/// double exponential (Laplace, variance 2). Custom laws supply their
/// own cdf/sampler; tail conditions are the caller's responsibility.
struct ErrorLaw {
    LawKind kind = LawKind::StandardNormal;
    std::function<double(double)> cdf;      // required for Custom
    std::function<double(Rng&)> sampler;    // required for Custom
    std::function<double(double)> quantile; // optional; bisection fallback

    static ErrorLaw standard_normal();
    static ErrorLaw standard_double_exponential();
    static ErrorLaw custom(std::function<double(double)> cdf,
                           std::function<double(Rng&)> sampler,
                           std::function<double(double)> quantile = {});
};

/// n i.i.d. draws from `law`, fully determined by `state`.
Eigen::VectorXd sample_errors(const ErrorLaw& law, Eigen::Index n, RngState state);

/// Exact CDF of a built-in law (or the Custom law's own cdf).
/// Throws std::invalid_argument for a Custom law without one.
double reference_cdf(const ErrorLaw& law, double z);

/// Inverse CDF. Closed form for built-ins; for Custom laws uses the
/// supplied quantile or bisects the cdf.
double reference_quantile(const ErrorLaw& law, double p);

/// Standard normal CDF and quantile (Wichura's PPND16 for the inverse).
double normal_cdf(double z);
double normal_quantile(double p);

} // namespace arscb

#endif
