#ifndef MOMENTSUM_DISTRIBUTIONS_HPP
#define MOMENTSUM_DISTRIBUTIONS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "momentsum/moment_poly.hpp"
#include "momentsum/numeric.hpp"

namespace momentsum {

enum class DistFamily {
    Constant,
    Rademacher,
    Bernoulli,
    Uniform,
    Normal,
    Exponential,
    Poisson,
    TwoPoint,
    ExplicitMoments,
    Cauchy,
};

// A named distribution exposing exact raw moments and, where meaningful,
// a seeded sampler. Immutable after construction.
class MomentProvider {
public:
    static MomentProvider constant(const Rat& c);
    static MomentProvider rademacher();
    static MomentProvider bernoulli(const Rat& q);
    static MomentProvider uniform(const Rat& a, const Rat& b);
    static MomentProvider standard_normal();
    static MomentProvider exponential(const Rat& lambda);
    static MomentProvider poisson(const Rat& lambda);
    static MomentProvider two_point(const Rat& x1, const Rat& x2, const Rat& q);
    static MomentProvider explicit_moments(std::vector<Rat> moments);  // u1, u2, ...
    static MomentProvider cauchy();

    const std::string& name() const { return name_; }
    DistFamily family() const { return family_; }
    const std::vector<Rat>& params() const { return params_; }
    bool symmetric_about_zero() const { return symmetric_; }

    // Largest finite moment order; nullopt when every moment is finite.
    std::optional<int> finite_up_to() const { return finite_up_to_; }

    bool samplable() const { return family_ != DistFamily::ExplicitMoments; }

    // Exact E(X^k) for k >= 1; throws InfiniteMomentError past finite_up_to.
    Rat raw_moment(int k) const;

private:
    MomentProvider(DistFamily family, std::vector<Rat> params);

    DistFamily family_;
    std::vector<Rat> params_;
    std::string name_;
    bool symmetric_ = false;
    std::optional<int> finite_up_to_;

    friend class Sampler;
};

// Deterministic sample stream: one mt19937_64 per stream, uniforms mapped
// through the inverse transforms documented in the source. A fixed seed
// reproduces the stream bit for bit on a given build.
class Sampler {
public:
    Sampler(const MomentProvider& dist, std::uint64_t seed);  // throws NotSamplableError

    double next();

private:
    double next_uniform();  // strictly inside (0, 1)

    MomentProvider dist_;
    std::vector<double> params_;  // double renderings, fixed at construction
    std::mt19937_64 gen_;
    double spare_normal_ = 0.0;
    bool has_spare_normal_ = false;
};

// Convenience wrapper over Sampler.
std::vector<double> sample(const MomentProvider& dist, std::uint64_t seed,
                           std::size_t count);

// u_1..u_up_to as an assignment; throws InfiniteMomentError when the
// provider cannot supply the full range.
MomentAssignment moments_up_to(const MomentProvider& dist, int up_to);

// Representative instance of every registered family.
std::vector<MomentProvider> builtin_providers();

// Mini-syntax "name(param,...)" with rationals as "a/b" or decimals,
// e.g. "uniform(-1,1)", "bernoulli(1/2)", "moments(0,1,0,3)".
MomentProvider parse_distribution(const std::string& spec);

}  // namespace momentsum

#endif  // MOMENTSUM_DISTRIBUTIONS_HPP
