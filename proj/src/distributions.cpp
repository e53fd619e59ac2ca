#include "momentsum/distributions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <utility>

#include "momentsum/errors.hpp"

namespace momentsum {

namespace {

Int binomial(int n, int k)
{
    return factorial(n) / (factorial(k) * factorial(n - k));
}

// Point-mass law symmetric about 0: every atom x with weight w has a
// matching atom -x with the same weight.
bool atoms_symmetric(const std::vector<std::pair<Rat, Rat>>& atoms)
{
    std::map<Rat, Rat> mass;
    for (const auto& [x, w] : atoms)
        mass[x] += w;
    for (const auto& [x, w] : mass) {
        auto mirror = mass.find(-x);
        if (mirror == mass.end() || mirror->second != w)
            return false;
    }
    return true;
}

// Raw moments of a Poisson law satisfy the recurrence
// t_{j+1} = lambda * sum_i C(j,i) t_i with t_0 = 1.
Rat poisson_raw_moment(const Rat& lambda, int k)
{
    std::vector<Rat> t{Rat(1)};
    for (int j = 0; j < k; ++j) {
        Rat next = 0;
        for (int i = 0; i <= j; ++i)
            next += Rat(binomial(j, i)) * t[i];
        t.push_back(lambda * next);
    }
    return t[k];
}

}  // namespace

MomentProvider::MomentProvider(DistFamily family, std::vector<Rat> params)
    : family_(family), params_(std::move(params))
{
    auto render = [this](const std::string& base) {
        name_ = base;
        if (params_.empty())
            return;
        name_ += "(";
        for (std::size_t i = 0; i < params_.size(); ++i) {
            if (i)
                name_ += ",";
            name_ += rat_to_string(params_[i]);
        }
        name_ += ")";
    };

    switch (family_) {
    case DistFamily::Constant:
        render("constant");
        symmetric_ = params_[0] == 0;
        break;
    case DistFamily::Rademacher:
        render("rademacher");
        symmetric_ = true;
        break;
    case DistFamily::Bernoulli:
        if (params_[0] < 0 || params_[0] > 1)
            throw DomainError("bernoulli success probability must lie in [0,1]");
        render("bernoulli");
        symmetric_ = params_[0] == 0;
        break;
    case DistFamily::Uniform:
        if (!(params_[0] < params_[1]))
            throw DomainError("uniform(a,b) requires a < b");
        render("uniform");
        symmetric_ = params_[0] == -params_[1];
        break;
    case DistFamily::Normal:
        render("normal");
        symmetric_ = true;
        break;
    case DistFamily::Exponential:
        if (params_[0] <= 0)
            throw DomainError("exponential rate must be positive");
        render("exponential");
        break;
    case DistFamily::Poisson:
        if (params_[0] <= 0)
            throw DomainError("poisson rate must be positive");
        render("poisson");
        break;
    case DistFamily::TwoPoint:
        if (params_[2] < 0 || params_[2] > 1)
            throw DomainError("twopoint weight must lie in [0,1]");
        render("twopoint");
        symmetric_ = atoms_symmetric(
            {{params_[0], params_[2]}, {params_[1], Rat(1) - params_[2]}});
        break;
    case DistFamily::ExplicitMoments: {
        if (params_.empty())
            throw DomainError("explicit moment list must not be empty");
        render("moments");
        finite_up_to_ = static_cast<int>(params_.size());
        symmetric_ = true;
        for (std::size_t i = 0; i < params_.size(); i += 2)
            if (params_[i] != 0)
                symmetric_ = false;
        break;
    }
    case DistFamily::Cauchy:
        render("cauchy");
        symmetric_ = true;
        finite_up_to_ = 0;
        break;
    }
}

MomentProvider MomentProvider::constant(const Rat& c)
{
    return MomentProvider(DistFamily::Constant, {c});
}

MomentProvider MomentProvider::rademacher()
{
    return MomentProvider(DistFamily::Rademacher, {});
}

MomentProvider MomentProvider::bernoulli(const Rat& q)
{
    return MomentProvider(DistFamily::Bernoulli, {q});
}

MomentProvider MomentProvider::uniform(const Rat& a, const Rat& b)
{
    return MomentProvider(DistFamily::Uniform, {a, b});
}

MomentProvider MomentProvider::standard_normal()
{
    return MomentProvider(DistFamily::Normal, {});
}

MomentProvider MomentProvider::exponential(const Rat& lambda)
{
    return MomentProvider(DistFamily::Exponential, {lambda});
}

MomentProvider MomentProvider::poisson(const Rat& lambda)
{
    return MomentProvider(DistFamily::Poisson, {lambda});
}

MomentProvider MomentProvider::two_point(const Rat& x1, const Rat& x2, const Rat& q)
{
    return MomentProvider(DistFamily::TwoPoint, {x1, x2, q});
}

MomentProvider MomentProvider::explicit_moments(std::vector<Rat> moments)
{
    return MomentProvider(DistFamily::ExplicitMoments, std::move(moments));
}

MomentProvider MomentProvider::cauchy()
{
    return MomentProvider(DistFamily::Cauchy, {});
}

Rat MomentProvider::raw_moment(int k) const
{
    if (k < 1)
        throw DomainError("moment order must be positive");
    if (finite_up_to_ && k > *finite_up_to_)
        throw InfiniteMomentError(name_, k);

    switch (family_) {
    case DistFamily::Constant:
        return pow_rat(params_[0], k);
    case DistFamily::Rademacher:
        return k % 2 == 0 ? Rat(1) : Rat(0);
    case DistFamily::Bernoulli:
        return params_[0];  // X^k = X on {0,1}
    case DistFamily::Uniform: {
        const Rat& a = params_[0];
        const Rat& b = params_[1];
        return (pow_rat(b, k + 1) - pow_rat(a, k + 1)) / (Rat(k + 1) * (b - a));
    }
    case DistFamily::Normal:
        return k % 2 == 0 ? Rat(double_factorial(k - 1)) : Rat(0);
    case DistFamily::Exponential:
        return Rat(factorial(k)) / pow_rat(params_[0], k);
    case DistFamily::Poisson:
        return poisson_raw_moment(params_[0], k);
    case DistFamily::TwoPoint:
        return params_[2] * pow_rat(params_[0], k) +
               (Rat(1) - params_[2]) * pow_rat(params_[1], k);
    case DistFamily::ExplicitMoments:
        return params_[k - 1];
    case DistFamily::Cauchy:
        break;  // unreachable: finite_up_to_ == 0
    }
    throw InfiniteMomentError(name_, k);
}

Sampler::Sampler(const MomentProvider& dist, std::uint64_t seed)
    : dist_(dist), gen_(seed)
{
    if (!dist.samplable())
        throw NotSamplableError(dist.name());
    for (const Rat& param : dist.params())
        params_.push_back(rat_to_double(param));
}

double Sampler::next_uniform()
{
    // 53 random bits shifted into the open interval (0,1); never 0 or 1,
    // so log and tan transforms stay finite.
    std::uint64_t bits = gen_();
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

double Sampler::next()
{
    switch (dist_.family()) {
    case DistFamily::Constant:
        return params_[0];
    case DistFamily::Rademacher:
        return next_uniform() < 0.5 ? -1.0 : 1.0;
    case DistFamily::Bernoulli:
        return next_uniform() < params_[0] ? 1.0 : 0.0;
    case DistFamily::Uniform:
        return params_[0] + (params_[1] - params_[0]) * next_uniform();
    case DistFamily::Normal: {
        if (has_spare_normal_) {
            has_spare_normal_ = false;
            return spare_normal_;
        }
        double u1 = next_uniform();
        double u2 = next_uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * M_PI * u2;
        spare_normal_ = radius * std::sin(angle);
        has_spare_normal_ = true;
        return radius * std::cos(angle);
    }
    case DistFamily::Exponential:
        return -std::log(next_uniform()) / params_[0];
    case DistFamily::Poisson: {
        // Knuth's product method
        double limit = std::exp(-params_[0]);
        int count = 0;
        double product = 1.0;
        do {
            ++count;
            product *= next_uniform();
        } while (product > limit);
        return count - 1;
    }
    case DistFamily::TwoPoint:
        return next_uniform() < params_[2] ? params_[0] : params_[1];
    case DistFamily::ExplicitMoments:
        break;  // unreachable: rejected at construction
    case DistFamily::Cauchy:
        return std::tan(M_PI * (next_uniform() - 0.5));
    }
    throw NotSamplableError(dist_.name());
}

std::vector<double> sample(const MomentProvider& dist, std::uint64_t seed,
                           std::size_t count)
{
    Sampler sampler(dist, seed);
    std::vector<double> values;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        values.push_back(sampler.next());
    return values;
}

MomentAssignment moments_up_to(const MomentProvider& dist, int up_to)
{
    MomentAssignment assignment;
    for (int k = 1; k <= up_to; ++k)
        assignment.set(k, dist.raw_moment(k));
    return assignment;
}

std::vector<MomentProvider> builtin_providers()
{
    return {
        MomentProvider::constant(2),
        MomentProvider::rademacher(),
        MomentProvider::bernoulli(Rat(1, 2)),
        MomentProvider::uniform(-1, 1),
        MomentProvider::standard_normal(),
        MomentProvider::exponential(1),
        MomentProvider::poisson(1),
        MomentProvider::two_point(-1, 2, Rat(1, 3)),
        MomentProvider::explicit_moments({Rat(0), Rat(1), Rat(0), Rat(3)}),
        MomentProvider::cauchy(),
    };
}

namespace {

std::string lowercase_trim(const std::string& s)
{
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos)
        return "";
    std::string out = s.substr(b, e - b + 1);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::vector<Rat> parse_args(const std::string& inside)
{
    std::vector<Rat> args;
    if (lowercase_trim(inside).empty())
        return args;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = inside.find(',', start);
        std::string piece = inside.substr(start, comma - start);
        args.push_back(parse_rational(piece));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return args;
}

void expect_arity(const std::string& name, const std::vector<Rat>& args,
                  std::size_t arity)
{
    if (args.size() != arity)
        throw SpecParseError(name + " expects " + std::to_string(arity) +
                             " parameter(s), got " + std::to_string(args.size()));
}

}  // namespace

MomentProvider parse_distribution(const std::string& spec)
{
    std::string text = spec;
    std::size_t open = text.find('(');
    std::string name;
    std::vector<Rat> args;
    if (open == std::string::npos) {
        name = lowercase_trim(text);
    } else {
        std::size_t close = text.rfind(')');
        if (close == std::string::npos || close < open ||
            lowercase_trim(text.substr(close + 1)) != "")
            throw SpecParseError("malformed distribution spec '" + spec + "'");
        name = lowercase_trim(text.substr(0, open));
        args = parse_args(text.substr(open + 1, close - open - 1));
    }
    if (name.empty())
        throw SpecParseError("empty distribution name in '" + spec + "'");

    if (name == "constant") {
        expect_arity(name, args, 1);
        return MomentProvider::constant(args[0]);
    }
    if (name == "rademacher") {
        expect_arity(name, args, 0);
        return MomentProvider::rademacher();
    }
    if (name == "bernoulli") {
        expect_arity(name, args, 1);
        return MomentProvider::bernoulli(args[0]);
    }
    if (name == "uniform") {
        expect_arity(name, args, 2);
        return MomentProvider::uniform(args[0], args[1]);
    }
    if (name == "normal") {
        expect_arity(name, args, 0);
        return MomentProvider::standard_normal();
    }
    if (name == "exponential") {
        expect_arity(name, args, 1);
        return MomentProvider::exponential(args[0]);
    }
    if (name == "poisson") {
        expect_arity(name, args, 1);
        return MomentProvider::poisson(args[0]);
    }
    if (name == "twopoint") {
        expect_arity(name, args, 3);
        return MomentProvider::two_point(args[0], args[1], args[2]);
    }
    if (name == "moments") {
        if (args.empty())
            throw SpecParseError("moments(...) needs at least one value");
        return MomentProvider::explicit_moments(args);
    }
    if (name == "cauchy") {
        expect_arity(name, args, 0);
        return MomentProvider::cauchy();
    }
    throw UnknownDistributionError(name);
}

}  // namespace momentsum
