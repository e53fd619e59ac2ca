#include "momentsum/limits.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "momentsum/errors.hpp"

namespace momentsum {

Rat CorrectionExpansion::value_at(long long n) const
{
    return limit_term + correction_at(n);
}

Rat CorrectionExpansion::correction_at(long long n) const
{
    if (n < 1)
        throw DomainError("n must be positive");
    Rat total = 0;
    for (const auto& [j, coefficient] : inv_n_coefficients)
        total += coefficient / Rat(pow_int(Int(n), j));
    return total;
}

nlohmann::json to_json(const CorrectionExpansion& expansion)
{
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [j, coefficient] : expansion.inv_n_coefficients)
        terms[std::to_string(j)] = rat_to_string(coefficient);
    return {{"p", expansion.p},
            {"limit", rat_to_string(expansion.limit_term)},
            {"terms", terms}};
}

Int normal_moment(int p)
{
    if (p < 0)
        throw DomainError("moment order must be non-negative");
    if (p % 2 != 0)
        return 0;
    return double_factorial(p - 1);
}

CorrectionExpansion clt_correction(int p, const MomentAssignment& moments)
{
    if (p < 2 || p % 2 != 0)
        throw DomainError("clt correction requires even p >= 2");
    for (int k = 1; k <= p; k += 2)
        if (moments.require(k) != 0)
            throw AsymmetryError(k);
    const Rat& u2 = moments.require(2);
    if (u2 == 0)
        throw ZeroVarianceError();

    int half = p / 2;
    Rat sigma_p = pow_rat(u2, half);
    std::map<int, Rat> by_degree =
        collect_n_coefficients(moment_of_sum(p, ExpansionMode::Symmetric), moments);

    CorrectionExpansion expansion;
    expansion.p = p;
    expansion.limit_term = Rat(normal_moment(p));
    for (const auto& [m, c_m] : by_degree) {
        Rat normalized = c_m / sigma_p;
        if (m == half) {
            if (normalized != expansion.limit_term)
                throw std::logic_error("leading coefficient does not match the normal moment");
            continue;
        }
        if (normalized != 0)
            expansion.inv_n_coefficients[half - m] = normalized;
    }
    return expansion;
}

CorrectionExpansion lln_correction(int p, const MomentAssignment& moments)
{
    if (p < 1)
        throw DomainError("moment order must be positive");
    std::map<int, Rat> by_degree =
        collect_n_coefficients(moment_of_sum(p, ExpansionMode::General), moments);

    CorrectionExpansion expansion;
    expansion.p = p;
    expansion.limit_term = pow_rat(moments.require(1), p);
    for (const auto& [m, c_m] : by_degree) {
        if (m == p) {
            if (c_m != expansion.limit_term)
                throw std::logic_error("leading coefficient does not match the mean power");
            continue;
        }
        if (c_m != 0)
            expansion.inv_n_coefficients[p - m] = c_m;
    }
    return expansion;
}

Rat step_moment(const Rat& mu, int p)
{
    if (p < 1)
        throw DomainError("moment order must be positive");
    return pow_rat(mu, p);
}

Rat weak_law_bound(int p, const MomentAssignment& moments, long long n,
                   const Rat& epsilon)
{
    if (p < 1)
        throw DomainError("moment order must be positive");
    if (epsilon <= 0)
        throw DomainError("epsilon must be positive");
    Rat mu_p = pow_rat(moments.require(1), p);
    Rat mean_p = evaluate(moment_of_sum(p, ExpansionMode::General), n, moments) /
                 Rat(pow_int(Int(n), p));
    Rat mean_2p = evaluate(moment_of_sum(2 * p, ExpansionMode::General), n, moments) /
                  Rat(pow_int(Int(n), 2 * p));
    Rat second_moment = mean_2p + mu_p * mu_p - 2 * mu_p * mean_p;
    return second_moment / (epsilon * epsilon);
}

std::map<int, MomentCombo> strong_law_coefficients(int p)
{
    if (p < 1)
        throw DomainError("moment order must be positive");
    MomentPoly expr = moment_of_sum(2 * p, ExpansionMode::Symmetric);
    std::map<int, MomentCombo> by_degree;
    for (const auto& [monomial, npoly] : expr.terms()) {
        for (const auto& [deg, coef] : npoly.coefficients()) {
            Int& slot = by_degree[deg][monomial];
            slot += coef;
            if (slot == 0) {
                by_degree[deg].erase(monomial);
                if (by_degree[deg].empty())
                    by_degree.erase(deg);
            }
        }
    }
    if (by_degree.empty() || by_degree.rbegin()->first != p)
        throw std::logic_error("symmetric moment of order 2p must have degree p in n");
    return by_degree;
}

Rat strong_law_constant(int p, const MomentAssignment& moments)
{
    Rat best;
    bool first = true;
    for (const auto& [degree, combo] : strong_law_coefficients(p)) {
        Rat value = 0;
        for (const auto& [monomial, coef] : combo) {
            Rat product = 1;
            for (const auto& [index, mult] : monomial.exponents())
                product *= pow_rat(moments.require(index), mult);
            value += Rat(coef) * product;
        }
        if (first || value > best) {
            best = value;
            first = false;
        }
    }
    return best;
}

}  // namespace momentsum
