#include "momentsum/moment_poly.hpp"

#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "momentsum/errors.hpp"

namespace momentsum {

MomentMonomial MomentMonomial::from_parts(const std::vector<int>& parts)
{
    MomentMonomial monomial;
    for (int part : parts) {
        if (part < 1)
            throw DomainError("moment index must be positive");
        ++monomial.exponents_[part];
    }
    return monomial;
}

std::vector<int> MomentMonomial::parts() const
{
    std::vector<int> out;
    for (const auto& [index, mult] : exponents_)
        out.insert(out.end(), mult, index);
    return out;
}

int MomentMonomial::weighted_degree() const
{
    int total = 0;
    for (const auto& [index, mult] : exponents_)
        total += index * mult;
    return total;
}

int MomentMonomial::length() const
{
    int total = 0;
    for (const auto& [index, mult] : exponents_)
        total += mult;
    return total;
}

bool MomentMonomial::operator<(const MomentMonomial& other) const
{
    int la = length();
    int lb = other.length();
    if (la != lb)
        return la < lb;
    return parts() > other.parts();
}

MomentPoly::MomentPoly(int order) : order_(order)
{
    if (order < 1)
        throw DomainError("moment order must be positive");
}

void MomentPoly::add_term(const MomentMonomial& monomial, const NPoly& coefficient)
{
    if (monomial.weighted_degree() != order_)
        throw DomainError("monomial weight " + std::to_string(monomial.weighted_degree()) +
                          " does not match expression order " + std::to_string(order_));
    if (coefficient.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(monomial, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

int MomentPoly::degree_in_n() const
{
    int deg = -1;
    for (const auto& [monomial, npoly] : terms_)
        deg = std::max(deg, npoly.degree());
    return deg;
}

MomentPoly moment_of_sum(int p, ExpansionMode mode, int order_cap)
{
    MomentPoly expr(p);
    for (const Partition& part : enumerate_partitions(p, order_cap)) {
        if (mode == ExpansionMode::Symmetric && part.has_odd_part())
            continue;
        expr.add_term(MomentMonomial::from_parts(part.parts()), partition_coefficient(part));
    }
    return expr;
}

MomentAssignment MomentAssignment::from_list(const std::vector<Rat>& values)
{
    MomentAssignment assignment;
    for (std::size_t i = 0; i < values.size(); ++i)
        assignment.values_[static_cast<int>(i) + 1] = values[i];
    return assignment;
}

MomentAssignment MomentAssignment::all_equal(int up_to, const Rat& value)
{
    MomentAssignment assignment;
    for (int k = 1; k <= up_to; ++k)
        assignment.values_[k] = value;
    return assignment;
}

void MomentAssignment::set(int index, Rat value)
{
    if (index < 1)
        throw DomainError("moment index must be positive");
    values_[index] = std::move(value);
}

bool MomentAssignment::has(int index) const
{
    return values_.count(index) != 0;
}

const Rat& MomentAssignment::require(int index) const
{
    auto it = values_.find(index);
    if (it == values_.end())
        throw MissingMomentError(index);
    return it->second;
}

namespace {

Rat monomial_value(const MomentMonomial& monomial, const MomentAssignment& moments)
{
    Rat product = 1;
    for (const auto& [index, mult] : monomial.exponents())
        product *= pow_rat(moments.require(index), mult);
    return product;
}

}  // namespace

Rat evaluate(const MomentPoly& expr, long long n, const MomentAssignment& moments)
{
    if (n < 1)
        throw DomainError("n must be positive");
    Rat total = 0;
    Int n_value(n);
    for (const auto& [monomial, npoly] : expr.terms())
        total += Rat(npoly.evaluate(n_value)) * monomial_value(monomial, moments);
    return total;
}

double evaluate_float(const MomentPoly& expr, long long n, const MomentAssignment& moments)
{
    return rat_to_double(evaluate(expr, n, moments));
}

bool moments_match(const MomentPoly& a, const MomentPoly& b)
{
    return a == b;
}

std::map<int, Rat> collect_n_coefficients(const MomentPoly& expr,
                                          const MomentAssignment& moments)
{
    std::map<int, Rat> by_degree;
    for (const auto& [monomial, npoly] : expr.terms()) {
        Rat value = monomial_value(monomial, moments);
        for (const auto& [deg, coef] : npoly.coefficients()) {
            Rat& slot = by_degree[deg];
            slot += Rat(coef) * value;
            if (slot == 0)
                by_degree.erase(deg);
        }
    }
    return by_degree;
}

nlohmann::json to_json(const MomentPoly& expr)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [monomial, npoly] : expr.terms()) {
        nlohmann::json n_poly = nlohmann::json::object();
        for (const auto& [deg, coef] : npoly.coefficients())
            n_poly[std::to_string(deg)] = coef.str();
        terms.push_back({{"parts", monomial.parts()}, {"n_poly", n_poly}});
    }
    return {{"p", expr.order()}, {"terms", terms}};
}

MomentPoly moment_poly_from_json(const nlohmann::json& doc)
{
    MomentPoly expr(doc.at("p").get<int>());
    for (const auto& term : doc.at("terms")) {
        std::vector<int> parts = term.at("parts").get<std::vector<int>>();
        std::map<int, Int> coefficients;
        for (const auto& [key, value] : term.at("n_poly").items())
            coefficients[std::stoi(key)] = Int(value.get<std::string>());
        expr.add_term(MomentMonomial::from_parts(parts),
                      NPoly::from_coefficients(std::move(coefficients)));
    }
    return expr;
}

namespace {

// "3n^2", "-3n^2", "n", "7": one monomial in n, juxtaposed coefficient.
std::string render_n_monomial(const Int& coef, int deg)
{
    std::string out;
    if (deg == 0)
        return coef.str();
    if (coef == -1)
        out = "-";
    else if (coef != 1)
        out = coef.str();
    out += "n";
    if (deg > 1)
        out += "^" + std::to_string(deg);
    return out;
}

// Factored rendering of a term's n-polynomial, e.g. "3*(n^2-n)" or "n^3".
std::string render_npoly_factor(const NPoly& npoly)
{
    const auto& coefs = npoly.coefficients();
    if (coefs.size() == 1) {
        const auto& [deg, coef] = *coefs.begin();
        return render_n_monomial(coef, deg);
    }
    Int g = npoly.content();
    NPoly inner = npoly.divided_exact(g);
    std::string body;
    for (auto it = inner.coefficients().rbegin(); it != inner.coefficients().rend(); ++it) {
        std::string piece = render_n_monomial(it->second, it->first);
        if (!body.empty() && piece[0] != '-')
            body += "+";
        body += piece;
    }
    std::string out;
    if (g != 1)
        out = g.str() + "*";
    return out + "(" + body + ")";
}

std::string render_monomial(const MomentMonomial& monomial)
{
    std::string out;
    for (const auto& [index, mult] : monomial.exponents()) {
        if (!out.empty())
            out += "*";
        out += "u" + std::to_string(index);
        if (mult > 1)
            out += "^" + std::to_string(mult);
    }
    return out;
}

}  // namespace

std::string render_text(const MomentPoly& expr)
{
    if (expr.is_zero())
        return "0";
    std::string out;
    for (const auto& [monomial, npoly] : expr.terms()) {
        if (!out.empty())
            out += " + ";
        out += render_npoly_factor(npoly) + "*" + render_monomial(monomial);
    }
    return out;
}

}  // namespace momentsum
