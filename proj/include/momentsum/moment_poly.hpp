#ifndef MOMENTSUM_MOMENT_POLY_HPP
#define MOMENTSUM_MOMENT_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "momentsum/npoly.hpp"
#include "momentsum/partition.hpp"

namespace momentsum {

// Product of raw-moment symbols, u_k raised to a multiplicity. One
// monomial corresponds to one partition of the expansion order.
class MomentMonomial {
public:
    MomentMonomial() = default;

    static MomentMonomial from_parts(const std::vector<int>& parts);

    // moment index -> multiplicity, highest index first
    const std::map<int, int, std::greater<int>>& exponents() const { return exponents_; }

    // canonical non-increasing part list
    std::vector<int> parts() const;

    int weighted_degree() const;  // sum of index * multiplicity
    int length() const;           // number of factors, counted with multiplicity

    bool operator==(const MomentMonomial& other) const = default;

    // Canonical term order: fewer factors first (so the highest-order
    // moment leads), ties broken by lexicographically larger part list.
    bool operator<(const MomentMonomial& other) const;

private:
    std::map<int, int, std::greater<int>> exponents_;
};

// E(S_n^p) in symbolic form: a sum of moment monomials, each carrying an
// exact polynomial in n.
class MomentPoly {
public:
    explicit MomentPoly(int order);

    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<MomentMonomial, NPoly>& terms() const { return terms_; }

    // Merges into any existing term; drops terms that cancel to zero.
    // Rejects monomials whose weighted degree differs from the order.
    void add_term(const MomentMonomial& monomial, const NPoly& coefficient);

    // Highest power of n across all terms; -1 for the zero expression.
    int degree_in_n() const;

    bool operator==(const MomentPoly& other) const = default;

private:
    int order_;
    std::map<MomentMonomial, NPoly> terms_;
};

enum class ExpansionMode { General, Symmetric };

// The full symbolic moment of a sum of p-th order. Symmetric mode drops
// every term whose partition contains an odd part; for odd p that leaves
// the zero expression.
MomentPoly moment_of_sum(int p, ExpansionMode mode, int order_cap = kDefaultOrderCap);

// Concrete raw-moment values u_k. Decimal inputs convert exactly, so the
// map always holds exact rationals.
class MomentAssignment {
public:
    MomentAssignment() = default;

    // values[0] is u_1, values[1] is u_2, ...
    static MomentAssignment from_list(const std::vector<Rat>& values);
    static MomentAssignment all_equal(int up_to, const Rat& value);

    void set(int index, Rat value);
    bool has(int index) const;
    const Rat& require(int index) const;  // throws MissingMomentError
    Rat mean() const { return require(1); }

    const std::map<int, Rat>& values() const { return values_; }

private:
    std::map<int, Rat> values_;
};

// Exact evaluation at concrete n. Throws MissingMomentError when the
// assignment lacks an index used by the expression.
Rat evaluate(const MomentPoly& expr, long long n, const MomentAssignment& moments);

// Double-precision rendering of the exact value; not exact by nature.
double evaluate_float(const MomentPoly& expr, long long n, const MomentAssignment& moments);

// True iff the two expressions have identical canonical term maps.
bool moments_match(const MomentPoly& a, const MomentPoly& b);

// Numeric regrouping by powers of n: degree m -> sum over terms of
// (coefficient of n^m) * (monomial value at the assignment).
std::map<int, Rat> collect_n_coefficients(const MomentPoly& expr,
                                          const MomentAssignment& moments);

// Canonical JSON form: {"p": p, "terms": [{"parts": [...],
// "n_poly": {"degree": "coefficient"}}]}. Coefficients are decimal
// strings so arbitrary-precision values survive the round trip.
nlohmann::json to_json(const MomentPoly& expr);
MomentPoly moment_poly_from_json(const nlohmann::json& doc);

// Text layout with the shortest products first, e.g.
// "n*u3 + 3*(n^2-n)*u2*u1 + (n^3-3n^2+2n)*u1^3".
std::string render_text(const MomentPoly& expr);

}  // namespace momentsum

#endif  // MOMENTSUM_MOMENT_POLY_HPP
