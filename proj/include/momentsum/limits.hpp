#ifndef MOMENTSUM_LIMITS_HPP
#define MOMENTSUM_LIMITS_HPP

#include <map>

#include <nlohmann/json_fwd.hpp>

#include "momentsum/moment_poly.hpp"
#include "momentsum/numeric.hpp"

namespace momentsum {

// A normalized moment of the sum written as its limit plus an exact,
// finite expansion in 1/n. Evaluating the expansion at concrete n
// reproduces the directly computed normalized moment exactly.
struct CorrectionExpansion {
    int p = 0;
    Rat limit_term;
    std::map<int, Rat> inv_n_coefficients;  // j >= 1 -> coefficient of n^-j; no zeros

    // limit + sum of coefficients * n^-j
    Rat value_at(long long n) const;
    // the correction alone
    Rat correction_at(long long n) const;
};

nlohmann::json to_json(const CorrectionExpansion& expansion);

// (p-1)!! for even p, 0 for odd p, 1 for p = 0: the raw moments of a
// standard normal variable.
Int normal_moment(int p);

// E(S_n^p) / (n^{p/2} u2^{p/2}) - (p-1)!! as an exact 1/n expansion.
// Requires even p, all odd moments zero, and u2 > 0. Powers of the
// standard deviation enter only as u2^{p/2}, keeping arithmetic rational.
CorrectionExpansion clt_correction(int p, const MomentAssignment& moments);

// E(S_n^p) / n^p - u1^p as an exact 1/n expansion.
CorrectionExpansion lln_correction(int p, const MomentAssignment& moments);

// p-th moment of the unit-step law concentrated at mu.
Rat step_moment(const Rat& mu, int p);

// Markov bound on P(|S_n^p/n^p - mu^p| > eps):
// (E(S_n^{2p})/n^{2p} + mu^{2p} - 2 mu^p E(S_n^p)/n^p) / eps^2, exact.
Rat weak_law_bound(int p, const MomentAssignment& moments, long long n,
                   const Rat& epsilon);

// Symbolic combination of even-moment monomials with integer coefficients.
using MomentCombo = std::map<MomentMonomial, Int>;

// Decomposition of the symmetric moment of order 2p by powers of n:
// degree m -> symbolic coefficient c_m. The maximum degree is always p,
// which is what makes the even moments of S_n/n summable.
std::map<int, MomentCombo> strong_law_coefficients(int p);

// max over m of the numeric value of c_m at a concrete assignment.
Rat strong_law_constant(int p, const MomentAssignment& moments);

}  // namespace momentsum

#endif  // MOMENTSUM_LIMITS_HPP
