#ifndef MOMENTSUM_VERIFY_HPP
#define MOMENTSUM_VERIFY_HPP

#include <cstdint>
#include <vector>

#include "momentsum/numeric.hpp"
#include "momentsum/oracle.hpp"

namespace momentsum {

struct VerifyOptions {
    int p_max = 6;
    int n_max = 5;
    int trials = 50;
    std::uint64_t seed = 20240901;
    long long tuple_budget = kDefaultTupleBudget;

    // Added to every symbolic value; nonzero only in tests that need the
    // failure path to fire.
    Rat fault_offset = 0;
};

struct VerifyFailure {
    int p = 0;
    int n = 0;
    int trial = 0;
    std::vector<Rat> moments;  // u1..u_p used in the failing check
    Rat symbolic;
    Rat brute_force;
};

struct VerifyReport {
    long long checks = 0;
    std::vector<VerifyFailure> failures;
    bool passed() const { return failures.empty(); }
};

// Symbolic-vs-brute-force equality over the (p, n) grid with freshly
// randomized rational moment assignments per cell and trial.
// Deterministic for a fixed seed.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace momentsum

#endif  // MOMENTSUM_VERIFY_HPP
