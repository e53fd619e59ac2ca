#ifndef MOMENTSUM_PARTITION_HPP
#define MOMENTSUM_PARTITION_HPP

#include <vector>

#include "momentsum/npoly.hpp"

namespace momentsum {

// Partition counts grow sub-exponentially but term coefficients grow fast;
// the cap keeps resource use predictable. Callers may raise it explicitly.
inline constexpr int kDefaultOrderCap = 30;

// A partition of a positive integer: parts stored in canonical
// non-increasing order. Indexes one product term of the moment expansion.
class Partition {
public:
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int order() const { return order_; }   // sum of the parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool has_odd_part() const;

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

private:
    std::vector<int> parts_;
    int order_ = 0;
};

// h distinct part values and their multiplicities l_1..l_h, listed in
// order of first appearance in the canonical part list.
struct MultiplicityProfile {
    int distinct = 0;
    std::vector<int> multiplicities;
};

// All partitions of p, each exactly once, in decreasing lexicographic
// order of the canonical part list.
std::vector<Partition> enumerate_partitions(int p, int order_cap = kDefaultOrderCap);

MultiplicityProfile multiplicity_profile(const Partition& part);

// n(n-1)...(n-m+1) expanded; m = 0 gives the constant 1.
NPoly falling_factorial(int m);

// Exact polynomial coefficient of the expansion term indexed by `part`:
// the number of ways to realize that term from distinct summand choices.
// Always has integer coefficients; the internal division guard throws
// std::logic_error if that is ever violated.
NPoly partition_coefficient(const Partition& part);

}  // namespace momentsum

#endif  // MOMENTSUM_PARTITION_HPP
