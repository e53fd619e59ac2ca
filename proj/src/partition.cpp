#include "momentsum/partition.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "momentsum/errors.hpp"

namespace momentsum {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw DomainError("partition must have at least one part");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int part : parts_) {
        if (part < 1)
            throw DomainError("partition parts must be positive");
        order_ += part;
    }
}

bool Partition::has_odd_part() const
{
    return std::any_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 != 0; });
}

std::vector<Partition> enumerate_partitions(int p, int order_cap)
{
    if (p < 1)
        throw DomainError("partition order must be positive");
    if (p > order_cap)
        throw DomainError("partition order " + std::to_string(p) +
                          " exceeds cap " + std::to_string(order_cap));

    std::vector<Partition> result;
    std::vector<int> current;
    // Largest admissible first part descends, so output is in decreasing
    // lexicographic order.
    std::function<void(int, int)> extend = [&](int remaining, int max_part) {
        if (remaining == 0) {
            result.emplace_back(current);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            current.push_back(k);
            extend(remaining - k, k);
            current.pop_back();
        }
    };
    extend(p, p);
    return result;
}

MultiplicityProfile multiplicity_profile(const Partition& part)
{
    MultiplicityProfile profile;
    const std::vector<int>& parts = part.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == 0 || parts[i] != parts[i - 1]) {
            profile.multiplicities.push_back(1);
            ++profile.distinct;
        } else {
            ++profile.multiplicities.back();
        }
    }
    return profile;
}

NPoly falling_factorial(int m)
{
    if (m < 0)
        throw DomainError("falling factorial of negative length");
    NPoly product = NPoly::constant(1);
    for (int i = 0; i < m; ++i)
        product = product * (NPoly::variable() - NPoly::constant(i));
    return product;
}

NPoly partition_coefficient(const Partition& part)
{
    // multinomial p! / (p_1! ... p_m!), exact in big integers
    Int multinomial = factorial(part.order());
    for (int p_k : part.parts())
        multinomial /= factorial(p_k);

    NPoly scaled = falling_factorial(part.length()) * multinomial;

    // permutations among equal-size groups; divides evenly because the
    // coefficient counts a finite set
    Int repeats = 1;
    for (int l : multiplicity_profile(part).multiplicities)
        repeats *= factorial(l);
    return scaled.divided_exact(repeats);
}

}  // namespace momentsum
