#ifndef APART_ENUMERATE_HPP
#define APART_ENUMERATE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <apart/core.hpp>
#include <apart/part_set.hpp>
#include <apart/partition.hpp>

namespace apart
{

inline constexpr std::size_t default_enumeration_cap = 1'000'000;

// All partitions of n into allowed parts (each part <= max_part when given),
// in decreasing lexicographic order.
inline std::vector<Partition> enumerate_partitions(const PartSet &set, Weight n,
                                                   std::optional<Weight> max_part = std::nullopt,
                                                   std::size_t cap = default_enumeration_cap)
{
    // Parts largest first so the DFS emits in decreasing lexicographic order.
    auto parts = set.parts_up_to(max_part ? std::min(n, *max_part) : n);
    std::vector<Weight> desc(parts.rbegin(), parts.rend());

    std::vector<Partition> out;
    std::vector<Weight> current;

    auto rec = [&](auto &&self, Weight remaining, std::size_t first) -> void {
        if (remaining == 0) {
            if (out.size() >= cap) {
                throw enumeration_overflow("more than " + std::to_string(cap) + " partitions of " + std::to_string(n)
                                           + " into " + set.spec());
            }
            out.emplace_back(current);
            return;
        }
        for (std::size_t k = first; k < desc.size(); ++k) {
            if (desc[k] > remaining) {
                continue;
            }
            current.push_back(desc[k]);
            self(self, remaining - desc[k], k);
            current.pop_back();
        }
    };
    rec(rec, n, 0);
    return out;
}

} // namespace apart

#endif
