#ifndef APART_COUNT_TABLE_HPP
#define APART_COUNT_TABLE_HPP

#include <ostream>
#include <string>
#include <vector>

#include <apart/core.hpp>
#include <apart/part_set.hpp>

namespace apart
{

// p_A(0..bound) for one part set (with its restriction, if any).
class CountTable
{
public:
    CountTable(PartSet set, Weight bound) : set_(std::move(set)), bound_(bound), counts_(bound + 1)
    {
        counts_[0] = 1;
        // Coin-change order: one pass per part, so each multiset is counted once.
        for (Weight a : set_.parts_up_to(bound_)) {
            for (Weight n = a; n <= bound_; ++n) {
                counts_[n] += counts_[n - a];
            }
        }
    }

    const PartSet &set() const noexcept
    {
        return set_;
    }
    Weight bound() const noexcept
    {
        return bound_;
    }
    const std::optional<Weight> &restriction() const noexcept
    {
        return set_.excluded();
    }
    const std::vector<BigInt> &counts() const noexcept
    {
        return counts_;
    }

    const BigInt &at(Weight n) const
    {
        if (n > bound_) {
            throw bound_error("count table for " + set_.spec() + " covers 0.." + std::to_string(bound_)
                              + ", requested " + std::to_string(n));
        }
        return counts_[n];
    }
    const BigInt &operator[](Weight n) const
    {
        return counts_[n];
    }

    // Rows "n,count", one per line.
    void write_csv(std::ostream &os) const
    {
        for (Weight n = 0; n <= bound_; ++n) {
            os << n << ',' << counts_[n] << '\n';
        }
    }

private:
    PartSet set_;
    Weight bound_;
    std::vector<BigInt> counts_;
};

inline CountTable count_table(const PartSet &set, Weight bound)
{
    return CountTable(set, bound);
}

} // namespace apart

#endif
