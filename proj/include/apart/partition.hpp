#ifndef APART_PARTITION_HPP
#define APART_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <apart/core.hpp>

namespace apart
{

// (part, multiplicity), parts strictly decreasing across runs.
using Run = std::pair<Weight, std::size_t>;

// A weakly decreasing list of positive parts together with its weight.
class Partition
{
public:
    Partition() = default;

    explicit Partition(std::vector<Weight> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] == 0) {
                throw domain_error("partition parts must be positive");
            }
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw domain_error("partition parts must be weakly decreasing");
            }
            n_ += parts_[i];
        }
    }

    Partition(std::initializer_list<Weight> parts) : Partition(std::vector<Weight>(parts)) {}

    static Partition from_runs(const std::vector<Run> &runs)
    {
        std::vector<Weight> parts;
        for (auto [part, mult] : runs) {
            parts.insert(parts.end(), mult, part);
        }
        return Partition(std::move(parts));
    }

    const std::vector<Weight> &parts() const noexcept
    {
        return parts_;
    }
    Weight weight() const noexcept
    {
        return n_;
    }
    std::size_t size() const noexcept
    {
        return parts_.size();
    }
    bool empty() const noexcept
    {
        return parts_.empty();
    }
    // 1-based access, matching the usual lambda_1 >= lambda_2 >= ... indexing.
    Weight at1(std::size_t i) const
    {
        return parts_.at(i - 1);
    }

    std::size_t multiplicity(Weight part) const
    {
        std::size_t c = 0;
        for (Weight p : parts_) {
            c += (p == part);
        }
        return c;
    }

    std::vector<Run> runs() const
    {
        std::vector<Run> out;
        for (Weight p : parts_) {
            if (!out.empty() && out.back().first == p) {
                ++out.back().second;
            } else {
                out.emplace_back(p, 1);
            }
        }
        return out;
    }

    // "(5,3^2,1)"; the empty partition renders as "()".
    std::string str() const
    {
        std::string s = "(";
        bool first = true;
        for (auto [part, mult] : runs()) {
            if (!first) {
                s += ',';
            }
            first = false;
            s += std::to_string(part);
            if (mult > 1) {
                s += '^' + std::to_string(mult);
            }
        }
        return s + ")";
    }

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &a, const Partition &b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<Weight> parts_;
    Weight n_ = 0;
};

// Builds a partition from runs given in any order of appearance; runs with
// zero multiplicity are dropped. Used to assemble the injection images.
inline std::ostream &operator<<(std::ostream &os, const Partition &p)
{
    return os << p.str();
}

class PartitionBuilder
{
public:
    PartitionBuilder &add(Weight part, std::size_t mult = 1)
    {
        parts_.insert(parts_.end(), mult, part);
        return *this;
    }
    template <typename It>
    PartitionBuilder &add_range(It first, It last)
    {
        parts_.insert(parts_.end(), first, last);
        return *this;
    }
    // Throws domain_error if the accumulated parts are not weakly decreasing.
    Partition build() const
    {
        return Partition(parts_);
    }

private:
    std::vector<Weight> parts_;
};

} // namespace apart

#endif
