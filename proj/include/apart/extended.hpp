#ifndef APART_EXTENDED_HPP
#define APART_EXTENDED_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <apart/core.hpp>
#include <apart/count_table.hpp>
#include <apart/part_set.hpp>
#include <apart/partition.hpp>

namespace apart
{

inline constexpr std::size_t default_witness_cap = 64;

// Product of p_A over the parts of lambda; 1 for the empty partition.
inline BigInt extended_value(const PartSet &set, const Partition &lambda, const CountTable &table)
{
    BigInt v = 1;
    for (auto [part, mult] : lambda.runs()) {
        if (part > table.bound()) {
            throw domain_error("part " + std::to_string(part) + " exceeds count table bound "
                               + std::to_string(table.bound()));
        }
        if (!set.contains(part)) {
            throw domain_error("part " + std::to_string(part) + " is not in " + set.spec());
        }
        v *= boost::multiprecision::pow(table[part], static_cast<unsigned>(mult));
    }
    return v;
}

inline BigInt extended_value(const Partition &lambda, const CountTable &table)
{
    return extended_value(table.set(), lambda, table);
}

struct MaxResult {
    Weight n = 0;
    // max p_A(lambda) over A-partitions of n; 0 when n has no A-partition.
    BigInt value;
    std::vector<Partition> witnesses;
    bool witness_cap_hit = false;
};

// Exact maximum of the extended function over A-partitions of every k <= bound,
// computed once and queried per n.
class MaxTable
{
public:
    explicit MaxTable(const CountTable &table)
        : table_(table), parts_(table.set().parts_up_to(table.bound())), best_(table.bound() + 1)
    {
        best_[0] = BigInt(1);
        for (Weight k = 1; k <= table.bound(); ++k) {
            std::optional<BigInt> m;
            for (Weight a : parts_) {
                if (a > k) {
                    break;
                }
                if (!best_[k - a]) {
                    continue;
                }
                BigInt cand = table[a] * *best_[k - a];
                if (!m || cand > *m) {
                    m = std::move(cand);
                }
            }
            best_[k] = std::move(m);
        }
    }

    // Value only; nullopt when k has no A-partition.
    const std::optional<BigInt> &value(Weight k) const
    {
        if (k > table_.bound()) {
            throw bound_error("max table bound " + std::to_string(table_.bound()) + " < " + std::to_string(k));
        }
        return best_[k];
    }

    MaxResult result(Weight n, std::size_t witness_cap = default_witness_cap) const
    {
        MaxResult r;
        r.n = n;
        const auto &v = value(n);
        if (!v) {
            r.value = 0;
            return r;
        }
        r.value = *v;
        Memo memo;
        std::vector<Weight> current;
        collect(n, parts_.size(), current, r, witness_cap, memo);
        return r;
    }

private:
    using Memo = std::map<std::pair<Weight, std::size_t>, bool>;

    // Index limit `lim`: only parts_[0..lim) may be used next (weakly decreasing).
    bool can_finish(Weight k, std::size_t lim, Memo &memo) const
    {
        if (k == 0) {
            return true;
        }
        auto key = std::make_pair(k, lim);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        bool ok = false;
        for (std::size_t j = lim; j-- > 0 && !ok;) {
            Weight a = parts_[j];
            if (a <= k && is_argmax(k, a)) {
                ok = can_finish(k - a, j + 1, memo);
            }
        }
        memo[key] = ok;
        return ok;
    }

    bool is_argmax(Weight k, Weight a) const
    {
        return best_[k - a] && table_[a] * *best_[k - a] == *best_[k];
    }

    void collect(Weight k, std::size_t lim, std::vector<Weight> &current, MaxResult &r, std::size_t cap,
                 Memo &memo) const
    {
        if (r.witness_cap_hit) {
            return;
        }
        if (k == 0) {
            if (r.witnesses.size() >= cap) {
                r.witness_cap_hit = true;
                return;
            }
            r.witnesses.emplace_back(current);
            return;
        }
        for (std::size_t j = lim; j-- > 0;) {
            Weight a = parts_[j];
            if (a > k || !is_argmax(k, a) || !can_finish(k - a, j + 1, memo)) {
                continue;
            }
            current.push_back(a);
            collect(k - a, j + 1, current, r, cap, memo);
            current.pop_back();
        }
    }

    const CountTable &table_;
    std::vector<Weight> parts_;
    std::vector<std::optional<BigInt>> best_;
};

// Witnesses are the maximizing partitions in decreasing lexicographic order,
// at most witness_cap of them.
inline MaxResult max_value(const CountTable &table, Weight n, std::size_t witness_cap = default_witness_cap)
{
    CountTable local = table.bound() >= n ? table : CountTable(table.set(), n);
    return MaxTable(local).result(n, witness_cap);
}

inline MaxResult max_value(const PartSet &set, Weight n, std::size_t witness_cap = default_witness_cap)
{
    return max_value(CountTable(set, n), n, witness_cap);
}

} // namespace apart

#endif
