#ifndef APART_PART_SET_HPP
#define APART_PART_SET_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <apart/core.hpp>

namespace apart
{

enum class Family { mary, power, fib, factorial, all, explicit_list };

inline std::string_view family_name(Family f)
{
    switch (f) {
        case Family::mary:
            return "mary";
        case Family::power:
            return "power";
        case Family::fib:
            return "fib";
        case Family::factorial:
            return "factorial";
        case Family::all:
            return "all";
        case Family::explicit_list:
            return "explicit";
    }
    return "?";
}

namespace detail
{

inline bool mul_overflows(Weight a, Weight b, Weight &out)
{
    return __builtin_mul_overflow(a, b, &out);
}

inline Weight parse_weight(std::string_view s, std::string_view what)
{
    Weight v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw parse_error("invalid " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return v;
}

} // namespace detail

// A strictly increasing set of allowed parts, either an explicit finite list
// or one of the generated infinite families, optionally with one member
// removed. Infinite families are only ever materialized up to a bound.
class PartSet
{
public:
    static PartSet mary(Weight m)
    {
        if (m < 2) {
            throw domain_error("mary family requires m >= 2");
        }
        return PartSet(Family::mary, m, {});
    }
    static PartSet power(Weight d)
    {
        if (d < 2) {
            throw domain_error("power family requires d >= 2");
        }
        return PartSet(Family::power, d, {});
    }
    static PartSet fibonacci()
    {
        return PartSet(Family::fib, 0, {});
    }
    static PartSet factorial()
    {
        return PartSet(Family::factorial, 0, {});
    }
    static PartSet all_integers()
    {
        return PartSet(Family::all, 0, {});
    }
    static PartSet explicit_parts(std::vector<Weight> parts)
    {
        if (parts.empty()) {
            throw domain_error("explicit part list must not be empty");
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] == 0) {
                throw domain_error("parts must be positive");
            }
            if (i > 0 && parts[i] <= parts[i - 1]) {
                throw domain_error("explicit parts must be strictly increasing");
            }
        }
        return PartSet(Family::explicit_list, 0, std::move(parts));
    }

    // Same sequence with `part` removed. `part` must belong to the sequence.
    PartSet excluding(Weight part) const
    {
        PartSet out = unrestricted();
        auto members = out.parts_up_to(part);
        if (members.empty() || members.back() != part) {
            throw domain_error("excluded value " + std::to_string(part) + " is not a member of " + out.spec());
        }
        out.excluded_ = part;
        return out;
    }

    PartSet unrestricted() const
    {
        PartSet out = *this;
        out.excluded_.reset();
        return out;
    }

    Family family() const noexcept
    {
        return family_;
    }
    Weight parameter() const noexcept
    {
        return param_;
    }
    const std::optional<Weight> &excluded() const noexcept
    {
        return excluded_;
    }
    bool is_finite() const noexcept
    {
        return family_ == Family::explicit_list;
    }
    const std::vector<Weight> &explicit_list() const noexcept
    {
        return explicit_;
    }

    // All allowed parts <= bound, strictly increasing.
    std::vector<Weight> parts_up_to(Weight bound) const
    {
        std::vector<Weight> out;
        auto push = [&](Weight v) {
            if (!excluded_ || *excluded_ != v) {
                out.push_back(v);
            }
        };
        switch (family_) {
            case Family::mary: {
                for (Weight v = 1; v <= bound;) {
                    push(v);
                    if (detail::mul_overflows(v, param_, v)) {
                        break;
                    }
                }
                break;
            }
            case Family::power: {
                for (Weight k = 1;; ++k) {
                    Weight v = 1;
                    bool over = false;
                    for (Weight e = 0; e < param_ && !over; ++e) {
                        over = detail::mul_overflows(v, k, v);
                    }
                    if (over || v > bound) {
                        break;
                    }
                    push(v);
                }
                break;
            }
            case Family::fib: {
                // F_2 = 1, F_3 = 2, ...
                Weight a = 1, b = 2, c = 0;
                while (a <= bound) {
                    push(a);
                    if (__builtin_add_overflow(a, b, &c)) {
                        if (b <= bound) {
                            push(b);
                        }
                        break;
                    }
                    a = b;
                    b = c;
                }
                break;
            }
            case Family::factorial: {
                Weight v = 1;
                for (Weight k = 2; v <= bound; ++k) {
                    push(v);
                    if (detail::mul_overflows(v, k, v)) {
                        break;
                    }
                }
                break;
            }
            case Family::all: {
                for (Weight v = 1; v <= bound; ++v) {
                    push(v);
                }
                break;
            }
            case Family::explicit_list: {
                for (Weight v : explicit_) {
                    if (v > bound) {
                        break;
                    }
                    push(v);
                }
                break;
            }
        }
        return out;
    }

    bool contains(Weight part) const
    {
        if (part == 0) {
            return false;
        }
        auto p = parts_up_to(part);
        return !p.empty() && p.back() == part;
    }

    // The k-th smallest element (1-based) of the unrestricted sequence,
    // searched among elements <= bound.
    std::optional<Weight> element(std::size_t k, Weight bound) const
    {
        auto p = unrestricted().parts_up_to(bound);
        if (k == 0 || k > p.size()) {
            return std::nullopt;
        }
        return p[k - 1];
    }

    // Canonical mini-grammar form; parse_part_set(spec()) == *this.
    std::string spec() const
    {
        std::string s;
        switch (family_) {
            case Family::mary:
                s = "mary:" + std::to_string(param_);
                break;
            case Family::power:
                s = "power:" + std::to_string(param_);
                break;
            case Family::explicit_list: {
                s = "explicit:";
                for (std::size_t i = 0; i < explicit_.size(); ++i) {
                    s += (i ? "," : "") + std::to_string(explicit_[i]);
                }
                break;
            }
            default:
                s = std::string(family_name(family_));
        }
        if (excluded_) {
            s += "!exclude=" + std::to_string(*excluded_);
        }
        return s;
    }

    std::string label() const
    {
        return label_.empty() ? spec() : label_;
    }
    PartSet with_label(std::string l) const
    {
        PartSet out = *this;
        out.label_ = std::move(l);
        return out;
    }

    friend bool operator==(const PartSet &a, const PartSet &b)
    {
        return a.family_ == b.family_ && a.param_ == b.param_ && a.explicit_ == b.explicit_
               && a.excluded_ == b.excluded_;
    }

private:
    PartSet(Family f, Weight param, std::vector<Weight> parts)
        : family_(f), param_(param), explicit_(std::move(parts))
    {
    }

    Family family_;
    Weight param_ = 0;
    std::vector<Weight> explicit_;
    std::optional<Weight> excluded_;
    std::string label_;
};

// Parses `mary:<m>`, `power:<d>`, `fib`, `factorial`, `all`,
// `explicit:<a,b,...>`, each optionally followed by `!exclude=<part>`.
inline PartSet parse_part_set(std::string_view text)
{
    std::optional<Weight> exclude;
    if (auto bang = text.find('!'); bang != std::string_view::npos) {
        auto suffix = text.substr(bang + 1);
        constexpr std::string_view key = "exclude=";
        if (suffix.substr(0, key.size()) != key) {
            throw parse_error("unknown set suffix '!" + std::string(suffix) + "'");
        }
        exclude = detail::parse_weight(suffix.substr(key.size()), "excluded part");
        text = text.substr(0, bang);
    }
    auto colon = text.find(':');
    auto head = text.substr(0, colon);
    auto arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    bool has_arg = colon != std::string_view::npos;

    auto need_no_arg = [&] {
        if (has_arg) {
            throw parse_error("set '" + std::string(head) + "' takes no parameter");
        }
    };

    std::optional<PartSet> set;
    try {
        if (head == "mary") {
            set = PartSet::mary(detail::parse_weight(arg, "m"));
        } else if (head == "power") {
            set = PartSet::power(detail::parse_weight(arg, "d"));
        } else if (head == "fib") {
            need_no_arg();
            set = PartSet::fibonacci();
        } else if (head == "factorial") {
            need_no_arg();
            set = PartSet::factorial();
        } else if (head == "all") {
            need_no_arg();
            set = PartSet::all_integers();
        } else if (head == "explicit") {
            std::vector<Weight> parts;
            std::size_t pos = 0;
            while (pos <= arg.size()) {
                auto comma = arg.find(',', pos);
                auto tok = arg.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
                parts.push_back(detail::parse_weight(tok, "explicit part"));
                if (comma == std::string_view::npos) {
                    break;
                }
                pos = comma + 1;
            }
            set = PartSet::explicit_parts(std::move(parts));
        } else {
            throw parse_error("unknown set '" + std::string(head) + "'");
        }
        if (exclude) {
            return set->excluding(*exclude);
        }
    } catch (const domain_error &e) {
        throw parse_error(e.what());
    }
    return *set;
}

} // namespace apart

#endif
