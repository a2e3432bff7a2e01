#ifndef APART_FAMILIES_HPP
#define APART_FAMILIES_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <apart/core.hpp>
#include <apart/extended.hpp>
#include <apart/part_set.hpp>
#include <apart/partition.hpp>

namespace apart
{

// ---------------------------------------------------------------------------
// m-ary partitions
// ---------------------------------------------------------------------------

// b_m(n) from b_m(xm + y) = b_m(xm) and b_m(xm) = b_m((x-1)m) + b_m(x),
// memoizing b_m(xm) for x = 0, 1, ... as it grows.
class MaryCounter
{
public:
    explicit MaryCounter(Weight m) : m_(m)
    {
        if (m < 2) {
            throw domain_error("mary family requires m >= 2");
        }
        multiples_.push_back(1);
    }

    Weight m() const noexcept
    {
        return m_;
    }

    const BigInt &operator()(Weight n)
    {
        Weight x = n / m_;
        while (multiples_.size() <= x) {
            Weight next = multiples_.size();
            // b_m(next) = b_m(m * floor(next / m)), already cached since next/m < next.
            BigInt v = multiples_.back() + multiples_[next / m_];
            multiples_.push_back(std::move(v));
        }
        return multiples_[x];
    }

private:
    Weight m_;
    std::vector<BigInt> multiples_; // b_m(x m)
};

inline BigInt mary_count(Weight m, Weight n)
{
    MaryCounter c(m);
    return c(n);
}

enum class LemmaRegion { small_w, L1, L2, L3, uncovered };

inline std::string_view region_name(LemmaRegion r)
{
    switch (r) {
        case LemmaRegion::small_w:
            return "small-w";
        case LemmaRegion::L1:
            return "L1";
        case LemmaRegion::L2:
            return "L2";
        case LemmaRegion::L3:
            return "L3";
        case LemmaRegion::uncovered:
            return "uncovered";
    }
    return "?";
}

// Which of the m-ary lemma regions (if any) settles the pair (w, z), w <= z.
//   small-w : w < m
//   L1      : m <= w <= 2m-1, z = km + l with k >= 5m            (strict)
//   L2      : m >= 4, m <= w <= 2m-1, k = 1                      (described, >= with equalities)
//             m >= 6, m <= w <= 2m-1, 2 <= k <= 5m-1             (strict)
//   L3      : m >= 4, w, z >= 2m, w + z <= 2m^2                  (strict)
inline LemmaRegion mary_lemma_region(Weight m, Weight w, Weight z)
{
    if (w > z) {
        throw domain_error("mary_lemma_region expects w <= z");
    }
    if (w < m) {
        return LemmaRegion::small_w;
    }
    if (w <= 2 * m - 1) {
        Weight k = z / m;
        if (k >= 5 * m) {
            return LemmaRegion::L1;
        }
        if (m >= 4 && k == 1) {
            return LemmaRegion::L2;
        }
        if (m >= 6 && k >= 2) {
            return LemmaRegion::L2;
        }
        return LemmaRegion::uncovered;
    }
    if (m >= 4 && w + z <= 2 * m * m) {
        return LemmaRegion::L3;
    }
    return LemmaRegion::uncovered;
}

// ---------------------------------------------------------------------------
// Closed-form gap validators
// ---------------------------------------------------------------------------

enum class GapMode { theorem, proposition };

inline std::string_view mode_name(GapMode m)
{
    return m == GapMode::theorem ? "theorem" : "proposition";
}

// Smallest index l for which a_k - a_l >= a_3 must hold (k > l).
inline std::size_t gap_start(GapMode m)
{
    return m == GapMode::theorem ? 3 : 4;
}

enum class GapStatus { certified_pass, certified_fail, not_applicable };

inline std::string_view gap_status_name(GapStatus s)
{
    switch (s) {
        case GapStatus::certified_pass:
            return "certified-pass";
        case GapStatus::certified_fail:
            return "certified-fail";
        case GapStatus::not_applicable:
            return "not-applicable";
    }
    return "?";
}

struct GapVerdict {
    GapStatus status = GapStatus::not_applicable;
    // Closed-form lower bound on a_{l+1} - a_l that the verdict rests on.
    std::string argument;
    // Instantiated counterexample for certified-fail.
    std::string witness;
    // Largest index l at which the closed-form bound was instantiated and checked.
    std::size_t checked_up_to = 0;
    // The argument as a whole (monotonicity in l beyond checked_up_to) is not machine-proved.
    std::string caveat;
};

namespace detail
{

// a_l (1-based) of the unrestricted built-in sequence, exact.
inline BigInt family_element(const PartSet &set, std::size_t l)
{
    switch (set.family()) {
        case Family::mary:
            return boost::multiprecision::pow(BigInt(set.parameter()), static_cast<unsigned>(l - 1));
        case Family::power:
            return boost::multiprecision::pow(BigInt(l), static_cast<unsigned>(set.parameter()));
        case Family::fib: {
            BigInt a = 1, b = 2;
            for (std::size_t i = 1; i < l; ++i) {
                BigInt c = a + b;
                a = b;
                b = c;
            }
            return a;
        }
        case Family::factorial: {
            BigInt f = 1;
            for (std::size_t i = 2; i <= l; ++i) {
                f *= i;
            }
            return f;
        }
        case Family::all:
            return BigInt(l);
        case Family::explicit_list:
            break;
    }
    throw domain_error("family_element: not a generated family");
}

} // namespace detail

inline constexpr std::size_t gap_validator_range = 64;

// Checks a_{l+1} - a_l >= a_3 for every l >= gap_start(mode) through the
// family's closed form. Consecutive differences suffice because the sequence
// is increasing: a_k - a_l >= a_{l+1} - a_l for k > l.
inline GapVerdict gap_validator(const PartSet &set, GapMode mode)
{
    GapVerdict v;
    if (set.family() == Family::explicit_list) {
        v.argument = "explicit set: no closed form, scan only";
        return v;
    }
    const std::size_t start = gap_start(mode);
    const BigInt a3 = detail::family_element(set, 3);
    const Weight p = set.parameter();

    switch (set.family()) {
        case Family::mary:
            v.argument = "m^l - m^(l-1) = m^(l-1)(m-1) >= m^2(m-1) >= m^2 = a_3 for l >= 3";
            break;
        case Family::power:
            v.argument = p >= 3 ? "(l+1)^d - l^d > d l^(d-1) >= d 3^(d-1) >= 3^d = a_3 for l >= 3"
                                : "(l+1)^2 - l^2 = 2l + 1 >= 9 = a_3 for l >= 4";
            break;
        case Family::fib:
            v.argument = "a_(l+1) - a_l = a_(l-1) >= a_3 for l >= 4";
            break;
        case Family::factorial:
            v.argument = "(l+1)! - l! = l * l! >= 3 * 3! >= 3! = a_3 for l >= 3";
            break;
        case Family::all:
            v.argument = "a_(l+1) - a_l = 1 < 3 = a_3";
            break;
        default:
            break;
    }

    for (std::size_t l = start; l < start + gap_validator_range; ++l) {
        BigInt diff = detail::family_element(set, l + 1) - detail::family_element(set, l);
        if (diff < a3) {
            v.status = GapStatus::certified_fail;
            v.witness = "a_" + std::to_string(l + 1) + " - a_" + std::to_string(l) + " = "
                        + to_string(detail::family_element(set, l + 1)) + " - "
                        + to_string(detail::family_element(set, l)) + " = " + to_string(diff) + " < "
                        + to_string(a3) + " = a_3";
            v.checked_up_to = l;
            return v;
        }
        v.checked_up_to = l;
    }
    v.status = GapStatus::certified_pass;
    v.caveat = "closed-form bound instantiated exactly for l <= " + std::to_string(v.checked_up_to)
               + "; the difference is non-decreasing in l beyond that";
    return v;
}

// ---------------------------------------------------------------------------
// Closed forms for max p_A(n)
// ---------------------------------------------------------------------------

namespace detail
{

inline BigInt pow_int(Weight base, Weight e)
{
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
}

inline Weight ipow(Weight base, Weight e)
{
    Weight v = 1;
    for (Weight i = 0; i < e; ++i) {
        v *= base;
    }
    return v;
}

// Appends a shape if every multiplicity is non-negative.
struct ShapeList {
    std::vector<Partition> shapes;
    void add(std::initializer_list<std::pair<Weight, long long>> runs)
    {
        std::vector<Run> r;
        for (auto [part, mult] : runs) {
            if (mult < 0) {
                return;
            }
            if (mult > 0) {
                r.emplace_back(part, static_cast<std::size_t>(mult));
            }
        }
        shapes.push_back(Partition::from_runs(r));
    }
};

} // namespace detail

// Closed-form max p_A(n) for the built-in families; nullopt for explicit
// sets and for the all-integers family below n = 8.
inline std::optional<BigInt> predicted_max(const PartSet &set, Weight n)
{
    using detail::pow_int;
    switch (set.family()) {
        case Family::mary:
            return pow_int(2, n / set.parameter());
        case Family::power:
            return pow_int(2, n / detail::ipow(2, set.parameter()));
        case Family::fib:
            if (n == 1) {
                return BigInt(1);
            }
            switch (n % 3) {
                case 0:
                    return pow_int(3, n / 3);
                case 1:
                    return 4 * pow_int(3, n / 3 - 1);
                default:
                    return 2 * pow_int(3, n / 3);
            }
        case Family::factorial:
            return pow_int(2, n / 2);
        case Family::all:
            if (n < 8) {
                return std::nullopt;
            }
            switch (n % 4) {
                case 0:
                    return pow_int(5, n / 4);
                case 1:
                    return 7 * pow_int(5, (n - 5) / 4);
                case 2:
                    return 11 * pow_int(5, (n - 6) / 4);
                default:
                    return 77 * pow_int(5, (n - 11) / 4);
            }
        case Family::explicit_list:
            break;
    }
    return std::nullopt;
}

// The known maximizing partitions for each family, with each
// shape's own guards applied literally; shapes with a negative multiplicity
// are dropped for that n.
inline std::vector<Partition> predicted_witnesses(const PartSet &set, Weight n)
{
    detail::ShapeList out;
    const long long N = static_cast<long long>(n);
    switch (set.family()) {
        case Family::mary: {
            const long long m = static_cast<long long>(set.parameter());
            if (m >= 3) {
                out.add({{m, N / m}, {1, N % m}});
            } else {
                for (long long i = 0; i <= N / 4; ++i) {
                    out.add({{4, i}, {2, N / 2 - 2 * i}, {1, N - 2 * (N / 2)}});
                }
            }
            break;
        }
        case Family::power: {
            const long long d = static_cast<long long>(set.parameter());
            if (d >= 3) {
                const long long q = static_cast<long long>(detail::ipow(2, d));
                out.add({{q, N / q}, {1, N % q}});
                break;
            }
            const long long r = N % 4;
            out.add({{4, N / 4}, {1, N - 4 * (N / 4)}});
            if (r != 0 && N >= 9) {
                out.add({{9, 1}, {4, (N - 9) / 4}, {1, N - 4 * ((N - 9) / 4) - 9}});
            }
            if ((r == 2 || r == 3) && N >= 18) {
                out.add({{9, 2}, {4, (N - 18) / 4}, {1, N - 4 * ((N - 18) / 4) - 18}});
            }
            if (r == 3 && N >= 27) {
                out.add({{9, 3}, {4, (N - 27) / 4}, {1, N - 4 * ((N - 27) / 4) - 27}});
            }
            break;
        }
        case Family::fib: {
            if (N == 1) {
                out.add({{1, 1}});
                break;
            }
            const long long q = N / 3;
            switch (N % 3) {
                case 0:
                    out.add({{3, q}});
                    break;
                case 1:
                    out.add({{3, q - 1}, {2, 2}});
                    if (N >= 7) {
                        out.add({{5, 1}, {3, q - 2}, {2, 1}});
                    }
                    if (N >= 10) {
                        out.add({{5, 2}, {3, q - 3}});
                    }
                    break;
                default:
                    out.add({{3, q}, {2, 1}});
                    if (N >= 5) {
                        out.add({{5, 1}, {3, q - 1}});
                    }
                    break;
            }
            break;
        }
        case Family::factorial:
            out.add({{2, N / 2}, {1, N % 2}});
            break;
        case Family::all: {
            if (N < 4 || N == 7) {
                break;
            }
            switch (N % 4) {
                case 0:
                    out.add({{4, N / 4}});
                    break;
                case 1:
                    out.add({{5, 1}, {4, (N - 5) / 4}});
                    break;
                case 2:
                    out.add({{6, 1}, {4, (N - 6) / 4}});
                    break;
                default:
                    out.add({{6, 1}, {5, 1}, {4, (N - 11) / 4}});
                    break;
            }
            break;
        }
        case Family::explicit_list:
            break;
    }
    std::sort(out.shapes.begin(), out.shapes.end(), std::greater<>{});
    return out.shapes;
}

// Families whose closed form names the complete set of maximizers.
inline bool claims_exact_witnesses(Family f)
{
    return f == Family::mary || f == Family::power || f == Family::fib || f == Family::factorial;
}

enum class FormulaStatus { pass, fail, inconclusive_witnesses, report_only, not_applicable };

inline std::string_view formula_status_name(FormulaStatus s)
{
    switch (s) {
        case FormulaStatus::pass:
            return "pass";
        case FormulaStatus::fail:
            return "fail";
        case FormulaStatus::inconclusive_witnesses:
            return "inconclusive-witnesses";
        case FormulaStatus::report_only:
            return "report-only";
        case FormulaStatus::not_applicable:
            return "not-applicable";
    }
    return "?";
}

struct FormulaVerdict {
    FormulaStatus status = FormulaStatus::not_applicable;
    std::optional<BigInt> predicted;
    bool value_matches = false;
    std::vector<Partition> expected_witnesses;
    std::vector<Partition> missing; // listed shapes absent from the DP witnesses
    std::vector<Partition> extra;   // DP witnesses outside the listed shapes
};

inline FormulaVerdict max_formula_check(const PartSet &set, Weight n, const MaxResult &result)
{
    FormulaVerdict v;
    if (set.family() == Family::explicit_list || set.excluded()) {
        return v;
    }
    v.predicted = predicted_max(set, n);
    v.value_matches = v.predicted && *v.predicted == result.value;
    v.expected_witnesses = predicted_witnesses(set, n);

    auto has = [](const std::vector<Partition> &xs, const Partition &p) {
        return std::find(xs.begin(), xs.end(), p) != xs.end();
    };
    for (const auto &p : v.expected_witnesses) {
        if (!has(result.witnesses, p)) {
            v.missing.push_back(p);
        }
    }
    for (const auto &p : result.witnesses) {
        if (!has(v.expected_witnesses, p)) {
            v.extra.push_back(p);
        }
    }

    if (set.family() == Family::all) {
        v.status = FormulaStatus::report_only;
        return v;
    }
    if (!v.value_matches) {
        v.status = FormulaStatus::fail;
    } else if (result.witness_cap_hit) {
        v.status = FormulaStatus::inconclusive_witnesses;
    } else if (!v.missing.empty() || (claims_exact_witnesses(set.family()) && !v.extra.empty())) {
        v.status = FormulaStatus::fail;
    } else {
        v.status = FormulaStatus::pass;
    }
    return v;
}

} // namespace apart

#endif
