#ifndef APART_INJECTIONS_HPP
#define APART_INJECTIONS_HPP

#include <algorithm>
#include <bitset>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <apart/core.hpp>
#include <apart/count_table.hpp>
#include <apart/enumerate.hpp>
#include <apart/part_set.hpp>
#include <apart/partition.hpp>

namespace apart
{

enum class Variant { f, g };

inline std::string_view variant_name(Variant v)
{
    return v == Variant::f ? "f" : "g";
}

// Case ids 1..7 follow the seven branches of f; case_g marks the extra branch of g.
inline constexpr int case_g = 8;

inline std::string case_label(int id)
{
    return id == case_g ? "G" : std::to_string(id);
}

// Position data of lambda relative to the cut (w; z). Positions are 1-based
// over the full part list, trailing 1's included.
struct SplitData {
    std::size_t i = 0;
    Weight x = 0;
    Weight y = 0;
    std::size_t t = 0; // parts >= a_3
    std::size_t s = 0; // multiplicity of 1
    friend bool operator==(const SplitData &, const SplitData &) = default;
};

struct PairImage {
    Partition left;
    Partition right;
    int case_id = 0;
};

// Raised when an image violates its own invariants; indicates a transcription
// error in one of the case formulas, never bad user input.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

// The first elements of the unrestricted set, materialized up to w + z.
struct LeadingParts {
    Weight a2 = 0;
    Weight a3 = 0;
    std::optional<Weight> a4;
};

// Splits lambda (a partition of w + z with no a_2's) at the cut point.
inline SplitData split_data(const Partition &lambda, Weight w, Weight z, const LeadingParts &lead)
{
    if (lambda.weight() != w + z) {
        throw domain_error("partition " + lambda.str() + " has weight " + std::to_string(lambda.weight())
                           + ", expected w + z = " + std::to_string(w + z));
    }
    const auto &p = lambda.parts();
    SplitData d;
    for (Weight part : p) {
        if (part == lead.a2) {
            throw domain_error("partition " + lambda.str() + " contains a_2 = " + std::to_string(lead.a2));
        }
        if (part == 1) {
            ++d.s;
        } else if (part < lead.a3) {
            throw domain_error("part " + std::to_string(part) + " lies strictly between 1 and a_3");
        } else {
            ++d.t;
        }
    }
    // i = max{ j : lambda_j + ... + lambda_{t+s} >= z }
    Weight suffix = 0;
    std::size_t j = p.size();
    for (; j >= 1; --j) {
        suffix += p[j - 1];
        if (suffix >= z) {
            break;
        }
    }
    d.i = j;
    Weight after = suffix - p[j - 1];
    d.x = z - after;
    d.y = p[j - 1] - d.x;
    return d;
}

inline std::bitset<7> case_predicates(const Partition &lambda, const SplitData &d, const LeadingParts &lead, Weight z)
{
    std::bitset<7> b;
    const Weight a3 = lead.a3;
    const Weight s = d.s;
    const Weight li = lambda.at1(d.i);
    if (d.y == 0) {
        b[0] = s <= z;
        b[1] = z < s && s <= a3 + z;
        b[2] = s > a3 + z;
    } else {
        bool has_prev = d.i >= 2;
        b[3] = has_prev && lambda.at1(d.i - 1) == li && li == a3;
        b[4] = has_prev && lambda.at1(d.i - 1) > li && li == a3;
        b[5] = li > a3 && d.y % a3 != 0;
        b[6] = li > a3 && d.y % a3 == 0;
    }
    return b;
}

// Exactly one of the seven predicates holds on valid inputs.
inline int classify_case(const Partition &lambda, const SplitData &d, const LeadingParts &lead, Weight z)
{
    auto b = case_predicates(lambda, d, lead, z);
    if (b.count() != 1) {
        throw invariant_violation("case predicates for " + lambda.str() + " are not exclusive: "
                                  + std::to_string(b.count()) + " hold");
    }
    for (int k = 0; k < 7; ++k) {
        if (b[k]) {
            return k + 1;
        }
    }
    return 0;
}

struct HypothesisCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Applies f or g for one (set, w, z). Construction validates the hypotheses
// over the parts materialized up to w + z and throws hypothesis_error naming
// the first failure. A smallest part a_1 > 1 that divides every materialized
// part is divided out first.
class Injector
{
public:
    Injector(const PartSet &set, Weight w, Weight z, Variant variant)
        : original_(set.unrestricted()), w_(w), z_(z), variant_(variant)
    {
        auto parts = original_.parts_up_to(w + z);
        if (parts.empty()) {
            throw hypothesis_error("a_1 <= w + z", "no part of " + original_.spec() + " is <= w + z");
        }
        scale_ = parts.front();
        if (scale_ > 1 && (w + z) % scale_ != 0) {
            // No partition of w + z exists at all; hypotheses are checked in the given units.
            scale_ = 1;
            vacuous_ = true;
        }
        if (scale_ > 1) {
            for (Weight a : parts) {
                if (a % scale_ != 0) {
                    throw scaling_error("smallest part " + std::to_string(scale_) + " of " + original_.spec()
                                        + " does not divide " + std::to_string(a));
                }
            }
            if (w % scale_ != 0 || z % scale_ != 0) {
                throw hypothesis_error("a_1 | w and a_1 | z", "w and z must be multiples of a_1 = "
                                                                  + std::to_string(scale_));
            }
            for (Weight &a : parts) {
                a /= scale_;
            }
            w_ /= scale_;
            z_ /= scale_;
            working_ = PartSet::explicit_parts(parts);
        } else {
            working_ = original_;
        }
        parts_ = std::move(parts);
        check_hypotheses();
    }

    const PartSet &working_set() const noexcept
    {
        return *working_;
    }
    // The restricted domain set (no a_2's), in working (scaled) units.
    PartSet domain_set() const
    {
        return working_->excluding(lead_.a2);
    }
    const LeadingParts &lead() const noexcept
    {
        return lead_;
    }
    Weight scale() const noexcept
    {
        return scale_;
    }
    // a_1 > 1 does not divide w + z, so the domain is empty.
    bool vacuous() const noexcept
    {
        return vacuous_;
    }
    Weight w() const noexcept
    {
        return w_;
    }
    Weight z() const noexcept
    {
        return z_;
    }
    const std::vector<HypothesisCheck> &hypotheses() const noexcept
    {
        return checks_;
    }
    // Largest part over which the gap condition was evaluated.
    Weight checked_range() const noexcept
    {
        return (w_ + z_) * scale_;
    }

    SplitData split(const Partition &lambda) const
    {
        return split_data(lambda, w_, z_, lead_);
    }

    // lambda is given in working units.
    PairImage apply_working(const Partition &lambda) const
    {
        SplitData d = split(lambda);
        int id = classify_case(lambda, d, lead_, z_);
        PairImage img;
        if (variant_ == Variant::g && g_branch(lambda, d)) {
            img = g_special(lambda, d);
        } else {
            img = f_case(lambda, d, id);
        }
        validate(img, lambda);
        return img;
    }

    // lambda and the image are in the caller's (unscaled) units.
    PairImage apply(const Partition &lambda) const
    {
        if (scale_ == 1) {
            return apply_working(lambda);
        }
        std::vector<Weight> p = lambda.parts();
        for (Weight &a : p) {
            if (a % scale_ != 0) {
                throw domain_error("part " + std::to_string(a) + " is not a multiple of a_1");
            }
            a /= scale_;
        }
        PairImage img = apply_working(Partition(p));
        return {rescale(img.left), rescale(img.right), img.case_id};
    }

    bool g_branch(const Partition &lambda, const SplitData &d) const
    {
        return d.y == 0 && z_ < d.s && d.s <= z_ + lead_.a3 && d.t >= 1 && lead_.a4
               && lambda.at1(d.t) >= *lead_.a4;
    }

private:
    void check_hypotheses()
    {
        auto fail = [&](const std::string &name, const std::string &what) {
            checks_.push_back({name, false, what});
            throw hypothesis_error(name, what);
        };
        if (parts_.size() < 3 || (parts_[0] != 1 && !vacuous_)) {
            fail("#A >= 3", "fewer than three parts of " + original_.spec() + " are <= w + z");
        }
        lead_.a2 = parts_[1];
        lead_.a3 = parts_[2];
        if (parts_.size() > 3) {
            lead_.a4 = parts_[3];
        }
        const Weight a2 = lead_.a2, a3 = lead_.a3;

        const std::string w_name = "w >= a_3 + 1";
        if (w_ < a3 + 1) {
            fail(w_name, "w = " + std::to_string(w_) + " < a_3 + 1 = " + std::to_string(a3 + 1));
        }
        checks_.push_back({w_name, true, ""});

        const Weight zmin = (variant_ == Variant::f ? 2 : 3) * a2;
        const std::string z_name = variant_ == Variant::f ? "z >= 2 a_2" : "z >= 3 a_2";
        if (z_ < zmin) {
            fail(z_name, "z = " + std::to_string(z_) + " < " + std::to_string(zmin));
        }
        checks_.push_back({z_name, true, ""});

        const std::size_t start = variant_ == Variant::f ? 3 : 4;
        const std::string gap_name = variant_ == Variant::f ? "a_k - a_l >= a_3 (k > l >= 3)"
                                                            : "a_k - a_l >= a_3 (k > l >= 4)";
        for (std::size_t l = start; l < parts_.size(); ++l) {
            Weight diff = parts_[l] - parts_[l - 1];
            if (diff < a3) {
                fail(gap_name, "a_" + std::to_string(l + 1) + " - a_" + std::to_string(l) + " = "
                                   + std::to_string(diff) + " < " + std::to_string(a3));
            }
        }
        checks_.push_back({gap_name, true, "checked over parts <= " + std::to_string(w_ + z_)});
    }

    PairImage f_case(const Partition &lambda, const SplitData &d, int id) const
    {
        const auto &p = lambda.parts();
        const long long a2 = static_cast<long long>(lead_.a2);
        const long long a3 = static_cast<long long>(lead_.a3);
        const long long x = static_cast<long long>(d.x), y = static_cast<long long>(d.y);
        const long long s = static_cast<long long>(d.s), z = static_cast<long long>(z_);
        const std::size_t i = d.i, t = d.t;

        auto count = [&](long long c) {
            if (c < 0) {
                throw invariant_violation("negative multiplicity in case " + std::to_string(id) + " for "
                                          + lambda.str());
            }
            return static_cast<std::size_t>(c);
        };
        auto first = [&](std::size_t k) { return p.begin() + static_cast<std::ptrdiff_t>(k); };

        PartitionBuilder left, right;
        switch (id) {
            case 1:
                left.add_range(first(0), first(i - 1));
                right.add_range(first(i - 1), p.end());
                break;
            case 2:
                left.add_range(first(0), first(t - 1)).add(1, count(s - z + static_cast<long long>(p[t - 1])));
                right.add(1, count(z));
                break;
            case 3:
                left.add_range(first(0), first(t)).add(1, count(s - z));
                right.add(lead_.a2).add(1, count(z - a2));
                break;
            case 4:
                left.add_range(first(0), first(i - 2)).add(1, count(y + a3));
                right.add_range(first(i), first(t))
                    .add(lead_.a2, count((x + s) / a2))
                    .add(1, count((x + s) % a2));
                break;
            case 5:
            case 6:
            case 7:
                left.add_range(first(0), first(i - 1));
                if (id == 5) {
                    left.add(1, count(y));
                } else if (id == 6) {
                    left.add(lead_.a3, count(y / a3)).add(1, count(y % a3));
                } else {
                    left.add(lead_.a3, count(y / a3 - 1)).add(1, count(a3));
                }
                right.add_range(first(i), first(t))
                    .add(lead_.a2, count(s / a2))
                    .add(1, count(x + s % a2));
                break;
            default:
                throw invariant_violation("unknown case id " + std::to_string(id));
        }
        return build(left, right, id, lambda);
    }

    PairImage g_special(const Partition &lambda, const SplitData &d) const
    {
        const auto &p = lambda.parts();
        PartitionBuilder left, right;
        left.add_range(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(d.t - 1))
            .add(1, d.s - z_ + p[d.t - 1]);
        right.add(lead_.a2, 2).add(1, z_ - 2 * lead_.a2);
        return build(left, right, case_g, lambda);
    }

    PairImage build(const PartitionBuilder &left, const PartitionBuilder &right, int id, const Partition &lambda) const
    {
        try {
            return {left.build(), right.build(), id};
        } catch (const domain_error &e) {
            throw invariant_violation("case " + case_label(id) + " image of " + lambda.str()
                                      + " is not a partition: " + e.what());
        }
    }

    void validate(const PairImage &img, const Partition &lambda) const
    {
        auto bad = [&](const std::string &what) {
            throw invariant_violation("case " + case_label(img.case_id) + " image of " + lambda.str() + " = ("
                                      + img.left.str() + "; " + img.right.str() + "): " + what);
        };
        if (img.left.weight() != w_) {
            bad("left weight " + std::to_string(img.left.weight()) + " != w");
        }
        if (img.right.weight() != z_) {
            bad("right weight " + std::to_string(img.right.weight()) + " != z");
        }
        if (img.left.multiplicity(lead_.a2) != 0) {
            bad("left component contains a_2");
        }
        auto allowed = [&](Weight a) { return std::binary_search(parts_.begin(), parts_.end(), a); };
        for (Weight a : img.left.parts()) {
            if (!allowed(a)) {
                bad("left part " + std::to_string(a) + " not allowed");
            }
        }
        for (Weight a : img.right.parts()) {
            if (!allowed(a)) {
                bad("right part " + std::to_string(a) + " not allowed");
            }
        }
    }

    Partition rescale(const Partition &p) const
    {
        std::vector<Weight> parts = p.parts();
        for (Weight &a : parts) {
            a *= scale_;
        }
        return Partition(parts);
    }

    PartSet original_;
    std::optional<PartSet> working_;
    std::vector<Weight> parts_; // working units, <= w + z
    Weight w_, z_;
    Variant variant_;
    Weight scale_ = 1;
    bool vacuous_ = false;
    LeadingParts lead_;
    std::vector<HypothesisCheck> checks_;
};

inline PairImage f_apply(const PartSet &set, const Partition &lambda, Weight w, Weight z)
{
    return Injector(set, w, z, Variant::f).apply(lambda);
}

inline PairImage g_apply(const PartSet &set, const Partition &lambda, Weight w, Weight z)
{
    return Injector(set, w, z, Variant::g).apply(lambda);
}

struct Collision {
    Partition first;
    Partition second;
    PairImage image;
};

struct Violation {
    Partition lambda;
    std::string message;
};

struct InjectionReport {
    std::string set;
    Weight w = 0;
    Weight z = 0;
    Variant variant = Variant::f;
    std::vector<HypothesisCheck> hypotheses;
    Weight checked_range = 0;
    Weight scale = 1;
    std::size_t domain_size = 0;
    std::size_t image_size = 0;
    std::map<std::string, std::size_t> case_histogram;
    std::vector<Collision> collisions;
    std::vector<Violation> violations;
    // Case 6/7 inputs met while no a_4 is materialized.
    std::vector<std::string> flags;
    // p_A(w | no a_2's) * p_A(z) from count tables, and p_A(w + z | no a_2's).
    BigInt product_bound;
    BigInt domain_count;
    bool pass = false;
};

// Exhaustively applies the chosen map to every partition of w + z without
// a_2's and checks well-definedness, case exclusivity and injectivity.
inline InjectionReport verify_injection(const PartSet &set, Weight w, Weight z, Variant variant,
                                        std::size_t cap = default_enumeration_cap)
{
    Injector inj(set, w, z, variant);
    InjectionReport r;
    r.set = set.unrestricted().spec();
    r.w = w;
    r.z = z;
    r.variant = variant;
    r.hypotheses = inj.hypotheses();
    r.checked_range = inj.checked_range();
    r.scale = inj.scale();

    if (inj.vacuous()) {
        r.flags.push_back("vacuous: a_1 does not divide w + z");
    }
    const PartSet domain = inj.domain_set();
    auto lambdas = enumerate_partitions(domain, inj.w() + inj.z(), std::nullopt, cap);
    r.domain_size = lambdas.size();

    std::map<std::pair<Partition, Partition>, Partition> seen;
    for (const auto &lambda : lambdas) {
        try {
            PairImage img = inj.apply_working(lambda);
            ++r.case_histogram[case_label(img.case_id)];
            if ((img.case_id == 6 || img.case_id == 7) && !inj.lead().a4) {
                r.flags.push_back("case " + case_label(img.case_id) + " input " + lambda.str()
                                  + " with no a_4 materialized");
            }
            auto key = std::make_pair(img.left, img.right);
            auto [it, inserted] = seen.emplace(key, lambda);
            if (!inserted) {
                r.collisions.push_back({it->second, lambda, img});
            }
        } catch (const invariant_violation &e) {
            r.violations.push_back({lambda, e.what()});
        }
    }
    r.image_size = seen.size();

    CountTable restricted(domain, inj.w() + inj.z());
    CountTable full(inj.working_set(), inj.z());
    r.domain_count = restricted[inj.w() + inj.z()];
    r.product_bound = restricted[inj.w()] * full[inj.z()];

    r.pass = r.collisions.empty() && r.violations.empty() && r.image_size == r.domain_size
             && BigInt(r.domain_size) == r.domain_count && r.domain_count <= r.product_bound;
    return r;
}

} // namespace apart

#endif
