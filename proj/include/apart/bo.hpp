#ifndef APART_BO_HPP
#define APART_BO_HPP

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <apart/core.hpp>
#include <apart/count_table.hpp>
#include <apart/families.hpp>
#include <apart/injections.hpp>
#include <apart/part_set.hpp>

namespace apart
{

enum class Relation { greater, equal, less };

inline std::string_view relation_name(Relation r)
{
    switch (r) {
        case Relation::greater:
            return "greater";
        case Relation::equal:
            return "equal";
        case Relation::less:
            return "less";
    }
    return "?";
}

// p_A(w) p_A(z) against p_A(w + z).
struct BOOutcome {
    Weight w = 0;
    Weight z = 0;
    BigInt lhs;
    BigInt rhs;
    Relation relation = Relation::greater;

    bool strict() const noexcept
    {
        return relation == Relation::greater;
    }
};

// A non-strict outcome; `equality` marks lhs == rhs.
struct ExceptionRecord {
    BOOutcome outcome;
    bool equality = false;
};

inline BOOutcome bo_check_pair(const CountTable &table, Weight w, Weight z)
{
    if (w + z > table.bound()) {
        throw bound_error("pair (" + std::to_string(w) + "," + std::to_string(z) + ") needs counts up to "
                          + std::to_string(w + z) + ", table bound is " + std::to_string(table.bound()));
    }
    BOOutcome o{w, z, table[w] * table[z], table[w + z]};
    o.relation = o.lhs > o.rhs ? Relation::greater : (o.lhs == o.rhs ? Relation::equal : Relation::less);
    return o;
}

struct Range {
    Weight lo = 0;
    Weight hi = 0;
};

struct ScanOptions {
    bool w_le_z = true;
    // Pairs with w + z above this are skipped (0 = no limit).
    Weight sum_max = 0;
    unsigned threads = 1;
};

// Thread count from APART_THREADS, default 1.
inline unsigned default_threads()
{
    if (const char *env = std::getenv("APART_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return 1;
}

// All non-strict pairs in the region, sorted by (w, z). With keep_strict the
// result holds every outcome instead.
inline std::vector<BOOutcome> scan_outcomes(const CountTable &table, Range wr, Range zr, const ScanOptions &opt,
                                            bool keep_strict)
{
    Weight top = wr.hi + zr.hi;
    if (opt.sum_max) {
        top = std::min(top, opt.sum_max);
    }
    if (top > table.bound()) {
        throw bound_error("scan region reaches w + z = " + std::to_string(top) + ", table bound is "
                          + std::to_string(table.bound()));
    }
    const unsigned nthreads = std::max(1u, opt.threads);
    std::vector<std::vector<BOOutcome>> parts(nthreads);

    auto work = [&](unsigned tid) {
        Weight k = 0;
        for (Weight w = wr.lo; w <= wr.hi; ++w, ++k) {
            if (k % nthreads != tid) {
                continue;
            }
            Weight zlo = opt.w_le_z ? std::max(zr.lo, w) : zr.lo;
            for (Weight z = zlo; z <= zr.hi; ++z) {
                if (opt.sum_max && w + z > opt.sum_max) {
                    break;
                }
                auto o = bo_check_pair(table, w, z);
                if (keep_strict || !o.strict()) {
                    parts[tid].push_back(std::move(o));
                }
            }
        }
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) {
            pool.emplace_back(work, t);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    std::vector<BOOutcome> out;
    for (auto &v : parts) {
        std::move(v.begin(), v.end(), std::back_inserter(out));
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        return std::tie(a.w, a.z) < std::tie(b.w, b.z);
    });
    return out;
}

inline std::vector<ExceptionRecord> scan_region(const CountTable &table, Range wr, Range zr,
                                                const ScanOptions &opt = {})
{
    std::vector<ExceptionRecord> out;
    for (auto &o : scan_outcomes(table, wr, zr, opt, false)) {
        bool eq = o.relation == Relation::equal;
        out.push_back({std::move(o), eq});
    }
    return out;
}

// Pairs min_part <= w <= z with w + z <= sum_max.
inline std::vector<ExceptionRecord> scan_sums(const CountTable &table, Weight min_part, Weight sum_max,
                                              unsigned threads = 1)
{
    if (sum_max < 2 * min_part) {
        return {};
    }
    ScanOptions opt;
    opt.sum_max = sum_max;
    opt.threads = threads;
    return scan_region(table, {min_part, sum_max / 2}, {min_part, sum_max - min_part}, opt);
}

// Drops pairs settled by one of the m-ary lemma regions.
inline std::vector<ExceptionRecord> uncovered_only(Weight m, std::vector<ExceptionRecord> records)
{
    std::erase_if(records, [m](const ExceptionRecord &r) {
        return mary_lemma_region(m, r.outcome.w, r.outcome.z) != LemmaRegion::uncovered;
    });
    return records;
}

// ---------------------------------------------------------------------------
// Hypotheses
// ---------------------------------------------------------------------------

struct HypothesisItem {
    std::string name;
    bool passed = false;
    // "closed-form", "scan<=B" or "exact"
    std::string scope;
    std::string detail;
};

struct HypothesisReport {
    GapMode mode = GapMode::theorem;
    Weight bound = 0;
    std::vector<HypothesisItem> items;
    GapVerdict closed_form;
    bool scan_gap_passed = false;

    bool passed() const
    {
        return std::all_of(items.begin(), items.end(), [](const auto &i) { return i.passed; });
    }
    std::vector<std::string> failed() const
    {
        std::vector<std::string> out;
        for (const auto &i : items) {
            if (!i.passed) {
                out.push_back(i.name);
            }
        }
        return out;
    }
};

inline std::string gap_hypothesis_name(GapMode mode)
{
    return mode == GapMode::theorem ? "a_k - a_l >= a_3 (k > l >= 3)" : "a_k - a_l >= a_3 (k > l >= 4)";
}

inline const char *second_part_hypothesis = "2 a_2 <= a_3";

inline HypothesisReport check_hypotheses(const PartSet &set, Weight bound, GapMode mode)
{
    auto parts = set.unrestricted().parts_up_to(bound);
    const std::size_t start = gap_start(mode);
    if (parts.size() < 3) {
        throw domain_error(set.spec() + " has fewer than 3 parts <= " + std::to_string(bound));
    }
    if (mode == GapMode::proposition && parts.size() < 4) {
        throw domain_error(set.spec() + " has fewer than 4 parts <= " + std::to_string(bound));
    }
    HypothesisReport r;
    r.mode = mode;
    r.bound = bound;
    const Weight a2 = parts[1], a3 = parts[2];

    HypothesisItem gap{gap_hypothesis_name(mode), true, "scan<=" + std::to_string(bound), ""};
    for (std::size_t l = start; l < parts.size(); ++l) {
        if (parts[l] - parts[l - 1] < a3) {
            gap.passed = false;
            gap.detail = "a_" + std::to_string(l + 1) + " - a_" + std::to_string(l) + " = "
                         + std::to_string(parts[l]) + " - " + std::to_string(parts[l - 1]) + " < "
                         + std::to_string(a3);
            break;
        }
    }
    r.scan_gap_passed = gap.passed;
    if (set.family() != Family::explicit_list) {
        r.closed_form = gap_validator(set.unrestricted(), mode);
        gap.scope = "closed-form";
        gap.passed = r.closed_form.status == GapStatus::certified_pass;
        gap.detail = gap.passed ? r.closed_form.argument : r.closed_form.witness;
    } else {
        r.closed_form.argument = "explicit set: no closed form, scan only";
    }
    r.items.push_back(gap);

    if (mode == GapMode::theorem) {
        bool ok = 2 * a2 <= a3;
        r.items.push_back({second_part_hypothesis, ok, "exact",
                           "2 a_2 = " + std::to_string(2 * a2) + (ok ? " <= " : " > ") + std::to_string(a3)
                               + " = a_3"});
    }
    return r;
}

// ---------------------------------------------------------------------------
// Induction
// ---------------------------------------------------------------------------

// Strict BO on w + z in [2L, 2(L + p) - 1] with w, z >= L, plus an injection
// valid for w >= w_inj and z >= z_inj, extends to all w, z >= L when
// L >= z_inj and L + p >= w_inj.
struct InductionScheme {
    Weight L = 0;
    Weight p = 0;
    Weight w_inj = 0;
    Weight z_inj = 0;
    Variant variant = Variant::f;

    Weight window_lo() const noexcept
    {
        return 2 * L;
    }
    Weight window_hi() const noexcept
    {
        return 2 * (L + p) - 1;
    }
    GapMode mode() const noexcept
    {
        return variant == Variant::f ? GapMode::theorem : GapMode::proposition;
    }
    bool legal() const noexcept
    {
        return L >= z_inj && L + p >= w_inj;
    }
};

namespace detail
{

inline std::pair<Weight, Weight> a2_a3(const PartSet &set)
{
    for (Weight b = 8;; b *= 2) {
        auto p = set.unrestricted().parts_up_to(b);
        if (p.size() >= 3) {
            return {p[1], p[2]};
        }
        if (set.is_finite() && b > set.explicit_list().back()) {
            throw domain_error(set.spec() + " has fewer than three elements");
        }
    }
}

} // namespace detail

// L = a_3, p = a_2, map f.
inline InductionScheme theorem_scheme(const PartSet &set)
{
    auto [a2, a3] = detail::a2_a3(set);
    return {a3, a2, a3 + 1, 2 * a2, Variant::f};
}

// p = a_2, map g; L defaults to the least legal value max(a_3, 3 a_2).
inline InductionScheme proposition_scheme(const PartSet &set, std::optional<Weight> L = std::nullopt)
{
    auto [a2, a3] = detail::a2_a3(set);
    return {L.value_or(std::max(a3, 3 * a2)), a2, a3 + 1, 3 * a2, Variant::g};
}

// Theorem route when its hypotheses hold, else the proposition route when
// those hold, else the theorem route (so the certificate names the failures).
inline InductionScheme default_scheme(const PartSet &set)
{
    auto th = theorem_scheme(set);
    Weight bound = 4 * th.window_hi() + 64;
    if (check_hypotheses(set, bound, GapMode::theorem).passed()) {
        return th;
    }
    auto parts = set.unrestricted().parts_up_to(bound);
    if (parts.size() >= 4 && check_hypotheses(set, bound, GapMode::proposition).passed()) {
        return proposition_scheme(set);
    }
    return th;
}

struct WindowReport {
    Weight L = 0;
    Weight lo = 0;
    Weight hi = 0;
    std::vector<BOOutcome> outcomes; // w <= z
    bool pass = false;
};

inline WindowReport verify_base_window(const CountTable &table, const InductionScheme &scheme)
{
    WindowReport r{scheme.L, scheme.window_lo(), scheme.window_hi(), {}, true};
    if (r.hi > table.bound()) {
        throw bound_error("window top " + std::to_string(r.hi) + " exceeds table bound "
                          + std::to_string(table.bound()));
    }
    for (Weight w = scheme.L; 2 * w <= r.hi; ++w) {
        for (Weight z = std::max(w, r.lo > w ? r.lo - w : 0); w + z <= r.hi; ++z) {
            auto o = bo_check_pair(table, w, z);
            r.pass = r.pass && o.strict();
            r.outcomes.push_back(std::move(o));
        }
    }
    return r;
}

inline constexpr Weight spot_check_margin = 200;

struct SpotCheck {
    Weight upper = 0;
    std::size_t pairs_checked = 0;
    std::vector<BOOutcome> failures;
};

struct BOCertificate {
    std::string set;
    InductionScheme scheme;
    HypothesisReport hypotheses;
    std::vector<HypothesisItem> scheme_checks;
    WindowReport window;
    SpotCheck spot_check;
    bool valid = false;
    std::string conclusion;
    std::vector<std::string> failures;
    std::vector<std::string> caveats;
};

// Table bound needed for certify_bo to run its full spot check.
inline Weight certificate_bound(const InductionScheme &scheme)
{
    return scheme.window_hi() + spot_check_margin;
}

inline BOCertificate certify_bo(const PartSet &set, const InductionScheme &scheme, const CountTable &table)
{
    BOCertificate c;
    c.set = set.label();
    c.scheme = scheme;
    c.window.L = scheme.L;
    c.window.lo = scheme.window_lo();
    c.window.hi = scheme.window_hi();

    try {
        c.hypotheses = check_hypotheses(set, table.bound(), scheme.mode());
    } catch (const domain_error &e) {
        c.hypotheses.mode = scheme.mode();
        c.hypotheses.items.push_back({gap_hypothesis_name(scheme.mode()), false, "exact", e.what()});
    }
    for (const auto &name : c.hypotheses.failed()) {
        c.failures.push_back("hypothesis failed: " + name);
    }
    const auto &gap = c.hypotheses.items.front();
    if (gap.passed && gap.scope == "closed-form") {
        c.caveats.push_back("gap condition certified by closed form: " + c.hypotheses.closed_form.argument + " ("
                            + c.hypotheses.closed_form.caveat + ")");
    } else if (gap.passed) {
        c.caveats.push_back("gap condition checked only for parts <= " + std::to_string(table.bound()));
    }

    c.scheme_checks.push_back({"L >= z_inj", scheme.L >= scheme.z_inj, "exact",
                               std::to_string(scheme.L) + " vs " + std::to_string(scheme.z_inj)});
    c.scheme_checks.push_back({"L + p >= w_inj", scheme.L + scheme.p >= scheme.w_inj, "exact",
                               std::to_string(scheme.L + scheme.p) + " vs " + std::to_string(scheme.w_inj)});
    for (const auto &sc : c.scheme_checks) {
        if (!sc.passed) {
            c.failures.push_back("scheme illegal: " + sc.name);
        }
    }
    const Weight a2 = detail::a2_a3(set).first;
    if (scheme.p != a2) {
        c.failures.push_back("scheme subtracts p = " + std::to_string(scheme.p) + ", expected a_2 = "
                             + std::to_string(a2));
    }

    if (c.window.hi > table.bound()) {
        c.failures.push_back("count table bound " + std::to_string(table.bound()) + " below window top "
                             + std::to_string(c.window.hi));
    } else {
        c.window = verify_base_window(table, scheme);
        for (const auto &o : c.window.outcomes) {
            if (!o.strict()) {
                c.failures.push_back("window pair (" + std::to_string(o.w) + "," + std::to_string(o.z) + ") is "
                                     + std::string(relation_name(o.relation)));
            }
        }
        c.spot_check.upper = std::min(table.bound(), c.window.hi + spot_check_margin);
        for (Weight w = scheme.L; 2 * w <= c.spot_check.upper; ++w) {
            for (Weight z = w; w + z <= c.spot_check.upper; ++z) {
                auto o = bo_check_pair(table, w, z);
                ++c.spot_check.pairs_checked;
                if (!o.strict()) {
                    c.spot_check.failures.push_back(std::move(o));
                }
            }
        }
        if (!c.spot_check.failures.empty()) {
            c.failures.push_back("spot check found " + std::to_string(c.spot_check.failures.size())
                                 + " non-strict pairs with w, z >= L");
        }
        if (c.spot_check.upper < c.window.hi + spot_check_margin) {
            c.caveats.push_back("spot check truncated at table bound " + std::to_string(table.bound()));
        }
    }

    c.valid = c.failures.empty();
    c.conclusion = c.valid ? "BO strict for all w,z >= " + std::to_string(scheme.L) : "not certified";
    return c;
}

inline BOCertificate certify_bo(const PartSet &set, const InductionScheme &scheme)
{
    return certify_bo(set, scheme, CountTable(set.unrestricted(), certificate_bound(scheme)));
}

// ---------------------------------------------------------------------------
// Thresholds
// ---------------------------------------------------------------------------

struct ThresholdResult {
    Weight threshold = 0;
    Weight part_min = 0;
    Weight scan_bound = 0;
    std::optional<ExceptionRecord> witness; // the exception with the largest w + z
    std::size_t exceptions = 0;
};

// Smallest N with no non-strict pair (w, z >= part_min) at w + z >= N inside
// the scan. Exceptions reaching past half the scan bound make the scan too
// short to trust the value, and raise inconclusive_error.
inline ThresholdResult find_threshold(const CountTable &table, Weight part_min, Weight scan_bound,
                                      unsigned threads = 1)
{
    auto ex = scan_sums(table, part_min, scan_bound, threads);
    ThresholdResult r;
    r.part_min = part_min;
    r.scan_bound = scan_bound;
    r.exceptions = ex.size();
    r.threshold = 2 * part_min;
    for (const auto &e : ex) {
        Weight sum = e.outcome.w + e.outcome.z;
        if (!r.witness || sum + 1 > r.threshold) {
            r.threshold = sum + 1;
            r.witness = e;
        }
    }
    if (r.witness && 2 * (r.threshold - 1) > scan_bound) {
        throw inconclusive_error("exception at w + z = " + std::to_string(r.threshold - 1)
                                 + " lies in the upper half of the scan bound " + std::to_string(scan_bound));
    }
    return r;
}

// Scan bound for m-ary thresholds; every pair past it is covered by the
// lemma regions or the induction.
inline Weight mary_scan_bound(Weight m)
{
    return 5 * m * m + 4 * m;
}

inline ThresholdResult mary_threshold(Weight m, unsigned threads = 1)
{
    Weight bound = mary_scan_bound(m);
    return find_threshold(CountTable(PartSet::mary(m), bound), m, bound, threads);
}

// k = 1 pairs of the middle m-ary lemma (m >= 4): equality is expected
// exactly when w + z >= 3m. Lists the pairs where the computed relation
// disagrees with that reading in either direction.
struct MiddleLemmaAudit {
    std::size_t pairs = 0;
    std::vector<BOOutcome> equal_below_3m;
    std::vector<BOOutcome> strict_at_or_above_3m;
    std::vector<BOOutcome> less;
};

inline MiddleLemmaAudit audit_middle_lemma(Weight m)
{
    MiddleLemmaAudit a;
    CountTable t(PartSet::mary(m), 4 * m);
    for (Weight w = m; w <= 2 * m - 1; ++w) {
        for (Weight z = std::max(w, m); z <= 2 * m - 1; ++z) {
            auto o = bo_check_pair(t, w, z);
            ++a.pairs;
            if (o.relation == Relation::less) {
                a.less.push_back(o);
            } else if (o.relation == Relation::equal && w + z < 3 * m) {
                a.equal_below_3m.push_back(o);
            } else if (o.relation == Relation::greater && w + z >= 3 * m) {
                a.strict_at_or_above_3m.push_back(o);
            }
        }
    }
    return a;
}

// ---------------------------------------------------------------------------
// Conjecture scan
// ---------------------------------------------------------------------------

struct ConjectureConfig {
    std::uint64_t seed = 20240601;
    std::size_t sets = 20;
    Weight max_element = 12;
    std::size_t max_size = 4;
    Weight bound = 120;
};

struct ConjectureRow {
    std::string set;
    // Largest w + z (w, z >= 1) with p_A(w) p_A(z) <= p_A(w + z) inside the bound.
    std::optional<ExceptionRecord> largest;
    // False when the largest exception lies in the upper half of the bound.
    bool settled = true;
};

// Random explicit sets with gcd 1 and at least two elements; reports, for
// each, the largest non-strict sum found. A report only, nothing asserted.
inline std::vector<ConjectureRow> conjecture_scan(const ConjectureConfig &cfg, unsigned threads = 1)
{
    if (cfg.max_element < 2 || cfg.max_size < 2) {
        throw domain_error("conjecture scan needs max_element >= 2 and max_size >= 2");
    }
    std::mt19937_64 rng(cfg.seed);
    std::vector<ConjectureRow> rows;
    const std::size_t max_size = std::min<std::size_t>(cfg.max_size, cfg.max_element);
    while (rows.size() < cfg.sets) {
        std::uniform_int_distribution<std::size_t> size_dist(2, max_size);
        std::size_t k = size_dist(rng);
        std::vector<Weight> pool(cfg.max_element);
        std::iota(pool.begin(), pool.end(), Weight{1});
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<Weight> parts(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(parts.begin(), parts.end());
        Weight g = 0;
        for (Weight a : parts) {
            g = std::gcd(g, a);
        }
        if (g != 1) {
            continue;
        }
        PartSet set = PartSet::explicit_parts(parts);
        CountTable table(set, cfg.bound);
        auto ex = scan_sums(table, 1, cfg.bound, threads);
        ConjectureRow row{set.spec(), std::nullopt};
        for (const auto &e : ex) {
            if (!row.largest || e.outcome.w + e.outcome.z >= row.largest->outcome.w + row.largest->outcome.z) {
                row.largest = e;
            }
        }
        row.settled = !row.largest || 2 * (row.largest->outcome.w + row.largest->outcome.z) <= cfg.bound;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace apart

#endif
