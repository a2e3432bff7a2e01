#ifndef APART_IO_HPP
#define APART_IO_HPP

// JSON forms of the result types. Big integers are emitted as decimal strings.

#include <nlohmann/json.hpp>

#include <apart/bo.hpp>
#include <apart/count_table.hpp>
#include <apart/extended.hpp>
#include <apart/families.hpp>
#include <apart/injections.hpp>
#include <apart/partition.hpp>

namespace apart
{

using json = nlohmann::ordered_json;

inline json to_json(const Partition &p)
{
    return json(p.parts());
}

inline json to_json(const std::vector<Partition> &ps)
{
    json a = json::array();
    for (const auto &p : ps) {
        a.push_back(to_json(p));
    }
    return a;
}

inline json to_json(const CountTable &t)
{
    json counts = json::array();
    for (const auto &c : t.counts()) {
        counts.push_back(to_string(c));
    }
    return {{"set", t.set().spec()}, {"bound", t.bound()}, {"counts", counts}};
}

inline json to_json(const MaxResult &r)
{
    return {{"n", r.n},
            {"value", to_string(r.value)},
            {"witnesses", to_json(r.witnesses)},
            {"witness_cap_hit", r.witness_cap_hit}};
}

inline json to_json(const FormulaVerdict &v)
{
    return {{"status", formula_status_name(v.status)},
            {"predicted", v.predicted ? json(to_string(*v.predicted)) : json(nullptr)},
            {"value_matches", v.value_matches},
            {"expected_witnesses", to_json(v.expected_witnesses)},
            {"missing", to_json(v.missing)},
            {"extra", to_json(v.extra)}};
}

inline json to_json(const BOOutcome &o)
{
    return {{"w", o.w},
            {"z", o.z},
            {"lhs", to_string(o.lhs)},
            {"rhs", to_string(o.rhs)},
            {"relation", relation_name(o.relation)}};
}

inline json to_json(const std::vector<BOOutcome> &os)
{
    json a = json::array();
    for (const auto &o : os) {
        a.push_back(to_json(o));
    }
    return a;
}

inline json to_json(const ExceptionRecord &e)
{
    json j = to_json(e.outcome);
    j["equality"] = e.equality;
    return j;
}

inline json to_json(const std::vector<ExceptionRecord> &es)
{
    json a = json::array();
    for (const auto &e : es) {
        a.push_back(to_json(e));
    }
    return a;
}

inline json to_json(const PairImage &img)
{
    return {{"left", to_json(img.left)}, {"right", to_json(img.right)}, {"case", case_label(img.case_id)}};
}

inline json to_json(const SplitData &d)
{
    return {{"i", d.i}, {"x", d.x}, {"y", d.y}, {"t", d.t}, {"s", d.s}};
}

inline json to_json(const InjectionReport &r)
{
    json hyps = json::array();
    for (const auto &h : r.hypotheses) {
        hyps.push_back({{"name", h.name}, {"passed", h.passed}, {"detail", h.detail}});
    }
    json collisions = json::array();
    for (const auto &c : r.collisions) {
        collisions.push_back({{"first", to_json(c.first)}, {"second", to_json(c.second)}, {"image", to_json(c.image)}});
    }
    json violations = json::array();
    for (const auto &v : r.violations) {
        violations.push_back({{"lambda", to_json(v.lambda)}, {"message", v.message}});
    }
    json hist = json::object();
    for (const auto &[k, v] : r.case_histogram) {
        hist[k] = v;
    }
    return {{"set", r.set},
            {"w", r.w},
            {"z", r.z},
            {"variant", variant_name(r.variant)},
            {"domain_size", r.domain_size},
            {"image_size", r.image_size},
            {"case_histogram", hist},
            {"collisions", collisions},
            {"violations", violations},
            {"pass", r.pass},
            {"hypotheses", hyps},
            {"checked_range", r.checked_range},
            {"scale", r.scale},
            {"domain_count", to_string(r.domain_count)},
            {"product_bound", to_string(r.product_bound)},
            {"flags", r.flags}};
}

inline json to_json(const HypothesisItem &h)
{
    return {{"name", h.name}, {"passed", h.passed}, {"scope", h.scope}, {"detail", h.detail}};
}

inline json to_json(const GapVerdict &g)
{
    return {{"status", gap_status_name(g.status)},
            {"argument", g.argument},
            {"witness", g.witness},
            {"checked_up_to", g.checked_up_to},
            {"caveat", g.caveat}};
}

inline json to_json(const HypothesisReport &r)
{
    json items = json::array();
    for (const auto &i : r.items) {
        items.push_back(to_json(i));
    }
    return {{"mode", mode_name(r.mode)},
            {"bound", r.bound},
            {"items", items},
            {"scan_gap_passed", r.scan_gap_passed},
            {"closed_form", to_json(r.closed_form)},
            {"passed", r.passed()}};
}

inline json to_json(const InductionScheme &s)
{
    return {{"L", s.L},
            {"p", s.p},
            {"window", {s.window_lo(), s.window_hi()}},
            {"w_inj", s.w_inj},
            {"z_inj", s.z_inj},
            {"variant", variant_name(s.variant)}};
}

inline json to_json(const BOCertificate &c)
{
    json checks = json::array();
    for (const auto &i : c.scheme_checks) {
        checks.push_back(to_json(i));
    }
    return {{"set", c.set},
            {"scheme", to_json(c.scheme)},
            {"hypotheses", to_json(c.hypotheses)},
            {"scheme_checks", checks},
            {"window", {{"lo", c.window.lo}, {"hi", c.window.hi}, {"pass", c.window.pass},
                        {"outcomes", to_json(c.window.outcomes)}}},
            {"spot_check", {{"upper", c.spot_check.upper}, {"pairs_checked", c.spot_check.pairs_checked},
                            {"failures", to_json(c.spot_check.failures)}}},
            {"valid", c.valid},
            {"conclusion", c.conclusion},
            {"failures", c.failures},
            {"caveats", c.caveats}};
}

inline json to_json(const ThresholdResult &r)
{
    return {{"threshold", r.threshold},
            {"part_min", r.part_min},
            {"scan_bound", r.scan_bound},
            {"exceptions", r.exceptions},
            {"witness", r.witness ? to_json(*r.witness) : json(nullptr)}};
}

} // namespace apart

#endif
