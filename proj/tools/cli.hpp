#ifndef APART_TOOLS_CLI_HPP
#define APART_TOOLS_CLI_HPP

// Command-line front end. Exit codes: 0 success (an invalid certificate is
// data, not failure), 2 usage or parse error, 3 resource limit or
// inconclusive result.

#include <cstdint>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <apart/apart.hpp>
#include <apart/io.hpp>

namespace apart::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_resource = 3;

struct CommandConfig {
    std::string command; // "count", "bo scan", ...
    std::string set;
    std::string family;
    std::optional<Weight> n;
    std::optional<Weight> bound;
    std::optional<Weight> w;
    std::optional<Weight> z;
    std::optional<Weight> min_part;
    std::optional<Weight> sum_max;
    std::optional<Weight> max_part;
    std::optional<Weight> L;
    std::optional<std::string> m_range;
    std::optional<std::string> variant;
    std::optional<std::string> mode;
    std::optional<std::string> parts;
    std::optional<std::size_t> witness_cap;
    std::optional<std::size_t> cap;
    std::optional<unsigned> threads;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> sets;
    std::optional<Weight> max_element;
    std::optional<std::size_t> max_size;
    bool check_formula = false;
    bool lemma_filter = false;
    std::string format = "text";

    friend bool operator==(const CommandConfig &, const CommandConfig &) = default;

    unsigned effective_threads() const
    {
        return threads.value_or(default_threads());
    }

    // Argument vector that parses back to this config.
    std::vector<std::string> canonical_args() const
    {
        std::vector<std::string> a;
        std::istringstream cmd(command);
        for (std::string tok; cmd >> tok;) {
            a.push_back(tok);
        }
        auto opt = [&](const char *name, const auto &v) {
            if (v) {
                a.push_back(name);
                std::ostringstream os;
                os << *v;
                a.push_back(os.str());
            }
        };
        if (!set.empty()) {
            a.push_back("--set");
            a.push_back(set);
        }
        if (!family.empty()) {
            a.push_back("--family");
            a.push_back(family);
        }
        opt("--n", n);
        opt("--bound", bound);
        opt("--w", w);
        opt("--z", z);
        opt("--min-part", min_part);
        opt("--sum-max", sum_max);
        opt("--max-part", max_part);
        opt("--L", L);
        opt("--m", m_range);
        opt("--variant", variant);
        opt("--mode", mode);
        opt("--parts", parts);
        opt("--witness-cap", witness_cap);
        opt("--cap", cap);
        opt("--threads", threads);
        opt("--seed", seed);
        opt("--sets", sets);
        opt("--max-element", max_element);
        opt("--max-size", max_size);
        if (check_formula) {
            a.push_back("--check-formula");
        }
        if (lemma_filter) {
            a.push_back("--lemma-filter");
        }
        a.push_back("--format");
        a.push_back(format);
        return a;
    }

    std::string canonical() const
    {
        std::string s;
        for (const auto &t : canonical_args()) {
            s += (s.empty() ? "" : " ") + t;
        }
        return s;
    }
};

namespace detail
{

inline void add_format(CLI::App *app, CommandConfig &c)
{
    app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

inline void add_set(CLI::App *app, CommandConfig &c, bool required = true)
{
    auto *o = app->add_option("--set", c.set, "Part set: mary:<m> power:<d> fib factorial all explicit:<a,b,..>");
    if (required) {
        o->required();
    }
}

inline void add_threads(CLI::App *app, CommandConfig &c)
{
    app->add_option("--threads", c.threads, "Worker threads (default: $APART_THREADS or 1)");
}

inline std::vector<Weight> parse_list(const std::string &s)
{
    std::vector<Weight> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        auto tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(apart::detail::parse_weight(tok, "part"));
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

inline std::pair<Weight, Weight> parse_range(const std::string &s)
{
    auto colon = s.find(':');
    if (colon == std::string::npos) {
        Weight v = apart::detail::parse_weight(s, "range");
        return {v, v};
    }
    Weight lo = apart::detail::parse_weight(std::string_view(s).substr(0, colon), "range start");
    Weight hi = apart::detail::parse_weight(std::string_view(s).substr(colon + 1), "range end");
    if (lo > hi) {
        throw parse_error("empty range " + s);
    }
    return {lo, hi};
}

inline Variant parse_variant(const std::optional<std::string> &v, Variant fallback)
{
    if (!v) {
        return fallback;
    }
    if (*v == "f") {
        return Variant::f;
    }
    if (*v == "g") {
        return Variant::g;
    }
    throw parse_error("variant must be f or g");
}

inline Weight need(const std::optional<Weight> &v, const char *name)
{
    if (!v) {
        throw parse_error(std::string("missing required option ") + name);
    }
    return *v;
}

inline std::string dump(const json &j)
{
    return j.dump(2) + "\n";
}

} // namespace detail

// Throws CLI::ParseError (help included) or apart::parse_error.
inline CommandConfig parse_command(const std::vector<std::string> &args)
{
    CommandConfig c;
    CLI::App app{"A-partition functions, Bessenrodt-Ono inequalities and injections", "apart"};
    app.require_subcommand(1);

    auto *count = app.add_subcommand("count", "Print p_A(n) for 0 <= n <= bound");
    detail::add_set(count, c);
    count->add_option("--bound", c.bound, "Largest n")->required();
    detail::add_format(count, c);

    auto *en = app.add_subcommand("enumerate", "List the A-partitions of n");
    detail::add_set(en, c);
    en->add_option("--n", c.n)->required();
    en->add_option("--max-part", c.max_part);
    en->add_option("--cap", c.cap, "Enumeration cap");
    detail::add_format(en, c);

    auto *mx = app.add_subcommand("max", "Maximum of the extended function with witnesses");
    detail::add_set(mx, c);
    mx->add_option("--n", c.n)->required();
    mx->add_option("--witness-cap", c.witness_cap);
    mx->add_flag("--check-formula", c.check_formula, "Compare with the family's closed form");
    detail::add_format(mx, c);

    auto *bo = app.add_subcommand("bo", "Bessenrodt-Ono checks");
    bo->require_subcommand(1);
    auto *scan = bo->add_subcommand("scan", "Non-strict pairs min_part <= w <= z, w + z <= sum_max");
    detail::add_set(scan, c);
    scan->add_option("--min-part", c.min_part)->required();
    scan->add_option("--sum-max", c.sum_max)->required();
    scan->add_flag("--lemma-filter", c.lemma_filter, "Drop pairs covered by the m-ary lemma regions");
    detail::add_threads(scan, c);
    detail::add_format(scan, c);

    auto *cert = bo->add_subcommand("certify", "Induction certificate for strict BO");
    detail::add_set(cert, c);
    cert->add_option("--L", c.L, "Domain lower bound");
    cert->add_option("--mode", c.mode, "theorem | proposition")->check(CLI::IsMember({"theorem", "proposition"}));
    cert->add_option("--bound", c.bound, "Count table bound");
    detail::add_format(cert, c);

    auto *thr = bo->add_subcommand("thresholds", "Threshold n_m per family member");
    thr->add_option("--family", c.family)->required()->check(CLI::IsMember({"mary"}));
    thr->add_option("--m", c.m_range, "m or lo:hi")->required();
    thr->add_option("--bound", c.bound, "Scan bound (default 5m^2 + 4m)");
    detail::add_threads(thr, c);
    detail::add_format(thr, c);

    auto *pair = bo->add_subcommand("pair", "One pair (w, z)");
    detail::add_set(pair, c);
    pair->add_option("--w", c.w)->required();
    pair->add_option("--z", c.z)->required();
    detail::add_format(pair, c);

    auto *inj = app.add_subcommand("inject", "Injection maps f and g");
    inj->require_subcommand(1);
    auto *verify = inj->add_subcommand("verify", "Exhaustive check over P_A(w + z | no a_2's)");
    detail::add_set(verify, c);
    verify->add_option("--w", c.w)->required();
    verify->add_option("--z", c.z)->required();
    verify->add_option("--variant", c.variant)->check(CLI::IsMember({"f", "g"}));
    verify->add_option("--cap", c.cap, "Enumeration cap");
    detail::add_format(verify, c);
    auto *apply = inj->add_subcommand("apply", "Image of one partition");
    detail::add_set(apply, c);
    apply->add_option("--w", c.w)->required();
    apply->add_option("--z", c.z)->required();
    apply->add_option("--parts", c.parts, "Comma-separated parts of lambda")->required();
    apply->add_option("--variant", c.variant)->check(CLI::IsMember({"f", "g"}));
    detail::add_format(apply, c);

    auto *conj = app.add_subcommand("conjecture", "Empirical scans");
    conj->require_subcommand(1);
    auto *cscan = conj->add_subcommand("scan", "Largest non-strict sum for random gcd-1 sets");
    cscan->add_option("--seed", c.seed);
    cscan->add_option("--sets", c.sets);
    cscan->add_option("--max-element", c.max_element);
    cscan->add_option("--max-size", c.max_size);
    cscan->add_option("--bound", c.bound);
    detail::add_threads(cscan, c);
    detail::add_format(cscan, c);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);

    for (auto *sub : app.get_subcommands()) {
        c.command = sub->get_name();
        for (auto *leaf : sub->get_subcommands()) {
            c.command += " " + leaf->get_name();
        }
    }
    if (!c.set.empty()) {
        parse_part_set(c.set); // reject bad specs before any computation
    }
    return c;
}

inline int run(const CommandConfig &c, std::ostream &out)
{
    const bool json_out = c.format == "json";
    const bool csv_out = c.format == "csv";

    if (c.command == "count") {
        CountTable t(parse_part_set(c.set), *c.bound);
        if (json_out) {
            out << detail::dump(to_json(t));
        } else {
            t.write_csv(out);
        }
        return exit_ok;
    }

    if (c.command == "enumerate") {
        auto set = parse_part_set(c.set);
        auto ps = enumerate_partitions(set, *c.n, c.max_part, c.cap.value_or(default_enumeration_cap));
        if (json_out) {
            out << detail::dump({{"set", set.spec()}, {"n", *c.n}, {"count", ps.size()}, {"partitions", to_json(ps)}});
        } else if (csv_out) {
            for (std::size_t k = 0; k < ps.size(); ++k) {
                out << k << ',';
                for (std::size_t j = 0; j < ps[k].size(); ++j) {
                    out << (j ? " " : "") << ps[k].parts()[j];
                }
                out << '\n';
            }
        } else {
            for (const auto &p : ps) {
                out << p.str() << '\n';
            }
            out << "# " << ps.size() << " partitions\n";
        }
        return exit_ok;
    }

    if (c.command == "max") {
        auto set = parse_part_set(c.set);
        CountTable t(set, *c.n);
        auto r = max_value(t, *c.n, c.witness_cap.value_or(default_witness_cap));
        std::optional<FormulaVerdict> v;
        if (c.check_formula) {
            v = max_formula_check(set, *c.n, r);
        }
        if (json_out) {
            json j = to_json(r);
            j["set"] = set.spec();
            if (v) {
                j["formula"] = to_json(*v);
            }
            out << detail::dump(j);
        } else if (csv_out) {
            for (const auto &w : r.witnesses) {
                out << r.n << ',' << r.value << ',' << w.str() << '\n';
            }
        } else {
            out << "max p_A(" << r.n << ") = " << r.value << '\n';
            for (const auto &w : r.witnesses) {
                out << "witness " << w.str() << '\n';
            }
            if (r.witness_cap_hit) {
                out << "witness cap hit\n";
            }
            if (v) {
                out << "formula " << formula_status_name(v->status);
                if (v->predicted) {
                    out << " predicted " << *v->predicted;
                }
                out << '\n';
            }
        }
        return exit_ok;
    }

    if (c.command == "bo pair") {
        auto set = parse_part_set(c.set);
        CountTable t(set, *c.w + *c.z);
        auto o = bo_check_pair(t, *c.w, *c.z);
        if (json_out) {
            json j = to_json(o);
            j["set"] = set.spec();
            out << detail::dump(j);
        } else {
            const char sep = csv_out ? ',' : ' ';
            out << o.w << sep << o.z << sep << o.lhs << sep << o.rhs << sep << relation_name(o.relation) << '\n';
        }
        return exit_ok;
    }

    if (c.command == "bo scan") {
        auto set = parse_part_set(c.set);
        if (c.lemma_filter && set.family() != Family::mary) {
            throw parse_error("--lemma-filter applies to mary sets only");
        }
        CountTable t(set, *c.sum_max);
        auto ex = scan_sums(t, *c.min_part, *c.sum_max, c.effective_threads());
        if (c.lemma_filter) {
            ex = uncovered_only(set.parameter(), std::move(ex));
        }
        if (json_out) {
            out << detail::dump({{"set", set.spec()},
                                 {"min_part", *c.min_part},
                                 {"sum_max", *c.sum_max},
                                 {"lemma_filter", c.lemma_filter},
                                 {"exceptions", to_json(ex)}});
        } else if (csv_out) {
            out << "w,z,lhs,rhs,eq\n";
            for (const auto &e : ex) {
                out << e.outcome.w << ',' << e.outcome.z << ',' << e.outcome.lhs << ',' << e.outcome.rhs << ','
                    << (e.equality ? "=" : "") << '\n';
            }
        } else {
            out << "w z lhs rhs eq\n";
            for (const auto &e : ex) {
                out << e.outcome.w << ' ' << e.outcome.z << ' ' << e.outcome.lhs << ' ' << e.outcome.rhs << ' '
                    << (e.equality ? "=" : "<") << '\n';
            }
        }
        return exit_ok;
    }

    if (c.command == "bo certify") {
        auto set = parse_part_set(c.set);
        InductionScheme scheme;
        if (!c.mode) {
            scheme = default_scheme(set);
            if (c.L) {
                scheme.L = *c.L;
            }
        } else if (*c.mode == "theorem") {
            scheme = theorem_scheme(set);
            if (c.L) {
                scheme.L = *c.L;
            }
        } else {
            scheme = proposition_scheme(set, c.L);
        }
        CountTable t(set.unrestricted(), c.bound.value_or(certificate_bound(scheme)));
        auto cert = certify_bo(set, scheme, t);
        if (json_out) {
            json j = {{"version", version}, {"config", c.canonical()}};
            j.update(to_json(cert));
            out << detail::dump(j);
        } else {
            out << "set " << cert.set << '\n'
                << "scheme L=" << scheme.L << " p=" << scheme.p << " window=[" << scheme.window_lo() << ","
                << scheme.window_hi() << "] variant=" << variant_name(scheme.variant) << '\n';
            for (const auto &h : cert.hypotheses.items) {
                out << "hypothesis " << h.name << ": " << (h.passed ? "pass" : "FAIL") << " (" << h.scope << ") "
                    << h.detail << '\n';
            }
            out << "window pairs " << cert.window.outcomes.size() << " pass=" << (cert.window.pass ? "true" : "false")
                << '\n';
            out << "spot check up to " << cert.spot_check.upper << ": " << cert.spot_check.pairs_checked
                << " pairs, " << cert.spot_check.failures.size() << " failures\n";
            for (const auto &f : cert.failures) {
                out << "failure " << f << '\n';
            }
            for (const auto &cv : cert.caveats) {
                out << "caveat " << cv << '\n';
            }
            out << "valid " << (cert.valid ? "true" : "false") << '\n' << cert.conclusion << '\n';
        }
        return exit_ok;
    }

    if (c.command == "bo thresholds") {
        auto [lo, hi] = detail::parse_range(*c.m_range);
        if (lo < 2) {
            throw parse_error("mary family requires m >= 2");
        }
        json rows = json::array();
        if (!json_out) {
            out << (csv_out ? "m,n_m,witness_w,witness_z,equality\n" : "m n_m witness\n");
        }
        for (Weight m = lo; m <= hi; ++m) {
            Weight bound = c.bound.value_or(mary_scan_bound(m));
            auto r = find_threshold(CountTable(PartSet::mary(m), bound), m, bound, c.effective_threads());
            if (json_out) {
                json j = to_json(r);
                j["m"] = m;
                rows.push_back(j);
            } else if (csv_out) {
                out << m << ',' << r.threshold << ',';
                if (r.witness) {
                    out << r.witness->outcome.w << ',' << r.witness->outcome.z << ','
                        << (r.witness->equality ? "=" : "");
                } else {
                    out << ",,";
                }
                out << '\n';
            } else {
                out << m << ' ' << r.threshold;
                if (r.witness) {
                    out << " (" << r.witness->outcome.w << ',' << r.witness->outcome.z << ')'
                        << (r.witness->equality ? "=" : "");
                }
                out << '\n';
            }
        }
        if (json_out) {
            out << detail::dump(rows);
        }
        return exit_ok;
    }

    if (c.command == "inject verify") {
        auto set = parse_part_set(c.set);
        auto r = verify_injection(set, *c.w, *c.z, detail::parse_variant(c.variant, Variant::f),
                                  c.cap.value_or(default_enumeration_cap));
        if (json_out) {
            out << detail::dump(to_json(r));
        } else {
            out << "set " << r.set << " w=" << r.w << " z=" << r.z << " variant=" << variant_name(r.variant) << '\n'
                << "domain " << r.domain_size << " images " << r.image_size << '\n'
                << "cases";
            for (const auto &[k, v] : r.case_histogram) {
                out << ' ' << k << ':' << v;
            }
            out << '\n' << "collisions " << r.collisions.size() << " violations " << r.violations.size() << '\n';
            for (const auto &v : r.violations) {
                out << "violation " << v.message << '\n';
            }
            for (const auto &f : r.flags) {
                out << "flag " << f << '\n';
            }
            out << (r.pass ? "pass" : "FAIL") << '\n';
        }
        return exit_ok;
    }

    if (c.command == "inject apply") {
        auto set = parse_part_set(c.set);
        Injector inj(set, *c.w, *c.z, detail::parse_variant(c.variant, Variant::f));
        auto parts = detail::parse_list(*c.parts);
        std::sort(parts.rbegin(), parts.rend());
        Partition lambda(parts);
        auto img = inj.apply(lambda);
        if (json_out) {
            out << detail::dump({{"lambda", to_json(lambda)}, {"image", to_json(img)}});
        } else {
            out << "case " << case_label(img.case_id) << ": " << lambda.str() << " -> (" << img.left.str() << "; "
                << img.right.str() << ")\n";
        }
        return exit_ok;
    }

    if (c.command == "conjecture scan") {
        ConjectureConfig cfg;
        cfg.seed = c.seed.value_or(cfg.seed);
        cfg.sets = c.sets.value_or(cfg.sets);
        cfg.max_element = c.max_element.value_or(cfg.max_element);
        cfg.max_size = c.max_size.value_or(cfg.max_size);
        cfg.bound = c.bound.value_or(cfg.bound);
        auto rows = conjecture_scan(cfg, c.effective_threads());
        if (json_out) {
            json a = json::array();
            for (const auto &r : rows) {
                a.push_back({{"set", r.set}, {"largest", r.largest ? to_json(*r.largest) : json(nullptr)},
                             {"settled", r.settled}});
            }
            out << detail::dump({{"seed", cfg.seed}, {"bound", cfg.bound}, {"rows", a}});
        } else {
            const char sep = csv_out ? ',' : ' ';
            out << "set" << sep << "largest_sum" << sep << "w" << sep << "z" << sep << "eq" << sep << "settled\n";
            for (const auto &r : rows) {
                out << r.set << sep;
                if (r.largest) {
                    const auto &o = r.largest->outcome;
                    out << o.w + o.z << sep << o.w << sep << o.z << sep << (r.largest->equality ? "=" : "<");
                } else {
                    out << "none" << sep << sep << sep;
                }
                out << sep << (r.settled ? "yes" : "no") << '\n';
            }
        }
        return exit_ok;
    }

    throw parse_error("unknown command '" + c.command + "'");
}

inline int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CommandConfig c;
    try {
        c = parse_command(args);
    } catch (const CLI::CallForHelp &) {
        err << "usage: apart <count|enumerate|max|bo|inject|conjecture> [options]  (--help on each)\n";
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const parse_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    try {
        return run(c, out);
    } catch (const parse_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const hypothesis_error &e) {
        err << "hypothesis failed (" << e.hypothesis << "): " << e.what() << '\n';
        return exit_usage;
    } catch (const scaling_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const domain_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const enumeration_overflow &e) {
        err << "error: " << e.what() << '\n';
        return exit_resource;
    } catch (const inconclusive_error &e) {
        err << "inconclusive: " << e.what() << '\n';
        return exit_resource;
    } catch (const bound_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_resource;
    }
}

} // namespace apart::cli

#endif
