#ifndef SNC_WORKBENCH_HPP
#define SNC_WORKBENCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <set>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "forge.hpp"
#include "io.hpp"
#include "theorems.hpp"

namespace snc {

inline constexpr const char* tool_version = "snc 0.1.0";

/// Bad command line or unreadable input; the tool exits with status 2.
class usage_error : public error {
   public:
    using error::error;
};

struct run_config {
    std::string command;               ///< oracle, median, sediment, delta, gates, verify, sweep, gen
    std::string argument;              ///< theorem id, sweep family or instance spec
    std::vector<std::string> sources;  ///< instance files or instance specs
    std::size_t cap_exact = 15;
    std::uint64_t seed = 1;
    std::size_t budget = 1000;
    std::string format = "human";
    std::string out;                   ///< empty: standard output
    std::string order;                 ///< initial order for median --local and sediment, "0,1,2"
    bool local = false;
    bool good = false;                 ///< median: good median order
    unsigned threads = 0;              ///< 0: hardware concurrency
};

inline nlohmann::json to_json(const run_config& c) {
    return {{"command", c.command}, {"argument", c.argument}, {"sources", c.sources}, {"cap_exact", c.cap_exact},
            {"seed", c.seed},       {"budget", c.budget},     {"format", c.format},   {"out", c.out},
            {"order", c.order},     {"local", c.local},       {"good", c.good}};
}

/// one evaluated instance
struct record {
    std::string source;
    std::string fingerprint;
    std::string status;  ///< ok, verified, hypothesis-failed, oracle-rejected, consistency-violation, counterexample, error
    nlohmann::json result = nlohmann::json::object();
    std::vector<std::string> findings;
    double millis = 0;
};

struct summary_counts {
    std::size_t instances = 0;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t finding = 0;
    std::size_t gated = 0;
    std::size_t errors = 0;
};

struct report {
    std::string version = tool_version;
    run_config config;
    std::vector<record> records;
    summary_counts summary;
    std::string raw;  ///< gen: the emitted instance text

    /// 0 all verified or gated, 1 any oracle or consistency failure, 2 usage or input errors
    int exit_code() const {
        if (summary.fail > 0) return 1;
        if (summary.errors > 0) return 2;
        return 0;
    }
};

/// FNV-1a over the canonical instance text.
inline std::string fingerprint(const digraph& d) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : emit_instance(d)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline nlohmann::json to_json(const snp_verdict& v) {
    return {{"vertex", v.v}, {"out", v.out_degree}, {"second_out", v.second_out_degree}, {"holds", v.holds}};
}

inline nlohmann::json to_json(const std::vector<hypothesis_check>& checks) {
    auto a = nlohmann::json::array();
    for (const auto& c : checks) a.push_back({{"clause", c.clause}, {"passed", c.passed}, {"evidence", c.evidence}});
    return a;
}

inline nlohmann::json to_json(const snp_certificate& c) {
    auto verdicts = nlohmann::json::array();
    for (const auto& v : c.verdicts) verdicts.push_back(to_json(v));
    return {{"theorem", to_string(c.theorem)}, {"hypotheses", to_json(c.hypotheses)}, {"witnesses", c.witnesses},
            {"verdicts", verdicts},             {"trace", c.trace},                   {"findings", c.findings},
            {"notes", c.notes}};
}

inline nlohmann::json to_json(const order_analysis& a) {
    return {{"forward_weight", to_string(a.forward_weight)},
            {"feed", a.feed},
            {"out_of_feed", a.out_of_feed.to_vector()},
            {"good", a.good.to_vector()},
            {"bad", a.bad.to_vector()}};
}

namespace detail {

template <class Task>
void parallel_for(std::size_t count, unsigned threads, Task task) {
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) task(i);
    };
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

inline linear_order parse_order(const std::string& text, std::size_t n) {
    if (text.empty()) return linear_order::identity(n);
    std::vector<vertex> perm;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw usage_error("bad order '" + text + "'");
        perm.push_back(static_cast<vertex>(std::stoul(item)));
    }
    try {
        return linear_order(perm);
    } catch (const invalid_argument& e) {
        throw usage_error(std::string("bad order: ") + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot read '" + path + "'");
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

inline bool looks_like_spec(const std::string& source) {
    auto colon = source.find(':');
    std::string kind = source.substr(0, colon);
    for (const char* k : {"fixture", "random-tournament", "random-digraph", "star-deleted", "losing-cycle-gadget",
                          "all-kings"})
        if (kind == k) return true;
    return false;
}

inline void classify(record& r, summary_counts& s) {
    ++s.instances;
    if (r.status == "ok" || r.status == "verified")
        ++s.pass;
    else if (r.status == "hypothesis-failed")
        ++s.gated;
    else if (r.status == "oracle-rejected" || r.status == "consistency-violation")
        ++s.fail;
    else if (r.status == "counterexample")
        ++s.finding;
    else
        ++s.errors;
    if (!r.findings.empty() && r.status != "counterexample") ++s.finding;
}

/// Runs `body`, mapping library errors onto record statuses.
inline void guarded(record& r, const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const hypothesis_failed& e) {
        r.status = "hypothesis-failed";
        r.result["hypotheses"] = to_json(e.report);
        r.result["failed_clause"] = e.clause;
    } catch (const oracle_rejected& e) {
        r.status = "oracle-rejected";
        r.result["certificate"] = to_json(e.certificate);
        r.findings.push_back(e.what());
    } catch (const consistency_violation& e) {
        r.status = "consistency-violation";
        r.findings.push_back(e.what());
    } catch (const std::exception& e) {
        r.status = "error";
        r.result["error"] = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline nlohmann::json delta_json(const digraph& d) {
    auto ci = index_components(d);
    const auto& g = ci.delta;
    auto edges = nlohmann::json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto conv = nlohmann::json::array();
        for (const arc& a : convenient_orientations(d, g.edges[i])) conv.push_back({a.tail, a.head});
        edges.push_back({{"edge", {g.edges[i].u, g.edges[i].v}},
                         {"in", g.in[i].size()},
                         {"out", g.out[i].size()},
                         {"good", g.in[i].empty()},
                         {"convenient", conv}});
    }
    auto arcs = nlohmann::json::array();
    for (const auto& a : g.arcs)
        arcs.push_back({{"from", {g.edges[a.from].u, g.edges[a.from].v}},
                        {"to", {g.edges[a.to].u, g.edges[a.to].v}},
                        {"roles", {a.roles.x1, a.roles.y1, a.roles.x2, a.roles.y2}}});
    auto comps = nlohmann::json::array();
    for (std::size_t c = 0; c < ci.components.size(); ++c)
        comps.push_back({{"edges", ci.components[c]},
                         {"K", ci.k_of_component[c].to_vector()},
                         {"strongly_connected", ci.component_strongly_connected(c)}});
    auto xis = nlohmann::json::array();
    auto goodness = check_good(ci, d);
    for (const auto& [k, ok] : goodness.xi_intervals) xis.push_back({{"K", k.to_vector()}, {"interval", ok}});
    return {{"edges", edges},
            {"arcs", arcs},
            {"components", comps},
            {"xi", xis},
            {"good_digraph", goodness.good},
            {"min_in", g.min_in_degree()},
            {"min_out", g.min_out_degree()}};
}

inline record evaluate(const run_config& c, const std::string& source, const instance& inst) {
    record r;
    r.source = source;
    r.fingerprint = fingerprint(inst.graph);
    r.status = "ok";
    const digraph& d = inst.graph;
    const weighting w = inst.weights_or_unit();
    solver_options opts;
    opts.cap_exact = c.cap_exact;
    guarded(r, [&] {
        r.result["n"] = d.size();
        r.result["arcs"] = d.arc_count();
        if (c.command == "oracle") {
            auto set = inst.weights ? snp_set(d, w) : snp_set(d);
            r.result["snp_set"] = set.to_vector();
            auto verdicts = nlohmann::json::array();
            for (vertex v = 0; v < d.size(); ++v) verdicts.push_back(to_json(snp_check(d, v)));
            r.result["verdicts"] = verdicts;
            if (set.empty() && d.size() > 0) {
                r.status = "counterexample";
                r.findings.push_back("no vertex has the second neighbourhood property");
            }
        } else if (c.command == "median") {
            linear_order l = c.good  ? good_median_order(d, w, c.local ? exactness::local : exactness::exact, opts)
                             : c.local ? local_median_order(d, w, parse_order(c.order, d.size()))
                                       : exact_median_order(d, w, tiebreak::none(), opts).order;
            r.result["mode"] = c.good ? "good" : (c.local ? "local" : "exact");
            r.result["order"] = l.vertices();
            r.result["analysis"] = to_json(analyze(d, w, l));
            r.result["feedback"] = satisfies_feedback(d, w, l);
        } else if (c.command == "sediment") {
            auto trace = sediment(d, w, parse_order(c.order, d.size()), c.budget);
            auto orders = nlohmann::json::array();
            for (const auto& o : trace.orders) orders.push_back(o.vertices());
            r.result["outcome"] = to_string(trace.outcome);
            r.result["orders"] = orders;
            r.result["rank"] = trace.rank;
            r.result["cycle_start"] = trace.cycle_start;
            r.result["cycle_length"] = trace.cycle_length;
        } else if (c.command == "delta") {
            r.result["delta"] = delta_json(d);
        } else if (c.command == "gates") {
            auto gates = nlohmann::json::array();
            for (const auto& g : check_hypotheses(d))
                gates.push_back({{"theorem", to_string(g.theorem)},
                                 {"applicable", g.applicable},
                                 {"checks", to_json(g.checks)}});
            r.result["gates"] = gates;
        } else if (c.command == "verify") {
            auto id = parse_theorem_id(c.argument);
            if (!id) throw usage_error("unknown theorem '" + c.argument + "'");
            auto cert = prove(*id, d, opts);
            r.status = "verified";
            r.findings = cert.findings;
            r.result["certificate"] = to_json(cert);
        } else {
            throw usage_error("unknown command '" + c.command + "'");
        }
    });
    return r;
}

/// A sweep instance: a digraph and the check it must pass.
struct sweep_family {
    std::size_t count = 0;
    std::function<digraph(std::size_t)> make;
    std::function<void(const digraph&, record&)> check;
};

inline std::size_t family_order(const std::string& family, const std::string& prefix) {
    std::string digits = family.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw usage_error("bad sweep family '" + family + "'");
    return std::stoul(digits);
}

inline bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

inline sweep_family make_family(const run_config& c) {
    const std::string& f = c.argument;
    solver_options opts;
    opts.cap_exact = c.cap_exact;
    sweep_family s;
    auto feed_check = [opts](const digraph& t, record& r) {
        linear_order l = exact_median_order(t, tiebreak::none(), opts).order;
        auto v = snp_check(t, l.feed());
        r.result["feed"] = to_json(v);
        if (!v.holds) r.status = "oracle-rejected";
    };
    auto oracle_check = [](const digraph& d, record& r) {
        if (snp_set(d).empty()) {
            r.status = "counterexample";
            r.findings.push_back("no vertex has the second neighbourhood property");
        }
    };
    if (starts_with(f, "tournaments-two-n")) {
        std::size_t n = family_order(f, "tournaments-two-n");
        if (n < 2 || n > 7) throw usage_error("tournament sweeps take 2 <= n <= 7");
        s.count = std::size_t{1} << (n * (n - 1) / 2);
        s.make = [n](std::size_t i) { return tournament_from_code(n, i); };
        s.check = [opts](const digraph& t, record& r) {
            if (!t.sinks().empty()) {
                r.status = "hypothesis-failed";
                return;
            }
            auto cert = havet_thomasse_witnesses(t, opts);
            r.status = "verified";
            r.result["witnesses"] = cert.witnesses;
        };
    } else if (starts_with(f, "tournaments-n")) {
        std::size_t n = family_order(f, "tournaments-n");
        if (n < 1 || n > 7) throw usage_error("tournament sweeps take 1 <= n <= 7");
        s.count = std::size_t{1} << (n * (n - 1) / 2);
        s.make = [n](std::size_t i) { return tournament_from_code(n, i); };
        s.check = feed_check;
    } else if (starts_with(f, "random-digraphs-n")) {
        std::size_t n = family_order(f, "random-digraphs-n");
        if (n < 1 || n > max_vertices) throw usage_error("bad order in '" + f + "'");
        s.count = c.budget;
        const std::uint64_t seed = c.seed;
        s.make = [n, seed](std::size_t i) {
            return random_digraph(n, seed * 1000003 + i, static_cast<double>(i % 9 + 1) / 10.0);
        };
        s.check = oracle_check;
    } else if (starts_with(f, "digraphs-n")) {
        std::size_t n = family_order(f, "digraphs-n");
        if (n < 1 || n > 5) throw usage_error("exhaustive digraph sweeps take 1 <= n <= 5");
        s.count = 1;
        for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) s.count *= 3;
        s.make = [n](std::size_t i) { return digraph_from_code(n, i); };
        s.check = oracle_check;
    } else if (f == "gadgets") {
        s.count = 7;
        s.make = [](std::size_t i) {
            try {
                return losing_cycle_gadget(i + 2);
            } catch (const consistency_violation&) {
                return digraph(0, {});
            }
        };
        s.check = [](const digraph& d, record& r) {
            if (d.size() == 0) throw consistency_violation("gadget construction failed its own assertions");
            auto bad = gadget_failures(d, d.size() / 2);
            r.result["k"] = d.size() / 2;
            if (!bad.empty()) throw consistency_violation(bad.front());
            for (vertex v = 0; v < d.size(); ++v)
                if (!has_snp(d, v)) throw consistency_violation("gadget vertex without the SNP");
        };
    } else {
        auto dash = f.rfind("-n");
        auto id = dash == std::string::npos ? std::nullopt : parse_theorem_id(f.substr(0, dash));
        if (!id || *id == theorem_id::tournament || *id == theorem_id::tournament_two)
            throw usage_error("unknown sweep family '" + f + "'");
        std::size_t n = family_order(f, f.substr(0, dash) + "-n");
        if (n < 4 || n > max_vertices) throw usage_error("bad order in '" + f + "'");
        auto found = std::make_shared<std::vector<digraph>>(filtered_search(*id, n, c.seed, c.budget).instances);
        s.count = found->size();
        s.make = [found](std::size_t i) { return (*found)[i]; };
        s.check = [id, opts](const digraph& d, record& r) {
            auto cert = prove(*id, d, opts);
            r.status = "verified";
            r.findings = cert.findings;
            r.result["witnesses"] = cert.witnesses;
        };
    }
    return s;
}

inline report run_sweep(const run_config& c) {
    report rep;
    rep.config = c;
    sweep_family fam = make_family(c);
    std::vector<record> all(fam.count);
    parallel_for(fam.count, c.threads, [&](std::size_t i) {
        record& r = all[i];
        r.status = "ok";
        digraph d = fam.make(i);
        r.source = c.argument + "#" + std::to_string(i);
        r.fingerprint = fingerprint(d);
        guarded(r, [&] { fam.check(d, r); });
    });
    for (auto& r : all) {
        classify(r, rep.summary);
        bool notable = r.status != "ok" && r.status != "verified" && r.status != "hypothesis-failed";
        if (notable || !r.findings.empty()) rep.records.push_back(std::move(r));
    }
    std::sort(rep.records.begin(), rep.records.end(),
              [](const record& a, const record& b) { return std::tie(a.fingerprint, a.source) < std::tie(b.fingerprint, b.source); });
    return rep;
}

}  // namespace detail

/// Loads an instance from a file path or an instance spec.
inline instance load_instance(const std::string& source) {
    if (detail::looks_like_spec(source)) {
        try {
            return {realize(source), std::nullopt};
        } catch (const unrealizable&) {
            throw;
        } catch (const error& e) {
            throw usage_error(source + ": " + e.what());
        }
    }
    std::string text = detail::read_file(source);
    try {
        return parse_instance(text);
    } catch (const error& e) {
        throw usage_error(source + ": " + e.what());
    }
}

inline report run(const run_config& c) {
    if (c.cap_exact < 1) throw usage_error("--cap-exact must be at least 1");
    if (c.command == "sweep") return detail::run_sweep(c);
    report rep;
    rep.config = c;
    if (c.command == "gen") {
        instance inst = load_instance(c.argument);
        rep.raw = emit_instance(inst);
        record r;
        r.source = c.argument;
        r.fingerprint = fingerprint(inst.graph);
        r.status = "ok";
        r.result["instance"] = rep.raw;
        detail::classify(r, rep.summary);
        rep.records.push_back(std::move(r));
        return rep;
    }
    static const std::set<std::string> per_instance{"oracle", "median", "sediment", "delta", "gates", "verify"};
    if (!per_instance.count(c.command)) throw usage_error("unknown command '" + c.command + "'");
    if (c.command == "verify" && !parse_theorem_id(c.argument)) throw usage_error("unknown theorem '" + c.argument + "'");
    if (c.sources.empty()) throw usage_error(c.command + " needs at least one instance");
    std::vector<instance> instances;
    for (const auto& s : c.sources) instances.push_back(load_instance(s));
    std::vector<record> records(instances.size());
    detail::parallel_for(instances.size(), c.threads,
                         [&](std::size_t i) { records[i] = detail::evaluate(c, c.sources[i], instances[i]); });
    for (auto& r : records) detail::classify(r, rep.summary);
    std::stable_sort(records.begin(), records.end(),
                     [](const record& a, const record& b) { return a.fingerprint < b.fingerprint; });
    rep.records = std::move(records);
    return rep;
}

inline nlohmann::json to_json(const report& r) {
    auto recs = nlohmann::json::array();
    for (const auto& x : r.records)
        recs.push_back({{"source", x.source},
                        {"fingerprint", x.fingerprint},
                        {"status", x.status},
                        {"result", x.result},
                        {"findings", x.findings},
                        {"millis", x.millis}});
    return {{"version", r.version},
            {"config", to_json(r.config)},
            {"records", recs},
            {"summary",
             {{"instances", r.summary.instances},
              {"pass", r.summary.pass},
              {"fail", r.summary.fail},
              {"finding", r.summary.finding},
              {"gated", r.summary.gated},
              {"errors", r.summary.errors}}},
            {"exit_code", r.exit_code()}};
}

/**
 * @brief renders a report
 *
 * "machine" is one JSON document: version, config, records (source,
 * fingerprint, status, result, findings, millis), summary and exit_code.
 * "human" is a table with one line per record and a summary line; for
 * `gen` it is the instance text itself.
 */
inline std::string emit_report(const report& r, const std::string& format) {
    if (format == "machine") return to_json(r).dump(2) + "\n";
    if (format != "human") throw usage_error("format must be human or machine");
    if (r.config.command == "gen") return r.raw;
    std::ostringstream out;
    out << r.version << "  " << r.config.command;
    if (!r.config.argument.empty()) out << " " << r.config.argument;
    out << "\n";
    char line[256];
    std::snprintf(line, sizeof line, "%-28s %-16s %-22s %s\n", "source", "fingerprint", "status", "result");
    out << line;
    for (const auto& x : r.records) {
        std::string brief;
        const auto& res = x.result;
        if (res.contains("snp_set")) brief = "snp_set " + res["snp_set"].dump();
        else if (res.contains("certificate")) brief = "witnesses " + res["certificate"]["witnesses"].dump();
        else if (res.contains("witnesses")) brief = "witnesses " + res["witnesses"].dump();
        else if (res.contains("order")) brief = "order " + res["order"].dump() + " feedback " + res["feedback"].dump();
        else if (res.contains("outcome")) brief = res["outcome"].get<std::string>() + " after " + std::to_string(res["orders"].size()) + " orders, cycle " + res["cycle_length"].dump();
        else if (res.contains("delta")) brief = "min-in " + res["delta"]["min_in"].dump() + " min-out " + res["delta"]["min_out"].dump() + " good " + res["delta"]["good_digraph"].dump();
        else if (res.contains("failed_clause")) brief = "failed " + res["failed_clause"].get<std::string>();
        else if (res.contains("gates")) {
            for (const auto& g : res["gates"])
                if (g["applicable"].get<bool>()) brief += g["theorem"].get<std::string>() + " ";
            brief = "applicable: " + (brief.empty() ? std::string("none") : brief);
        } else if (res.contains("error")) brief = res["error"].get<std::string>();
        std::snprintf(line, sizeof line, "%-28s %-16s %-22s ", x.source.substr(0, 28).c_str(), x.fingerprint.c_str(),
                      x.status.c_str());
        out << line << brief << "\n";
        if (res.contains("certificate")) {
            for (const auto& t : res["certificate"]["trace"]) out << "    " << t.get<std::string>() << "\n";
            for (const auto& v : res["certificate"]["verdicts"])
                out << "    vertex " << v["vertex"] << ": d+ " << v["out"] << ", d++ " << v["second_out"] << "\n";
        }
        for (const auto& f : x.findings) out << "    finding: " << f << "\n";
    }
    const auto& s = r.summary;
    out << "instances " << s.instances << "  pass " << s.pass << "  fail " << s.fail << "  finding " << s.finding
        << "  gated " << s.gated << "  errors " << s.errors << "\n";
    return out.str();
}

}  // namespace snc

#endif
