#pragma once

// Command-line front end: analyze, search, probe. run_cli returns the process exit code:
//   0 ok, 1 usage, 2 invalid connection set, 3 numerically ambiguous integrality, 4 decision/oracle disagreement.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vpst/group.hpp"
#include "vpst/oracle.hpp"
#include "vpst/pst.hpp"
#include "vpst/report.hpp"
#include "vpst/spectrum.hpp"

namespace vpst {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInvalidSet = 2, kExitAmbiguous = 3, kExitDisagreement = 4 };

class UsageError : public Error {
public:
    using Error::Error;
};

/// "all" (every non-identity element), class tags joined by '+' ("[a]+[b]"), or a comma-separated element list
/// ("a*b, a^3*b^3"). Nothing is added to make the set symmetric or normal.
inline std::vector<GroupElement> parse_set_spec(const GroupParams& g, const std::string& spec) {
    std::string text = spec;
    text.erase(std::remove_if(text.begin(), text.end(), [](char c) { return c == ' ' || c == '\t'; }), text.end());
    if (text.empty()) throw UsageError("empty connection-set specifier");
    std::vector<GroupElement> out;
    if (text == "all") {
        for (const auto& x : all_elements(g))
            if (x != identity()) out.push_back(x);
        return out;
    }
    if (text.front() == '[') {
        const auto classes = conjugacy_classes(g);
        std::stringstream ss(text);
        std::string tag;
        // tags themselves never contain '+'
        while (std::getline(ss, tag, '+')) {
            auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) { return c.tag == tag; });
            if (it == classes.end()) {
                std::string known;
                for (const auto& c : classes) known += (known.empty() ? "" : " ") + c.tag;
                throw UsageError("unknown class tag '" + tag + "' for n = " + std::to_string(g.n()) + "; tags: " + known);
            }
            out.insert(out.end(), it->members.begin(), it->members.end());
        }
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_element(g, item));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("bad element '") + item + "': " + e.what());
        }
    }
    return out;
}

inline int grid_points_from_env(int fallback = 10000) {
    const char* env = std::getenv("PST_GRID_POINTS");
    if (!env || !*env) return fallback;
    try {
        std::size_t used = 0;
        const int v = std::stoi(env, &used);
        if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("PST_GRID_POINTS must be a positive integer, got '") + env + "'");
}

namespace detail {

inline void print_table(std::ostream& err, const AnalysisReport& r) {
    err << "n = " << r.n << " (" << r.parity << "), |S| = " << r.elements.size() << ", classes:";
    for (const auto& c : r.classes) err << ' ' << c;
    err << '\n';
    for (const auto& s : r.spectrum) {
        err << "  " << std::left << std::setw(10) << s.label << std::right << std::setw(16);
        if (s.integer)
            err << *s.integer;
        else
            err << std::setprecision(12) << s.value;
        err << "  x" << s.multiplicity << '\n';
    }
    err << (r.integral ? "integral" : "not integral");
    if (r.types) err << ", types " << r.types->type1 << r.types->type2 << r.types->type3;
    err << ", " << r.pst_pairs.size() << " PST pair(s)\n";
    for (const auto& p : r.pst_pairs)
        err << "  " << p.u << " <-> " << p.v << "  " << p.clause << "  t = pi/" << p.M << '\n';
}

inline int emit(std::ostream& out, const ordered_json& j) {
    out << j.dump(2) << '\n';
    return kExitOk;
}

}  // namespace detail

inline int cmd_analyze(int n, const std::string& spec, bool verify, std::ostream& out, std::ostream& err, bool tty) {
    const GroupParams g(n);
    const auto set = validate_connection_set(g, parse_set_spec(g, spec));
    const auto report = analyze(set, verify);
    if (tty) detail::print_table(err, report);
    detail::emit(out, report);
    return report.oracle.disagreements > 0 ? kExitDisagreement : kExitOk;
}

inline SearchSummary search(const GroupParams& g, int max_classes, bool verify, unsigned jobs) {
    const auto sets = enumerate_connection_sets(g, max_classes);
    std::vector<AnalysisReport> reports(sets.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < sets.size(); i = next++) reports[i] = analyze(sets[i], verify);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(sets.size(), 1))));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    SearchSummary s;
    s.n = g.n();
    s.max_classes = max_classes;
    s.total = static_cast<int>(reports.size());
    s.oracle.checked = verify;
    for (auto& r : reports) {
        s.integral += r.integral ? 1 : 0;
        if (r.pst_pairs.empty()) continue;
        ++s.with_pst;
        s.oracle.disagreements += r.oracle.disagreements;
        if (r.oracle.max_deviation)
            s.oracle.max_deviation = std::max(s.oracle.max_deviation.value_or(0.0), *r.oracle.max_deviation);
        s.graphs.push_back(std::move(r));
    }
    return s;
}

inline int cmd_search(int n, int max_classes, bool verify, int max_n, unsigned jobs, std::ostream& out,
                      std::ostream& err, bool tty) {
    if (n > max_n) throw UsageError("n = " + std::to_string(n) + " exceeds the search bound " + std::to_string(max_n));
    const GroupParams g(n);
    if (max_classes < 0) max_classes = static_cast<int>(conjugacy_classes(g).size()) - 1;
    const auto summary = search(g, max_classes, verify, jobs);
    if (tty)
        err << "n = " << n << ": " << summary.total << " connection sets, " << summary.integral << " integral, "
            << summary.with_pst << " with PST, " << summary.oracle.disagreements << " disagreement(s)\n";
    detail::emit(out, summary);
    return summary.oracle.disagreements > 0 ? kExitDisagreement : kExitOk;
}

inline int cmd_probe(int n, const std::string& spec, int u, int v, int grid, const std::vector<double>& taus,
                     std::ostream& out, std::ostream& err, bool tty) {
    const GroupParams g(n);
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
        throw UsageError("vertices must lie in [0, " + std::to_string(g.order()) + ")");
    if (grid < 1) throw UsageError("--grid must be positive");
    const auto set = validate_connection_set(g, parse_set_spec(g, spec));
    const auto table = eigenvalues(set);
    const DenseWalk walk(adjacency(set));

    auto result = [](const ProbeResult& p) { return ordered_json{{"tau", round12(p.tau)}, {"magnitude", round12(p.magnitude)}}; };
    ordered_json j{{"n", n}, {"u", u}, {"v", v}, {"gridPoints", grid}, {"integral", table.all_integral()}};
    const auto best = pst_probe(walk, u, v, uniform_grid(grid));
    j["grid"] = result(best);
    ordered_json cands = ordered_json::array();
    if (table.all_integral()) {
        const auto m = gap_gcd(table);
        j["M"] = m;
        for (double t : candidate_times(m)) cands.push_back(result(pst_probe(walk, u, v, {t})));
    } else {
        j["M"] = nullptr;
    }
    j["candidates"] = cands;
    ordered_json explicit_times = ordered_json::array();
    for (double t : taus) explicit_times.push_back(result(pst_probe(walk, u, v, {t})));
    j["times"] = explicit_times;
    if (tty) err << "best on grid: |H(" << best.tau << ")_{" << u << "," << v << "}| = " << best.magnitude << '\n';
    return detail::emit(out, j);
}

/// argv[0] is the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool tty = false) {
    CLI::App app{"Perfect state transfer on normal Cayley graphs over V_{8n}"};
    app.require_subcommand(1);

    int n = 0;
    std::string spec;
    bool verify = false;
    int max_classes = -1;
    int max_n = 8;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    int u = 0;
    int v = 0;
    int grid = 0;
    std::vector<double> taus;

    auto* analyze_cmd = app.add_subcommand("analyze", "spectrum, types and PST pairs of one connection set");
    analyze_cmd->add_option("--n", n, "group parameter (order 8n)")->required();
    analyze_cmd->add_option("--set", spec, "'all', class tags joined by '+', or comma-separated elements")->required();
    analyze_cmd->add_flag("--verify", verify, "check every PST pair against the numeric walk");

    auto* search_cmd = app.add_subcommand("search", "decide PST for every class-union connection set");
    search_cmd->add_option("--n", n, "group parameter (order 8n)")->required();
    search_cmd->add_option("--max-classes", max_classes, "largest number of classes in a union (default: all)");
    search_cmd->add_option("--max-n", max_n, "refuse n above this bound")->capture_default_str();
    search_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    search_cmd->add_flag("--verify", verify, "check every PST pair against the numeric walk");

    auto* probe_cmd = app.add_subcommand("probe", "max |H(tau)_{uv}| over a time grid and the candidate times");
    probe_cmd->add_option("--n", n, "group parameter (order 8n)")->required();
    probe_cmd->add_option("--set", spec, "connection-set specifier")->required();
    probe_cmd->add_option("--u", u, "first vertex label")->required();
    probe_cmd->add_option("--v", v, "second vertex label")->required();
    probe_cmd->add_option("--grid", grid, "grid points on (0, 2 pi] (default: PST_GRID_POINTS or 10000)");
    probe_cmd->add_option("--tau", taus, "additional times to evaluate");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (n < 1) throw UsageError("--n must be at least 1");
        if (*analyze_cmd) return cmd_analyze(n, spec, verify, out, err, tty);
        if (*search_cmd) return cmd_search(n, max_classes, verify, max_n, jobs, out, err, tty);
        if (grid == 0) grid = grid_points_from_env();
        return cmd_probe(n, spec, u, v, grid, taus, out, err, tty);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConnectionSetError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidSet;
    } catch (const NumericallyAmbiguous& e) {
        err << "error: " << e.what() << '\n';
        return kExitAmbiguous;
    }
}

}  // namespace vpst
