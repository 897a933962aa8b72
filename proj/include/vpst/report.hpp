#pragma once

// JSON reports for the command-line front end. Field names are fixed; see docs/report_schema.md.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vpst/group.hpp"
#include "vpst/oracle.hpp"
#include "vpst/pst.hpp"
#include "vpst/spectrum.hpp"

namespace vpst {

/// x rounded to 12 significant digits, so reports are byte-stable across platforms.
inline double round12(double x) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::stod(buf);
}

struct SpectrumEntry {
    std::string label;
    double value = 0.0;
    std::optional<std::int64_t> integer;  // set when the whole spectrum is integral
    int multiplicity = 1;

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct PairEntry {
    int u = 0;
    int v = 0;
    std::string clause;
    std::int64_t M = 0;
    double min_time_over_pi = 0.0;
    std::optional<double> oracle_magnitude;  // |H(pi/M)_{uv}| when verified

    friend bool operator==(const PairEntry&, const PairEntry&) = default;
};

struct OracleSummary {
    bool checked = false;
    std::optional<double> max_deviation;  // max over verified pairs of 1 - |H(pi/M)_{uv}|
    int disagreements = 0;

    friend bool operator==(const OracleSummary&, const OracleSummary&) = default;
};

struct AnalysisReport {
    int n = 1;
    std::string parity;
    std::vector<std::string> classes;
    std::vector<std::string> elements;
    std::vector<SpectrumEntry> spectrum;
    bool integral = false;
    std::optional<TypeClassification> types;  // even n only
    std::vector<PairEntry> pst_pairs;
    OracleSummary oracle;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Threshold above which the oracle counts |H(pi/M)_{uv}| as transfer.
inline constexpr double kTransferThreshold = 1.0 - 1e-6;

inline AnalysisReport analyze(const ConnectionSet& set, bool verify) {
    const auto& g = set.params();
    const auto chars = shared_character_table(g);
    const SpectrumTable table = eigenvalues(set, *chars);

    AnalysisReport r;
    r.n = g.n();
    r.parity = std::string(to_string(g.parity()));
    for (int c : set.class_ids()) r.classes.push_back(chars->classes()[static_cast<std::size_t>(c)].tag);
    for (const auto& x : set.members()) r.elements.push_back(to_string(x));
    r.integral = table.all_integral();
    for (const auto& e : table.eigenvalues()) {
        SpectrumEntry s{e.label(), round12(e.value), std::nullopt, e.multiplicity};
        if (r.integral) {
            s.integer = e.integer_value;
            s.value = static_cast<double>(*e.integer_value);
        }
        r.spectrum.push_back(s);
    }
    if (!g.is_odd()) r.types = classify_graph_type(table);
    for (const auto& p : all_pst_pairs(table))
        r.pst_pairs.push_back({p.u.idx, p.v.idx, std::string(to_string(p.clause)), p.M, round12(1.0 / p.M), {}});

    if (verify) {
        r.oracle.checked = true;
        if (!r.pst_pairs.empty()) {
            const DenseWalk walk(adjacency(set));
            double worst = 0.0;
            for (auto& p : r.pst_pairs) {
                const double mag = std::abs(walk.entry(p.u, p.v, std::numbers::pi / static_cast<double>(p.M)));
                p.oracle_magnitude = round12(mag);
                worst = std::max(worst, 1.0 - mag);
                if (mag <= kTransferThreshold) ++r.oracle.disagreements;
            }
            r.oracle.max_deviation = round12(worst);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------------------------------------------
// JSON

using nlohmann::ordered_json;

inline void to_json(ordered_json& j, const TypeClassification& t) {
    j = ordered_json{{"type1", t.type1}, {"type2", t.type2}, {"type3", t.type3}};
}
inline void from_json(const ordered_json& j, TypeClassification& t) {
    t.type1 = j.at("type1").get<bool>();
    t.type2 = j.at("type2").get<bool>();
    t.type3 = j.at("type3").get<bool>();
}

inline void to_json(ordered_json& j, const SpectrumEntry& s) {
    j = ordered_json{{"label", s.label}};
    if (s.integer)
        j["value"] = *s.integer;
    else
        j["value"] = s.value;
    j["multiplicity"] = s.multiplicity;
    j["integer"] = s.integer.has_value();
}
inline void from_json(const ordered_json& j, SpectrumEntry& s) {
    s.label = j.at("label").get<std::string>();
    s.multiplicity = j.at("multiplicity").get<int>();
    if (j.at("integer").get<bool>()) {
        s.integer = j.at("value").get<std::int64_t>();
        s.value = static_cast<double>(*s.integer);
    } else {
        s.integer.reset();
        s.value = j.at("value").get<double>();
    }
}

inline void to_json(ordered_json& j, const PairEntry& p) {
    j = ordered_json{{"u", p.u}, {"v", p.v}, {"clause", p.clause}, {"M", p.M}, {"minTimeOverPi", p.min_time_over_pi}};
    if (p.oracle_magnitude) j["oracleMagnitude"] = *p.oracle_magnitude;
}
inline void from_json(const ordered_json& j, PairEntry& p) {
    p.u = j.at("u").get<int>();
    p.v = j.at("v").get<int>();
    p.clause = j.at("clause").get<std::string>();
    p.M = j.at("M").get<std::int64_t>();
    p.min_time_over_pi = j.at("minTimeOverPi").get<double>();
    if (j.contains("oracleMagnitude"))
        p.oracle_magnitude = j.at("oracleMagnitude").get<double>();
    else
        p.oracle_magnitude.reset();
}

inline void to_json(ordered_json& j, const OracleSummary& o) {
    j = ordered_json{{"checked", o.checked}};
    j["maxDeviation"] = o.max_deviation ? ordered_json(*o.max_deviation) : ordered_json(nullptr);
    j["disagreements"] = o.disagreements;
}
inline void from_json(const ordered_json& j, OracleSummary& o) {
    o.checked = j.at("checked").get<bool>();
    const auto& d = j.at("maxDeviation");
    if (d.is_null())
        o.max_deviation.reset();
    else
        o.max_deviation = d.get<double>();
    o.disagreements = j.at("disagreements").get<int>();
}

inline void to_json(ordered_json& j, const AnalysisReport& r) {
    j = ordered_json{{"n", r.n}, {"parity", r.parity}};
    j["connectionSet"] = ordered_json{{"classes", r.classes}, {"elements", r.elements}, {"size", r.elements.size()}};
    j["spectrum"] = r.spectrum;
    j["integral"] = r.integral;
    j["types"] = r.types ? ordered_json(*r.types) : ordered_json(nullptr);
    j["pstPairs"] = r.pst_pairs;
    j["oracle"] = r.oracle;
}
inline void from_json(const ordered_json& j, AnalysisReport& r) {
    r.n = j.at("n").get<int>();
    r.parity = j.at("parity").get<std::string>();
    r.classes = j.at("connectionSet").at("classes").get<std::vector<std::string>>();
    r.elements = j.at("connectionSet").at("elements").get<std::vector<std::string>>();
    r.spectrum = j.at("spectrum").get<std::vector<SpectrumEntry>>();
    r.integral = j.at("integral").get<bool>();
    if (j.at("types").is_null())
        r.types.reset();
    else
        r.types = j.at("types").get<TypeClassification>();
    r.pst_pairs = j.at("pstPairs").get<std::vector<PairEntry>>();
    r.oracle = j.at("oracle").get<OracleSummary>();
}

struct SearchSummary {
    int n = 1;
    int max_classes = 0;
    int total = 0;
    int integral = 0;
    int with_pst = 0;
    std::vector<AnalysisReport> graphs;  // PST-admitting sets only, in enumeration order
    OracleSummary oracle;

    friend bool operator==(const SearchSummary&, const SearchSummary&) = default;
};

inline void to_json(ordered_json& j, const SearchSummary& s) {
    j = ordered_json{{"n", s.n},           {"maxClasses", s.max_classes}, {"total", s.total},
                     {"integral", s.integral}, {"withPst", s.with_pst},     {"graphs", s.graphs},
                     {"oracle", s.oracle}};
}
inline void from_json(const ordered_json& j, SearchSummary& s) {
    s.n = j.at("n").get<int>();
    s.max_classes = j.at("maxClasses").get<int>();
    s.total = j.at("total").get<int>();
    s.integral = j.at("integral").get<int>();
    s.with_pst = j.at("withPst").get<int>();
    s.graphs = j.at("graphs").get<std::vector<AnalysisReport>>();
    s.oracle = j.at("oracle").get<OracleSummary>();
}

}  // namespace vpst
