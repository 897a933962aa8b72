#pragma once

// Perfect state transfer decisions for normal Cayley graphs over V_{8n}, read off 2-adic valuations of the
// eigenvalue gaps alpha_1 - lambda.

#include <bit>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vpst/error.hpp"
#include "vpst/group.hpp"
#include "vpst/spectrum.hpp"

namespace vpst {

/// A 2-adic valuation; the infinite value (of 0) compares greater than every finite one.
class Valuation {
public:
    static Valuation infinite() { return Valuation(); }
    static Valuation finite(int v) { return Valuation(v); }

    bool is_infinite() const { return !value_; }
    int value() const {
        if (!value_) throw std::logic_error("infinite valuation has no finite value");
        return *value_;
    }

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
        return *a.value_ <=> *b.value_;
    }

    /// Valuation of a product.
    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.is_infinite() || b.is_infinite()) return infinite();
        return finite(*a.value_ + *b.value_);
    }

    std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

private:
    Valuation() = default;
    explicit Valuation(int v) : value_(v) {}
    std::optional<int> value_;
};

inline Valuation nu2(std::int64_t x) {
    if (x == 0) return Valuation::infinite();
    const auto mag = x < 0 ? 0 - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
    return Valuation::finite(std::countr_zero(mag));
}

enum class PstErrorKind { same_vertex, odd_n, even_n, not_integral, degenerate_spectrum };

inline std::string_view to_string(PstErrorKind k) {
    switch (k) {
        case PstErrorKind::same_vertex: return "SameVertex";
        case PstErrorKind::odd_n: return "OddN";
        case PstErrorKind::even_n: return "EvenN";
        case PstErrorKind::not_integral: return "NotIntegral";
        case PstErrorKind::degenerate_spectrum: return "DegenerateSpectrum";
    }
    return "?";
}

class PstError : public Error {
public:
    PstError(PstErrorKind kind, const std::string& detail)
        : Error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}
    PstErrorKind kind() const { return kind_; }

private:
    PstErrorKind kind_;
};

/// gcd of |alpha_1 - lambda| over the distinct eigenvalues lambda != alpha_1.
inline std::int64_t gap_gcd(const SpectrumTable& table) {
    if (!table.all_integral()) throw PstError(PstErrorKind::not_integral, "the spectrum is not integral");
    const std::int64_t a1 = *table.alpha(1).integer_value;
    std::set<std::int64_t> distinct;
    for (const auto& e : table.eigenvalues()) distinct.insert(*e.integer_value);
    std::int64_t m = 0;
    for (auto x : distinct)
        if (x != a1) m = std::gcd(m, std::abs(a1 - x));
    if (m == 0) throw PstError(PstErrorKind::degenerate_spectrum, "only one distinct eigenvalue");
    return m;
}

/// Which rule decided a vertex pair.
enum class Clause {
    // odd n
    no_go_blocks_12,  // u, v in V1 u V2
    no_go_blocks_14,
    no_go_blocks_23,
    no_go_blocks_34,
    valuation_pattern,
    odd_antipodal,
    // even n
    no_go_cross_12,  // one endpoint in V1, the other in V2
    no_go_cross_14,
    no_go_cross_23,
    no_go_cross_34,
    no_type_match,
    type1_same_block,
    type1_opposite_block,
    type2_same_block,
    type2_opposite_block,
    type3_antipodal,
    // both
    displacement_mismatch,
    not_integral,
};

inline std::string_view to_string(Clause c) {
    switch (c) {
        case Clause::no_go_blocks_12: return "no_go_blocks_12";
        case Clause::no_go_blocks_14: return "no_go_blocks_14";
        case Clause::no_go_blocks_23: return "no_go_blocks_23";
        case Clause::no_go_blocks_34: return "no_go_blocks_34";
        case Clause::valuation_pattern: return "valuation_pattern";
        case Clause::odd_antipodal: return "odd_antipodal";
        case Clause::no_go_cross_12: return "no_go_cross_12";
        case Clause::no_go_cross_14: return "no_go_cross_14";
        case Clause::no_go_cross_23: return "no_go_cross_23";
        case Clause::no_go_cross_34: return "no_go_cross_34";
        case Clause::no_type_match: return "no_type_match";
        case Clause::type1_same_block: return "type1_same_block";
        case Clause::type1_opposite_block: return "type1_opposite_block";
        case Clause::type2_same_block: return "type2_same_block";
        case Clause::type2_opposite_block: return "type2_opposite_block";
        case Clause::type3_antipodal: return "type3_antipodal";
        case Clause::displacement_mismatch: return "displacement_mismatch";
        case Clause::not_integral: return "not_integral";
    }
    return "?";
}

/// |u - v| values a positive verdict under this clause may have.
inline std::vector<int> displacements(Clause c, int n) {
    switch (c) {
        case Clause::odd_antipodal:
        case Clause::type3_antipodal: return {4 * n};
        case Clause::type1_same_block:
        case Clause::type2_same_block: return {n};
        case Clause::type1_opposite_block:
        case Clause::type2_opposite_block: return {3 * n, 5 * n};
        default: return {};
    }
}

struct PstVerdict {
    VertexLabel u;
    VertexLabel v;
    bool has_pst = false;
    Clause clause = Clause::not_integral;
    std::int64_t M = 0;       // set when has_pst
    double min_time = 0.0;    // pi / M when has_pst
};

struct TypeClassification {
    bool type1 = false;
    bool type2 = false;
    bool type3 = false;

    friend bool operator==(const TypeClassification&, const TypeClassification&) = default;
};

namespace detail {

inline void check_pair(const GroupParams& g, VertexLabel u, VertexLabel v) {
    region_of(g, u);
    region_of(g, v);
    if (u == v) throw PstError(PstErrorKind::same_vertex, "u = v = " + std::to_string(u.idx));
}

inline PstVerdict positive(VertexLabel u, VertexLabel v, Clause c, const SpectrumTable& table) {
    const auto m = gap_gcd(table);
    return {u, v, true, c, m, std::numbers::pi / static_cast<double>(m)};
}

/// Valuation pattern: every listed gap in `equal` has the baseline valuation, every gap in `greater` exceeds it.
class GapPattern {
public:
    explicit GapPattern(const SpectrumTable& t) : table_(t), a1_(*t.alpha(1).integer_value) {}

    Valuation gap(RepKind kind, int index) const {
        return nu2(a1_ - *table_.at({kind, index}).integer_value);
    }

    /// Appends (kind, index) when the index exists for this n.
    void add(std::vector<std::pair<RepKind, int>>& into, RepKind kind, int index) const {
        if (table_.has(kind, index)) into.emplace_back(kind, index);
    }

    bool holds(Valuation baseline, const std::vector<std::pair<RepKind, int>>& equal,
               const std::vector<std::pair<RepKind, int>>& greater) const {
        for (auto [k, i] : equal)
            if (gap(k, i) != baseline) return false;
        for (auto [k, i] : greater)
            if (!(gap(k, i) > baseline)) return false;
        return true;
    }

private:
    const SpectrumTable& table_;
    std::int64_t a1_;
};

}  // namespace detail

/// n odd: PST between u and v iff |u - v| = 4n, the spectrum is integral, nu2(alpha_1 - beta_j) is the same for
/// every j and nu2 of alpha_1 - alpha_{2,3,4} and of alpha_1 - gamma_k all exceed it.
inline PstVerdict classify_pair_odd(VertexLabel u, VertexLabel v, const SpectrumTable& table) {
    const auto& g = table.params();
    if (!g.is_odd()) throw PstError(PstErrorKind::even_n, "odd-n rule applied with n = " + std::to_string(g.n()));
    detail::check_pair(g, u, v);
    const int ru = static_cast<int>(region_of(g, u));
    const int rv = static_cast<int>(region_of(g, v));
    auto within = [&](int p, int q) { return (ru == p || ru == q) && (rv == p || rv == q); };
    if (within(0, 1)) return {u, v, false, Clause::no_go_blocks_12};
    if (within(0, 3)) return {u, v, false, Clause::no_go_blocks_14};
    if (within(1, 2)) return {u, v, false, Clause::no_go_blocks_23};
    if (within(2, 3)) return {u, v, false, Clause::no_go_blocks_34};
    if (std::abs(u.idx - v.idx) != 4 * g.n()) return {u, v, false, Clause::displacement_mismatch};
    if (!table.all_integral()) return {u, v, false, Clause::not_integral};

    detail::GapPattern p(table);
    std::vector<std::pair<RepKind, int>> equal;
    std::vector<std::pair<RepKind, int>> greater;
    for (int j = 1; j < g.n(); ++j) p.add(equal, RepKind::psi, j);
    for (int i = 2; i <= 4; ++i) p.add(greater, RepKind::theta, i);
    for (int k = 1; k < g.n(); ++k) p.add(greater, RepKind::phi, k);
    if (!p.holds(p.gap(RepKind::psi, 0), equal, greater)) return {u, v, false, Clause::valuation_pattern};
    return detail::positive(u, v, Clause::odd_antipodal, table);
}

/// n even. Type 1: baseline nu2(alpha_1 - beta_1); beta_odd, gamma_odd equal; alpha_2..8, beta_even, gamma_even
/// greater. Type 2: baseline nu2(alpha_1 - alpha_2); alpha_{2,4,6,8}, beta_odd, gamma_even equal;
/// alpha_{3,5,7}, beta_even, gamma_odd greater. Type 3: baseline nu2(alpha_1 - alpha_2); alpha_{2,4,6,8} and
/// all gamma equal; alpha_{3,5,7} and all beta greater. Indices equal to n do not exist and are skipped.
/// A non-integral spectrum has no type.
inline TypeClassification classify_graph_type(const SpectrumTable& table) {
    const auto& g = table.params();
    if (g.is_odd()) throw PstError(PstErrorKind::odd_n, "types are defined for even n only");
    if (!table.all_integral()) return {};
    const int n = g.n();
    detail::GapPattern p(table);
    using L = std::vector<std::pair<RepKind, int>>;
    TypeClassification out;

    {
        L eq, gt;
        for (int j = 1; j < n; ++j) p.add(j % 2 ? eq : gt, RepKind::psi, j);
        for (int k = 1; k < n; ++k) p.add(k % 2 ? eq : gt, RepKind::phi, k);
        for (int i = 2; i <= 8; ++i) p.add(gt, RepKind::theta, i);
        out.type1 = p.holds(p.gap(RepKind::psi, 1), eq, gt);
    }
    {
        L eq, gt;
        for (int i = 2; i <= 8; ++i) p.add(i % 2 ? gt : eq, RepKind::theta, i);
        for (int j = 1; j < n; ++j) p.add(j % 2 ? eq : gt, RepKind::psi, j);
        for (int k = 1; k < n; ++k) p.add(k % 2 ? gt : eq, RepKind::phi, k);
        out.type2 = p.holds(p.gap(RepKind::theta, 2), eq, gt);
    }
    {
        L eq, gt;
        for (int i = 2; i <= 8; ++i) p.add(i % 2 ? gt : eq, RepKind::theta, i);
        for (int j = 1; j < n; ++j) p.add(gt, RepKind::psi, j);
        for (int k = 1; k < n; ++k) p.add(eq, RepKind::phi, k);
        out.type3 = p.holds(p.gap(RepKind::theta, 2), eq, gt);
    }
    return out;
}

inline PstVerdict classify_pair_even(VertexLabel u, VertexLabel v, const SpectrumTable& table,
                                     const TypeClassification& types) {
    const auto& g = table.params();
    if (g.is_odd()) throw PstError(PstErrorKind::odd_n, "even-n rule applied with n = " + std::to_string(g.n()));
    detail::check_pair(g, u, v);
    const int n = g.n();
    const int ru = static_cast<int>(region_of(g, u));
    const int rv = static_cast<int>(region_of(g, v));
    auto across = [&](int p, int q) { return (ru == p && rv == q) || (ru == q && rv == p); };
    if (across(0, 1)) return {u, v, false, Clause::no_go_cross_12};
    if (across(0, 3)) return {u, v, false, Clause::no_go_cross_14};
    if (across(1, 2)) return {u, v, false, Clause::no_go_cross_23};
    if (across(2, 3)) return {u, v, false, Clause::no_go_cross_34};
    // remaining: same block, or V1-V3 / V2-V4
    const bool same = ru == rv;
    const int d = std::abs(u.idx - v.idx);
    const bool zero_mod4 = g.parity() == Parity::even0mod4;

    std::optional<Clause> fired;
    if (same && d == n) {
        fired = zero_mod4 ? Clause::type1_same_block : Clause::type2_same_block;
    } else if (!same && (d == 3 * n || d == 5 * n)) {
        fired = zero_mod4 ? Clause::type2_opposite_block : Clause::type1_opposite_block;
    } else if (d == 4 * n) {
        fired = Clause::type3_antipodal;
    }
    if (!fired) return {u, v, false, Clause::displacement_mismatch};
    if (!table.all_integral()) return {u, v, false, Clause::not_integral};

    bool ok = false;
    switch (*fired) {
        case Clause::type1_same_block:
        case Clause::type1_opposite_block: ok = types.type1; break;
        case Clause::type2_same_block:
        case Clause::type2_opposite_block: ok = types.type2; break;
        default: ok = types.type3; break;
    }
    if (!ok) return {u, v, false, Clause::no_type_match};
    return detail::positive(u, v, *fired, table);
}

inline PstVerdict classify_pair_even(VertexLabel u, VertexLabel v, const SpectrumTable& table) {
    return classify_pair_even(u, v, table, classify_graph_type(table));
}

inline PstVerdict classify_pair(VertexLabel u, VertexLabel v, const SpectrumTable& table) {
    return table.params().is_odd() ? classify_pair_odd(u, v, table) : classify_pair_even(u, v, table);
}

/// Every pair u < v with PST, in lexicographic order.
inline std::vector<PstVerdict> all_pst_pairs(const SpectrumTable& table) {
    std::vector<PstVerdict> out;
    if (!table.all_integral()) return out;
    const auto& g = table.params();
    const bool odd = g.is_odd();
    const TypeClassification types = odd ? TypeClassification{} : classify_graph_type(table);
    if (!odd && !types.type1 && !types.type2 && !types.type3) return out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            auto verdict = odd ? classify_pair_odd({u}, {v}, table) : classify_pair_even({u}, {v}, table, types);
            if (verdict.has_pst) out.push_back(verdict);
        }
    return out;
}

}  // namespace vpst
