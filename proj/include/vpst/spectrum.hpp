#pragma once

// Adjacency spectrum of the normal Cayley graph Cay(V_{8n}, S): one eigenvalue per irreducible representation,
// lambda = (1/d) sum_{s in S} chi(s) with multiplicity d^2, plus the closed-form orthonormal eigenbasis.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vpst/characters.hpp"
#include "vpst/cyclotomic.hpp"
#include "vpst/error.hpp"
#include "vpst/group.hpp"

namespace vpst {

class SpectrumError : public Error {
public:
    using Error::Error;
};

/// Thrown when an eigenvalue lies strictly between the integrality screen and the ambiguity gap and no exact
/// form is available to settle it.
class NumericallyAmbiguous : public SpectrumError {
public:
    using SpectrumError::SpectrumError;
};

inline constexpr double kIntegerScreen = 1e-8;
inline constexpr double kAmbiguityGap = 1e-4;

/// "alpha_i" for theta_i, "beta_j" for psi_j, "gamma_k" for phi_k.
inline std::string eigenvalue_label(const RepDescriptor& d) {
    static constexpr const char* names[] = {"alpha_", "beta_", "gamma_"};
    return names[static_cast<int>(d.kind)] + std::to_string(d.index);
}

struct Eigenvalue {
    RepDescriptor rep;
    /// sum_{s in S} chi(s); the eigenvalue is this divided by rep.degree(). Absent for synthetic tables.
    std::optional<Cyclotomic> character_sum;
    double value = 0.0;
    int multiplicity = 1;
    bool is_integer = false;
    std::optional<std::int64_t> integer_value;

    std::string label() const { return eigenvalue_label(rep); }
};

class SpectrumTable {
public:
    SpectrumTable(GroupParams g, std::optional<ConnectionSet> set, int degree, std::vector<Eigenvalue> values)
        : params_(g), set_(std::move(set)), degree_(degree), eigenvalues_(std::move(values)) {}

    /// A table with no connection set behind it, one value per representation in representations(g) order.
    /// Used to exercise the decision rules on hand-made spectra.
    static SpectrumTable synthetic(const GroupParams& g, int degree, const std::vector<double>& values) {
        auto reps = representations(g);
        if (values.size() != reps.size())
            throw SpectrumError("synthetic spectrum needs " + std::to_string(reps.size()) + " values, got " +
                                std::to_string(values.size()));
        std::vector<Eigenvalue> ev;
        for (std::size_t i = 0; i < reps.size(); ++i)
            ev.push_back({reps[i], std::nullopt, values[i], reps[i].degree() * reps[i].degree(), false, std::nullopt});
        return SpectrumTable(g, std::nullopt, degree, std::move(ev));
    }

    const GroupParams& params() const { return params_; }
    const std::optional<ConnectionSet>& connection_set() const { return set_; }
    /// |S|, which is also alpha_1.
    int degree() const { return degree_; }
    const std::vector<Eigenvalue>& eigenvalues() const { return eigenvalues_; }
    std::vector<Eigenvalue>& eigenvalues() { return eigenvalues_; }
    bool all_integral() const { return all_integral_; }
    void set_all_integral(bool v) { all_integral_ = v; }

    const Eigenvalue& at(const RepDescriptor& d) const {
        check_descriptor(params_, d);
        for (const auto& e : eigenvalues_)
            if (e.rep == d) return e;
        throw SpectrumError("no eigenvalue for " + d.name());
    }
    const Eigenvalue& alpha(int i) const { return at({RepKind::theta, i}); }
    const Eigenvalue& beta(int j) const { return at({RepKind::psi, j}); }
    const Eigenvalue& gamma(int k) const { return at({RepKind::phi, k}); }

    /// Whether index j of the given kind exists for this n.
    bool has(RepKind kind, int index) const {
        auto [lo, hi] = index_range(params_, kind);
        return index >= lo && index <= hi;
    }

private:
    GroupParams params_;
    std::optional<ConnectionSet> set_;
    int degree_;
    std::vector<Eigenvalue> eigenvalues_;
    bool all_integral_ = false;
};

namespace detail {

/// Exact integer value of sum/degree when it is one.
inline std::optional<std::int64_t> exact_integer(const Eigenvalue& e) {
    if (!e.character_sum) return std::nullopt;
    auto k = e.character_sum->as_integer();
    if (!k || *k % e.rep.degree() != 0) return std::nullopt;
    return *k / e.rep.degree();
}

}  // namespace detail

/// Two-tier integrality decision. Values within kIntegerScreen of an integer are accepted (and confirmed against
/// the exact form when there is one); values at distance at least kAmbiguityGap are rejected; anything in
/// between is settled exactly or, without an exact form, raises NumericallyAmbiguous. When every value is an
/// integer the rounded spectrum must also satisfy sum m*lambda = 0 and sum m*lambda^2 = 8n|S|.
/// Sets each is_integer/integer_value and the table's all_integral flag; returns that flag.
inline bool check_integrality(SpectrumTable& table) {
    bool all = true;
    for (auto& e : table.eigenvalues()) {
        const double nearest = std::round(e.value);
        const double dist = std::abs(e.value - nearest);
        std::optional<std::int64_t> k;
        if (dist <= kIntegerScreen) {
            k = static_cast<std::int64_t>(nearest);
            if (e.character_sum) {
                auto exact = detail::exact_integer(e);
                if (exact != k)
                    throw SpectrumError(e.label() + " is numerically " + std::to_string(e.value) +
                                        " but its exact form disagrees");
            }
        } else if (dist < kAmbiguityGap) {
            if (!e.character_sum)
                throw NumericallyAmbiguous(e.label() + " = " + std::to_string(e.value) + " lies " +
                                           std::to_string(dist) + " from an integer");
            k = detail::exact_integer(e);
        }
        e.is_integer = k.has_value();
        e.integer_value = k;
        all = all && e.is_integer;
    }
    if (all) {
        std::int64_t trace = 0;
        std::int64_t second = 0;
        for (const auto& e : table.eigenvalues()) {
            trace += e.multiplicity * *e.integer_value;
            second += e.multiplicity * *e.integer_value * *e.integer_value;
        }
        const auto edges = static_cast<std::int64_t>(table.params().order()) * table.degree();
        all = trace == 0 && second == edges;
    }
    table.set_all_integral(all);
    return all;
}

/// Character table shared across calls for the same n.
inline std::shared_ptr<const CharacterTable> shared_character_table(const GroupParams& g) {
    static std::mutex lock;
    static std::map<int, std::shared_ptr<const CharacterTable>> cache;
    std::lock_guard guard(lock);
    auto& slot = cache[g.n()];
    if (!slot) slot = std::make_shared<const CharacterTable>(g);
    return slot;
}

inline SpectrumTable eigenvalues(const ConnectionSet& set, const CharacterTable& chars) {
    const auto& g = set.params();
    if (!(chars.params() == g)) throw SpectrumError("character table is for a different n");
    std::vector<Eigenvalue> out;
    const auto& reps = chars.representations();
    for (std::size_t r = 0; r < reps.size(); ++r) {
        Cyclotomic sum(4 * g.n());
        for (int c : set.class_ids())
            sum += chars.value(r, static_cast<std::size_t>(c)) *
                   static_cast<std::int64_t>(chars.classes()[static_cast<std::size_t>(c)].size());
        const int d = reps[r].degree();
        const std::complex<double> z = sum.value() / static_cast<double>(d);
        if (std::abs(z.imag()) > 1e-9) throw SpectrumError(eigenvalue_label(reps[r]) + " is not real");
        out.push_back({reps[r], sum, z.real(), d * d, false, std::nullopt});
    }
    SpectrumTable table(g, set, set.size(), std::move(out));
    check_integrality(table);
    return table;
}

inline SpectrumTable eigenvalues(const ConnectionSet& set) {
    return eigenvalues(set, *shared_character_table(set.params()));
}

// ---------------------------------------------------------------------------------------------------------------
// Closed-form eigenvectors

struct EigenvectorGroup {
    RepDescriptor rep;
    std::vector<Eigen::VectorXcd> vectors;  // 1 for theta, 4 for psi and phi
};

struct EigenvectorSet {
    GroupParams params;
    std::vector<EigenvectorGroup> groups;  // representations(params) order

    const EigenvectorGroup& group(const RepDescriptor& d) const {
        for (const auto& gr : groups)
            if (gr.rep == d) return gr;
        throw CharacterError("IndexOutOfRange: " + d.name());
    }

    /// All vectors as columns, group by group.
    Eigen::MatrixXcd matrix() const {
        const Eigen::Index dim = params.order();
        Eigen::MatrixXcd v(dim, dim);
        Eigen::Index col = 0;
        for (const auto& gr : groups)
            for (const auto& x : gr.vectors) v.col(col++) = x;
        return v;
    }
};

namespace detail {

/// One region of 2n entries: zeta^{step*r + offset} for r = 0..2n-1 (zeta = exp(2 pi i / 4n)), or zero.
struct Block {
    bool zero = true;
    int step = 0;
    int offset = 0;
};

inline Block seq(int step, int offset) { return {false, step, offset}; }
inline constexpr Block kZero{};

inline Eigen::VectorXcd assemble(const GroupParams& g, const std::array<Block, 4>& blocks, double scale) {
    const int m = g.rotations();
    const int N = 4 * g.n();
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(g.order());
    for (int q = 0; q < 4; ++q) {
        const Block& b = blocks[static_cast<std::size_t>(q)];
        if (b.zero) continue;
        for (int r = 0; r < m; ++r) {
            const int e = mod(b.step * r + b.offset, N);
            v(q * m + r) = scale * std::polar(1.0, 2.0 * std::numbers::pi * e / N);
        }
    }
    return v;
}

}  // namespace detail

/// The closed-form orthonormal eigenbasis. It depends on n only: every normal connection set shares it.
inline EigenvectorSet eigenvectors(const GroupParams& g) {
    using detail::Block;
    using detail::kZero;
    using detail::seq;
    const int n = g.n();
    const int minus = 2 * n;  // zeta exponent of -1
    const int imag = n;       // zeta exponent of i
    const double s8 = 1.0 / std::sqrt(8.0 * n);
    const double s4 = 1.0 / std::sqrt(4.0 * n);
    const Block one = seq(0, 0);
    const Block neg = seq(0, minus);
    const Block alt = seq(minus, 0);
    const Block nalt = seq(minus, minus);

    EigenvectorSet out{g, {}};
    auto single = [&](int index, std::array<Block, 4> b) {
        out.groups.push_back({{RepKind::theta, index}, {detail::assemble(g, b, s8)}});
    };
    auto quad = [&](RepKind kind, int index, const std::array<std::array<Block, 4>, 4>& b) {
        EigenvectorGroup gr{{kind, index}, {}};
        for (const auto& blocks : b) gr.vectors.push_back(detail::assemble(g, blocks, s4));
        out.groups.push_back(std::move(gr));
    };

    if (g.is_odd()) {
        single(1, {one, one, one, one});
        single(2, {one, neg, one, neg});
        single(3, {alt, alt, alt, alt});
        single(4, {alt, nalt, alt, nalt});
        for (int j = 0; j < n; ++j) {
            const int z = 4 * j;                 // omega^{2j}
            const int zb = minus - 4 * j;        // -omega^{-2j}
            const int zm = minus + 4 * j;        // -omega^{2j}
            quad(RepKind::psi, j,
                 {{{seq(z, 0), kZero, seq(z, minus), kZero},
                   {kZero, seq(z, 0), kZero, seq(z, minus)},
                   {kZero, seq(zb, minus), kZero, seq(zb, 0)},
                   {seq(zm, 0), kZero, seq(zm, minus), kZero}}});
        }
        for (int k = 1; k < n; ++k) {
            const int z = 2 * k;
            quad(RepKind::phi, k,
                 {{{seq(z, 0), kZero, seq(z, 0), kZero},
                   {kZero, seq(z, 0), kZero, seq(z, 0)},
                   {kZero, seq(-z, 0), kZero, seq(-z, 0)},
                   {seq(-z, 0), kZero, seq(-z, 0), kZero}}});
        }
        return out;
    }

    const int ni = 3 * imag;  // zeta exponent of -i
    single(1, {one, one, one, one});
    single(2, {seq(imag, 0), seq(imag, ni), seq(imag, minus), seq(imag, imag)});
    single(3, {alt, nalt, alt, nalt});
    single(4, {seq(ni, 0), seq(ni, imag), seq(ni, minus), seq(ni, ni)});
    single(5, {one, neg, one, neg});
    single(6, {seq(imag, 0), seq(imag, imag), seq(imag, minus), seq(imag, ni)});
    single(7, {alt, alt, alt, alt});
    single(8, {seq(ni, 0), seq(ni, ni), seq(ni, minus), seq(ni, imag)});
    for (int j = 1; j < n; ++j) {
        const int z = 2 * j;
        quad(RepKind::psi, j,
             {{{seq(z, 0), kZero, seq(z, 0), kZero},
               {kZero, seq(z, imag), kZero, seq(z, imag)},
               {kZero, seq(-z, ni), kZero, seq(-z, ni)},
               {seq(-z, 0), kZero, seq(-z, 0), kZero}}});
    }
    for (int k = 1; k < n; ++k) {
        const int z1 = imag + 2 * k;  // i omega^k
        const int z2 = imag - 2 * k;  // i omega^-k
        quad(RepKind::phi, k,
             {{{seq(z1, 0), kZero, seq(z1, minus), kZero},
               {kZero, seq(z1, 0), kZero, seq(z1, minus)},
               {kZero, seq(z2, minus), kZero, seq(z2, 0)},
               {seq(z2, 0), kZero, seq(z2, minus), kZero}}});
    }
    return out;
}

inline EigenvectorSet eigenvectors(const ConnectionSet& set) { return eigenvectors(set.params()); }

}  // namespace vpst
