#pragma once

// Irreducible unitary representations and characters of V_{8n}.
//
// All entries live in Z[zeta], zeta a primitive 4n-th root of unity. With omega = exp(pi i / n) = zeta^2 and
// i = zeta^n, the generator images are
//
//   n odd:  theta_1..4: (a, b) -> (1, 1), (1, -1), (-1, 1), (-1, -1)
//           psi_j  (0 <= j < n): a -> diag(omega^{2j}, -omega^{-2j}),  b -> [[0, 1], [-1, 0]]
//           phi_k  (1 <= k < n): a -> diag(omega^k, omega^-k),          b -> [[0, 1], [1, 0]]
//   n even: theta_1..8: (1, 1), (i, -i), (-1, -1), (-i, i), (1, -1), (i, i), (-1, 1), (-i, -i)
//           psi_j  (1 <= j < n): a -> diag(omega^j, omega^-j),          b -> [[0, i], [-i, 0]]
//           phi_k  (1 <= k < n): a -> diag(i omega^k, i omega^-k),      b -> [[0, 1], [-1, 0]]

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "vpst/cyclotomic.hpp"
#include "vpst/error.hpp"
#include "vpst/group.hpp"

namespace vpst {

enum class RepKind { theta, psi, phi };

struct RepDescriptor {
    RepKind kind = RepKind::theta;
    int index = 1;

    int degree() const { return kind == RepKind::theta ? 1 : 2; }

    /// "theta_2", "psi_0", "phi_3".
    std::string name() const {
        static constexpr const char* names[] = {"theta_", "psi_", "phi_"};
        return names[static_cast<int>(kind)] + std::to_string(index);
    }

    friend auto operator<=>(const RepDescriptor&, const RepDescriptor&) = default;
};

class CharacterError : public Error {
public:
    using Error::Error;
};

/// Valid index range [first, last] for a kind; empty when first > last.
inline std::pair<int, int> index_range(const GroupParams& g, RepKind kind) {
    switch (kind) {
        case RepKind::theta: return {1, g.is_odd() ? 4 : 8};
        case RepKind::psi: return {g.is_odd() ? 0 : 1, g.n() - 1};
        case RepKind::phi: return {1, g.n() - 1};
    }
    return {1, 0};
}

inline void check_descriptor(const GroupParams& g, const RepDescriptor& d) {
    auto [lo, hi] = index_range(g, d.kind);
    if (d.index < lo || d.index > hi)
        throw CharacterError("IndexOutOfRange: " + d.name() + " does not exist for n = " + std::to_string(g.n()));
}

/// theta_1.., psi_.., phi_.. in that order. The count equals the number of conjugacy classes.
inline std::vector<RepDescriptor> representations(const GroupParams& g) {
    std::vector<RepDescriptor> out;
    for (RepKind kind : {RepKind::theta, RepKind::psi, RepKind::phi}) {
        auto [lo, hi] = index_range(g, kind);
        for (int i = lo; i <= hi; ++i) out.push_back({kind, i});
    }
    return out;
}

/// 1x1 or 2x2 matrix over Z[zeta_{4n}], row-major.
class RepMatrix {
public:
    RepMatrix() = default;
    RepMatrix(int degree, int order) : degree_(degree) {
        for (auto& e : entries_) e = Cyclotomic(order);
    }

    static RepMatrix identity(int degree, int order) {
        RepMatrix m(degree, order);
        for (int i = 0; i < degree; ++i) m.at(i, i) = Cyclotomic::integer(order, 1);
        return m;
    }

    int degree() const { return degree_; }
    int order() const { return entries_[0].order(); }
    Cyclotomic& at(int i, int j) { return entries_[static_cast<std::size_t>(2 * i + j)]; }
    const Cyclotomic& at(int i, int j) const { return entries_[static_cast<std::size_t>(2 * i + j)]; }

    Cyclotomic trace() const {
        Cyclotomic t = at(0, 0);
        if (degree_ == 2) t += at(1, 1);
        return t;
    }

    /// Conjugate transpose.
    RepMatrix adjoint() const {
        RepMatrix out(degree_, order());
        for (int i = 0; i < degree_; ++i)
            for (int j = 0; j < degree_; ++j) out.at(i, j) = at(j, i).conj();
        return out;
    }

    std::complex<double> numeric(int i, int j) const { return at(i, j).value(); }

    friend RepMatrix operator*(const RepMatrix& x, const RepMatrix& y) {
        RepMatrix out(x.degree_, x.order());
        for (int i = 0; i < x.degree_; ++i)
            for (int j = 0; j < x.degree_; ++j)
                for (int k = 0; k < x.degree_; ++k) out.at(i, j) += x.at(i, k) * y.at(k, j);
        return out;
    }

    friend bool operator==(const RepMatrix& x, const RepMatrix& y) {
        if (x.degree_ != y.degree_) return false;
        for (int i = 0; i < x.degree_; ++i)
            for (int j = 0; j < x.degree_; ++j)
                if (!(x.at(i, j) == y.at(i, j))) return false;
        return true;
    }

private:
    int degree_ = 1;
    std::array<Cyclotomic, 4> entries_;
};

/// Images of a and b.
inline std::pair<RepMatrix, RepMatrix> generator_images(const GroupParams& g, const RepDescriptor& d) {
    check_descriptor(g, d);
    const int n = g.n();
    const int N = 4 * n;
    const int omega = 2;      // omega = zeta^2
    const int imag = n;       // i = zeta^n
    const int minus = 2 * n;  // -1 = zeta^{2n}
    auto z = [N](int e) { return Cyclotomic::root(N, e); };
    auto zero = [N] { return Cyclotomic(N); };

    RepMatrix a(d.degree(), N);
    RepMatrix b(d.degree(), N);
    if (d.kind == RepKind::theta) {
        // exponents of zeta for theta(a), theta(b)
        static constexpr int odd_a[] = {0, 0, 2, 2};   // in units of 'minus'
        static constexpr int odd_b[] = {0, 2, 0, 2};
        static constexpr int even_a[] = {0, 1, 2, 3, 0, 1, 2, 3};  // in units of 'imag'
        static constexpr int even_b[] = {0, 3, 2, 1, 2, 1, 0, 3};
        const auto k = static_cast<std::size_t>(d.index - 1);
        if (g.is_odd()) {
            a.at(0, 0) = z(odd_a[k] / 2 * minus);
            b.at(0, 0) = z(odd_b[k] / 2 * minus);
        } else {
            a.at(0, 0) = z(even_a[k] * imag);
            b.at(0, 0) = z(even_b[k] * imag);
        }
        return {a, b};
    }

    const int idx = d.index;
    if (g.is_odd()) {
        if (d.kind == RepKind::psi) {
            a.at(0, 0) = z(2 * idx * omega);
            a.at(1, 1) = z(minus - 2 * idx * omega);
            b.at(0, 1) = z(0);
            b.at(1, 0) = z(minus);
        } else {
            a.at(0, 0) = z(idx * omega);
            a.at(1, 1) = z(-idx * omega);
            b.at(0, 1) = z(0);
            b.at(1, 0) = z(0);
        }
    } else {
        if (d.kind == RepKind::psi) {
            a.at(0, 0) = z(idx * omega);
            a.at(1, 1) = z(-idx * omega);
            b.at(0, 1) = z(imag);
            b.at(1, 0) = z(imag + minus);
        } else {
            a.at(0, 0) = z(imag + idx * omega);
            a.at(1, 1) = z(imag - idx * omega);
            b.at(0, 1) = z(0);
            b.at(1, 0) = z(minus);
        }
    }
    a.at(0, 1) = zero();
    a.at(1, 0) = zero();
    b.at(0, 0) = zero();
    b.at(1, 1) = zero();
    return {a, b};
}

namespace detail {

inline RepMatrix matrix_power(const RepMatrix& m, int e) {
    RepMatrix acc = RepMatrix::identity(m.degree(), m.order());
    for (int i = 0; i < e; ++i) acc = acc * m;
    return acc;
}

}  // namespace detail

/// theta(a)^r theta(b)^s for x = a^r b^s.
inline RepMatrix rep_at(const GroupParams& g, const RepDescriptor& d, GroupElement x) {
    auto [a, b] = generator_images(g, d);
    return detail::matrix_power(a, x.r) * detail::matrix_power(b, x.s);
}

inline Cyclotomic character(const GroupParams& g, const RepDescriptor& d, GroupElement x) {
    return rep_at(g, d, x).trace();
}

// ---------------------------------------------------------------------------------------------------------------
// Closed-form character tables

namespace detail {

/// Column of the even-n table a class falls in:
/// 1, b^2, a^n, a^n b^2, a^{4m+1}, a^{4m+3}, a^{4s}, a^{4p+2}, a^{4s}b^2, a^{4p+2}b^2, b, b^-1, ab, ab^-1.
inline int even_column(const ConjugacyClass& c) {
    const int e = c.representative.r;
    switch (c.kind) {
        case ClassKind::identity: return 0;
        case ClassKind::b_squared: return 1;
        case ClassKind::a_half: return 2;
        case ClassKind::a_half_b2: return 3;
        case ClassKind::a_odd: return e % 4 == 1 ? 4 : 5;
        case ClassKind::a_even: return e % 4 == 0 ? 6 : 7;
        case ClassKind::a_even_b2: return e % 4 == 0 ? 8 : 9;
        case ClassKind::reflections: return 10 + 2 * c.representative.r + (c.representative.s == 3 ? 1 : 0);
    }
    return -1;
}

// One-dimensional rows as exponents of i. The a^n and a^n b^2 columns hold theta(a)^n and theta(a)^n theta(b)^2;
// the classical printed tables have these two entries interchanged between the n = 0 and n = 2 (mod 4) cases
// for the i-valued rows.
inline constexpr int kThetaEven0mod4[8][14] = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 2, 0, 2, 1, 3, 0, 2, 2, 0, 3, 1, 0, 2},
    {0, 0, 0, 0, 2, 2, 0, 0, 0, 0, 2, 2, 0, 0},
    {0, 2, 0, 2, 3, 1, 0, 2, 2, 0, 1, 3, 0, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2},
    {0, 2, 0, 2, 1, 3, 0, 2, 2, 0, 1, 3, 2, 0},
    {0, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 2, 2},
    {0, 2, 0, 2, 3, 1, 0, 2, 2, 0, 3, 1, 2, 0},
};
inline constexpr int kThetaEven2mod4[8][14] = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 2, 2, 0, 1, 3, 0, 2, 2, 0, 3, 1, 0, 2},
    {0, 0, 0, 0, 2, 2, 0, 0, 0, 0, 2, 2, 0, 0},
    {0, 2, 2, 0, 3, 1, 0, 2, 2, 0, 1, 3, 0, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2},
    {0, 2, 2, 0, 1, 3, 0, 2, 2, 0, 1, 3, 2, 0},
    {0, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 2, 2},
    {0, 2, 2, 0, 3, 1, 0, 2, 2, 0, 3, 1, 2, 0},
};

}  // namespace detail

/// Character value of d on class c from the closed-form tables (odd n; n = 0 mod 4; n = 2 mod 4).
/// The two-dimensional phi rows of the even tables use alpha^{k e} = omega^{ke} + omega^{-ke} with k the row's
/// own index.
inline Cyclotomic closed_form_character(const GroupParams& g, const RepDescriptor& d, const ConjugacyClass& c) {
    check_descriptor(g, d);
    const int n = g.n();
    const int N = 4 * n;
    const int minus = 2 * n;
    const int imag = n;
    auto integer = [N](int k) { return Cyclotomic::integer(N, k); };
    auto omega = [N](int e) { return Cyclotomic::root(N, 2 * e); };
    auto alpha = [&](int e) { return omega(e) + omega(-e); };
    const int e = c.representative.r;
    const int idx = d.index;

    if (g.is_odd()) {
        if (d.kind == RepKind::theta) {
            int value = 1;
            if (c.kind == ClassKind::a_odd) value = idx >= 3 ? -1 : 1;
            if (c.kind == ClassKind::reflections) {
                static constexpr int on_b[] = {1, -1, 1, -1};
                static constexpr int on_ab[] = {1, -1, -1, 1};
                value = (c.representative.r == 0 ? on_b : on_ab)[idx - 1];
            }
            return integer(value);
        }
        const bool psi = d.kind == RepKind::psi;
        switch (c.kind) {
            case ClassKind::identity: return integer(2);
            case ClassKind::b_squared: return integer(psi ? -2 : 2);
            case ClassKind::a_odd: return psi ? omega(2 * idx * e) - omega(-2 * idx * e) : alpha(idx * e);
            case ClassKind::a_even: return psi ? alpha(2 * idx * e) : alpha(idx * e);
            case ClassKind::a_even_b2: return psi ? -alpha(2 * idx * e) : alpha(idx * e);
            case ClassKind::reflections: return integer(0);
            default: break;
        }
        throw std::logic_error("class kind " + c.tag + " does not occur for odd n");
    }

    const bool zero_mod4 = g.parity() == Parity::even0mod4;
    const int col = detail::even_column(c);
    if (d.kind == RepKind::theta) {
        const auto& rows = zero_mod4 ? detail::kThetaEven0mod4 : detail::kThetaEven2mod4;
        return Cyclotomic::root(N, rows[idx - 1][col] * imag);
    }
    const int sign = idx % 2 == 0 ? 1 : -1;  // (-1)^index
    if (d.kind == RepKind::psi) {
        switch (c.kind) {
            case ClassKind::identity:
            case ClassKind::b_squared: return integer(2);
            case ClassKind::a_half:
            case ClassKind::a_half_b2: return integer(2 * sign);
            case ClassKind::reflections: return integer(0);
            default: return alpha(idx * e);
        }
    }
    switch (c.kind) {
        case ClassKind::identity: return integer(2);
        case ClassKind::b_squared: return integer(-2);
        case ClassKind::a_half: return integer(zero_mod4 ? 2 * sign : -2 * sign);
        case ClassKind::a_half_b2: return integer(zero_mod4 ? -2 * sign : 2 * sign);
        case ClassKind::a_odd:
            return Cyclotomic::root(N, e % 4 == 1 ? imag : imag + minus) * alpha(idx * e);
        case ClassKind::a_even: return e % 4 == 0 ? alpha(idx * e) : -alpha(idx * e);
        case ClassKind::a_even_b2: return e % 4 == 0 ? -alpha(idx * e) : alpha(idx * e);
        case ClassKind::reflections: return integer(0);
    }
    return integer(0);
}

/// Character values indexed by (representation, class), computed as traces of rep_at at each class
/// representative.
class CharacterTable {
public:
    explicit CharacterTable(const GroupParams& g)
        : params_(g), classes_(conjugacy_classes(g)), reps_(vpst::representations(g)) {
        values_.reserve(reps_.size() * classes_.size());
        for (const auto& d : reps_) {
            auto [a, b] = generator_images(g, d);
            for (const auto& c : classes_) {
                auto x = c.representative;
                values_.push_back((detail::matrix_power(a, x.r) * detail::matrix_power(b, x.s)).trace());
            }
        }
        class_of_label_ = class_index_by_label(g, classes_);
    }

    const GroupParams& params() const { return params_; }
    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    const std::vector<RepDescriptor>& representations() const { return reps_; }

    const Cyclotomic& value(std::size_t rep, std::size_t cls) const { return values_[rep * classes_.size() + cls]; }

    const Cyclotomic& value(std::size_t rep, GroupElement x) const {
        return value(rep, static_cast<std::size_t>(class_of_label_[static_cast<std::size_t>(label_of(params_, x).idx)]));
    }

    std::size_t rep_index(const RepDescriptor& d) const {
        for (std::size_t i = 0; i < reps_.size(); ++i)
            if (reps_[i] == d) return i;
        throw CharacterError("IndexOutOfRange: " + d.name() + " does not exist for n = " + std::to_string(params_.n()));
    }

    /// sum over classes of |C| chi_r(C) conj(chi_s(C)); equals 8n when r = s and 0 otherwise.
    Cyclotomic inner_product(std::size_t r, std::size_t s) const {
        Cyclotomic acc(4 * params_.n());
        for (std::size_t c = 0; c < classes_.size(); ++c)
            acc += value(r, c) * value(s, c).conj() * static_cast<std::int64_t>(classes_[c].size());
        return acc;
    }

private:
    GroupParams params_;
    std::vector<ConjugacyClass> classes_;
    std::vector<RepDescriptor> reps_;
    std::vector<Cyclotomic> values_;
    std::vector<int> class_of_label_;
};

inline CharacterTable character_table(const GroupParams& g) { return CharacterTable(g); }

}  // namespace vpst
