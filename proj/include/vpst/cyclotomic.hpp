#pragma once

// Exact arithmetic in Z[zeta_N], zeta_N = exp(2 pi i / N).
//
// Values are integer coefficient vectors over the powers 1, zeta, ..., zeta^{N-1}, reduced only through
// zeta^N = 1. That representation is not unique (1 + zeta + ... + zeta^{N-1} = 0, -1 = zeta^{N/2}), so equality
// and integrality are decided on the remainder modulo the cyclotomic polynomial Phi_N, which is canonical.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vpst {

using IntPoly = std::vector<std::int64_t>;  // coefficient of x^k at index k

namespace detail {

inline void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Exact quotient of p by a monic divisor d (the remainder is discarded).
inline IntPoly divide_monic(IntPoly p, const IntPoly& d) {
    trim(p);
    const std::size_t dd = d.size() - 1;
    if (p.size() < d.size()) return {};
    IntPoly q(p.size() - dd, 0);
    for (std::size_t i = p.size(); i-- > dd;) {
        std::int64_t c = p[i];
        if (c == 0) continue;
        q[i - dd] = c;
        for (std::size_t k = 0; k <= dd; ++k) p[i - dd + k] -= c * d[k];
    }
    return q;
}

/// Remainder of p modulo a monic polynomial d.
inline IntPoly remainder_monic(IntPoly p, const IntPoly& d) {
    trim(p);
    const std::size_t dd = d.size() - 1;
    for (std::size_t i = p.size(); i-- > dd;) {
        std::int64_t c = p[i];
        if (c == 0) continue;
        for (std::size_t k = 0; k <= dd; ++k) p[i - dd + k] -= c * d[k];
    }
    p.resize(std::min(p.size(), dd));
    trim(p);
    return p;
}

}  // namespace detail

/// Phi_N, computed as (x^N - 1) / prod_{d | N, d < N} Phi_d and memoised.
inline const IntPoly& cyclotomic_polynomial(int order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    static std::mutex lock;
    static std::map<int, IntPoly> cache;
    std::lock_guard guard(lock);
    // divisors in increasing order, so every proper divisor of d is cached before d
    for (int d = 1; d <= order; ++d) {
        if (order % d != 0 || cache.count(d) != 0) continue;
        IntPoly p(static_cast<std::size_t>(d) + 1, 0);
        p[0] = -1;
        p[static_cast<std::size_t>(d)] = 1;
        for (int e = 1; e < d; ++e)
            if (d % e == 0) p = detail::divide_monic(p, cache.at(e));
        cache.emplace(d, std::move(p));
    }
    return cache.at(order);
}

class Cyclotomic {
public:
    Cyclotomic() = default;
    explicit Cyclotomic(int order) : coeffs_(static_cast<std::size_t>(check(order)), 0) {}

    static Cyclotomic integer(int order, std::int64_t k) {
        Cyclotomic c(order);
        c.coeffs_[0] = k;
        return c;
    }
    /// zeta^e
    static Cyclotomic root(int order, int e) {
        Cyclotomic c(order);
        c.coeffs_[static_cast<std::size_t>(wrap(e, order))] = 1;
        return c;
    }
    /// coefficient * zeta^e
    static Cyclotomic monomial(int order, std::int64_t coefficient, int e) {
        Cyclotomic c(order);
        c.coeffs_[static_cast<std::size_t>(wrap(e, order))] = coefficient;
        return c;
    }

    int order() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        same_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        same_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    Cyclotomic& operator*=(std::int64_t k) {
        for (auto& c : coeffs_) c *= k;
        return *this;
    }
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, std::int64_t k) { return a *= k; }
    friend Cyclotomic operator*(std::int64_t k, Cyclotomic a) { return a *= k; }
    Cyclotomic operator-() const { return Cyclotomic(*this) *= -1; }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.same_order(b);
        const std::size_t m = a.coeffs_.size();
        Cyclotomic out(static_cast<int>(m));
        for (std::size_t i = 0; i < m; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (b.coeffs_[j] != 0) out.coeffs_[(i + j) % m] += a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }

    /// Complex conjugate: zeta^e -> zeta^-e.
    Cyclotomic conj() const {
        const std::size_t m = coeffs_.size();
        Cyclotomic out(static_cast<int>(m));
        for (std::size_t i = 0; i < m; ++i) out.coeffs_[(m - i) % m] = coeffs_[i];
        return out;
    }

    std::complex<double> value() const {
        std::complex<double> z{0.0, 0.0};
        const double step = 2.0 * std::numbers::pi / static_cast<double>(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) z += static_cast<double>(coeffs_[i]) * std::polar(1.0, step * static_cast<double>(i));
        return z;
    }

    /// Canonical form: remainder modulo Phi_N, trailing zeros removed.
    IntPoly canonical() const { return detail::remainder_monic(coeffs_, cyclotomic_polynomial(order())); }

    bool is_zero() const { return canonical().empty(); }

    /// The value as an integer, if it is one.
    std::optional<std::int64_t> as_integer() const {
        IntPoly r = canonical();
        if (r.empty()) return 0;
        if (r.size() == 1) return r[0];
        return std::nullopt;
    }

    /// Largest absolute coefficient of the raw representation.
    std::int64_t height() const {
        std::int64_t h = 0;
        for (auto c : coeffs_) h = std::max(h, c < 0 ? -c : c);
        return h;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order() != b.order()) return false;
        return (a - b).is_zero();
    }

    bool approx_equal(const Cyclotomic& o, double tol = 1e-10) const { return std::abs(value() - o.value()) <= tol; }

private:
    static int check(int order) {
        if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
        return order;
    }
    static int wrap(int e, int order) {
        int v = e % order;
        return v < 0 ? v + order : v;
    }
    void same_order(const Cyclotomic& o) const {
        if (o.coeffs_.size() != coeffs_.size())
            throw std::invalid_argument("cyclotomic orders differ: " + std::to_string(coeffs_.size()) + " vs " +
                                        std::to_string(o.coeffs_.size()));
    }

    std::vector<std::int64_t> coeffs_;
};

}  // namespace vpst
