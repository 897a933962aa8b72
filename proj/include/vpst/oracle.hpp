#pragma once

// Numerical ground truth for the continuous-time quantum walk H(tau) = exp(-i tau A) on Cay(V_{8n}, S).
//
// Three independent routes to H(tau):
//   * SpectralTransition: closed-form eigenprojectors weighted by the character-derived eigenvalues;
//   * transition_taylor: scaling and squaring around a truncated Taylor series of -i tau A;
//   * DenseWalk: eigenprojectors of A from a dense symmetric eigensolver.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "vpst/group.hpp"
#include "vpst/spectrum.hpp"

namespace vpst {

/// A(u, v) = 1 iff x_u x_v^-1 is in S.
inline Eigen::MatrixXd adjacency(const ConnectionSet& set) {
    const auto& g = set.params();
    const int dim = g.order();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (int u = 0; u < dim; ++u) {
        const auto x = element_at(g, {u});
        for (int v = 0; v < dim; ++v)
            if (set.contains(multiply(g, x, inverse(g, element_at(g, {v}))))) a(u, v) = 1.0;
    }
    return a;
}

// ---------------------------------------------------------------------------------------------------------------
// Closed-form eigenprojectors

struct Projector {
    RepDescriptor rep;
    int component = 0;  // 0 for theta_i, 1..4 for the four vectors of psi_j / phi_k
    Eigen::MatrixXcd matrix;
};

namespace detail {

/// 4x4 arrangement of 2n x 2n blocks; each entry is a quarter-turn count q (block times i^q) or -1 for zero.
using BlockPattern = std::array<std::array<int, 4>, 4>;

inline constexpr BlockPattern kAll = {{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}};
inline constexpr BlockPattern kChecker = {{{0, 2, 0, 2}, {2, 0, 2, 0}, {0, 2, 0, 2}, {2, 0, 2, 0}}};
inline constexpr BlockPattern kOddPlus = {{{0, -1, 0, -1}, {-1, -1, -1, -1}, {0, -1, 0, -1}, {-1, -1, -1, -1}}};
inline constexpr BlockPattern kOddMinus = {{{0, -1, 2, -1}, {-1, -1, -1, -1}, {2, -1, 0, -1}, {-1, -1, -1, -1}}};
inline constexpr BlockPattern kEvenPlus = {{{-1, -1, -1, -1}, {-1, 0, -1, 0}, {-1, -1, -1, -1}, {-1, 0, -1, 0}}};
inline constexpr BlockPattern kEvenMinus = {{{-1, -1, -1, -1}, {-1, 0, -1, 2}, {-1, -1, -1, -1}, {-1, 2, -1, 0}}};
// one-dimensional projectors of even n built on [i^{u-v}] and [(-i)^{u-v}]
inline constexpr BlockPattern kTurnForward = {{{0, 1, 2, 3}, {3, 0, 1, 2}, {2, 3, 0, 1}, {1, 2, 3, 0}}};
inline constexpr BlockPattern kTurnBackward = {{{0, 3, 2, 1}, {1, 0, 3, 2}, {2, 1, 0, 3}, {3, 2, 1, 0}}};

/// (1/scale) * pattern (x) circulant block with entries zeta^{step (c - r)}, zeta = exp(2 pi i / 4n).
inline Eigen::MatrixXcd block_matrix(const GroupParams& g, const BlockPattern& pattern, int step, double scale) {
    const int m = g.rotations();
    const int N = 4 * g.n();
    auto root = [N](long e) { return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(mod(static_cast<int>(e % N), N)) / N); };
    Eigen::MatrixXcd base(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) base(r, c) = root(static_cast<long>(step) * (c - r));
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(g.order(), g.order());
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) {
            const int turn = pattern[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
            if (turn < 0) continue;
            out.block(p * m, q * m, m, m) = root(static_cast<long>(turn) * g.n()) * base / scale;
        }
    return out;
}

}  // namespace detail

/// Rank-one projectors onto the closed-form eigenvectors, in eigenvectors() order. The circulant blocks have
/// first rows [1, x, x^2, ..., x^{2n-1}]:
///   n odd:  psi_j: x = omega^{-2j} (components 1, 2), -omega^{2j} (3), -omega^{-2j} (4); phi_k: omega^{-k}, omega^k
///   n even: psi_j: x = omega^{-j}, omega^j; phi_k: -i omega^{-k}, -i omega^k
inline std::vector<Projector> projectors(const GroupParams& g) {
    using namespace detail;
    const int n = g.n();
    const double s8 = 8.0 * n;
    const double s4 = 4.0 * n;
    const int minus = 2 * n;
    std::vector<Projector> out;
    auto one = [&](int i, const BlockPattern& p, int step) {
        out.push_back({{RepKind::theta, i}, 0, block_matrix(g, p, step, s8)});
    };
    auto four = [&](RepKind kind, int index, std::array<std::pair<const BlockPattern*, int>, 4> parts) {
        for (int c = 0; c < 4; ++c)
            out.push_back({{kind, index}, c + 1, block_matrix(g, *parts[static_cast<std::size_t>(c)].first,
                                                              parts[static_cast<std::size_t>(c)].second, s4)});
    };

    if (g.is_odd()) {
        one(1, kAll, 0);
        one(2, kChecker, 0);
        one(3, kAll, minus);
        one(4, kChecker, minus);
        for (int j = 0; j < n; ++j)
            four(RepKind::psi, j,
                 {{{&kOddMinus, -4 * j}, {&kEvenMinus, -4 * j}, {&kEvenMinus, minus + 4 * j}, {&kOddMinus, minus - 4 * j}}});
        for (int k = 1; k < n; ++k)
            four(RepKind::phi, k, {{{&kOddPlus, -2 * k}, {&kEvenPlus, -2 * k}, {&kEvenPlus, 2 * k}, {&kOddPlus, 2 * k}}});
        return out;
    }

    one(1, kAll, 0);
    one(2, kTurnForward, -n);
    one(3, kChecker, minus);
    one(4, kTurnBackward, -3 * n);
    one(5, kChecker, 0);
    one(6, kTurnBackward, -n);
    one(7, kAll, minus);
    one(8, kTurnForward, -3 * n);
    for (int j = 1; j < n; ++j)
        four(RepKind::psi, j, {{{&kOddPlus, -2 * j}, {&kEvenPlus, -2 * j}, {&kEvenPlus, 2 * j}, {&kOddPlus, 2 * j}}});
    for (int k = 1; k < n; ++k)
        four(RepKind::phi, k,
             {{{&kOddMinus, 3 * n - 2 * k}, {&kEvenMinus, 3 * n - 2 * k}, {&kEvenMinus, 3 * n + 2 * k},
               {&kOddMinus, 3 * n + 2 * k}}});
    return out;
}

inline std::vector<Projector> projectors(const ConnectionSet& set) { return projectors(set.params()); }

// ---------------------------------------------------------------------------------------------------------------
// Transition matrices

/// H(tau) = sum over distinct eigenvalues lambda of exp(-i lambda tau) P_lambda, where P_lambda sums the
/// closed-form projectors of every representation with that eigenvalue.
class SpectralTransition {
public:
    SpectralTransition(const SpectrumTable& table, const std::vector<Projector>& projs) {
        for (const auto& p : projs) {
            const double lambda = table.at(p.rep).value;
            auto it = std::find_if(terms_.begin(), terms_.end(),
                                   [&](const Term& t) { return std::abs(t.lambda - lambda) < 1e-9; });
            if (it == terms_.end()) {
                terms_.push_back({lambda, p.matrix});
            } else {
                it->projector += p.matrix;
            }
        }
    }

    explicit SpectralTransition(const SpectrumTable& table) : SpectralTransition(table, projectors(table.params())) {}

    Eigen::MatrixXcd at(double tau) const {
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(terms_.front().projector.rows(), terms_.front().projector.cols());
        for (const auto& t : terms_) h += std::polar(1.0, -t.lambda * tau) * t.projector;
        return h;
    }

    std::complex<double> entry(int u, int v, double tau) const {
        std::complex<double> z{0.0, 0.0};
        for (const auto& t : terms_) z += std::polar(1.0, -t.lambda * tau) * t.projector(u, v);
        return z;
    }

    /// The distinct eigenvalues and their summed projectors.
    struct Term {
        double lambda;
        Eigen::MatrixXcd projector;
    };
    const std::vector<Term>& terms() const { return terms_; }

private:
    std::vector<Term> terms_;
};

inline Eigen::MatrixXcd transition(const SpectrumTable& table, double tau) { return SpectralTransition(table).at(tau); }

inline Eigen::MatrixXcd transition(const ConnectionSet& set, double tau) { return transition(eigenvalues(set), tau); }

/// exp(-i tau A) by scaling and squaring: halve until the 1-norm is below 1/2, sum the Taylor series to order
/// 18 (truncation error below 1e-20 relative), then square back.
inline Eigen::MatrixXcd transition_taylor(const Eigen::MatrixXd& a, double tau) {
    const Eigen::Index dim = a.rows();
    Eigen::MatrixXcd m = std::complex<double>(0.0, -tau) * a.cast<std::complex<double>>();
    const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    m /= std::ldexp(1.0, squarings);

    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd result = id;
    for (int k = 18; k >= 1; --k) result = id + m * result / static_cast<double>(k);
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

struct ProbeResult {
    double tau = 0.0;
    double magnitude = 0.0;
};

/// Largest |H(tau)_{uv}| over the given times; ties keep the earliest time.
template <class Transition>
ProbeResult pst_probe(const Transition& h, int u, int v, const std::vector<double>& times) {
    ProbeResult best{std::numeric_limits<double>::quiet_NaN(), -1.0};
    for (double t : times) {
        const double mag = std::abs(h.entry(u, v, t));
        if (mag > best.magnitude) best = {t, mag};
    }
    return best;
}

template <class Transition>
ProbeResult periodicity_probe(const Transition& h, int u, const std::vector<double>& times) {
    return pst_probe(h, u, u, times);
}

/// tau_m = period * m / points for m = 1..points.
inline std::vector<double> uniform_grid(int points, double period = 2.0 * std::numbers::pi) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::max(points, 0)));
    for (int m = 1; m <= points; ++m) out.push_back(period * m / points);
    return out;
}

/// pi/M (1 + 2l) for l = 0..count-1.
inline std::vector<double> candidate_times(std::int64_t M, int count = 8) {
    std::vector<double> out;
    for (int l = 0; l < count; ++l) out.push_back(std::numbers::pi / static_cast<double>(M) * (1 + 2 * l));
    return out;
}

struct SymmetricEigen {
    Eigen::VectorXd values;  // ascending
    Eigen::MatrixXd vectors;
};

/// Dense symmetric eigendecomposition. Eigen's tridiagonal QR occasionally stops without converging on these
/// highly degenerate 0/1 matrices; A + sI has the same eigenvectors, so those cases are retried with a shift.
inline SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& a) {
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(a.rows(), a.cols());
    for (double shift : {0.0, 0.5, 0.375, 1.0 / 3.0}) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a + shift * id);
        if (solver.info() == Eigen::Success)
            return {solver.eigenvalues().array() - shift, solver.eigenvectors()};
    }
    throw Error("symmetric eigensolver did not converge");
}

/// Walk evaluated from a dense eigendecomposition of A. Eigenvalues closer than `merge` are treated as one and
/// their eigenvectors summed into a real projector, so evaluating H(tau) costs one pass per distinct eigenvalue.
class DenseWalk {
public:
    explicit DenseWalk(const Eigen::MatrixXd& a, double merge = 1e-6) : dim_(a.rows()) {
        const auto eig = symmetric_eigen(a);
        const auto& w = eig.values;
        const auto& vecs = eig.vectors;
        eigenvalues_.assign(w.data(), w.data() + w.size());
        Eigen::Index start = 0;
        while (start < w.size()) {
            Eigen::Index end = start + 1;
            while (end < w.size() && w(end) - w(end - 1) < merge) ++end;
            const auto block = vecs.middleCols(start, end - start);
            lambdas_.push_back(w.segment(start, end - start).mean());
            projectors_.push_back(block * block.transpose());
            start = end;
        }
    }

    /// Ascending, with multiplicity.
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    const std::vector<double>& distinct() const { return lambdas_; }

    Eigen::MatrixXcd at(double tau) const {
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim_, dim_);
        for (std::size_t k = 0; k < lambdas_.size(); ++k)
            h += std::polar(1.0, -lambdas_[k] * tau) * projectors_[k].cast<std::complex<double>>();
        return h;
    }

    std::complex<double> entry(int u, int v, double tau) const {
        std::complex<double> z{0.0, 0.0};
        for (std::size_t k = 0; k < lambdas_.size(); ++k) z += std::polar(1.0, -lambdas_[k] * tau) * projectors_[k](u, v);
        return z;
    }

    /// Entrywise max of |H(tau)| over the times, and for each entry the first time its magnitude exceeds
    /// `threshold` (infinity when it never does).
    struct Scan {
        Eigen::MatrixXd max_abs;
        Eigen::MatrixXd first_above;
    };

    Scan scan(const std::vector<double>& times, double threshold) const {
        Scan out{Eigen::MatrixXd::Zero(dim_, dim_),
                 Eigen::MatrixXd::Constant(dim_, dim_, std::numeric_limits<double>::infinity())};
        Eigen::MatrixXd re(dim_, dim_);
        Eigen::MatrixXd im(dim_, dim_);
        for (double t : times) {
            re.setZero();
            im.setZero();
            for (std::size_t k = 0; k < lambdas_.size(); ++k) {
                re += std::cos(lambdas_[k] * t) * projectors_[k];
                im -= std::sin(lambdas_[k] * t) * projectors_[k];
            }
            const Eigen::MatrixXd mag = (re.array().square() + im.array().square()).sqrt().matrix();
            out.max_abs = out.max_abs.cwiseMax(mag);
            for (Eigen::Index u = 0; u < dim_; ++u)
                for (Eigen::Index v = 0; v < dim_; ++v)
                    if (mag(u, v) > threshold && t < out.first_above(u, v)) out.first_above(u, v) = t;
        }
        return out;
    }

private:
    Eigen::Index dim_;
    std::vector<double> eigenvalues_;
    std::vector<double> lambdas_;
    std::vector<Eigen::MatrixXd> projectors_;
};

}  // namespace vpst
