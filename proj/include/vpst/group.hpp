#pragma once

// Arithmetic and structure theory of V_{8n} = <a, b | a^{2n} = b^4 = 1, ba = a^-1 b^-1, b^-1 a = a^-1 b>.
//
// Elements are kept in the normal form a^r b^s (0 <= r < 2n, 0 <= s < 4). Vertices of the Cayley graph are
// labelled in the order 1, a, ..., a^{2n-1}, b, ab, ..., a^{2n-1}b, b^2, ..., a^{2n-1}b^3, so the label of
// a^r b^s is s*2n + r and the four blocks V1..V4 of 2n labels each correspond to s = 0..3.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vpst/error.hpp"

namespace vpst {

enum class Parity { odd, even0mod4, even2mod4 };

inline std::string_view to_string(Parity p) {
    switch (p) {
        case Parity::odd: return "odd";
        case Parity::even0mod4: return "even0mod4";
        case Parity::even2mod4: return "even2mod4";
    }
    return "?";
}

class GroupParams {
public:
    explicit GroupParams(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("V_{8n} requires n >= 1, got " + std::to_string(n));
    }

    int n() const { return n_; }
    int order() const { return 8 * n_; }
    /// Order of the cyclic subgroup <a>.
    int rotations() const { return 2 * n_; }
    bool is_odd() const { return n_ % 2 == 1; }
    Parity parity() const {
        if (n_ % 2 == 1) return Parity::odd;
        return n_ % 4 == 0 ? Parity::even0mod4 : Parity::even2mod4;
    }

    friend bool operator==(const GroupParams&, const GroupParams&) = default;

private:
    int n_;
};

/// a^r b^s in normal form.
struct GroupElement {
    int r = 0;
    int s = 0;

    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

inline GroupElement identity() { return {0, 0}; }

inline int mod(int x, int m) {
    int v = x % m;
    return v < 0 ? v + m : v;
}

inline GroupElement make_element(const GroupParams& g, int r, int s) {
    return {mod(r, g.rotations()), mod(s, 4)};
}

enum class Region { V1 = 0, V2 = 1, V3 = 2, V4 = 3 };

struct VertexLabel {
    int idx = 0;

    friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

inline VertexLabel label_of(const GroupParams& g, GroupElement x) { return {x.s * g.rotations() + x.r}; }

inline GroupElement element_at(const GroupParams& g, VertexLabel v) {
    if (v.idx < 0 || v.idx >= g.order()) throw std::out_of_range("vertex label out of range: " + std::to_string(v.idx));
    return {v.idx % g.rotations(), v.idx / g.rotations()};
}

inline Region region_of(const GroupParams& g, VertexLabel v) {
    if (v.idx < 0 || v.idx >= g.order()) throw std::out_of_range("vertex label out of range: " + std::to_string(v.idx));
    return static_cast<Region>(v.idx / g.rotations());
}

inline std::string_view to_string(Region r) {
    static constexpr std::string_view names[] = {"V1", "V2", "V3", "V4"};
    return names[static_cast<int>(r)];
}

/// Normal form of x*y. Uses b^s a^r = a^{(-1)^s r} b^{s + 2[s odd and r odd]}, which follows from
/// b a^r = a^-r b^{(-1)^r}, b^2 central and b^3 a^r = a^-r b^{2 + (-1)^r}.
inline GroupElement multiply(const GroupParams& g, GroupElement x, GroupElement y) {
    const int m = g.rotations();
    if (x.s % 2 == 0) return {(x.r + y.r) % m, (x.s + y.s) % 4};
    const int shift = (y.r % 2 == 1) ? 2 : 0;
    return {mod(x.r - y.r, m), (x.s + shift + y.s) % 4};
}

inline GroupElement inverse(const GroupParams& g, GroupElement x) {
    // (a^r b^s)^-1 = b^-s a^-r
    return multiply(g, {0, mod(-x.s, 4)}, {mod(-x.r, g.rotations()), 0});
}

inline GroupElement power(const GroupParams& g, GroupElement x, int k) {
    GroupElement acc = identity();
    GroupElement base = k < 0 ? inverse(g, x) : x;
    for (int e = k < 0 ? -k : k; e > 0; --e) acc = multiply(g, acc, base);
    return acc;
}

inline GroupElement conjugate(const GroupParams& g, GroupElement h, GroupElement x) {
    return multiply(g, multiply(g, h, x), inverse(g, h));
}

inline std::vector<GroupElement> all_elements(const GroupParams& g) {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    for (int s = 0; s < 4; ++s)
        for (int r = 0; r < g.rotations(); ++r) out.push_back({r, s});
    return out;
}

/// "1", "a", "a^3", "b^2", "a*b", "a^2*b^3".
inline std::string to_string(GroupElement x) {
    if (x.r == 0 && x.s == 0) return "1";
    std::string out;
    if (x.r == 1) out = "a";
    else if (x.r > 1) out = "a^" + std::to_string(x.r);
    if (x.s > 0) {
        if (!out.empty()) out += "*";
        out += x.s == 1 ? "b" : "b^" + std::to_string(x.s);
    }
    return out;
}

/// Parses the forms produced by to_string plus "e" and explicit zero exponents ("a^0*b^0").
/// Exponents are reduced modulo 2n and 4.
inline GroupElement parse_element(const GroupParams& g, std::string_view text) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty group element");
    if (text == "1" || text == "e") return identity();

    int r = 0;
    int s = 0;
    bool seen_a = false;
    bool seen_b = false;
    while (!text.empty()) {
        std::size_t star = text.find('*');
        std::string_view factor = trim(text.substr(0, star));
        text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
        if (factor.empty()) throw std::invalid_argument("malformed group element");
        char gen = factor.front();
        if (gen != 'a' && gen != 'b') throw std::invalid_argument("unknown generator in '" + std::string(factor) + "'");
        int exponent = 1;
        if (factor.size() > 1) {
            if (factor[1] != '^' || factor.size() < 3)
                throw std::invalid_argument("malformed factor '" + std::string(factor) + "'");
            std::string digits(factor.substr(2));
            std::size_t used = 0;
            try {
                exponent = std::stoi(digits, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed exponent in '" + std::string(factor) + "'");
            }
            if (used != digits.size()) throw std::invalid_argument("malformed exponent in '" + std::string(factor) + "'");
        }
        if (gen == 'a') {
            if (seen_a || seen_b) throw std::invalid_argument("element must be written a^r*b^s");
            seen_a = true;
            r = exponent;
        } else {
            if (seen_b) throw std::invalid_argument("element must be written a^r*b^s");
            seen_b = true;
            s = exponent;
        }
    }
    return make_element(g, r, s);
}

// ---------------------------------------------------------------------------------------------------------------
// Conjugacy classes

enum class ClassKind {
    identity,
    b_squared,
    a_half,          // {a^n}, n even
    a_half_b2,       // {a^n b^2}, n even
    a_odd,           // {a^e, a^-e b^2}, e odd
    a_even,          // {a^e, a^-e}, e even, e != 0, n
    a_even_b2,       // {a^e b^2, a^-e b^2}
    reflections,     // classes containing a^r b or a^r b^3
};

struct ConjugacyClass {
    ClassKind kind = ClassKind::identity;
    /// The element heading this class's column in the character tables.
    GroupElement representative;
    std::vector<GroupElement> members;  // sorted by vertex label
    std::string tag;                    // "[" + to_string(representative) + "]"

    std::size_t size() const { return members.size(); }
};

namespace detail {

inline std::vector<GroupElement> orbit(const GroupParams& g, GroupElement x) {
    std::vector<GroupElement> out;
    for (const auto& h : all_elements(g)) out.push_back(conjugate(g, h, x));
    std::sort(out.begin(), out.end(), [&](auto p, auto q) { return label_of(g, p) < label_of(g, q); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline ConjugacyClass make_class(const GroupParams& g, ClassKind kind, GroupElement rep,
                                 std::vector<GroupElement> members) {
    std::sort(members.begin(), members.end(), [&](auto p, auto q) { return label_of(g, p) < label_of(g, q); });
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return {kind, rep, std::move(members), "[" + to_string(rep) + "]"};
}

}  // namespace detail

/// Conjugacy classes in the listing order of the classical description of V_{8n}:
/// odd n (2n+3 classes): {1}, {b^2}, {a^even b^odd}, {a^odd b^odd}, {a^{2r+1}, a^{-2r-1}b^2} for r < n,
///   {a^{2s}, a^{-2s}} and {a^{2s}b^2, a^{-2s}b^2} for 1 <= s <= (n-1)/2;
/// even n (2n+6 classes): {1}, {b^2}, {a^n}, {a^n b^2}, the four reflection classes
///   {a^{2k}b^{(-1)^k}}, {a^{2k}b^{(-1)^{k+1}}}, {a^{2k+1}b^{(-1)^k}}, {a^{2k+1}b^{(-1)^{k+1}}},
///   then the odd-power pairs and even-power pairs as above with 1 <= s <= n/2 - 1.
/// Every listed class is checked against its conjugation orbit; a mismatch throws std::logic_error.
inline std::vector<ConjugacyClass> conjugacy_classes(const GroupParams& g) {
    const int n = g.n();
    auto el = [&](int r, int s) { return make_element(g, r, s); };
    std::vector<ConjugacyClass> out;
    using detail::make_class;

    out.push_back(make_class(g, ClassKind::identity, identity(), {identity()}));
    out.push_back(make_class(g, ClassKind::b_squared, el(0, 2), {el(0, 2)}));

    if (g.is_odd()) {
        std::vector<GroupElement> even_refl;
        std::vector<GroupElement> odd_refl;
        for (int j = 0; j < 2 * n; ++j)
            for (int k : {1, 3}) (j % 2 == 0 ? even_refl : odd_refl).push_back(el(j, k));
        out.push_back(make_class(g, ClassKind::reflections, el(0, 1), even_refl));
        out.push_back(make_class(g, ClassKind::reflections, el(1, 1), odd_refl));
    } else {
        out.push_back(make_class(g, ClassKind::a_half, el(n, 0), {el(n, 0)}));
        out.push_back(make_class(g, ClassKind::a_half_b2, el(n, 2), {el(n, 2)}));
        std::vector<GroupElement> fam[4];
        for (int k = 0; k < n; ++k) {
            const int sign_k = k % 2 == 0 ? 1 : 3;       // b^{(-1)^k}
            const int sign_k1 = k % 2 == 0 ? 3 : 1;      // b^{(-1)^{k+1}}
            fam[0].push_back(el(2 * k, sign_k));
            fam[1].push_back(el(2 * k, sign_k1));
            fam[2].push_back(el(2 * k + 1, sign_k));
            fam[3].push_back(el(2 * k + 1, sign_k1));
        }
        out.push_back(make_class(g, ClassKind::reflections, el(0, 1), fam[0]));
        out.push_back(make_class(g, ClassKind::reflections, el(0, 3), fam[1]));
        out.push_back(make_class(g, ClassKind::reflections, el(1, 1), fam[2]));
        out.push_back(make_class(g, ClassKind::reflections, el(1, 3), fam[3]));
    }

    for (int r = 0; r < n; ++r)
        out.push_back(make_class(g, ClassKind::a_odd, el(2 * r + 1, 0), {el(2 * r + 1, 0), el(-(2 * r + 1), 2)}));
    const int s_max = g.is_odd() ? (n - 1) / 2 : n / 2 - 1;
    for (int s = 1; s <= s_max; ++s)
        out.push_back(make_class(g, ClassKind::a_even, el(2 * s, 0), {el(2 * s, 0), el(-2 * s, 0)}));
    for (int s = 1; s <= s_max; ++s)
        out.push_back(make_class(g, ClassKind::a_even_b2, el(2 * s, 2), {el(2 * s, 2), el(-2 * s, 2)}));

    for (const auto& c : out)
        if (detail::orbit(g, c.representative) != c.members)
            throw std::logic_error("conjugacy class " + c.tag + " disagrees with its conjugation orbit");
    return out;
}

/// Index into conjugacy_classes(g) of the class containing every element, by vertex label.
inline std::vector<int> class_index_by_label(const GroupParams& g, const std::vector<ConjugacyClass>& classes) {
    std::vector<int> idx(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (const auto& x : classes[c].members) idx[static_cast<std::size_t>(label_of(g, x).idx)] = static_cast<int>(c);
    return idx;
}

// ---------------------------------------------------------------------------------------------------------------
// Connection sets

class ConnectionSet;
namespace detail {
struct ConnectionSetBuilder;
}

enum class ConnectionSetErrorKind { identity_in_set, not_symmetric, not_normal, not_generating };

inline std::string_view to_string(ConnectionSetErrorKind k) {
    switch (k) {
        case ConnectionSetErrorKind::identity_in_set: return "IdentityInS";
        case ConnectionSetErrorKind::not_symmetric: return "NotSymmetric";
        case ConnectionSetErrorKind::not_normal: return "NotNormal";
        case ConnectionSetErrorKind::not_generating: return "NotGenerating";
    }
    return "?";
}

class ConnectionSetError : public Error {
public:
    ConnectionSetError(ConnectionSetErrorKind kind, const std::string& detail)
        : Error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}
    ConnectionSetErrorKind kind() const { return kind_; }

private:
    ConnectionSetErrorKind kind_;
};

/// A validated connection set: identity-free, symmetric, a union of conjugacy classes and generating V_{8n}.
/// Only validate_connection_set and the enumerator construct these.
class ConnectionSet {
public:
    const GroupParams& params() const { return params_; }
    /// Members sorted by vertex label.
    const std::vector<GroupElement>& members() const { return members_; }
    /// Indices into conjugacy_classes(params()), ascending.
    const std::vector<int>& class_ids() const { return class_ids_; }
    int size() const { return static_cast<int>(members_.size()); }

    bool contains(GroupElement x) const { return mask_[static_cast<std::size_t>(label_of(params_, x).idx)]; }

    friend bool operator==(const ConnectionSet& a, const ConnectionSet& b) {
        return a.params_ == b.params_ && a.members_ == b.members_;
    }

private:
    ConnectionSet(GroupParams g, std::vector<GroupElement> members, std::vector<int> class_ids)
        : params_(g), members_(std::move(members)), class_ids_(std::move(class_ids)),
          mask_(static_cast<std::size_t>(g.order()), false) {
        for (const auto& x : members_) mask_[static_cast<std::size_t>(label_of(params_, x).idx)] = true;
    }

    friend struct detail::ConnectionSetBuilder;

    GroupParams params_;
    std::vector<GroupElement> members_;
    std::vector<int> class_ids_;
    std::vector<bool> mask_;
};

namespace detail {

inline std::vector<bool> membership(const GroupParams& g, const std::vector<GroupElement>& xs) {
    std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
    for (const auto& x : xs) in[static_cast<std::size_t>(label_of(g, x).idx)] = true;
    return in;
}

}  // namespace detail

/// Sg = gS for every g, checked directly on the set products.
inline bool is_normal_by_translates(const GroupParams& g, const std::vector<GroupElement>& set) {
    auto in = detail::membership(g, set);
    for (const auto& h : all_elements(g)) {
        std::vector<bool> left(in.size(), false);
        std::vector<bool> right(in.size(), false);
        for (std::size_t i = 0; i < in.size(); ++i) {
            if (!in[i]) continue;
            GroupElement x = element_at(g, {static_cast<int>(i)});
            left[static_cast<std::size_t>(label_of(g, multiply(g, h, x)).idx)] = true;
            right[static_cast<std::size_t>(label_of(g, multiply(g, x, h)).idx)] = true;
        }
        if (left != right) return false;
    }
    return true;
}

/// True iff the set is a union of conjugacy classes.
inline bool is_class_union(const GroupParams& g, const std::vector<GroupElement>& set,
                           const std::vector<ConjugacyClass>& classes) {
    auto in = detail::membership(g, set);
    for (const auto& c : classes) {
        bool any = false;
        bool all = true;
        for (const auto& x : c.members) {
            bool m = in[static_cast<std::size_t>(label_of(g, x).idx)];
            any = any || m;
            all = all && m;
        }
        if (any && !all) return false;
    }
    return true;
}

/// Size of the subgroup generated by the set, by closure from the identity.
inline int generated_order(const GroupParams& g, const std::vector<GroupElement>& set) {
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    std::vector<GroupElement> frontier{identity()};
    seen[0] = true;
    int count = 1;
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& h : frontier)
            for (const auto& s : set) {
                GroupElement y = multiply(g, h, s);
                auto i = static_cast<std::size_t>(label_of(g, y).idx);
                if (!seen[i]) {
                    seen[i] = true;
                    ++count;
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return count;
}

namespace detail {

struct ConnectionSetBuilder {
    static ConnectionSet validate(const GroupParams& g, const std::vector<GroupElement>& members,
                                  const std::vector<ConjugacyClass>& classes) {
        auto in = membership(g, members);
        std::vector<GroupElement> sorted;
        for (std::size_t i = 0; i < in.size(); ++i)
            if (in[i]) sorted.push_back(element_at(g, {static_cast<int>(i)}));

        if (in[0]) throw ConnectionSetError(ConnectionSetErrorKind::identity_in_set, "the identity lies in S");
        for (const auto& x : sorted) {
            GroupElement y = inverse(g, x);
            if (!in[static_cast<std::size_t>(label_of(g, y).idx)])
                throw ConnectionSetError(ConnectionSetErrorKind::not_symmetric,
                                         to_string(x) + " is in S but its inverse " + to_string(y) + " is not");
        }
        if (!is_class_union(g, sorted, classes))
            throw ConnectionSetError(ConnectionSetErrorKind::not_normal, "S is not a union of conjugacy classes");
        const int generated = generated_order(g, sorted);
        if (generated != g.order())
            throw ConnectionSetError(ConnectionSetErrorKind::not_generating,
                                     "S generates a subgroup of order " + std::to_string(generated) + " < " +
                                         std::to_string(g.order()));

        std::vector<int> ids;
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (in[static_cast<std::size_t>(label_of(g, classes[c].representative).idx)])
                ids.push_back(static_cast<int>(c));
        return ConnectionSet(g, std::move(sorted), std::move(ids));
    }
};

}  // namespace detail

/// Checks, in order: identity absent, symmetric, union of classes, generating.
inline ConnectionSet validate_connection_set(const GroupParams& g, const std::vector<GroupElement>& members) {
    return detail::ConnectionSetBuilder::validate(g, members, conjugacy_classes(g));
}

/// Union of the listed classes (indices into conjugacy_classes), validated.
inline ConnectionSet connection_set_from_classes(const GroupParams& g, const std::vector<int>& class_ids) {
    auto classes = conjugacy_classes(g);
    std::vector<GroupElement> members;
    for (int c : class_ids) {
        if (c < 0 || c >= static_cast<int>(classes.size()))
            throw std::out_of_range("conjugacy class index " + std::to_string(c));
        members.insert(members.end(), classes[static_cast<std::size_t>(c)].members.begin(),
                       classes[static_cast<std::size_t>(c)].members.end());
    }
    return validate_connection_set(g, members);
}

/// Streams every valid connection set that is a union of at most max_classes non-identity classes.
/// Order: by number of classes, then lexicographically by class indices. Distinct class subsets give distinct
/// sets since the classes partition the group.
class ConnectionSetEnumerator {
public:
    ConnectionSetEnumerator(const GroupParams& g, int max_classes)
        : params_(g), classes_(conjugacy_classes(g)), max_classes_(max_classes) {
        for (std::size_t c = 1; c < classes_.size(); ++c) candidates_.push_back(static_cast<int>(c));
        const int available = static_cast<int>(candidates_.size());
        if (max_classes_ > available) max_classes_ = available;
        // inverse of each class, so symmetry can be checked on class indices
        auto index = class_index_by_label(g, classes_);
        for (const auto& c : classes_)
            inverse_class_.push_back(index[static_cast<std::size_t>(label_of(g, inverse(g, c.representative)).idx)]);
        size_ = max_classes_ >= 1 ? 1 : 0;
        if (size_ == 1) combo_ = {0};
    }

    std::optional<ConnectionSet> next() {
        while (size_ >= 1 && size_ <= max_classes_) {
            std::vector<int> ids;
            for (int i : combo_) ids.push_back(candidates_[static_cast<std::size_t>(i)]);
            advance();
            if (auto cs = try_build(ids)) return cs;
        }
        return std::nullopt;
    }

    std::vector<ConnectionSet> collect() {
        std::vector<ConnectionSet> out;
        while (auto cs = next()) out.push_back(std::move(*cs));
        return out;
    }

private:
    void advance() {
        const int m = static_cast<int>(candidates_.size());
        int k = size_;
        int i = k - 1;
        while (i >= 0 && combo_[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) {
            ++size_;
            combo_.resize(static_cast<std::size_t>(size_));
            for (int j = 0; j < size_; ++j) combo_[static_cast<std::size_t>(j)] = j;
            return;
        }
        ++combo_[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) combo_[static_cast<std::size_t>(j)] = combo_[static_cast<std::size_t>(j - 1)] + 1;
    }

    std::optional<ConnectionSet> try_build(const std::vector<int>& ids) const {
        for (int c : ids)
            if (!std::binary_search(ids.begin(), ids.end(), inverse_class_[static_cast<std::size_t>(c)])) return std::nullopt;
        std::vector<GroupElement> members;
        for (int c : ids)
            members.insert(members.end(), classes_[static_cast<std::size_t>(c)].members.begin(),
                           classes_[static_cast<std::size_t>(c)].members.end());
        if (generated_order(params_, members) != params_.order()) return std::nullopt;
        return detail::ConnectionSetBuilder::validate(params_, members, classes_);
    }

    GroupParams params_;
    std::vector<ConjugacyClass> classes_;
    std::vector<int> candidates_;
    std::vector<int> inverse_class_;
    int max_classes_;
    int size_ = 0;
    std::vector<int> combo_;
};

inline std::vector<ConnectionSet> enumerate_connection_sets(const GroupParams& g, int max_classes) {
    return ConnectionSetEnumerator(g, max_classes).collect();
}

}  // namespace vpst
