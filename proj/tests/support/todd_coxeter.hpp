#pragma once

// Coset enumeration (HLT strategy with coincidence processing) over the trivial subgroup. The resulting table is
// the regular permutation representation of a finitely presented group, built from the relators alone.

#include <array>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <vector>

namespace testsupport {

/// Generators are numbered 2k (x_k) and 2k+1 (x_k^-1).
using Word = std::vector<int>;

class CosetTable {
public:
    CosetTable(int generators, std::vector<Word> relators, std::size_t limit = 2'000'000)
        : gens_(2 * generators), relators_(std::move(relators)), limit_(limit) {
        new_coset();
        for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
            for (const auto& r : relators_) {
                if (!live(c)) break;
                scan_and_fill(c, r);
            }
            if (!live(c)) continue;
            for (int x = 0; x < gens_; ++x)
                if (table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] < 0) define(c, x);
        }
        for (int c = 0; c < static_cast<int>(table_.size()); ++c)
            if (live(c)) index_.push_back(c);
        compact_.assign(table_.size(), -1);
        for (std::size_t i = 0; i < index_.size(); ++i) compact_[static_cast<std::size_t>(index_[i])] = static_cast<int>(i);
    }

    /// Number of cosets, i.e. the group order.
    int size() const { return static_cast<int>(index_.size()); }

    /// Coset reached from the identity coset by reading `w` left to right, in [0, size()).
    int act(const Word& w, int start = 0) const {
        int c = index_[static_cast<std::size_t>(start)];
        for (int x : w) c = rep(table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)]);
        return compact_[static_cast<std::size_t>(c)];
    }

private:
    static int inv(int x) { return x ^ 1; }

    bool live(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }

    int rep(int c) const {
        while (parent_[static_cast<std::size_t>(c)] != c) c = parent_[static_cast<std::size_t>(c)];
        return c;
    }

    int new_coset() {
        if (table_.size() >= limit_) throw std::runtime_error("coset enumeration exceeded its limit");
        table_.emplace_back();
        table_.back().fill(-1);
        parent_.push_back(static_cast<int>(parent_.size()));
        return static_cast<int>(table_.size()) - 1;
    }

    int& entry(int c, int x) { return table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)]; }

    void define(int c, int x) {
        const int d = new_coset();
        entry(c, x) = d;
        entry(d, inv(x)) = c;
    }

    void scan_and_fill(int c, const Word& w) {
        int f = c;
        int b = c;
        int i = 0;
        int j = static_cast<int>(w.size()) - 1;
        for (;;) {
            while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) >= 0) f = entry(f, w[static_cast<std::size_t>(i++)]);
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && entry(b, inv(w[static_cast<std::size_t>(j)])) >= 0) b = entry(b, inv(w[static_cast<std::size_t>(j--)]));
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                entry(f, w[static_cast<std::size_t>(i)]) = b;
                entry(b, inv(w[static_cast<std::size_t>(i)])) = f;
                return;
            }
            define(f, w[static_cast<std::size_t>(i)]);
        }
    }

    void merge(int k, int l, std::deque<int>& queue) {
        k = rep(k);
        l = rep(l);
        if (k == l) return;
        if (k > l) std::swap(k, l);
        parent_[static_cast<std::size_t>(l)] = k;
        queue.push_back(l);
    }

    void coincidence(int a, int b) {
        std::deque<int> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
            const int e = queue.front();
            queue.pop_front();
            for (int x = 0; x < gens_; ++x) {
                const int f = entry(e, x);
                if (f < 0) continue;
                entry(f, inv(x)) = -1;
                const int e1 = rep(e);
                const int f1 = rep(f);
                if (entry(e1, x) >= 0) {
                    merge(f1, entry(e1, x), queue);
                } else if (entry(f1, inv(x)) >= 0) {
                    merge(e1, entry(f1, inv(x)), queue);
                } else {
                    entry(e1, x) = f1;
                    entry(f1, inv(x)) = e1;
                }
            }
        }
    }

    int gens_;
    std::vector<Word> relators_;
    std::size_t limit_;
    std::vector<std::array<int, 4>> table_;
    std::vector<int> parent_;
    std::vector<int> index_;
    std::vector<int> compact_;
};

/// Words for V_{8n}: 0 = a, 1 = a^-1, 2 = b, 3 = b^-1.
inline Word power_word(int gen, int e) { return Word(static_cast<std::size_t>(e), gen); }

inline CosetTable v8n_table(int n) {
    std::vector<Word> rel;
    rel.push_back(power_word(0, 2 * n));   // a^{2n}
    rel.push_back(power_word(2, 4));       // b^4
    rel.push_back({2, 0, 2, 0});           // (ba)^2, i.e. ba = a^-1 b^-1
    rel.push_back({3, 0, 3, 0});           // (b^-1 a)^2, i.e. b^-1 a = a^-1 b
    return CosetTable(2, std::move(rel));
}

/// a^r b^s as a word.
inline Word normal_word(int r, int s) {
    Word w = power_word(0, r);
    auto b = power_word(2, s);
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

}  // namespace testsupport
