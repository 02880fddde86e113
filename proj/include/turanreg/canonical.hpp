#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph6.hpp"

namespace turanreg {

inline constexpr std::size_t kMaxCanonicalOrder = 64;

/// Certificate of an isomorphism class: the graph6 string of the canonical form.
struct CanonicalLabel {
    std::string bytes;
    friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
};

/// Canonical relabelling of a graph with at most 64 vertices.
/// rows[p] holds the neighbours of canonical vertex p in canonical numbering;
/// order[p] is the original vertex placed at position p.
struct CanonicalForm {
    std::vector<std::uint64_t> rows;
    std::vector<Vertex> order;
};

struct RowsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& rows) const noexcept {
        std::size_t h = rows.size() * 0x9E3779B97F4A7C15ULL;
        for (auto r : rows) h = (h ^ (r + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2))) * 0xBF58476D1CE4E5B9ULL;
        return h;
    }
};

namespace detail {

// Ordered partition of positions 0..n-1. len[] is valid at cell starts;
// start_of[v] is the first position of the cell holding vertex v.
struct Partition {
    std::array<std::uint8_t, 64> lab{};
    std::array<std::uint8_t, 64> len{};
    std::array<std::uint8_t, 64> start_of{};
    int cells = 0;
};

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : n_(static_cast<int>(g.order())) {
        if (g.order() > kMaxCanonicalOrder)
            throw std::invalid_argument("canonical labelling supports at most 64 vertices, got " +
                                        std::to_string(g.order()));
        for (int v = 0; v < n_; ++v) adj_[v] = g.word(static_cast<Vertex>(v));
    }

    CanonicalForm run() {
        CanonicalForm out;
        if (n_ == 0) return out;
        Partition p;
        for (int i = 0; i < n_; ++i) {
            p.lab[i] = static_cast<std::uint8_t>(i);
            p.start_of[i] = 0;
        }
        p.len[0] = static_cast<std::uint8_t>(n_);
        p.cells = 1;
        refine(p, 1);
        std::vector<std::uint8_t> seq;
        search(0, p, seq);
        out.rows.assign(best_rows_.begin(), best_rows_.begin() + n_);
        out.order.resize(n_);
        for (int i = 0; i < n_; ++i) out.order[i] = best_lab_[i];
        return out;
    }

private:
    using Rows = std::array<std::uint64_t, 64>;
    using Perm = std::array<std::uint8_t, 64>;

    void refine(Partition& p, std::uint64_t pending) const {
        std::array<std::uint8_t, 64> cnt{};
        std::array<std::uint8_t, 64> tmp{};
        while (pending && p.cells < n_) {
            const int s = std::countr_zero(pending);
            pending &= pending - 1;
            std::uint64_t splitter = 0;
            for (int i = s; i < s + p.len[s]; ++i) splitter |= std::uint64_t{1} << p.lab[i];

            for (int c = 0; c < n_; c += p.len[c]) {
                const int len = p.len[c];
                if (len == 1) continue;
                bool uniform = true;
                for (int i = 0; i < len; ++i) {
                    cnt[i] = static_cast<std::uint8_t>(std::popcount(adj_[p.lab[c + i]] & splitter));
                    if (cnt[i] != cnt[0]) uniform = false;
                }
                if (uniform) continue;
                // Stable counting sort of the cell by neighbour count.
                std::array<std::uint8_t, 66> bucket{};
                for (int i = 0; i < len; ++i) ++bucket[cnt[i] + 1];
                for (int b = 1; b < 66; ++b) bucket[b] += bucket[b - 1];
                for (int i = 0; i < len; ++i) tmp[bucket[cnt[i]]++] = p.lab[c + i];
                // After the scatter bucket[b] is the end of bucket b.
                int f = c;
                for (int i = 0; i < len; ++i) p.lab[c + i] = tmp[i];
                int prev_end = 0;
                for (int b = 0; b < 65; ++b) {
                    int end = bucket[b];
                    if (end == prev_end) continue;
                    f = c + prev_end;
                    p.len[f] = static_cast<std::uint8_t>(end - prev_end);
                    for (int i = f; i < c + end; ++i) p.start_of[p.lab[i]] = static_cast<std::uint8_t>(f);
                    pending |= std::uint64_t{1} << f;
                    if (f != c) ++p.cells;
                    prev_end = end;
                    if (end == len) break;
                }
            }
        }
    }

    void individualize(Partition& p, int v) const {
        const int c = p.start_of[v];
        const int len = p.len[c];
        for (int i = c; i < c + len; ++i) {
            if (p.lab[i] == v) {
                std::swap(p.lab[i], p.lab[c]);
                break;
            }
        }
        p.len[c] = 1;
        p.len[c + 1] = static_cast<std::uint8_t>(len - 1);
        for (int i = c + 1; i < c + len; ++i) p.start_of[p.lab[i]] = static_cast<std::uint8_t>(c + 1);
        ++p.cells;
        refine(p, std::uint64_t{1} << c);
    }

    Rows leaf_rows(const Partition& p) const {
        std::array<std::uint8_t, 64> inv{};
        for (int i = 0; i < n_; ++i) inv[p.lab[i]] = static_cast<std::uint8_t>(i);
        Rows rows{};
        for (int i = 0; i < n_; ++i) {
            std::uint64_t r = 0;
            for (std::uint64_t m = adj_[p.lab[i]]; m; m &= m - 1) r |= std::uint64_t{1} << inv[std::countr_zero(m)];
            rows[i] = r;
        }
        return rows;
    }

    int compare(const Rows& a, const Rows& b) const {
        for (int i = 0; i < n_; ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    void add_automorphism(const Partition& p, const std::array<std::uint8_t, 64>& other_lab) {
        Perm g{};
        bool identity = true;
        for (int i = 0; i < n_; ++i) {
            g[p.lab[i]] = other_lab[i];
            if (p.lab[i] != other_lab[i]) identity = false;
        }
        if (!identity) generators_.push_back(g);
    }

    static int common_prefix(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
        int i = 0;
        while (i < static_cast<int>(a.size()) && i < static_cast<int>(b.size()) && a[i] == b[i]) ++i;
        return i;
    }

    // Returns the depth the search should unwind to.
    int leaf(const Partition& p, const std::vector<std::uint8_t>& seq) {
        const int depth = static_cast<int>(seq.size());
        Rows rows = leaf_rows(p);
        if (!have_first_) {
            have_first_ = true;
            first_rows_ = best_rows_ = rows;
            first_lab_ = best_lab_ = p.lab;
            first_seq_ = best_seq_ = seq;
            return depth;
        }
        if (compare(rows, first_rows_) == 0) {
            add_automorphism(p, first_lab_);
            return common_prefix(seq, first_seq_);
        }
        int cmp = compare(rows, best_rows_);
        if (cmp == 0) {
            add_automorphism(p, best_lab_);
            return common_prefix(seq, best_seq_);
        }
        if (cmp > 0) {
            best_rows_ = rows;
            best_lab_ = p.lab;
            best_seq_ = seq;
        }
        return depth;
    }

    // v is skipped when a known automorphism fixing the current prefix
    // pointwise maps it onto an already explored sibling.
    bool equivalent_to_explored(int v, std::uint64_t explored, const std::vector<std::uint8_t>& seq) const {
        std::array<std::uint8_t, 64> parent{};
        for (int i = 0; i < n_; ++i) parent[i] = static_cast<std::uint8_t>(i);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (const auto& g : generators_) {
            bool fixes = true;
            for (auto s : seq)
                if (g[s] != s) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            any = true;
            for (int i = 0; i < n_; ++i) {
                int a = find(i), b = find(g[i]);
                if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
            }
        }
        if (!any) return false;
        const int root = find(v);
        for (std::uint64_t m = explored; m; m &= m - 1)
            if (find(std::countr_zero(m)) == root) return true;
        return false;
    }

    int search(int depth, const Partition& p, std::vector<std::uint8_t>& seq) {
        if (p.cells == n_) return leaf(p, seq);
        int target = -1;
        for (int c = 0; c < n_; c += p.len[c])
            if (p.len[c] > 1 && (target < 0 || p.len[c] < p.len[target])) target = c;
        std::array<std::uint8_t, 64> members{};
        const int len = p.len[target];
        for (int i = 0; i < len; ++i) members[i] = p.lab[target + i];
        std::sort(members.begin(), members.begin() + len);

        std::uint64_t explored = 0;
        for (int i = 0; i < len; ++i) {
            const int v = members[i];
            if (explored && equivalent_to_explored(v, explored, seq)) continue;
            Partition child = p;
            individualize(child, v);
            seq.push_back(static_cast<std::uint8_t>(v));
            int r = search(depth + 1, child, seq);
            seq.pop_back();
            explored |= std::uint64_t{1} << v;
            if (r < depth) return r;
        }
        return depth;
    }

    int n_;
    std::array<std::uint64_t, 64> adj_{};
    bool have_first_ = false;
    Rows first_rows_{}, best_rows_{};
    std::array<std::uint8_t, 64> first_lab_{}, best_lab_{};
    std::vector<std::uint8_t> first_seq_, best_seq_;
    std::vector<Perm> generators_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) { return detail::CanonSearch(g).run(); }

/// Graph whose adjacency is given by single-word rows (order <= 64).
inline Graph graph_from_rows(std::span<const std::uint64_t> rows) { return Graph::from_words(rows); }

/// The canonical representative of the isomorphism class of g.
inline Graph canonical_graph(const Graph& g) { return graph_from_rows(canonical_form(g).rows); }

inline CanonicalLabel canonical_label(const Graph& g) { return {graph6_encode(canonical_graph(g))}; }

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a).rows == canonical_form(b).rows;
}

}  // namespace turanreg
